#include "cli_support.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "relheight/error.hpp"
#include "relheight/heights.hpp"
#include "relheight/multrank.hpp"
#include "relheight/numfield.hpp"

namespace relheight::cli {

namespace {

int digits_for(mpfr_prec_t prec) { return static_cast<int>(static_cast<double>(prec) * 0.30103) + 3; }

json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json error_json(const Error& e) { return {{"kind", to_string(e.kind())}, {"message", e.what()}}; }

json base_record(const char* kind, const CorpusEntry& e) {
  return {{"schema", kSchema}, {"kind", kind}, {"name", e.name}, {"coeffs", coeffs_json(e.poly)}};
}

IntPolynomial minimal_polynomial(const IntPolynomial& p) {
  IntPolynomial m = normalize(p);
  if (m.degree() < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: constant polynomial");
  if (!is_irreducible(m)) throw Error(ErrorKind::NotAField, "not a field: polynomial is reducible");
  return m;
}

NumberField base_field(const CorpusEntry& e, const Options& o) {
  FieldOptions fo;
  fo.galois_tower = e.galois_tower;
  if (e.base) return make_field(*e.base, fo);
  if (o.base) return make_field(*o.base, fo);
  return make_field(IntPolynomial::x(), fo);
}

// h.lo > value, decided in log space.
bool dominates(const Interval& h, const LogScalar& v) {
  if (v.sign() <= 0) return h.lo().sign() > 0;
  if (h.lo().sign() <= 0) return false;
  return log(h.lo()) > v.logmag();
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

mpq_class parse_rational(const std::string& s) {
  auto bad = [&]() { return Error(ErrorKind::ParseError, "parse error: not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      mpq_class q(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
      if (q.get_den() == 0) throw bad();
      q.canonicalize();
      return q;
    }
    std::string mant = s;
    long exp10 = 0;
    if (auto ep = s.find_first_of("eE"); ep != std::string::npos) {
      mant = s.substr(0, ep);
      size_t used = 0;
      exp10 = std::stol(s.substr(ep + 1), &used);
      if (used != s.size() - ep - 1) throw bad();
    }
    std::string digits = mant;
    if (auto dot = mant.find('.'); dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw bad();
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num(digits), p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    mpq_class q = exp10 >= 0 ? mpq_class(num * p10) : mpq_class(num, p10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

IntPolynomial parse_coeffs(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "parse error: coefficients must be a nonempty array");
  std::vector<mpz_class> c;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      c.emplace_back(v.is_number_unsigned() ? mpz_class(std::to_string(v.get<std::uint64_t>()))
                                            : mpz_class(std::to_string(v.get<std::int64_t>())));
    } else if (v.is_string()) {
      try {
        c.emplace_back(v.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "parse error: bad integer string '" + v.get<std::string>() + "'");
      }
    } else {
      throw Error(ErrorKind::ParseError, "parse error: coefficients must be integers (large ones as strings)");
    }
  }
  if (c.back() == 0) throw Error(ErrorKind::ParseError, "parse error: last coefficient must be nonzero");
  return IntPolynomial(std::move(c));
}

IntPolynomial parse_base(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '[' && spec.front() != '{') {
    std::ifstream f(spec);
    if (!f) throw Error(ErrorKind::ParseError, "parse error: cannot read base field file '" + spec + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::ParseError, "parse error: base field is not valid JSON");
  if (j.is_object() && j.contains("coeffs")) return parse_coeffs(j["coeffs"]);
  return parse_coeffs(j);
}

CorpusEntry parse_entry(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw Error(ErrorKind::ParseError, "parse error: not a JSON object");
  CorpusEntry e;
  if (!j.contains("name") || !j["name"].is_string()) throw Error(ErrorKind::ParseError, "parse error: missing name");
  e.name = j["name"].get<std::string>();
  if (!j.contains("coeffs")) throw Error(ErrorKind::ParseError, "parse error: missing coeffs");
  e.poly = parse_coeffs(j["coeffs"]);
  if (j.contains("base") && !j["base"].is_null()) e.base = parse_coeffs(j["base"]);
  if (j.contains("galois_tower") && !j["galois_tower"].is_null()) {
    if (!j["galois_tower"].is_boolean()) throw Error(ErrorKind::ParseError, "parse error: galois_tower must be boolean");
    e.galois_tower = j["galois_tower"].get<bool>();
  }
  return e;
}

std::vector<CorpusLine> read_corpus(std::istream& in) {
  std::vector<CorpusLine> out;
  std::string s;
  for (size_t n = 1; std::getline(in, s); ++n) {
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    CorpusLine cl;
    cl.line = n;
    try {
      cl.entry = parse_entry(s);
    } catch (const Error& e) {
      cl.error = "line " + std::to_string(n) + ": " + e.what();
    }
    out.push_back(std::move(cl));
  }
  return out;
}

json coeffs_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(mpz_json(c));
  return a;
}

json interval_json(const Interval& x) {
  const int dg = digits_for(x.prec());
  return {{"lo", x.lo().to_string(dg, MPFR_RNDD)}, {"hi", x.hi().to_string(dg, MPFR_RNDU)}};
}

json logscalar_json(const LogScalar& v) {
  json j = {{"sign", v.sign()}, {"decimal", v.to_decimal(20)}};
  j["logmag"] = v.sign() == 0 ? json(nullptr) : json(v.logmag().to_string(digits_for(v.prec())));
  return j;
}

LogScalar logscalar_from_json(const json& j, mpfr_prec_t prec) {
  const int sign = j.at("sign").get<int>();
  if (sign == 0) return LogScalar::zero(prec);
  return LogScalar(sign, Real::parse(j.at("logmag").get<std::string>(), prec));
}

json report_json(const BoundReport& r) {
  return {{"bound_id", r.bound_id},
          {"value", logscalar_json(r.value)},
          {"case", r.case_label},
          {"conditional", r.conditional},
          {"params", r.params}};
}

BoundReport report_from_json(const json& j, mpfr_prec_t prec) {
  BoundReport r;
  r.bound_id = j.at("bound_id").get<std::string>();
  r.value = logscalar_from_json(j.at("value"), prec);
  r.case_label = j.at("case").get<std::string>();
  r.conditional = j.at("conditional").get<bool>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  return r;
}

json height_record(const CorpusEntry& e, const Options& o) {
  json r = base_record("height", e);
  r["mahler"] = interval_json(mahler_measure(e.poly, o.precision));
  r["kronecker"] = kronecker_test(e.poly);
  IntPolynomial m = normalize(e.poly);
  if (m.degree() >= 1 && is_irreducible(m)) {
    r["degree"] = m.degree();
    r["height"] = interval_json(weil_height(m, o.precision));
    r["root_of_unity"] = root_of_unity_order(m).has_value();
  } else {
    r["degree"] = e.poly.degree();
    r["height"] = nullptr;
    r["root_of_unity"] = nullptr;
    r["note"] = "reducible: no single algebraic number";
  }
  return r;
}

json rank_record(const CorpusEntry& e, const Options& o) {
  json r = base_record("rank", e);
  const IntPolynomial m = minimal_polynomial(e.poly);
  const NumberField K = base_field(e, o);
  const AlgebraicNumber a = make_algebraic(m, 0, o.precision);
  const RelativeData rel = relative_data(K, a);
  const RankResult rk = multiplicative_rank(rel.conjugates_over_K, o.rank_bound, o.precision);
  r["base"] = coeffs_json(K.defpoly);
  r["delta"] = rel.delta;
  r["conjugates"] = rel.conjugates_over_K.size();
  r["rho"] = rk.rho;
  json rows = json::array();
  for (const auto& row : rk.lattice.relations) {
    json v = json::array();
    for (const auto& x : row) v.push_back(mpz_json(x));
    rows.push_back(std::move(v));
  }
  r["relations"] = rows;
  r["status"] = to_string(rk.status);
  const bool torsion = root_of_unity_order(m).has_value();
  r["all_torsion"] = torsion;
  if (torsion) r["note"] = "theorem inapplicable: root of unity";
  return r;
}

json verify_record(const CorpusEntry& e, const Options& o) {
  json r = base_record("verify", e);
  const IntPolynomial m = minimal_polynomial(e.poly);
  const Interval h = weil_height(m, o.precision);
  r["height"] = interval_json(h);
  r["degree"] = m.degree();
  json results = json::array(), skips = json::array();
  auto skip = [&](const std::string& id, const std::string& why) { skips.push_back({{"bound", id}, {"reason", why}}); };

  if (m == IntPolynomial::x() || root_of_unity_order(m)) {
    const char* why = m == IntPolynomial::x() ? "zero" : "root of unity";
    for (const char* id : {"voutier", "thm1", "thm2", "corollary"}) skip(id, why);
    r["results"] = results;
    r["skips"] = skips;
    r["verdict"] = "SKIP";
    return r;
  }

  std::vector<BoundReport> reports;
  if (m.degree() >= 2) reports.push_back(voutier_bound(m.degree(), o.precision));
  else skip("voutier", "degree too small for Voutier");

  const NumberField K = base_field(e, o);
  const AlgebraicNumber a = make_algebraic(m, 0, o.precision);
  const RelativeData rel = relative_data(K, a);
  const RankResult rk = multiplicative_rank(rel.conjugates_over_K, o.rank_bound, o.precision);
  const long delta = rel.delta;
  r["base"] = coeffs_json(K.defpoly);
  r["tau"] = K.tau;
  r["delta"] = delta;
  r["galois"] = rel.is_galois;
  r["e"] = rel.e;
  r["f"] = K.torsion_order_f;
  r["rho"] = rk.rho;
  r["rank_status"] = to_string(rk.status);

  ConstantsConfig cfg = o.constants;
  cfg.precision_bits = o.precision;
  if (rel.is_galois) {
    Theorem1Input in;
    in.delta = delta;
    in.tau = K.tau;
    in.d = m.degree();
    in.rho = rk.rho;
    in.e = static_cast<long>(rel.e);
    in.f = static_cast<long>(K.torsion_order_f);
    in.disc_abs = K.disc_abs;
    in.g = g_flag(K);
    try {
      for (auto& b : theorem1_bound(in, cfg)) reports.push_back(std::move(b));
    } catch (const Error& err) {
      skip("thm1", err.what());
    }
  } else {
    skip("thm1", "not Galois over the base field");
  }

  // eta: [F:K] for the Galois closure F of K(alpha); delta! bounds it when
  // K(alpha)/K is not normal, and the bound decreases in eta.
  Theorem2Input t2;
  t2.eta = rel.is_galois ? mpz_class(delta) : factorial(delta);
  t2.tau = K.tau;
  t2.rho = rk.rho;
  if (rel.is_galois) {
    t2.e = static_cast<long>(rel.e);
    t2.d_alpha_e = power_minpoly(m, static_cast<unsigned>(rel.e)).degree();
  }
  r["eta"] = mpz_json(t2.eta);
  try {
    for (auto& b : corollary_bound(t2, cfg)) reports.push_back(std::move(b));
    for (long rr = 2; rr <= std::min<long>(rk.rho, 3); ++rr) {
      t2.r = rr;
      for (auto& b : theorem2_bound(t2, cfg)) {
        b.bound_id.insert(4, ".r" + std::to_string(rr));
        reports.push_back(std::move(b));
      }
    }
  } catch (const Error& err) {
    skip("thm2", err.what());
  }

  bool any_fail = false;
  for (const auto& b : reports) {
    if (b.conditional && o.strict_unconditional) continue;
    json j = report_json(b);
    const bool ok = dominates(h, b.value);
    j["verdict"] = ok ? (b.conditional ? "CONDITIONAL-PASS" : "PASS") : (b.conditional ? "CONDITIONAL-FAIL" : "FAIL");
    if (!ok && !b.conditional) any_fail = true;
    results.push_back(std::move(j));
  }
  r["results"] = results;
  r["skips"] = skips;
  r["verdict"] = any_fail ? "FAIL" : "PASS";
  return r;
}

int run_stream(Command cmd, const std::vector<CorpusLine>& lines, const Options& o, unsigned jobs,
               std::ostream& out) {
  std::vector<json> records(lines.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i; (i = next++) < lines.size();) {
      const CorpusLine& cl = lines[i];
      json rec;
      if (!cl.entry) {
        rec = {{"schema", kSchema},
               {"kind", "error"},
               {"line", cl.line},
               {"error", {{"kind", "parse error"}, {"message", cl.error}}}};
      } else {
        const auto t0 = std::chrono::steady_clock::now();
        try {
          switch (cmd) {
            case Command::Height: rec = height_record(*cl.entry, o); break;
            case Command::Rank: rec = rank_record(*cl.entry, o); break;
            case Command::Verify: rec = verify_record(*cl.entry, o); break;
          }
        } catch (const Error& e) {
          const char* kind = cmd == Command::Height ? "height" : (cmd == Command::Rank ? "rank" : "verify");
          rec = base_record(kind, *cl.entry);
          rec["error"] = error_json(e);
        }
        rec["line"] = cl.line;
        if (o.timings) {
          std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - t0;
          rec["timing_ms"] = ms.count();
        }
      }
      records[i] = std::move(rec);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  long input_errors = 0, errors = 0, pass = 0, cpass = 0, cfail = 0, fail = 0, skip = 0;
  for (const auto& rec : records) {
    out << rec.dump() << '\n';
    if (rec["kind"] == "error") {
      ++input_errors;
      continue;
    }
    if (rec.contains("error")) {
      ++errors;
      continue;
    }
    if (cmd != Command::Verify) continue;
    for (const auto& b : rec["results"]) {
      const std::string v = b["verdict"];
      if (v == "PASS") ++pass;
      else if (v == "CONDITIONAL-PASS") ++cpass;
      else if (v == "CONDITIONAL-FAIL") ++cfail;
      else ++fail;
    }
    skip += static_cast<long>(rec["skips"].size());
  }
  json summary = {{"schema", kSchema}, {"kind", "summary"}, {"entries", records.size()},
                  {"input_errors", input_errors}, {"entry_errors", errors}};
  if (cmd == Command::Verify) {
    summary["pass"] = pass;
    summary["conditional_pass"] = cpass;
    summary["conditional_fail"] = cfail;
    summary["fail"] = fail;
    summary["skip"] = skip;
  }
  out << summary.dump() << '\n';
  out.flush();
  if (fail > 0) return 2;
  if (input_errors > 0 || errors > 0) return 3;
  return 0;
}

}  // namespace relheight::cli
