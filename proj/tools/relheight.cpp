#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cli_support.hpp"
#include "relheight/error.hpp"

using namespace relheight;
using namespace relheight::cli;

namespace {

struct Shared {
  long precision = kDefaultPrecision;
  std::string eps = "1/2";
  std::string cad = "1";
  bool feit = false;
  ConstantsConfig config() const {
    ConstantsConfig c;
    c.eps = parse_rational(eps);
    if (c.eps <= 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: --eps must be positive");
    c.c_ad = parse_rational(cad);
    if (c.c_ad <= 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: --cad must be positive");
    c.precision_bits = precision;
    c.use_feit = feit;
    return c;
  }
};

struct BoundArgs {
  std::string theorem;
  long r = 1, tau = 1, delta = 1, d = 2, rho = 1, e = 2, f = 2, e_known = 0, d_alpha_e = 0;
  std::string disc = "1", g = "1", eta = "1";
};

void print_reports(const std::vector<BoundReport>& reps, bool as_json) {
  for (const auto& r : reps) {
    if (as_json) {
      json j = report_json(r);
      j["schema"] = kSchema;
      j["kind"] = "bound";
      std::cout << j.dump() << '\n';
      continue;
    }
    std::cout << r.bound_id << ": " << r.value.to_decimal(20);
    if (r.value.sign() != 0) std::cout << "  (ln = " << r.value.logmag().to_string(25) << ")";
    std::cout << "  [" << r.case_label << (r.conditional ? ", conditional" : "") << "]\n";
    for (const auto& [k, v] : r.params) std::cout << "    " << k << " = " << v << '\n';
  }
}

int run_bound(const BoundArgs& a, const Shared& s, bool as_json) {
  const ConstantsConfig cfg = s.config();
  std::vector<BoundReport> reps;
  if (a.theorem == "1") {
    Theorem1Input in;
    in.delta = a.delta;
    in.tau = a.tau;
    in.d = a.d;
    in.rho = a.rho;
    in.e = a.e;
    in.f = a.f;
    in.disc_abs = mpz_class(a.disc);
    in.g = LogScalar::from_mpz(mpz_class(a.g), cfg.precision_bits);
    reps = theorem1_bound(in, cfg);
  } else if (a.theorem == "2" || a.theorem == "corollary") {
    Theorem2Input in;
    in.eta = mpz_class(a.eta);
    in.tau = a.tau;
    in.r = a.r;
    in.rho = a.rho;
    in.e = a.e_known;
    in.d_alpha_e = a.d_alpha_e;
    reps = a.theorem == "2" ? theorem2_bound(in, cfg) : corollary_bound(in, cfg);
  } else {
    reps.push_back(voutier_bound(a.d, cfg.precision_bits));
  }
  print_reports(reps, as_json);
  return 0;
}

std::vector<CorpusLine> load(const std::string& path) {
  if (path == "-") return read_corpus(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "parse error: cannot open corpus '" + path + "'");
  return read_corpus(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil heights, relative invariants and explicit height lower bounds"};
  app.require_subcommand(1);
  Shared s;
  bool as_json = false, strict = false, timings = false;
  long rank_bound = 4;
  unsigned jobs = 1;
  std::string base, file;
  BoundArgs b;

  auto common = [&](CLI::App* c) {
    c->add_option("--precision", s.precision, "working precision in bits")->check(CLI::Range(32L, 1L << 16));
    c->add_option("--eps", s.eps, "epsilon, a positive rational");
    c->add_option("--cad", s.cad, "exponent c in the conditional discriminant factor");
    c->add_flag("--feit", s.feit, "use the finite-group order table instead of 3^(rho^2)");
    c->add_flag("--json", as_json, "JSON-lines output");
  };
  auto stream = [&](CLI::App* c) {
    common(c);
    c->add_option("file", file, "JSON-lines corpus, '-' for stdin")->required();
    c->add_option("--base", base, "base field polynomial: inline JSON array or file");
    c->add_option("--bound", rank_bound, "exponent bound B for relation search")->check(CLI::Range(1L, 64L));
    c->add_option("--jobs", jobs, "entries processed concurrently")->check(CLI::Range(1u, 256u));
    c->add_flag("--timings", timings, "add per-entry wall time (output no longer reproducible)");
  };

  auto* h = app.add_subcommand("height", "Mahler measure and Weil height per entry");
  stream(h);
  auto* rk = app.add_subcommand("rank", "relative degree and multiplicative rank of conjugates");
  stream(rk);
  auto* vf = app.add_subcommand("verify", "check every applicable bound against the height");
  stream(vf);
  vf->add_flag("--strict-unconditional", strict, "drop conditional bounds from the verdicts");
  auto* bd = app.add_subcommand("bound", "evaluate one bound");
  common(bd);
  bd->add_option("--theorem", b.theorem, "1, 2, voutier or corollary")
      ->required()
      ->check(CLI::IsMember({"1", "2", "voutier", "corollary"}));
  bd->add_option("--r", b.r, "number of independent conjugates assumed");
  bd->add_option("--tau", b.tau, "[K:Q]");
  bd->add_option("--delta", b.delta, "[K(alpha):K]");
  bd->add_option("--d", b.d, "degree of alpha");
  bd->add_option("--rho", b.rho, "multiplicative rank of the conjugates");
  bd->add_option("--e", b.e, "exponent e (theorem 1)");
  bd->add_option("--f", b.f, "torsion order of K");
  bd->add_option("--disc", b.disc, "|disc K|");
  bd->add_option("--g", b.g, "1 or tau!");
  bd->add_option("--eta", b.eta, "[F:K] for the Galois closure F");
  bd->add_option("--e-known", b.e_known, "exponent e for the power form of theorem 2, 0 if unknown");
  bd->add_option("--d-alpha-e", b.d_alpha_e, "degree of alpha^e, 0 if unknown");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bd->parsed()) return run_bound(b, s, as_json);
    Options o;
    o.precision = s.precision;
    o.constants = s.config();
    o.rank_bound = rank_bound;
    o.strict_unconditional = strict;
    o.timings = timings;
    if (!base.empty()) o.base = parse_base(base);
    const Command cmd = h->parsed() ? Command::Height : (rk->parsed() ? Command::Rank : Command::Verify);
    return run_stream(cmd, load(file), o, jobs, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid integer argument\n";
    return 3;
  }
}
