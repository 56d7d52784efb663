#include "relheight/boundeval.hpp"

#include <algorithm>

#include "relheight/error.hpp"

namespace relheight {

namespace {

// Euler's constant, 80 significant digits.
constexpr const char* kEulerGamma =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467";

Real rq(const mpq_class& q, mpfr_prec_t prec) { return Real(q, prec); }
Real rz(const mpz_class& z, mpfr_prec_t prec) { return Real(z, prec); }
Real rl(long v, mpfr_prec_t prec) { return Real(v, prec); }

Real e1(mpfr_prec_t prec) { return exp(rl(1, prec)); }

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class ipow(const mpz_class& b, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

void require_positive(const mpq_class& eps) {
  if (eps <= 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: eps must be positive");
}

std::string str(const LogScalar& v) { return v.to_decimal(20); }

// log f1(x) for x >= 1.
Real log_f1(const Real& logx, mpfr_prec_t prec) {
  Real l3x = log(rl(3, prec)) + logx;
  return log(rl(2, prec)) - logx - log(l3x) * 3L;
}

// log g1(x) for x > e.
Real log_g1(const Real& logx, mpfr_prec_t prec) {
  Real ll = log(logx);
  return -log(rl(4, prec)) - logx + (log(ll) - log(logx)) * 3L;
}

// n(rho) as an integer.
mpz_class n_rho_exact(long rho, bool use_feit) {
  if (rho < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: rho must be positive");
  if (use_feit) return feit_order(rho);
  return ipow(3, rho * rho);
}

// Lower bound for h(alpha^e) at [Q(alpha^e):Q] = d_ae, with
// d_ae <= N; d_ae = 0 when unknown.
Real log_power_floor(long d_ae, const mpz_class& N, mpfr_prec_t prec) {
  if (d_ae == 1) return log(log(rl(2, prec)));
  if (d_ae == 2) return log_f1(log(rl(2, prec)), prec);
  if (d_ae >= 3 && d_ae <= 6) return log_f1(log(rl(6, prec)), prec);
  const Real logN = log(rz(N, prec));
  return N <= 184 ? log_f1(logN, prec) : log_g1(logN, prec);
}

}  // namespace

Real euler_gamma(mpfr_prec_t prec) { return Real::parse(kEulerGamma, prec); }

LogScalar voutier_f1(const Real& x) {
  const mpfr_prec_t prec = x.prec();
  if (x < rl(1, prec)) throw Error(ErrorKind::DomainError, "domain error: f1 needs x >= 1");
  return LogScalar::from_log(log_f1(log(x), prec));
}

LogScalar voutier_g1(const Real& x) {
  const mpfr_prec_t prec = x.prec();
  if (x < e1(prec)) throw Error(ErrorKind::DomainError, "domain error: g1 needs x >= e");
  Real lx = log(x);
  if (log(lx).is_zero()) return LogScalar::zero(prec);
  return LogScalar::from_log(log_g1(lx, prec));
}

LogScalar voutier_height_floor(long d, mpfr_prec_t prec) {
  if (d <= 1) throw Error(ErrorKind::DegreeTooSmall, "degree too small for Voutier");
  LogScalar f = voutier_f1(rl(d, prec));
  if (d < 3) return f;
  return std::max(f, voutier_g1(rl(d, prec)));
}

LogScalar dobrowolski_floor(long d, mpfr_prec_t prec) {
  if (d < 3) throw Error(ErrorKind::DomainError, "domain error: Dobrowolski bound needs d >= 3");
  Real l = log(rl(d, prec));
  Real q = log(l) / l;
  Real t = q * q * q / 1200L;
  Real s(prec);
  mpfr_log1p(s.get(), t.get(), MPFR_RNDN);
  return LogScalar::from_log(log(s) - l);
}

LogScalar abelian_reference(mpfr_prec_t prec) {
  return LogScalar::from_log(log(log(rl(5, prec))) - log(rl(12, prec)));
}

Real rosser_totient_floor(const mpz_class& n, mpfr_prec_t prec) {
  if (n < 3) throw Error(ErrorKind::DomainError, "domain error: totient bound needs n >= 3");
  Real ll = log(log(rz(n, prec)));
  return rl(1, prec) / (exp(euler_gamma(prec)) * ll + rl(3, prec) / ll);
}

Real phi_constant_theta(const mpq_class& eps, mpfr_prec_t prec) {
  require_positive(eps);
  return sqrt(rq(eps / (2 * (1 + eps)), prec));
}

Real phi_constant_C(const mpq_class& eps, mpfr_prec_t prec) {
  require_positive(eps);
  const mpq_class u = eps / (2 + 2 * eps);
  const Real e = e1(prec);
  Real T = pow(e * e * rq(u, prec), sqrt(rq(u, prec)) + rl(1, prec));
  Real num = log(log(rl(3, prec))) * T;
  Real den = exp(euler_gamma(prec)) + pow(rl(3, prec), rq(1 / (1 + eps), prec)) * T;
  return pow(num / den, rq(1 + eps, prec));
}

mpz_class feit_order(long rho) {
  if (rho < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: rho must be positive");
  switch (rho) {
    case 2: return 12;
    case 4: return 1152;
    case 6: return 103680;
    case 7: return 2903040;
    case 8: return 696729600;
    case 9: return 1393459200;
    case 10: return mpz_class("8360755200");
    default: return ipow(2, rho) * factorial(rho);
  }
}

LogScalar n_rho(long rho, bool use_feit, mpfr_prec_t prec) {
  if (!use_feit) {
    if (rho < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: rho must be positive");
    return LogScalar::from_log(log(rl(3, prec)) * (rho * rho));
  }
  return LogScalar::from_mpz(feit_order(rho), prec);
}

mpz_class gl3_order(long rho) {
  if (rho < 1 || rho > 16) throw Error(ErrorKind::InvalidArgument, "invalid argument: gl3_order needs 1 <= rho <= 16");
  const mpz_class q = ipow(3, rho);
  mpz_class r = 1;
  for (long i = 0; i < rho; ++i) r *= q - ipow(3, i);
  return r;
}

LogScalar amoroso_viada_floor(long n, const mpz_class& D, mpfr_prec_t prec) {
  if (n < 1 || D < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: n and D must be positive");
  Real logD = log(rz(D, prec));
  Real inner = log(rl(1050, prec)) + log(rl(n, prec)) * 5L + log(log(rl(3, prec)) + logD);
  return LogScalar::from_log(-logD - inner * (n * n * (n + 1) * (n + 1)));
}

BoundReport amoroso_delsinne_floor(const LogScalar& D, const mpz_class& disc_abs, const LogScalar& g,
                                   const ConstantsConfig& cfg) {
  const mpfr_prec_t prec = cfg.precision_bits;
  if (D.sign() <= 0 || D.logmag() < Real(prec))
    throw Error(ErrorKind::InvalidArgument, "invalid argument: D must be at least 1");
  Real l5 = log(rl(5, prec)) + D.logmag();
  Real l2 = log(rl(2, prec)) + D.logmag();
  Real c = rq(cfg.c_ad, prec);
  Real v = -c * (g.logmag() + log(rz(disc_abs, prec))) - D.logmag() + log(log(l5)) * 3L - log(l2) * 4L;
  BoundReport rep{"amoroso_delsinne", LogScalar::from_log(v), "abelian", true, {}};
  rep.params = {{"D", str(D)}, {"disc", disc_abs.get_str()}, {"g", str(g)}, {"c_ad", cfg.c_ad.get_str()}};
  return rep;
}

DelsinneConstants delsinne_constants(long n, mpfr_prec_t prec) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: n must be positive");
  const mpz_class B = 2 * mpz_class(n + 1) * (n + 1) * factorial(n + 1);
  const mpz_class Bn = ipow(B, n);
  DelsinneConstants k;
  k.kappa = 3 * n * Bn;
  mpq_class sum = 0;
  for (long i = 0; i <= n - 3; ++i) sum += mpq_class(mpz_class(1), factorial(i));
  k.eta = mpq_class(factorial(n - 1)) * (sum + 1) + (n - 1);
  k.mu = 8 * factorial(n) * Bn;
  const mpz_class big = 64 * mpz_class(n) * n * factorial(n) * Bn * Bn;
  k.c = LogScalar::from_log(log(rl(2 * n * n, prec)) * n + rz(big, prec));
  return k;
}

LogScalar delsinne_product_floor(long n, const mpz_class& D_ab, mpfr_prec_t prec) {
  if (D_ab < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: D must be positive");
  DelsinneConstants k = delsinne_constants(n, prec);
  Real logD = log(rz(D_ab, prec));
  Real l3 = log(rl(3, prec)) + logD;
  return LogScalar::from_log(-k.c.logmag() - logD - rz(k.kappa, prec) * log(l3));
}

long r_of_eps(const mpq_class& eps) {
  require_positive(eps);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), eps.get_den_mpz_t(), eps.get_num_mpz_t());
  return q.get_si() + 1;
}

std::vector<BoundReport> theorem1_bound(const Theorem1Input& in, const ConstantsConfig& cfg) {
  require_positive(cfg.eps);
  if (in.delta < 1 || in.tau < 1 || in.d < 1 || in.rho < 0)
    throw Error(ErrorKind::InvalidArgument, "invalid argument: delta, tau and d must be positive");
  if (in.rho == 0) throw Error(ErrorKind::TheoremInapplicable, "theorem inapplicable");
  const mpfr_prec_t prec = cfg.precision_bits;
  const mpq_class& eps = cfg.eps;
  const long r = r_of_eps(eps);
  const Real reps = rq(eps, prec);
  const Real log3 = log(rl(3, prec));
  const Real logtau = log(rl(in.tau, prec));
  const Real logdelta = log(rl(in.delta, prec));

  std::map<std::string, std::string> params = {
      {"eps", eps.get_str()},         {"r", std::to_string(r)},         {"tau", std::to_string(in.tau)},
      {"delta", std::to_string(in.delta)}, {"d", std::to_string(in.d)}, {"rho", std::to_string(in.rho)},
      {"e", std::to_string(in.e)},    {"f", std::to_string(in.f)},      {"disc", in.disc_abs.get_str()},
      {"g", str(in.g)},               {"c_ad", cfg.c_ad.get_str()}};
  std::vector<BoundReport> out;

  if (r > in.delta) {
    const mpq_class x = mpq_class(in.tau) / eps;
    Real v(prec);
    std::string label;
    if (in.d == 1) {
      v = log(log(rl(2, prec)));
      label = "A: d = 1";
    } else if (in.d == 2) {
      v = log_f1(log(rl(2, prec)), prec);
      label = "A: d = 2";
    } else if (in.d <= 6) {
      if (x < 6) {
        v = log_f1(log(rl(6, prec)), prec);
        label = "A: 3 <= d <= 6, tau/eps < 6";
      } else {
        v = log_f1(log(rq(x, prec)), prec);
        label = "A: 3 <= d <= 6, tau/eps >= 6";
      }
    } else {
      const Real lx = log(rq(x, prec));
      bool use_f1 = x <= 184 || (x < 185 && log_f1(lx, prec) >= log_g1(lx, prec));
      v = use_f1 ? log_f1(lx, prec) : log_g1(lx, prec);
      label = use_f1 ? "A: d >= 7, tau/eps <= a" : "A: d >= 7, tau/eps >= a";
    }
    out.push_back({"thm1.caseA", LogScalar::from_log(v), label, false, params});
  } else if (in.rho >= r) {
    const mpq_class E = (1 + 1 / eps) * (2 + 1 / eps) * (2 + 1 / eps);
    const mpq_class inner_q = (1 + 1 / eps) * (1 + 1 / eps) * (1 + 1 / eps) * (1 + 1 / eps) * (1 + 1 / eps) *
                              (1 + 1 / eps) * (2 + 1 / eps) * (2 + 1 / eps) * 1050 / eps;
    Real logC2 = -reps * 2L * logtau - reps * log3 - rq(E, prec) * (log(rq(inner_q, prec)) - rl(1, prec));
    auto p = params;
    p["C2"] = str(LogScalar::from_log(logC2));
    out.push_back({"thm1.caseB", LogScalar::from_log(logC2 - reps * 2L * logdelta), "B: rho >= r", false, p});
  } else {
    if (in.f < 1 || in.e < 1 || in.e % in.f != 0)
      throw Error(ErrorKind::InvalidArgument, "invalid argument: f must divide e");
    const long q = in.e / in.f;
    const Real C = (q == 1 || q == 2) ? Real(0.5, prec) : phi_constant_C(eps, prec);
    const Real logC = log(C);
    const LogScalar n = n_rho(in.rho, cfg.use_feit, prec);
    const Real tail = log(rl(in.f, prec)) + (rl(1, prec) + reps) * logtau;
    const Real logC4 = n.logmag() + tail - logC;
    const Real ad = -rq(cfg.c_ad, prec) * (in.g.logmag() + log(rz(in.disc_abs, prec)));
    const Real log4 = log(rl(4, prec));
    const Real logC5 = ad + logC * 2L - log4 - (n.logmag() + tail) * 2L;
    const Real n3 = log3 * rq(1 / (eps * eps), prec);
    const Real logC3 = ad + logC * 2L - log4 - (n3 + tail) * 2L;
    auto p = params;
    p["C4"] = str(LogScalar::from_log(logC4));
    p["C_eps"] = str(LogScalar::from_log(logC));
    p["n_rho"] = str(n);
    p["C5"] = str(LogScalar::from_log(logC5));
    out.push_back(
        {"thm1.caseC.C5", LogScalar::from_log(logC5 - reps * 2L * logdelta), "C: rho <= r - 1, n(rho)", true, p});
    p.erase("C5");
    p["C3"] = str(LogScalar::from_log(logC3));
    out.push_back(
        {"thm1.caseC.C3", LogScalar::from_log(logC3 - reps * 2L * logdelta), "C: rho <= r - 1, 3^(1/eps^2)", true, p});
  }
  BoundReport m = *std::min_element(out.begin(), out.end(),
                                    [](const BoundReport& a, const BoundReport& b) { return a.value < b.value; });
  m.bound_id = "thm1";
  m.case_label = "minimum over cases";
  out.push_back(std::move(m));
  return out;
}

std::vector<BoundReport> theorem2_bound(const Theorem2Input& in, const ConstantsConfig& cfg) {
  require_positive(cfg.eps);
  if (in.eta < 1 || in.tau < 1 || in.r < 1 || in.e < 0 || in.d_alpha_e < 0)
    throw Error(ErrorKind::InvalidArgument, "invalid argument: eta, tau and r must be positive");
  if (in.rho < in.r)
    throw Error(ErrorKind::HypothesisViolated, "hypothesis violated: fewer than r independent conjugates");
  const mpfr_prec_t prec = cfg.precision_bits;
  const mpq_class& eps = cfg.eps;
  const long r = in.r;
  const Real reps = rq(eps, prec);
  const Real log3 = log(rl(3, prec));
  const Real logtau = log(rl(in.tau, prec));
  const mpq_class x = -mpq_class(1, r + 1) - eps;
  const Real eta_part = rq(x, prec) * log(rz(in.eta, prec));

  std::map<std::string, std::string> params = {
      {"eps", eps.get_str()},       {"r", std::to_string(r)},         {"tau", std::to_string(in.tau)},
      {"eta", in.eta.get_str()},    {"rho", std::to_string(in.rho)},  {"e", std::to_string(in.e)},
      {"d_alpha_e", std::to_string(in.d_alpha_e)}, {"eta_exponent", x.get_str()}};
  std::vector<BoundReport> out;

  if (in.rho > r) {
    const mpz_class A = (r + 1) * (r + 2) * mpz_class(r + 2);
    const mpz_class inner = 1050 * ipow(r + 1, 6) * (r + 2) * (r + 2);
    Real logC1 = -reps * log3 - rz(A, prec) * (log(rq(mpq_class(inner) / eps, prec)) - rl(1, prec)) +
                 rq(x, prec) * logtau;
    auto p = params;
    p["C1"] = str(LogScalar::from_log(logC1));
    out.push_back({"thm2.case1", LogScalar::from_log(logC1 + eta_part), "1: rho > r", false, p});
    return out;
  }

  const mpz_class n = n_rho_exact(r, cfg.use_feit);
  const mpz_class N = n * in.tau;
  const Real logV = log_power_floor(in.d_alpha_e, N, prec);
  DelsinneConstants k = delsinne_constants(r, prec);
  const Real kappa = rz(k.kappa, prec);
  const Real logC3 = logV - kappa * (log(kappa / reps) - rl(1, prec)) + log(phi_constant_C(eps, prec)) -
                     k.c.logmag() - reps * log3 - (rl(1, prec) + reps) * logtau;
  auto p = params;
  p["C3"] = str(LogScalar::from_log(logC3));
  p["n_r"] = n.get_str();
  p["kappa2"] = k.kappa.get_str();
  out.push_back(
      {"thm2.case2", LogScalar::from_log(logC3 / (r + 1) + eta_part), "2: rho = r", false, p});
  if (in.e > 0 && in.d_alpha_e > 0) {
    auto q = params;
    q["n_r"] = n.get_str();
    out.push_back({"thm2.case2.power", LogScalar::from_log(logV - log(rl(in.e, prec))), "2: h(alpha^e) / e", false,
                   q});
  }
  return out;
}

std::vector<BoundReport> corollary_bound(const Theorem2Input& in, const ConstantsConfig& cfg) {
  Theorem2Input one = in;
  one.r = 1;
  auto out = theorem2_bound(one, cfg);
  for (auto& rep : out) rep.bound_id = "corollary" + rep.bound_id.substr(std::string("thm2").size());
  return out;
}

BoundReport voutier_bound(long d, mpfr_prec_t prec) {
  LogScalar v = voutier_height_floor(d, prec);
  const bool f1 = d < 3 || !(voutier_f1(rl(d, prec)) < v);
  return {"voutier", v, f1 ? "2 / (d (log 3d)^3)" : "(1/4d) (log log d / log d)^3", false, {{"d", std::to_string(d)}}};
}

BoundReport best_bound(const std::vector<BoundReport>& reports, bool strict) {
  if (reports.empty()) throw Error(ErrorKind::InvalidArgument, "invalid argument: no reports");
  const BoundReport* best = nullptr;
  for (const auto& r : reports)
    if (!r.conditional && (!best || best->value < r.value)) best = &r;
  if (best) return *best;
  if (strict) throw Error(ErrorKind::NoUnconditionalBound, "no unconditional bound");
  for (const auto& r : reports)
    if (!best || best->value < r.value) best = &r;
  return *best;
}

}  // namespace relheight
