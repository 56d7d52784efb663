#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bound_oracle.hpp"
#include "bound_sweep.hpp"
#include "relheight/boundeval.hpp"
#include "relheight/error.hpp"

using namespace relheight;
using oracle::F;

namespace {

constexpr mpfr_prec_t kP = 128;

Real R(double x) { return Real(x, kP); }

double near(const LogScalar& v, const F& log_want) {
  return static_cast<double>(abs(sweep::to_f(v.logmag()) - log_want));
}

std::vector<long> totients(long n) {
  std::vector<long> phi(static_cast<size_t>(n) + 1);
  std::iota(phi.begin(), phi.end(), 0L);
  for (long p = 2; p <= n; ++p)
    if (phi[p] == p)
      for (long k = p; k <= n; k += p) phi[k] -= phi[k] / p;
  return phi;
}

const BoundReport& find(const std::vector<BoundReport>& v, const std::string& id) {
  for (const auto& r : v)
    if (r.bound_id == id) return r;
  FAIL("missing report " << id);
  return v.front();
}

}  // namespace

TEST_CASE("stored Euler constant") {
  F g = sweep::to_f(euler_gamma(256));
  CHECK(static_cast<double>(abs(g - boost::math::constants::euler<F>())) < 1e-45);
}

TEST_CASE("voutier f1 and g1") {
  CHECK(near(voutier_f1(R(2)), oracle::log_f1(F(2))) < 1e-30);
  CHECK(voutier_f1(R(2)).to_double() == doctest::Approx(0.1739).epsilon(1e-3));
  CHECK(voutier_f1(R(1)).to_double() == doctest::Approx(1.509).epsilon(1e-3));
  CHECK(near(voutier_f1(R(1)), log(F(2) / pow(log(F(3)), 3))) < 1e-30);
  CHECK(voutier_f1(R(6)) > voutier_g1(R(3)));

  // 0.00005227953369 agrees to twelve decimal places but not in its tenth
  // significant digit; the oracle pins the full value.
  CHECK(std::abs(voutier_g1(R(3)).to_double() - 0.00005227953369) < 5e-13);
  CHECK(near(voutier_g1(R(3)), oracle::log_g1(F(3))) < 1e-30);
  for (int x = 4; x <= 6; ++x) CHECK(voutier_g1(R(x)) > voutier_g1(R(3)));
  CHECK(voutier_g1(R(7)) > voutier_g1(R(8)));
  CHECK_THROWS_WITH(voutier_g1(R(2.5)), doctest::Contains("domain error"));
  CHECK_THROWS_AS(voutier_f1(R(0.5)), Error);
}

TEST_CASE("f1 and g1 monotonicity on grids") {
  // Geometric grid of 1000 points over [1, 10^6].
  LogScalar prev_f = voutier_f1(R(1));
  for (int i = 1; i < 1000; ++i) {
    Real x = exp(log(Real(1e6, kP)) * Real(i / 999.0, kP));
    LogScalar v = voutier_f1(x);
    CHECK(v < prev_f);
    prev_f = v;
  }
  LogScalar prev_g = voutier_g1(R(7));
  for (int i = 0; i < 1000; ++i) {
    Real x3 = R(3) * exp(log(Real(1e6 / 3, kP)) * Real(i / 999.0, kP));
    CHECK(voutier_g1(x3).sign() == 1);
    if (i == 0) continue;
    Real x = R(7) * exp(log(Real(1e6 / 7, kP)) * Real(i / 999.0, kP));
    LogScalar v = voutier_g1(x);
    CHECK(v < prev_g);
    prev_g = v;
  }
}

TEST_CASE("f1 - g1 crossing") {
  int changes = 0;
  double bracket = 0;
  bool prev = voutier_f1(R(180)) > voutier_g1(R(180));
  for (int i = 1; i <= 1000; ++i) {
    double x = 180 + i * 0.01;
    bool now = voutier_f1(R(x)) > voutier_g1(R(x));
    if (now != prev) {
      ++changes;
      bracket = x;
    }
    prev = now;
  }
  CHECK(changes == 1);
  CHECK(bracket > 184);
  CHECK(bracket < 185);
  Real lo = R(184), hi = R(185);
  for (int i = 0; i < 60; ++i) {
    Real mid = (lo + hi) / 2L;
    if (voutier_f1(mid) > voutier_g1(mid)) lo = mid;
    else hi = mid;
  }
  CHECK(std::abs(lo.to_double() - 184.615) < 1e-3);
  CHECK(std::abs(lo.to_double() - static_cast<double>(oracle::crossing())) < 1e-12);
}

TEST_CASE("voutier_height_floor") {
  CHECK(near(voutier_height_floor(2), oracle::log_f1(F(2))) < 1e-30);
  LogScalar ten = voutier_height_floor(10);
  F f10 = oracle::log_f1(F(10)), g10 = oracle::log_g1(F(10));
  CHECK(f10 > g10);
  CHECK(near(ten, f10) < 1e-30);
  LogScalar big = voutier_height_floor(1000000);
  F fb = oracle::log_f1(F(1000000)), gb = oracle::log_g1(F(1000000));
  CHECK(gb > fb);
  CHECK(near(big, gb) < 1e-30);
  CHECK_THROWS_WITH(voutier_height_floor(1), "degree too small for Voutier");
  CHECK(voutier_bound(2).value.sign() == 1);
}

TEST_CASE("dobrowolski_floor") {
  F l3 = log(F(3));
  F want = log(log(1 + pow(log(l3) / l3, 3) / 1200) / 3);
  CHECK(near(dobrowolski_floor(3), want) < 1e-30);
  CHECK(dobrowolski_floor(10) < voutier_height_floor(10));
  CHECK(dobrowolski_floor(100) < dobrowolski_floor(10));
  CHECK_THROWS_AS(dobrowolski_floor(2), Error);
}

TEST_CASE("abelian_reference") {
  LogScalar a = abelian_reference();
  CHECK(a.to_double() == doctest::Approx(0.13412).epsilon(1e-4));
  CHECK((a * LogScalar::from_mpz(12, kP) / LogScalar::from_real(log(R(5)))).to_double() ==
        doctest::Approx(1.0).epsilon(1e-15));
  // f1(2) = 0.17384... is the one degree where Voutier is larger.
  CHECK(a < voutier_height_floor(2));
  for (long d = 3; d <= 10000; ++d) {
    if (!(a > voutier_height_floor(d))) {
      FAIL("abelian constant below Voutier at d = " << d);
      break;
    }
  }
}

TEST_CASE("rosser_totient_floor") {
  CHECK(rosser_totient_floor(3).to_double() == doctest::Approx(0.0312).epsilon(1e-2));
  F ll3 = log(log(F(3)));
  F want = 1 / (exp(boost::math::constants::euler<F>()) * ll3 + 3 / ll3);
  CHECK(static_cast<double>(abs(sweep::to_f(rosser_totient_floor(3)) - want)) < 1e-30);
  CHECK_THROWS_AS(rosser_totient_floor(2), Error);

  const long N = 100000;
  auto phi = totients(N);
  long bad = 0, nonmono = 0;
  // The denominator a L + 3 / L is smallest at L = sqrt(3 / a), i.e. near
  // n = 38.9; the floor rises before and falls after.
  Real prev = rosser_totient_floor(16);
  for (long n = 3; n <= N; ++n) {
    Real b = rosser_totient_floor(n);
    if (!(b < Real(mpq_class(phi[n], n), kP))) ++bad;
    if (n > 16) {
      if (n <= 39 ? !(b > prev) : !(b < prev)) ++nonmono;
      prev = b;
    }
  }
  CHECK(bad == 0);
  CHECK(nonmono == 0);
}

TEST_CASE("phi_constant_C") {
  Real c1 = phi_constant_C(1);
  CHECK(c1 > R(0));
  CHECK(c1 < R(1));
  CHECK(static_cast<double>(abs(sweep::to_f(c1) - oracle::phi_C(F(1)))) < 1e-35);
  Real small = phi_constant_C(mpq_class(1, 1000));
  CHECK(small.sign() == 1);
  CHECK(static_cast<double>(abs(sweep::to_f(small) / oracle::phi_C(F(1) / 1000) - 1)) < 1e-30);
  Real th = phi_constant_theta(mpq_class(1, 3));
  CHECK((th * th * 2L).to_double() == doctest::Approx(0.25));
  // Below 1/2, so it also covers e/f in {1, 2}.
  for (long k = 1; k <= 400; ++k) CHECK(phi_constant_C(mpq_class(k, 100)) < R(0.5));

  const long N = 100000;
  auto phi = totients(N);
  for (auto eps : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
    Real logC = log(phi_constant_C(eps));
    Real e1 = Real(mpq_class(1 + eps), kP);
    long bad = 0;
    for (long n = 3; n <= N; ++n)
      if (logC + log(Real(n, kP)) > e1 * log(Real(phi[n], kP))) ++bad;
    INFO("eps = " << eps.get_str());
    CHECK(bad == 0);
  }
}

TEST_CASE("group orders") {
  CHECK(feit_order(2) == 12);
  CHECK(feit_order(3) == 48);
  CHECK(n_rho(2, true).to_double() == doctest::Approx(12));
  CHECK(n_rho(3, true).to_double() == doctest::Approx(48));
  CHECK(n_rho(2, false).to_double() == doctest::Approx(81));
  CHECK(gl3_order(1) == 2);
  CHECK(gl3_order(2) == 48);
  CHECK(gl3_order(3) == 11232);
  for (long rho = 1; rho <= 12; ++rho) {
    // |GL_rho(F_3)| = 3^(rho(rho-1)/2) prod_{i=1}^rho (3^i - 1).
    mpz_class want, p;
    mpz_ui_pow_ui(want.get_mpz_t(), 3, static_cast<unsigned long>(rho * (rho - 1) / 2));
    for (long i = 1; i <= rho; ++i) {
      mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(i));
      want *= p - 1;
    }
    CHECK(gl3_order(rho) == want);
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(rho * rho));
    CHECK(gl3_order(rho) < p);
  }
  const std::vector<std::pair<long, const char*>> table = {{2, "12"},        {4, "1152"},        {6, "103680"},
                                                           {7, "2903040"},   {8, "696729600"},   {9, "1393459200"},
                                                           {10, "8360755200"}};
  for (const auto& [rho, v] : table) {
    CHECK(feit_order(rho) == mpz_class(v));
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(rho));
    CHECK(2 * mpz_class(v) <= 135 * (mpz_class(1) << rho) * f);
  }
}

TEST_CASE("amoroso_viada_floor") {
  CHECK(near(amoroso_viada_floor(1, 1), -4 * log(1050 * log(F(3)))) < 1e-30);
  CHECK(near(amoroso_viada_floor(2, 10), -log(F(10)) - 36 * log(1050 * F(32) * log(F(30)))) < 1e-28);
  CHECK(amoroso_viada_floor(2, 100) < amoroso_viada_floor(2, 10));
}

TEST_CASE("amoroso_delsinne_floor") {
  ConstantsConfig cfg;
  BoundReport r = amoroso_delsinne_floor(LogScalar::one(), 1, LogScalar::one(), cfg);
  CHECK(r.conditional);
  CHECK(near(r.value, 3 * log(log(log(F(5)))) - 4 * log(log(F(2)))) < 1e-30);
  CHECK(amoroso_delsinne_floor(LogScalar::one(), 12, LogScalar::one(), cfg).value < r.value);
  LogScalar prev = r.value;
  for (long x = 2; x <= 2000; ++x) {
    LogScalar v = amoroso_delsinne_floor(LogScalar::from_mpz(x, kP), 1, LogScalar::one(), cfg).value;
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("delsinne constants") {
  DelsinneConstants k1 = delsinne_constants(1);
  CHECK(k1.kappa == 48);
  CHECK(near(k1.c, log(F(2)) + 16384) < 1e-30);
  CHECK(k1.eta == 1);
  CHECK(k1.mu == 128);
  CHECK(delsinne_constants(2).kappa == 69984);
  CHECK(delsinne_constants(3).eta == 6);
  // n = 1, D = 1: log(log 3) > 0, so the kappa term lowers the floor.
  LogScalar p1 = delsinne_product_floor(1, 1);
  CHECK(near(p1, -(log(F(2)) + 16384) - 48 * log(log(F(3)))) < 1e-30);
  CHECK(log(log(F(3))) > 0);
  CHECK(delsinne_product_floor(1, 10) < p1);
  CHECK(delsinne_product_floor(1, 100) < delsinne_product_floor(1, 10));
}

TEST_CASE("theorem1 routing") {
  CHECK(r_of_eps(2) == 1);
  CHECK(r_of_eps(1) == 2);
  CHECK(r_of_eps(mpq_class(1, 2)) == 3);
  CHECK(r_of_eps(mpq_class(3, 10)) == 4);

  ConstantsConfig cfg;
  cfg.eps = 2;
  Theorem1Input in;
  in.delta = 1;
  in.rho = 1;
  auto b = theorem1_bound(in, cfg);
  CHECK(b.front().bound_id == "thm1.caseB");

  cfg.eps = mpq_class(3, 10);
  in.delta = 2;
  in.tau = 1;
  in.d = 2;
  auto a = theorem1_bound(in, cfg);
  CHECK(a.front().bound_id == "thm1.caseA");
  CHECK(a.front().value.to_double() == doctest::Approx(0.1739).epsilon(1e-3));

  cfg.eps = mpq_class(1, 2);
  in.delta = 5;
  in.tau = 2;
  in.d = 10;
  in.rho = 1;
  in.e = 4;
  in.f = 2;
  in.disc_abs = 8;
  auto c = theorem1_bound(in, cfg);
  const BoundReport& c3 = find(c, "thm1.caseC.C3");
  CHECK(c3.conditional);
  CHECK(c3.params.at("c_ad") == "1");
  CHECK(c3.params.count("C4") == 1);
  auto want = oracle::theorem1({5, 2, 10, 1, 4, 2, 8, F(1), 1, 2});
  for (const auto& rep : c) CHECK(near(rep.value, want.at(rep.bound_id)) < 1e-30);
  CHECK(find(c, "thm1").value <= find(c, "thm1.caseC.C5").value);

  in.rho = 0;
  CHECK_THROWS_WITH(theorem1_bound(in, cfg), "theorem inapplicable");
}

TEST_CASE("theorem2 cases") {
  ConstantsConfig cfg;
  Theorem2Input in;
  in.r = 1;
  in.tau = 1;
  in.eta = 2;
  in.rho = 2;
  auto one = theorem2_bound(in, cfg);
  REQUIRE(one.size() == 1);
  CHECK(one[0].bound_id == "thm2.case1");
  F e1 = boost::math::constants::e<F>();
  F lnC1 = -(18 * log(F(604800) / (F(0.5) * e1)) + log(F(3)) / 2);
  CHECK(static_cast<double>(lnC1) == doctest::Approx(-234.7).epsilon(1e-3));
  CHECK(near(one[0].value, lnC1 - log(F(2))) < 1e-30);
  CHECK(one[0].params.at("eta_exponent") == "-1");

  in.rho = 1;
  in.e = 2;
  in.d_alpha_e = 2;
  auto two = theorem2_bound(in, cfg);
  CHECK(find(two, "thm2.case2").value.sign() == 1);
  CHECK(find(two, "thm2.case2").params.at("kappa2") == "48");
  CHECK(near(find(two, "thm2.case2.power").value, oracle::log_f1(F(2)) - log(F(2))) < 1e-30);

  in.rho = 0;
  CHECK_THROWS_WITH(theorem2_bound(in, cfg), "hypothesis violated: fewer than r independent conjugates");

  in.rho = 3;
  in.r = 2;
  auto cor = corollary_bound(in, cfg);
  CHECK(cor.front().bound_id == "corollary.case1");
  CHECK(cor.front().params.at("r") == "1");
}

TEST_CASE("differential sweep") {
  sweep::Outcome o = sweep::run(100, 1e-20);
  INFO(o.first_failure << " max rel " << o.max_rel);
  CHECK(o.mismatches == 0);
  CHECK(o.nonpositive == 0);
}

TEST_CASE("best_bound") {
  BoundReport v{"voutier", LogScalar::from_log(R(-2)), "", false, {}};
  BoundReport t{"thm2.case1", LogScalar::from_log(R(-300)), "", false, {}};
  BoundReport c{"thm1.caseC.C3", LogScalar::from_log(R(-1)), "", true, {}};
  CHECK(best_bound({v, t}, false).bound_id == "voutier");
  CHECK(best_bound({t, c, v}, true).bound_id == "voutier");
  CHECK(best_bound({t}, true).bound_id == "thm2.case1");
  CHECK(best_bound({c}, false).bound_id == "thm1.caseC.C3");
  CHECK_THROWS_WITH(best_bound({c}, true), "no unconditional bound");
}
