// Torsion orders, normality tests, relative Galois data and the subfield
// degree generated by e-th powers of conjugates.
//
// Membership questions are settled by a negative modular witness when one
// exists among the first few hundred primes, otherwise by an exactly verified
// relation search, otherwise by Trager factorization when small enough.

#include <algorithm>
#include <numeric>

#include "numfield_internal.hpp"
#include "relheight/error.hpp"
#include "relheight/lattice.hpp"
#include "relheight/modp.hpp"

namespace relheight {

namespace {

bool has_real_embedding(const NumberField& K) {
  if (K.embedding.is_real()) return true;
  for (const auto& b : isolate_roots(K.defpoly).boxes)
    if (b.is_real()) return true;
  return false;
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// zeta_q in K, for a prime power q > 2.
bool contains_root_of_unity(const NumberField& K, unsigned q) {
  const mpz_class disc = discriminant(K.defpoly);
  for (std::uint64_t ell : detail::witness_primes()) {
    if (ell % q == 0 || q % ell == 0) continue;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), ell)) continue;
    modp::Field F(ell);
    for (int d : F.factor_degrees(F.reduce(K.defpoly)))
      if (powmod_u64(ell, static_cast<std::uint64_t>(d), q) != 1) return false;
  }
  const IntPolynomial phi = cyclotomic(q);
  for (const auto& box : isolate_roots(phi).boxes)
    if (recognize_root(K, phi, box)) return true;
  if (static_cast<long>(phi.degree()) * K.tau <= kFactorDegreeLimit) {
    for (const auto& [g, e] : factor_over_field(K, phi))
      if (fpoly::degree(g) == 1) return true;
    return false;
  }
  throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");
}

// Degrees of the irreducible factors of a squarefree g mod p; empty when g
// does not reduce to a squarefree polynomial of the same degree.
std::vector<int> split_type(const modp::Field& F, const modp::Poly& g, int degree) {
  if (static_cast<int>(g.size()) - 1 != degree || !F.is_squarefree(g)) return {};
  return F.factor_degrees(g);
}

bool unequal(const std::vector<int>& d) {
  return !d.empty() && std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) != d.end();
}

// Finds images in F of every target root of m. nullopt when some target is
// missing from F; throws precision exhausted when undecided. `witness`
// returns true when the prime proves some target is not in F.
template <class Witness>
std::optional<std::vector<FieldElement>> images_in_field(const NumberField& F, const IntPolynomial& m,
                                                         const std::vector<ComplexBox>& targets, Witness witness) {
  for (std::uint64_t ell : detail::witness_primes())
    if (witness(ell)) return std::nullopt;
  std::vector<FieldElement> out;
  bool complete = true;
  for (const auto& t : targets) {
    auto x = recognize_root(F, m, t);
    if (!x) {
      complete = false;
      break;
    }
    out.push_back(std::move(*x));
  }
  if (complete) return out;
  if (static_cast<long>(m.degree()) * F.tau > kFactorDegreeLimit)
    throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");
  std::vector<FieldElement> roots;
  for (const auto& [g, e] : factor_over_field(F, m))
    if (fpoly::degree(g) == 1) roots.push_back(F.neg(g[0]));
  out.clear();
  for (const auto& t : targets) {
    bool found = false;
    for (long bits = kDefaultPrecision; bits <= kMaxRootPrecision && !found; bits *= 2) {
      size_t hits = 0, last = 0;
      for (size_t i = 0; i < roots.size(); ++i) {
        ComplexInterval v = F.embed(roots[i], bits) - ComplexInterval::point(t.center);
        if (v.abs().lo() <= t.radius) {
          ++hits;
          last = i;
        }
      }
      if (hits == 0) return std::nullopt;
      if (hits == 1) {
        out.push_back(roots[last]);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");
  }
  return out;
}

}  // namespace

unsigned field_torsion_order(const NumberField& K) {
  if (K.tau == 1 || has_real_embedding(K)) return 2;
  const mpz_class disc = discriminant(K.defpoly);
  unsigned f = 2;
  const unsigned tau = static_cast<unsigned>(K.tau);
  for (unsigned p = 2; p <= tau + 1; ++p) {
    if (!modp::is_prime(p) || tau % (p - 1) != 0) continue;
    if (!mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    unsigned best = 1;
    for (unsigned q = p, phi = p - 1; tau % phi == 0; q *= p, phi *= p) {
      if (q == 2) {
        best = 2;
        continue;
      }
      if (!contains_root_of_unity(K, q)) break;
      best = q;
    }
    f = std::lcm(f, best);
  }
  return f;
}

bool is_galois_over_q(const NumberField& K) {
  if (K.tau <= 2) return true;
  const mpz_class disc = discriminant(K.defpoly);
  auto witness = [&](std::uint64_t ell) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), ell)) return false;
    modp::Field F(ell);
    return unequal(F.factor_degrees(F.reduce(K.defpoly)));
  };
  return images_in_field(K, K.defpoly, isolate_roots(K.defpoly).boxes, witness).has_value();
}

LogScalar g_flag(const NumberField& K) {
  if (K.galois_tower_flag) {
    if (*K.galois_tower_flag) return LogScalar::one();
  } else if (K.tau <= 2 || is_galois_over_q(K)) {
    return LogScalar::one();
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(K.tau));
  return LogScalar::from_mpz(fact, kDefaultPrecision);
}

RelativeData relative_data(const NumberField& K, const AlgebraicNumber& a) {
  RelativeData rel;
  rel.extension = compositum(K, a, true);
  const Compositum& ext = rel.extension;
  const NumberField& L = ext.field;
  rel.delta = ext.relative_degree;
  rel.e = L.torsion_order_f;

  // Conjugates over K: roots of m that are roots of the K-factor G.
  std::vector<AlgebraicNumber> roots = conjugates(a.minpoly);
  std::vector<size_t> chosen;
  for (long bits = kDefaultPrecision; bits <= kMaxRootPrecision; bits *= 2) {
    chosen.clear();
    ComplexBox tb = K.embedding_at(bits);
    for (size_t j = 0; j < roots.size(); ++j) {
      ComplexBox rb = roots[j].root.radius.is_zero() ? roots[j].root : refine(roots[j].root, a.minpoly, bits);
      if (detail::evaluate_over(K, ext.relative_minpoly, tb, rb.enclosure()).contains_zero()) chosen.push_back(j);
    }
    if (static_cast<int>(chosen.size()) == rel.delta) break;
  }
  if (static_cast<int>(chosen.size()) != rel.delta) throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");
  size_t self = roots.size();
  for (size_t j : chosen)
    if (roots[j].root.contains(a.root) || a.root.contains(roots[j].root)) self = j;
  if (self == roots.size()) {
    // Fall back to overlap of enclosures.
    ComplexInterval ae = a.root.enclosure();
    for (size_t j : chosen) {
      ComplexInterval re = roots[j].root.enclosure();
      if (re.re.overlaps(ae.re) && re.im.overlaps(ae.im)) self = j;
    }
  }
  rel.conjugates_over_K.push_back(self < roots.size() ? roots[self] : a);
  for (size_t j : chosen)
    if (j != self) rel.conjugates_over_K.push_back(roots[j]);

  if (rel.delta == 1) {
    rel.is_galois = true;
    rel.conjugate_images = {ext.a_image};
    return rel;
  }

  // A degree-one prime of K where G stays squarefree but splits into factors
  // of unequal degree rules out normality.
  const mpz_class disc = K.tau == 1 ? mpz_class(1) : discriminant(K.defpoly);
  auto witness = [&](std::uint64_t ell) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), ell)) return false;
    modp::Field F(ell);
    std::vector<std::uint64_t> rs = K.tau == 1 ? std::vector<std::uint64_t>{F.reduce(mpz_class(-K.defpoly.coeff(0)))}
                                               : F.roots(F.reduce(K.defpoly));
    for (std::uint64_t r : rs) {
      modp::Poly g;
      bool ok = true;
      for (const auto& c : ext.relative_minpoly) {
        std::uint64_t v = 0;
        for (size_t i = c.coords.size(); i-- > 0 && ok;) {
          auto ci = F.reduce(c.coords[i]);
          if (!ci) ok = false;
          else v = F.add(F.mul(v, r), *ci);
        }
        g.push_back(v);
      }
      if (!ok) continue;
      if (unequal(split_type(F, g, rel.delta))) return true;
    }
    return false;
  };
  std::vector<ComplexBox> targets;
  for (size_t j = 1; j < rel.conjugates_over_K.size(); ++j) targets.push_back(rel.conjugates_over_K[j].root);
  auto images = images_in_field(L, a.minpoly, targets, witness);
  rel.is_galois = images.has_value();
  if (rel.is_galois) {
    rel.conjugate_images.push_back(ext.a_image);
    for (auto& x : *images) rel.conjugate_images.push_back(std::move(x));
  }
  return rel;
}

int power_subfield_degree(const NumberField& K, const RelativeData& rel) {
  if (!rel.is_galois)
    throw Error(ErrorKind::HypothesisViolated, "hypothesis violated: extension is not Galois over the base field");
  const NumberField& L = rel.extension.field;
  std::vector<FieldElement> betas;
  for (const auto& x : rel.conjugate_images) betas.push_back(L.pow(x, static_cast<long>(rel.e)));

  // Q-span of K[b_1, ..., b_delta] inside L, grown by multiplication.
  QMatrix echelon;  // rows in reduced form
  std::vector<size_t> pivots;
  std::vector<FieldElement> basis;
  auto insert = [&](const FieldElement& x) {
    std::vector<mpq_class> v = x.coords;
    for (size_t r = 0; r < echelon.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      const mpq_class t = v[pivots[r]];
      for (size_t c = 0; c < v.size(); ++c) v[c] -= t * echelon[r][c];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& c) { return c != 0; });
    if (it == v.end()) return false;
    const size_t p = static_cast<size_t>(it - v.begin());
    const mpq_class lead = v[p];
    for (auto& c : v) c /= lead;
    for (auto& row : echelon) {
      if (row[p] == 0) continue;
      const mpq_class t = row[p];
      for (size_t c = 0; c < row.size(); ++c) row[c] -= t * v[c];
    }
    echelon.push_back(std::move(v));
    pivots.push_back(p);
    basis.push_back(x);
    return true;
  };
  FieldElement power = L.one();
  for (int i = 0; i < K.tau; ++i) {
    insert(power);
    power = L.mul(power, rel.extension.theta_image);
  }
  for (size_t next = 0; next < basis.size(); ++next)
    for (const auto& b : betas) insert(L.mul(basis[next], b));
  return static_cast<int>(basis.size()) / K.tau;
}

}  // namespace relheight
