// Field arithmetic in the power basis, field construction and the
// discriminant, and polynomial arithmetic over a field.

#include "relheight/numfield.hpp"

#include <algorithm>

#include "relheight/error.hpp"
#include "relheight/lattice.hpp"
#include "relheight/modp.hpp"

namespace relheight {

namespace {

// Reduces a coefficient vector modulo the monic defpoly to length tau.
FieldElement reduce_mod(const IntPolynomial& P, std::vector<mpq_class> c) {
  const int tau = P.degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= tau; --i) {
    if (c[i] == 0) continue;
    const mpq_class t = c[i];
    for (int j = 0; j < tau; ++j)
      if (P.coeffs()[j] != 0) c[i - tau + j] -= t * mpq_class(P.coeffs()[j]);
    c[i] = 0;
  }
  c.resize(tau);
  return FieldElement{std::move(c)};
}

RatPolynomial as_ratpoly(const FieldElement& a) { return RatPolynomial::from_coeffs(a.coords); }

// Squarefreeness of |n| by trial division; nullopt when undetermined.
std::optional<bool> integer_squarefree(mpz_class n, mpz_class* square_free_kernel = nullptr,
                                       mpz_class* square_root_part = nullptr) {
  n = abs(n);
  mpz_class kernel = 1, root = 1;
  bool squarefree = true;
  for (unsigned long p = 2; p < 100000 && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e >= 2) squarefree = false;
    if (e % 2) kernel *= p;
    for (int i = 0; i < e / 2; ++i) root *= p;
  }
  if (n > 1) {
    if (n >= mpz_class("1000000000000000") && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      root *= s;
      squarefree = false;
    } else {
      kernel *= n;
    }
  }
  if (square_free_kernel) *square_free_kernel = kernel;
  if (square_root_part) *square_root_part = root;
  return squarefree;
}

void set_discriminant(NumberField& K) {
  if (K.tau == 1) {
    K.disc_abs = 1;
    K.disc_maximal = true;
    return;
  }
  const mpz_class d = discriminant(K.defpoly);
  K.disc_abs = abs(d);
  K.disc_maximal = false;
  if (cyclotomic_index(K.defpoly)) {
    K.disc_maximal = true;
    return;
  }
  if (K.tau == 2) {
    mpz_class kernel;
    if (integer_squarefree(d, &kernel)) {
      mpz_class s = sgn(d) * kernel;
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), 4);
      K.disc_abs = abs(r == 1 ? s : 4 * s);
      K.disc_maximal = true;
    }
    return;
  }
  if (auto sf = integer_squarefree(d); sf && *sf) K.disc_maximal = true;
}

}  // namespace

FieldElement NumberField::zero() const { return FieldElement{std::vector<mpq_class>(tau)}; }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::gen() const {
  if (tau == 1) return from_rational(-mpq_class(defpoly.coeff(0)));
  FieldElement g = zero();
  g.coords[1] = 1;
  return g;
}

FieldElement NumberField::from_rational(const mpq_class& q) const {
  FieldElement a = zero();
  a.coords[0] = q;
  return a;
}

bool NumberField::is_zero(const FieldElement& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](const mpq_class& c) { return c == 0; });
}

bool NumberField::is_rational(const FieldElement& a) const {
  return std::all_of(a.coords.begin() + 1, a.coords.end(), [](const mpq_class& c) { return c == 0; });
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (int i = 0; i < tau; ++i) r.coords[i] += b.coords[i];
  return r;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (int i = 0; i < tau; ++i) r.coords[i] -= b.coords[i];
  return r;
}

FieldElement NumberField::neg(const FieldElement& a) const {
  FieldElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

FieldElement NumberField::scale(const FieldElement& a, const mpq_class& q) const {
  FieldElement r = a;
  for (auto& c : r.coords) c *= q;
  return r;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  std::vector<mpq_class> c(2 * tau - 1);
  for (int i = 0; i < tau; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < tau; ++j)
      if (b.coords[j] != 0) c[i + j] += a.coords[i] * b.coords[j];
  }
  return reduce_mod(defpoly, std::move(c));
}

FieldElement NumberField::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorKind::DomainError, "domain error: inverse of zero");
  if (is_rational(a)) return from_rational(1 / a.coords[0]);
  // Column j of the multiplication matrix is a * theta^j.
  QMatrix m(tau, std::vector<mpq_class>(tau));
  FieldElement col = a;
  const FieldElement t = gen();
  for (int j = 0; j < tau; ++j) {
    for (int i = 0; i < tau; ++i) m[i][j] = col.coords[i];
    col = mul(col, t);
  }
  std::vector<mpq_class> b(tau), x;
  b[0] = 1;
  if (!solve(m, b, x)) throw Error(ErrorKind::DomainError, "domain error: singular element");
  return FieldElement{std::move(x)};
}

FieldElement NumberField::pow(const FieldElement& a, long k) const {
  FieldElement base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

FieldElement NumberField::eval(const IntPolynomial& p, const FieldElement& a) const {
  FieldElement r = zero();
  for (int i = p.degree(); i >= 0; --i) {
    r = mul(r, a);
    r.coords[0] += p.coeffs()[i];
  }
  return r;
}

IntPolynomial NumberField::minpoly(const FieldElement& a) const {
  if (is_rational(a)) {
    const mpq_class& q = a.coords[0];
    return IntPolynomial(std::vector<mpz_class>{-mpz_class(q.get_num()), q.get_den()});
  }
  RatPolynomial r = as_ratpoly(a);
  // Res_y(P(y), D x - N(y)) = D^tau * charpoly(a).
  BiPolynomial B{-r.numerator(), IntPolynomial::constant(r.denominator())};
  IntPolynomial charpoly = resultant_y(constant_in_x(defpoly), B);
  return normalize(squarefree_part(charpoly));
}

bool NumberField::is_root_of_unity(const FieldElement& a) const {
  if (is_zero(a)) return false;
  return cyclotomic_index(minpoly(a)).has_value();
}

ComplexBox NumberField::embedding_at(long bits) const {
  if (embedding.radius.is_zero()) return embedding;
  return refine(embedding, defpoly, bits);
}

ComplexInterval NumberField::embed_at(const FieldElement& a, const ComplexBox& root) const {
  RatPolynomial r = as_ratpoly(a);
  const mpfr_prec_t prec = root.center.prec() + 16;
  ComplexInterval z = root.enclosure();
  ComplexInterval v = evaluate(r.numerator(), z);
  Interval inv_den = Interval::from_mpq(mpq_class(1, r.denominator()), prec);
  return v * inv_den;
}

ComplexInterval NumberField::embed(const FieldElement& a, long bits) const {
  return embed_at(a, embedding_at(bits));
}

NumberField make_field(const IntPolynomial& p, const FieldOptions& opts) {
  if (p.degree() < 1) throw Error(ErrorKind::NotAField, "not a field: constant polynomial");
  if (p.degree() > kFieldDegreeLimit) throw Error(ErrorKind::DegreeLimit, "degree limit");
  if (!p.is_monic()) throw Error(ErrorKind::InvalidArgument, "invalid argument: defining polynomial must be monic");
  if (!is_irreducible(p)) throw Error(ErrorKind::NotAField, "not a field");
  NumberField K;
  K.defpoly = p;
  K.tau = p.degree();
  RootSet rs = isolate_roots(p);
  if (opts.embedding_index >= rs.boxes.size())
    throw Error(ErrorKind::InvalidArgument, "invalid argument: embedding index out of range");
  K.embedding = rs.boxes[opts.embedding_index];
  set_discriminant(K);
  if (opts.disc_override) {
    if (*opts.disc_override <= 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: discriminant must be positive");
    K.disc_abs = *opts.disc_override;
    K.disc_maximal = true;
  }
  K.galois_tower_flag = opts.galois_tower;
  K.torsion_order_f = opts.compute_torsion ? field_torsion_order(K) : 0;
  return K;
}

NumberField rational_field() { return make_field(IntPolynomial::x()); }

namespace fpoly {

FieldPolynomial from_int(const NumberField& K, const IntPolynomial& p) {
  FieldPolynomial r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(K.from_rational(mpq_class(c)));
  return r;
}

void trim(const NumberField& K, FieldPolynomial& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

int degree(const FieldPolynomial& a) { return static_cast<int>(a.size()) - 1; }

FieldPolynomial add(const NumberField& K, const FieldPolynomial& a, const FieldPolynomial& b) {
  FieldPolynomial r(std::max(a.size(), b.size()), K.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  trim(K, r);
  return r;
}

FieldPolynomial sub(const NumberField& K, const FieldPolynomial& a, const FieldPolynomial& b) {
  FieldPolynomial r(std::max(a.size(), b.size()), K.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  trim(K, r);
  return r;
}

FieldPolynomial mul(const NumberField& K, const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  FieldPolynomial r(a.size() + b.size() - 1, K.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  trim(K, r);
  return r;
}

std::pair<FieldPolynomial, FieldPolynomial> divrem(const NumberField& K, const FieldPolynomial& a,
                                                   const FieldPolynomial& b) {
  if (b.empty()) throw Error(ErrorKind::DomainError, "domain error: division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  FieldPolynomial r = a;
  const size_t db = b.size() - 1;
  const FieldElement lead_inv = K.inv(b.back());
  FieldPolynomial q(a.size() - db, K.zero());
  for (size_t i = a.size(); i-- > db;) {
    if (K.is_zero(r[i])) continue;
    FieldElement t = K.mul(r[i], lead_inv);
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = K.sub(r[i - db + j], K.mul(t, b[j]));
    q[i - db] = std::move(t);
  }
  r.resize(db);
  trim(K, r);
  trim(K, q);
  return {q, r};
}

FieldPolynomial monic(const NumberField& K, const FieldPolynomial& a) {
  if (a.empty()) return a;
  const FieldElement li = K.inv(a.back());
  FieldPolynomial r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(K.mul(c, li));
  return r;
}

FieldPolynomial gcd(const NumberField& K, FieldPolynomial a, FieldPolynomial b) {
  trim(K, a);
  trim(K, b);
  while (!b.empty()) {
    FieldPolynomial r = divrem(K, a, b).second;
    a = std::move(b);
    b = monic(K, r);
  }
  return monic(K, a);
}

FieldElement eval(const NumberField& K, const FieldPolynomial& a, const FieldElement& x) {
  FieldElement r = K.zero();
  for (size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
  return r;
}

FieldPolynomial compose_linear(const NumberField& K, const FieldPolynomial& p, const FieldElement& c0,
                               const FieldElement& c1) {
  FieldPolynomial lin{c0, c1};
  trim(K, lin);
  FieldPolynomial r;
  for (size_t i = p.size(); i-- > 0;) r = add(K, mul(K, r, lin), FieldPolynomial{p[i]});
  return r;
}

bool less(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i].coords;
    const auto& y = b[i].coords;
    for (size_t j = 0; j < std::min(x.size(), y.size()); ++j)
      if (x[j] != y[j]) return x[j] < y[j];
  }
  return false;
}

}  // namespace fpoly

}  // namespace relheight
