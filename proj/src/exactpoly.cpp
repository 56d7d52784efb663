#include "relheight/exactpoly.hpp"

#include <algorithm>
#include <sstream>

#include "relheight/error.hpp"

namespace relheight {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int k) {
  std::vector<mpz_class> v(static_cast<size_t>(k) + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroInput, "zero input");
  return coeffs_.back();
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  // Homogenized Horner keeps everything integral until the final division.
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = 0, bpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  if (coeffs_.empty()) return 0;
  mpq_class r(acc, bpow / b);
  r.canonicalize();
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::taylor_shift(const mpz_class& a) const {
  std::vector<mpz_class> v = coeffs_;
  const int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) v[j] += a * v[j + 1];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<mpz_class> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

int IntPolynomial::x_valuation() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[k] == 0) ++k;
  return k;
}

IntPolynomial IntPolynomial::shift_down(int k) const {
  if (k >= static_cast<int>(coeffs_.size())) return {};
  return IntPolynomial(std::vector<mpz_class>(coeffs_.begin() + k, coeffs_.end()));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<mpz_class> v = a.coeffs();
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> v(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) mpz_addmul(v[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const mpz_class& c) {
  std::vector<mpz_class> v = a.coeffs();
  for (auto& e : v) e *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial pow(const IntPolynomial& a, unsigned k) {
  IntPolynomial r = IntPolynomial::constant(1), b = a;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool canonical_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

// ---------------------------------------------------------------------------

RatPolynomial::RatPolynomial(IntPolynomial num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = den_;
  for (const auto& c : num_.coeffs()) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    std::vector<mpz_class> v = num_.coeffs();
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    num_ = IntPolynomial(std::move(v));
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

RatPolynomial RatPolynomial::from_coeffs(const std::vector<mpq_class>& c) {
  mpz_class l = 1;
  for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> v(c.size());
  for (size_t i = 0; i < c.size(); ++i) v[i] = c[i].get_num() * (l / c[i].get_den());
  return RatPolynomial(IntPolynomial(std::move(v)), l);
}

std::vector<mpq_class> RatPolynomial::coeffs() const {
  std::vector<mpq_class> v;
  v.reserve(num_.coeffs().size());
  for (const auto& c : num_.coeffs()) {
    mpq_class q(c, den_);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

mpq_class RatPolynomial::eval(const mpq_class& x) const { return num_.eval(x) / mpq_class(den_); }

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  return RatPolynomial(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                       a.denominator() * b.denominator());
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  return RatPolynomial(a.numerator() * b.denominator() - b.numerator() * a.denominator(),
                       a.denominator() * b.denominator());
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  return RatPolynomial(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  std::vector<mpq_class> r = a.coeffs();
  const std::vector<mpq_class> d = b.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {RatPolynomial(), a};
  std::vector<mpq_class> q(da - db + 1);
  const mpq_class inv = 1 / d.back();
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    mpq_class t = r[i] * inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * d[j];
  }
  r.resize(db);
  return {RatPolynomial::from_coeffs(q), RatPolynomial::from_coeffs(r)};
}

IntPolynomial FactorList::expand() const {
  IntPolynomial r = IntPolynomial::constant(content * unit);
  for (const auto& [f, e] : factors) r = r * pow(f, static_cast<unsigned>(e));
  return r;
}

int FactorList::factor_count() const {
  int n = 0;
  for (const auto& fe : factors) n += fe.second;
  return n;
}

// ---------------------------------------------------------------------------

std::pair<mpz_class, IntPolynomial> content_and_primitive(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return {g, p};
  }
  std::vector<mpz_class> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {g, IntPolynomial(std::move(v))};
}

IntPolynomial primitive_part(const IntPolynomial& p) { return content_and_primitive(p).second; }

IntPolynomial normalize(const IntPolynomial& p) {
  IntPolynomial q = primitive_part(p);
  return q.leading() < 0 ? -q : q;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  if (a.is_zero()) return IntPolynomial();
  const int da = a.degree(), db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  const auto& d = b.coeffs();
  const mpz_class& lc = d.back();
  std::vector<mpz_class> q(da - db + 1);
  // Cheap rejection on the constant terms before the full division.
  if (d[0] != 0 && r[0] % d[0] != 0) return std::nullopt;
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), d[j].get_mpz_t());
    q[i - db] = std::move(t);
  }
  for (int j = 0; j < db; ++j)
    if (r[j] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto& d = b.coeffs();
  const mpz_class& lc = d.back();
  for (int i = a.degree(); i >= db; --i) {
    mpz_class t = r[i];
    for (int j = 0; j < i; ++j) r[j] *= lc;
    r[i] = 0;
    if (t != 0)
      for (int j = 0; j < db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), d[j].get_mpz_t());
  }
  r.resize(db);
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  if (a0.is_zero()) return b0.is_zero() ? IntPolynomial() : normalize(b0);
  if (b0.is_zero()) return normalize(a0);
  auto [ca, a] = content_and_primitive(a0);
  auto [cb, b] = content_and_primitive(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  // Primitive PRS: coefficient growth is controlled by taking contents.
  while (!b.is_zero() && b.degree() > 0) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  if (!b.is_zero()) return IntPolynomial::constant(1);
  return normalize(a);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  if (p.degree() <= 0) return IntPolynomial::constant(1);
  IntPolynomial g = gcd(p, p.derivative());
  return normalize(*divide_exact(normalize(p), g));
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() <= 0) return out;
  IntPolynomial f = normalize(p);
  IntPolynomial a = gcd(f, f.derivative());
  IntPolynomial b = *divide_exact(f, a);
  IntPolynomial c = *divide_exact(f.derivative(), a);
  IntPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    IntPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = *divide_exact(b, g);
    c = *divide_exact(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  IntPolynomial A = p, B = q;
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
  }
  auto [a, Ap] = content_and_primitive(A);
  auto [b, Bp] = content_and_primitive(B);
  A = std::move(Ap);
  B = std::move(Bp);
  mpz_class t = pow_z(a, B.degree()) * pow_z(b, A.degree());
  mpz_class g = 1, h = 1;
  for (;;) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPolynomial R = pseudo_remainder(A, B);
    A = std::move(B);
    mpz_class div = g * pow_z(h, delta);
    if (R.is_zero()) {
      B = R;
    } else {
      std::vector<mpz_class> v = R.coeffs();
      for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
      B = IntPolynomial(std::move(v));
    }
    g = A.leading();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) {
      mpz_class num = pow_z(g, delta), den = pow_z(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() <= 0) {
      const int dA = A.degree();
      if (dA == 0) return s * t * h;
      if (B.is_zero()) return 0;
      // h <- lc(B)^dA / h^(dA - 1)
      mpz_class num = pow_z(B.leading(), dA), den = pow_z(h, dA - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * h;
    }
  }
}

mpz_class discriminant(const IntPolynomial& p) {
  const int d = p.degree();
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: discriminant of a constant");
  if (d == 1) return 1;
  mpz_class r = resultant(p, p.derivative());
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if (((d * (d - 1)) / 2) & 1) out = -out;
  return out;
}

namespace {

int y_degree(const BiPolynomial& A) {
  int d = -1;
  for (const auto& c : A) d = std::max(d, c.degree());
  return d;
}

IntPolynomial at_x(const BiPolynomial& A, const mpz_class& x0) {
  IntPolynomial r;
  mpz_class pw = 1;
  for (const auto& c : A) {
    r += c * pw;
    pw *= x0;
  }
  return r;
}

}  // namespace

BiPolynomial constant_in_x(const IntPolynomial& p) { return BiPolynomial{p}; }

IntPolynomial resultant_y(const BiPolynomial& A, const BiPolynomial& B) {
  const int dyA = y_degree(A), dyB = y_degree(B);
  if (dyA < 0 || dyB < 0) return {};
  const int dxA = static_cast<int>(A.size()) - 1, dxB = static_cast<int>(B.size()) - 1;
  const int bound = dxA * dyB + dxB * dyA;
  // Sample points where neither y-degree drops.
  std::vector<mpz_class> xs;
  std::vector<mpq_class> ys;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    mpz_class x0 = (k % 2 == 0) ? mpz_class(k / 2) : mpz_class(-(k + 1) / 2);
    IntPolynomial a = at_x(A, x0), b = at_x(B, x0);
    if (a.degree() != dyA || b.degree() != dyB) continue;
    xs.push_back(x0);
    ys.emplace_back(resultant(a, b));
  }
  // Newton divided differences over Q.
  const size_t n = xs.size();
  std::vector<mpq_class> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<mpq_class> poly{dd[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // poly = poly * (x - xs[i]) + dd[i]
    std::vector<mpq_class> next(poly.size() + 1);
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  std::vector<mpz_class> out(poly.size());
  for (size_t k = 0; k < poly.size(); ++k) {
    if (poly[k].get_den() != 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: non-integral interpolation");
    out[k] = poly[k].get_num();
  }
  return IntPolynomial(std::move(out));
}

}  // namespace relheight
