#include "relheight/multrank.hpp"

#include <algorithm>

#include "relheight/error.hpp"

namespace relheight {

namespace {

FieldElement map_element(const NumberField& L, const FieldElement& theta_image, const FieldElement& x) {
  FieldElement r = L.zero();
  for (size_t i = x.coords.size(); i-- > 0;) {
    r = L.mul(r, theta_image);
    r.coords[0] += x.coords[i];
  }
  return r;
}

bool is_torsion(const NumberField& F, const FieldElement& x) {
  if (F.is_zero(x)) return false;
  return F.pow(x, static_cast<long>(F.torsion_order_f)) == F.one();
}

// Interval log-modulus of a nonzero number at its own embedding.
Interval log_modulus(const AlgebraicNumber& a, long bits) {
  for (long b = bits; b <= kMaxRootPrecision; b *= 2) {
    ComplexBox box = a.root.radius.is_zero() ? a.root : refine(a.root, a.minpoly, b);
    Interval m = box.modulus();
    if (m.positive()) return log(m);
  }
  throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");
}

long sup_norm_bound(const std::vector<mpz_class>& row, size_t n) {
  mpz_class m = 0;
  for (size_t i = 0; i < n; ++i) m = std::max(m, mpz_class(abs(row[i])));
  return m.fits_slong_p() ? m.get_si() : std::numeric_limits<long>::max();
}

// Integer relation search on the rows of a log matrix.
ZMatrix reduced_candidates(const std::vector<std::vector<Interval>>& logs, long bound, long bits) {
  const size_t n = logs.size();
  const size_t cols = n == 0 ? 0 : logs[0].size();
  ZMatrix basis(n, std::vector<mpz_class>(n + cols));
  const long scale = std::max<long>(bits / 2, 16);
  for (size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    for (size_t j = 0; j < cols; ++j) {
      Real v = ldexp(logs[i][j].mid(), scale);
      mpfr_get_z(basis[i][n + j].get_mpz_t(), v.get(), MPFR_RNDN);
    }
  }
  if (n > 0) lll_reduce(basis);
  ZMatrix out;
  for (auto& row : basis) {
    long s = sup_norm_bound(row, n);
    if (s == 0 || s > bound) continue;
    out.emplace_back(row.begin(), row.begin() + static_cast<long>(n));
  }
  return out;
}

std::vector<std::vector<Interval>> fallback_logs(const std::vector<AlgebraicNumber>& nums, long bits) {
  std::vector<std::vector<Interval>> out;
  for (const auto& a : nums) {
    if (a.minpoly.degree() == 1 && a.minpoly.coeff(0) == 0) throw Error(ErrorKind::DomainError, "domain error: zero input");
    if (root_of_unity_order(a)) out.push_back({Interval::from_long(0, bits)});
    else out.push_back({log_modulus(a, bits)});
  }
  return out;
}

RelationLattice numeric_relations(const std::vector<AlgebraicNumber>& nums, long bound, long bits) {
  ZMatrix cands = reduced_candidates(fallback_logs(nums, bits), bound, bits);
  // Re-check each candidate at four times the precision with margin 2^-bits.
  auto logs4 = fallback_logs(nums, 4 * bits);
  ZMatrix kept;
  for (auto& a : cands) {
    Interval s = Interval::from_long(0, 4 * bits);
    for (size_t i = 0; i < a.size(); ++i) s = s + logs4[i][0] * Interval::from_mpz(a[i], 4 * bits);
    if (s.mag() < ldexp(Real(1L, 4 * bits), -bits)) kept.push_back(a);
  }
  return RelationLattice{hermite_normal_form(kept)};
}

}  // namespace

const char* to_string(RankStatus s) noexcept {
  return s == RankStatus::Exact ? "exact" : "numerically-supported";
}

std::optional<CommonField> common_field(const std::vector<AlgebraicNumber>& nums) {
  CommonField cf{rational_field(), {}};
  for (const auto& a : nums) {
    Compositum c;
    try {
      c = compositum(cf.field, a, false);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegreeLimit) return std::nullopt;
      throw;
    }
    if (c.relative_degree > 1)
      for (auto& x : cf.images) x = map_element(c.field, c.theta_image, x);
    cf.field = std::move(c.field);
    cf.images.push_back(std::move(c.a_image));
  }
  cf.field.torsion_order_f = field_torsion_order(cf.field);
  return cf;
}

std::vector<std::vector<Interval>> log_embedding_matrix(const CommonField& cf, long precision_bits) {
  const NumberField& F = cf.field;
  for (long bits = precision_bits; bits <= kMaxRootPrecision; bits *= 2) {
    RootSet rs = isolate_roots(F.defpoly, bits);
    std::vector<std::vector<Interval>> out;
    bool ok = true;
    for (const auto& x : cf.images) {
      if (F.is_zero(x)) throw Error(ErrorKind::DomainError, "domain error: zero input");
      std::vector<Interval> row;
      const bool torsion = is_torsion(F, x);
      for (const auto& box : rs.boxes) {
        if (torsion) {
          row.push_back(Interval::from_long(0, bits));
          continue;
        }
        Interval m = F.embed_at(x, box).abs();
        if (!m.positive()) {
          ok = false;
          break;
        }
        row.push_back(log(m));
      }
      if (!ok) break;
      out.push_back(std::move(row));
    }
    if (ok) return out;
  }
  throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");
}

std::vector<std::vector<Interval>> log_embedding_matrix(const std::vector<AlgebraicNumber>& nums,
                                                        long precision_bits) {
  if (auto cf = common_field(nums)) return log_embedding_matrix(*cf, precision_bits);
  return fallback_logs(nums, precision_bits);
}

bool verify_relation(const CommonField& cf, const std::vector<mpz_class>& a) {
  const NumberField& F = cf.field;
  FieldElement y = F.one();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!a[i].fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "invalid argument: exponent too large");
    y = F.mul(y, F.pow(cf.images[i], a[i].get_si()));
  }
  NumberField G = F;
  if (G.torsion_order_f == 0) G.torsion_order_f = field_torsion_order(G);
  return is_torsion(G, y);
}

RelationLattice find_relations(const CommonField& cf, long bound, long precision_bits) {
  ZMatrix kept;
  for (auto& a : reduced_candidates(log_embedding_matrix(cf, precision_bits), bound, precision_bits))
    if (verify_relation(cf, a)) kept.push_back(std::move(a));
  return RelationLattice{hermite_normal_form(kept)};
}

RelationLattice find_relations(const std::vector<AlgebraicNumber>& nums, long bound, long precision_bits) {
  if (auto cf = common_field(nums)) return find_relations(*cf, bound, precision_bits);
  return numeric_relations(nums, bound, precision_bits);
}

RankResult multiplicative_rank(const CommonField& cf, long bound, long precision_bits) {
  const int n = static_cast<int>(cf.images.size());
  RelationLattice first = find_relations(cf, bound, precision_bits);
  RelationLattice second = find_relations(cf, 2 * bound, 2 * precision_bits);
  RankResult r;
  const bool saturated = second.relations.size() == first.relations.size();
  r.lattice = saturated ? first : second;
  r.status = saturated ? RankStatus::Exact : RankStatus::NumericallySupported;
  r.rho = n - static_cast<int>(r.lattice.relations.size());
  return r;
}

RankResult multiplicative_rank(const std::vector<AlgebraicNumber>& nums, long bound, long precision_bits) {
  if (auto cf = common_field(nums)) return multiplicative_rank(*cf, bound, precision_bits);
  RankResult r;
  RelationLattice a = numeric_relations(nums, bound, precision_bits);
  RelationLattice b = numeric_relations(nums, 2 * bound, 2 * precision_bits);
  r.lattice = b.relations.size() > a.relations.size() ? b : a;
  r.status = RankStatus::NumericallySupported;
  r.rho = static_cast<int>(nums.size()) - static_cast<int>(r.lattice.relations.size());
  return r;
}

RankResult brute_force_rank(const std::vector<AlgebraicNumber>& nums, long bound) {
  if (nums.size() > 4 || bound > 6 || bound < 1)
    throw Error(ErrorKind::InvalidArgument, "invalid argument: brute force needs n <= 4 and 1 <= B <= 6");
  auto cf = common_field(nums);
  if (!cf) throw Error(ErrorKind::DegreeLimit, "degree limit");
  const size_t n = nums.size();
  auto logs = log_embedding_matrix(*cf, kDefaultPrecision);
  const size_t cols = n == 0 ? 0 : logs[0].size();
  ZMatrix found;
  std::vector<long> a(n, -bound);
  for (;;) {
    // Only vectors whose first nonzero entry is positive.
    auto first = std::find_if(a.begin(), a.end(), [](long v) { return v != 0; });
    if (first != a.end() && *first > 0) {
      bool possible = true;
      for (size_t j = 0; j < cols && possible; ++j) {
        Interval s = Interval::from_long(0, kDefaultPrecision);
        for (size_t i = 0; i < n; ++i)
          if (a[i] != 0) s = s + logs[i][j] * Interval::from_long(a[i], kDefaultPrecision);
        possible = s.contains_zero();
      }
      if (possible) {
        std::vector<mpz_class> v(a.begin(), a.end());
        if (verify_relation(*cf, v)) found.push_back(std::move(v));
      }
    }
    size_t k = 0;
    while (k < n && a[k] == bound) a[k++] = -bound;
    if (k == n) break;
    ++a[k];
  }
  RankResult r;
  r.lattice.relations = hermite_normal_form(found);
  r.rho = static_cast<int>(n) - static_cast<int>(r.lattice.relations.size());
  r.status = RankStatus::Exact;
  return r;
}

}  // namespace relheight
