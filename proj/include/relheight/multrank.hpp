#pragma once

// Multiplicative rank modulo torsion of a finite set of algebraic numbers.
//
// Relations are exponent vectors a with prod x_i^a_i a root of unity. They
// are discovered by lattice reduction on scaled logarithmic embeddings and
// kept only after exact verification in a common number field.

#include <optional>
#include <vector>

#include "relheight/heights.hpp"
#include "relheight/lattice.hpp"
#include "relheight/numfield.hpp"

namespace relheight {

struct RelationLattice {
  ZMatrix relations;  // Hermite normal form rows
};

enum class RankStatus { Exact, NumericallySupported };

const char* to_string(RankStatus s) noexcept;

struct RankResult {
  int rho = 0;
  RelationLattice lattice;
  RankStatus status = RankStatus::Exact;
};

// A field containing every input, with the inputs as elements.
struct CommonField {
  NumberField field;
  std::vector<FieldElement> images;
};

// Iterated composita over Q; nullopt once the degree caps are exceeded.
std::optional<CommonField> common_field(const std::vector<AlgebraicNumber>& nums);

// Row i holds log|sigma_j(x_i)| over the embeddings of the common field, or
// over the given embedding of each input when no common field fits the caps.
// Roots of unity give exact zero rows.
std::vector<std::vector<Interval>> log_embedding_matrix(const std::vector<AlgebraicNumber>& nums,
                                                        long precision_bits = kDefaultPrecision);
std::vector<std::vector<Interval>> log_embedding_matrix(const CommonField& cf, long precision_bits);

// prod x_i^a_i is a root of unity, decided exactly.
bool verify_relation(const CommonField& cf, const std::vector<mpz_class>& a);

RelationLattice find_relations(const CommonField& cf, long bound, long precision_bits = kDefaultPrecision);
RelationLattice find_relations(const std::vector<AlgebraicNumber>& nums, long bound,
                               long precision_bits = kDefaultPrecision);

// Exact when a rerun at twice the bound and twice the precision finds no
// further relation and a common field exists.
RankResult multiplicative_rank(const CommonField& cf, long bound, long precision_bits = kDefaultPrecision);
RankResult multiplicative_rank(const std::vector<AlgebraicNumber>& nums, long bound,
                               long precision_bits = kDefaultPrecision);

// Exhaustive scan of [-B, B]^n for n <= 4, B <= 6.
RankResult brute_force_rank(const std::vector<AlgebraicNumber>& nums, long bound);

}  // namespace relheight
