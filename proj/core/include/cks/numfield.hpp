#ifndef CKS_NUMFIELD_HPP
#define CKS_NUMFIELD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cks/linalg.hpp"

// Exact arithmetic in a totally real Galois number field K of degree d:
// elements in integral-basis coordinates, the automorphism group, norms and
// traces. Real quadratic fields are constructed from scratch (fundamental
// unit by continued fractions, class number by reduced-ideal enumeration);
// higher-degree fields are loaded from a validated description document.

namespace cks {

struct AlgebraicInteger {
  IntVec coords;  // over the integral basis
  bool operator==(const AlgebraicInteger&) const = default;
};

// Full-rank sublattice of O_K in canonical row Hermite normal form.
// Optional metadata is populated for verified prime ideals.
struct IntegralIdeal {
  IntMat basis;  // d x d, positive pivots, entries above pivots in [0, pivot)
  std::optional<Int> residue_char;
  std::optional<int> ram_index;   // e
  std::optional<int> res_degree;  // f
  bool operator==(const IntegralIdeal& o) const { return basis == o.basis; }
};

class NumberField {
 public:
  // Real quadratic field Q(sqrt(m)), m squarefree > 1. Integral basis
  // {1, w} with w = sqrt(m) or (1+sqrt(m))/2; fundamental unit from the
  // continued fraction of w; class number from reduced-ideal cycles below
  // the Minkowski bound.
  static NumberField quadratic(const Int& m);

  // Construction from the field-description JSON document (required for
  // d > 2, where units / class number / automorphisms are not computed
  // here). Rejects with a diagnostic naming the first failed invariant.
  static NumberField from_config_text(const std::string& json_text);
  static NumberField from_config_file(const std::string& path);
  std::string to_config_text() const;  // canonical document, round-trips

  int degree() const { return degree_; }
  const IntVec& defining_poly() const { return poly_; }
  const RatMat& integral_basis() const { return integral_basis_; }
  const std::vector<IntMat>& mult_table() const { return mult_table_; }
  const Int& disc() const { return disc_; }
  const std::vector<IntMat>& automorphisms() const { return automorphisms_; }
  const std::vector<IntVec>& unit_basis() const { return units_; }
  const Int& class_number() const { return class_number_; }
  std::string label() const;

  struct SuppliedPrime {
    IntegralIdeal ideal;
    std::optional<IntVec> principal_power_gen;  // generator of ideal^h
  };
  const std::vector<SuppliedPrime>& supplied_primes() const {
    return supplied_primes_;
  }

  AlgebraicInteger zero() const { return {IntVec(degree_, 0)}; }
  AlgebraicInteger one() const;
  AlgebraicInteger from_int(const Int& n) const;
  AlgebraicInteger element(IntVec coords) const;

  AlgebraicInteger add(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
  AlgebraicInteger sub(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
  AlgebraicInteger negate(const AlgebraicInteger& a) const;
  AlgebraicInteger mul(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
  AlgebraicInteger pow(const AlgebraicInteger& a, unsigned long e) const;

  // Matrix of multiplication by a, rows = images of the basis vectors.
  IntMat mult_matrix(const AlgebraicInteger& a) const;
  Int norm(const AlgebraicInteger& a) const;
  Int trace(const AlgebraicInteger& a) const;
  bool is_zero(const AlgebraicInteger& a) const;
  bool is_rational(const AlgebraicInteger& a) const;

  // tau indexes into automorphisms(); index 0 is the identity.
  AlgebraicInteger apply_automorphism(std::size_t tau, const AlgebraicInteger& a) const;

  // Exact square test (quadratic fields only; used to reject trivial
  // square classes). Returns the square root when one exists.
  std::optional<AlgebraicInteger> sqrt_in_field(const AlgebraicInteger& a) const;

  bool operator==(const NumberField& o) const;

 private:
  friend NumberField build_quadratic_field(const Int& m);
  NumberField() = default;
  void validate(bool recheck_units_minimal) const;

  int degree_ = 0;
  IntVec poly_;                       // monic, ascending
  RatMat integral_basis_;             // rows over the power basis
  std::vector<IntMat> mult_table_;    // [i] = matrix with row j = coords(b_i b_j)
  Int disc_;
  std::vector<IntMat> automorphisms_; // row j = coords(tau(b_j)), index 0 = id
  std::vector<IntVec> units_;         // d-1 coordinate vectors
  Int class_number_;
  std::vector<SuppliedPrime> supplied_primes_;
};

// Certified real-embedding evaluation through rational interval arithmetic;
// intervals are refined on demand until the sign or width request is met.
class RealEmbeddings {
 public:
  explicit RealEmbeddings(const NumberField& k);
  std::size_t count() const { return roots_.size(); }
  // Embeddings are ordered by ascending root of the defining polynomial.
  std::pair<Rat, Rat> interval(const AlgebraicInteger& a, std::size_t i,
                               const Rat& max_width) const;
  int sign(const AlgebraicInteger& a, std::size_t i) const;

 private:
  const NumberField* field_;
  IntVec poly_;
  mutable std::vector<std::pair<Rat, Rat>> roots_;
};

}  // namespace cks

#endif
