#pragma once

#include <string>
#include <vector>

#include "endosign/lattice/int_matrix.hpp"

namespace endosign {

/// Z/d_1 + ... + Z/d_k + Z^free_rank with 2 <= d_1 | d_2 | ... | d_k.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Factors equal to 1 are dropped; the remaining ones must form a
  /// divisibility chain of integers >= 2.
  explicit FiniteAbelianGroup(IntVector invariant_factors, std::size_t free_rank = 0);

  const IntVector& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t num_generators() const { return factors_.size() + free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }

  /// Order of the torsion part.
  Integer torsion_order() const;
  /// Order of a finite group; throws std::logic_error when free_rank > 0.
  Integer order() const;
  /// Exponent of the torsion part.
  Integer exponent() const;

  FiniteAbelianGroup torsion_subgroup() const { return FiniteAbelianGroup(factors_, 0); }

  /// "Z/2 x Z/4 x Z^1", "0" for the trivial group.
  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup& other) const = default;

 private:
  IntVector factors_;
  std::size_t free_rank_ = 0;
};

/// Element of a FiniteAbelianGroup in canonical coordinates: torsion
/// coordinate i lies in [0, d_i), free coordinates are unreduced.
class AbelianElement {
 public:
  AbelianElement() = default;
  AbelianElement(FiniteAbelianGroup group, IntVector coords);

  static AbelianElement zero(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const { return group_; }
  const IntVector& coords() const { return coords_; }

  bool is_zero() const;
  /// True when every free coordinate vanishes.
  bool is_torsion() const;
  /// Order of a torsion element (1 for zero); throws for non-torsion ones.
  Integer order() const;

  AbelianElement operator+(const AbelianElement& other) const;
  AbelianElement operator-(const AbelianElement& other) const;
  AbelianElement operator-() const;
  AbelianElement multiple(const Integer& k) const;

  bool operator==(const AbelianElement& other) const = default;
  bool operator<(const AbelianElement& other) const;

  std::string to_string() const;

 private:
  void reduce();

  FiniteAbelianGroup group_;
  IntVector coords_;
};

/// All elements of the torsion part, in lexicographic coordinate order.
std::vector<AbelianElement> enumerate_torsion(const FiniteAbelianGroup& group);

/// Z^rows / (column span of A), with a projection from the ambient lattice.
class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& a);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t ambient_rank() const { return ambient_rank_; }

  AbelianElement project(const IntVector& v) const;
  /// A lattice vector whose projection is the given element.
  IntVector lift(const AbelianElement& e) const;

 private:
  FiniteAbelianGroup group_;
  std::size_t ambient_rank_ = 0;
  IntMatrix projection_;  // rows of U_inv for the retained coordinates
  IntMatrix section_;     // matching columns of U
};

}  // namespace endosign
