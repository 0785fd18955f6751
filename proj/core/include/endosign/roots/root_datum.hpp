#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endosign/lattice/int_matrix.hpp"

namespace endosign {

/// Output of reflection closure: parallel lists of roots, coroots and the
/// coordinates of each root in the basis of simple roots.
struct GeneratedRoots {
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  std::vector<IntVector> simple_coordinates;
};

/// Closes the given simple roots/coroots under the simple reflections
/// s_i(x) = x - <x, a_i^v> a_i. Throws InputError when the Cartan integers
/// are not those of a finite reduced root system, or when more than
/// `cap` roots appear.
GeneratedRoots generate_roots(const std::vector<IntVector>& simple_roots,
                              const std::vector<IntVector>& simple_coroots,
                              std::size_t cap = 2000);

/// Root datum (X, R, X_*, R^v) with X = Z^rank, X_* identified with the
/// dual lattice via the dot product, and a chosen base.
///
/// Roots are stored positive-first, ordered by height and then by simple
/// coordinates; the negatives follow in the same order. The simple roots
/// therefore occupy indices 0 .. semisimple_rank()-1.
class RootDatum {
 public:
  RootDatum() = default;

  static RootDatum from_simple(std::size_t rank, const std::vector<IntVector>& simple_roots,
                               const std::vector<IntVector>& simple_coroots, std::string label = {});

  const std::string& label() const { return label_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_count_; }
  std::size_t num_roots() const { return roots_.size(); }

  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  const IntVector& root(std::size_t i) const { return roots_[i]; }
  const IntVector& coroot(std::size_t i) const { return coroots_[i]; }
  std::vector<std::size_t> simple_indices() const;
  const IntVector& simple_root(std::size_t i) const { return roots_[i]; }
  const IntVector& simple_coroot(std::size_t i) const { return coroots_[i]; }
  std::vector<IntVector> simple_roots() const;
  std::vector<IntVector> simple_coroots() const;

  /// Coordinates of root i in the basis of simple roots.
  const IntVector& simple_coordinates(std::size_t i) const { return coords_[i]; }
  bool is_positive(std::size_t i) const { return i < roots_.size() / 2; }
  std::size_t negative_of(std::size_t i) const;
  std::vector<std::size_t> positive_indices() const;

  std::optional<std::size_t> index_of_root(const IntVector& v) const;
  std::optional<std::size_t> index_of_coroot(const IntVector& v) const;

  /// <a_i, a_j^v> for simple i, j.
  IntMatrix cartan_matrix() const;
  /// Reflection in root i, acting on X.
  IntMatrix reflection(std::size_t i) const;

  /// Image index of each root under a, or nullopt when a does not permute R.
  std::optional<std::vector<std::size_t>> root_permutation(const IntMatrix& a) const;
  /// Image index of each coroot under (a^{-1})^T, or nullopt.
  std::optional<std::vector<std::size_t>> coroot_permutation(const IntMatrix& a) const;

  /// Roots and coroots swapped, same base.
  RootDatum dual() const;

  /// Structural checks: pairing = 2, reflection closure, +- pairs,
  /// reducedness, sign-coherent simple coordinates. Returns a diagnostic
  /// for the first violation, or nullopt.
  std::optional<std::string> validate() const;

 private:
  std::string label_;
  std::size_t rank_ = 0;
  std::size_t simple_count_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<IntVector> coords_;
  std::map<IntVector, std::size_t> root_index_;
  std::map<IntVector, std::size_t> coroot_index_;
};

/// Exact determinant of a finite-order automorphism; throws when it is not +-1.
int determinant_sign(const IntMatrix& a);

/// Positive roots a with a(alpha) < 0, as root indices.
std::vector<std::size_t> inversion_set(const RootDatum& datum, const IntMatrix& a);

/// dim_Q ker(a - 1).
std::size_t fixed_rank(const IntMatrix& a);

}  // namespace endosign
