#pragma once

#include <optional>

#include "endosign/lattice/int_matrix.hpp"

namespace endosign {

/// A = U * D * V with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r
/// followed by zeros. The inverses are kept so callers can move between
/// the ambient coordinates and the diagonal ones without re-inverting:
/// U_inv * A * V_inv = D.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  /// The min(rows, cols) diagonal entries of D.
  IntVector diagonal() const;
};

/// Smith normal form with smallest-absolute-value pivoting.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Columns form a Z-basis of {x in Z^cols : A x = 0}. The basis is
/// saturated: it spans the kernel over Q intersected with the lattice.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some z in Q^cols with A z = b, or nullopt when b is outside the
/// rational column span.
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);

/// Some z in Z^cols with A z = b, or nullopt when b is outside the
/// integral column span.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// dim_Q ker A, by rational elimination (independent of the SNF path).
std::size_t rational_kernel_dimension(const IntMatrix& a);

}  // namespace endosign
