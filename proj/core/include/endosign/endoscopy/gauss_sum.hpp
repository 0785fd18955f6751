#pragma once

#include <vector>

#include "endosign/lattice/int_matrix.hpp"

namespace endosign {

/// F_{p^2} = F_p[x]/(x^2 - c), elements a + b x.
class QuadraticField {
 public:
  /// Throws InputError unless p is an odd prime <= 101.
  explicit QuadraticField(long p);

  long p() const { return p_; }
  /// Least quadratic non-residue mod p.
  long c() const { return c_; }

  struct Element {
    long a = 0;
    long b = 0;
    bool operator==(const Element&) const = default;
  };

  Element multiply(const Element& x, const Element& y) const;
  /// a^2 - c b^2 = x * x^p.
  long norm(const Element& x) const;
  std::vector<Element> elements() const;

 private:
  long p_;
  long c_;
};

bool is_odd_prime(long p);

/// Multiplicity n_t of each t in F_p as a norm from F_{p^2}.
std::vector<long> norm_counts(const QuadraticField& field);

/// sum over k in F_{p^2} of psi(N(k)), psi(x) = exp(2 pi i j x / p). The sum
/// lies in Z[zeta_p]; it is an integer iff the coefficients on zeta^t, t != 0,
/// agree, and is then returned exactly. Throws InputError for p out of range
/// or j = 0 mod p; std::logic_error when the sum is not rational.
Integer gauss_sum_norm(long p, long psi_index);

}  // namespace endosign
