#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace endosign {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised for malformed user input: bad spec strings, non-finite closures,
/// matrices that fail a structural check. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

IntVector make_int_vector(std::initializer_list<long> values);
RatVector to_rational(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector scale(const Integer& c, const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t height);
  static IntMatrix diagonal(const IntVector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Integer>& entries() const { return entries_; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  RatVector operator*(const RatVector& v) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& other) const = default;
  bool operator<(const IntMatrix& other) const;

  bool is_zero() const;
  bool is_identity() const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Integer determinant() const;
  /// Rank over Q.
  std::size_t rank() const;
  /// Inverse of a matrix with determinant +-1; throws InputError otherwise.
  IntMatrix unimodular_inverse() const;
  IntMatrix pow(unsigned exponent) const;

  /// [this | other]
  IntMatrix hstack(const IntMatrix& other) const;
  /// [this ; other]
  IntMatrix vstack(const IntMatrix& other) const;
  IntMatrix select_columns(const std::vector<std::size_t>& indices) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Smallest k >= 1 with a^k = 1, or 0 when no such k <= cap exists.
unsigned multiplicative_order(const IntMatrix& a, unsigned cap = 10000);

}  // namespace endosign
