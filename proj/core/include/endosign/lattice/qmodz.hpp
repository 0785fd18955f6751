#pragma once

#include <iosfwd>
#include <string>

#include "endosign/lattice/int_matrix.hpp"

namespace endosign {

/// An element of Q/Z kept as the reduced fraction n/d with 0 <= n < d.
/// Stands in for exp(2 pi i n/d); nothing is ever evaluated numerically.
class QmodZ {
 public:
  QmodZ() : value_(0) {}
  explicit QmodZ(const Rational& r);
  QmodZ(long numerator, long denominator);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const Rational& representative() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// Smallest k >= 1 with k * x = 0.
  Integer order() const { return value_.get_den(); }

  QmodZ operator+(const QmodZ& other) const { return QmodZ(value_ + other.value_); }
  QmodZ operator-(const QmodZ& other) const { return QmodZ(value_ - other.value_); }
  QmodZ operator-() const { return QmodZ(-value_); }
  QmodZ multiple(const Integer& k) const { return QmodZ(Rational(k) * value_); }

  bool operator==(const QmodZ& other) const { return value_ == other.value_; }
  bool operator!=(const QmodZ& other) const { return !(*this == other); }
  bool operator<(const QmodZ& other) const { return value_ < other.value_; }

  /// Always "n/d", including "0/1".
  std::string to_string() const;
  /// Parses "n/d" or "n"; throws InputError on malformed input or d = 0.
  static QmodZ parse(const std::string& text);

 private:
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const QmodZ& x);

/// Parses "n/d" or "n" into a canonical rational; throws InputError on
/// malformed text or a zero denominator.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace endosign
