#include "endosign/lattice/qmodz.hpp"

#include <cctype>
#include <ostream>

namespace endosign {

QmodZ::QmodZ(const Rational& r) : value_(r) {
  value_.canonicalize();
  Integer floor;
  mpz_fdiv_q(floor.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  value_ -= floor;
  value_.canonicalize();
}

QmodZ::QmodZ(long numerator, long denominator) {
  if (denominator == 0) throw InputError("QmodZ: zero denominator");
  *this = QmodZ(Rational(numerator, denominator));
}

std::string QmodZ::to_string() const { return rational_to_string(value_); }

QmodZ QmodZ::parse(const std::string& text) { return QmodZ(parse_rational(text)); }

std::ostream& operator<<(std::ostream& os, const QmodZ& x) { return os << x.to_string(); }

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("malformed rational '" + text + "'");
  }
  Integer n(num.front() == '+' ? num.substr(1) : num);
  Integer d(den);
  if (d == 0) throw InputError("malformed rational '" + text + "': zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace endosign
