#include "endosign/endoscopy/gauss_sum.hpp"

#include <stdexcept>
#include <string>

namespace endosign {

namespace {

long mod(long x, long p) {
  const long r = x % p;
  return r < 0 ? r + p : r;
}

}  // namespace

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

QuadraticField::QuadraticField(long p) : p_(p), c_(0) {
  if (!is_odd_prime(p) || p > 101) throw InputError("p = " + std::to_string(p) + " is not an odd prime <= 101");
  std::vector<bool> square(static_cast<std::size_t>(p), false);
  for (long x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
  for (long c = 2; c < p; ++c) {
    if (!square[static_cast<std::size_t>(c)]) {
      c_ = c;
      break;
    }
  }
}

QuadraticField::Element QuadraticField::multiply(const Element& x, const Element& y) const {
  return {mod(x.a * y.a + c_ * x.b * y.b, p_), mod(x.a * y.b + x.b * y.a, p_)};
}

long QuadraticField::norm(const Element& x) const { return mod(x.a * x.a - c_ * x.b * x.b, p_); }

std::vector<QuadraticField::Element> QuadraticField::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(p_ * p_));
  for (long a = 0; a < p_; ++a)
    for (long b = 0; b < p_; ++b) out.push_back({a, b});
  return out;
}

std::vector<long> norm_counts(const QuadraticField& field) {
  std::vector<long> counts(static_cast<std::size_t>(field.p()), 0);
  for (const auto& k : field.elements()) ++counts[static_cast<std::size_t>(field.norm(k))];
  return counts;
}

Integer gauss_sum_norm(long p, long psi_index) {
  const QuadraticField field(p);
  if (mod(psi_index, p) == 0) throw InputError("psi index must be nonzero mod " + std::to_string(p));
  const auto counts = norm_counts(field);
  // coefficient of zeta^e in sum_t n_t zeta^{j t}
  std::vector<long> coeff(static_cast<std::size_t>(p), 0);
  for (long t = 0; t < p; ++t) coeff[static_cast<std::size_t>(mod(psi_index * t, p))] += counts[static_cast<std::size_t>(t)];
  for (long e = 2; e < p; ++e) {
    if (coeff[static_cast<std::size_t>(e)] != coeff[1]) throw std::logic_error("norm sum is not rational");
  }
  return Integer(coeff[0] - coeff[1]);
}

}  // namespace endosign
