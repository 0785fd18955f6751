#include "endosign/cohomology/gamma_lattice.hpp"

namespace endosign {

GammaLattice::GammaLattice(IntMatrix sigma, unsigned m) : sigma_(std::move(sigma)), m_(m) {
  if (!sigma_.is_square()) throw InputError("sigma must be a square matrix");
  if (m_ == 0) throw InputError("declared order m must be >= 1");
  powers_.reserve(m_);
  powers_.push_back(IntMatrix::identity(rank()));
  for (unsigned k = 1; k < m_; ++k) powers_.push_back(powers_.back() * sigma_);
  if (!(powers_.back() * sigma_).is_identity()) {
    throw InputError("sigma^" + std::to_string(m_) + " is not the identity: sigma = " + sigma_.to_string());
  }
}

const IntMatrix& GammaLattice::sigma_power(long k) const {
  long r = k % static_cast<long>(m_);
  if (r < 0) r += static_cast<long>(m_);
  return powers_[static_cast<std::size_t>(r)];
}

IntMatrix GammaLattice::augmentation() const { return sigma_ - IntMatrix::identity(rank()); }

IntMatrix GammaLattice::norm_operator() const {
  IntMatrix n(rank(), rank());
  for (const auto& p : powers_) n = n + p;
  return n;
}

bool GammaLattice::in_norm_kernel(const IntVector& v) const {
  if (v.size() != rank()) throw InputError("vector length does not match lattice rank");
  return is_zero(norm_operator() * v);
}

GammaLattice GammaLattice::dual() const {
  // sigma^{-1} = sigma^{m-1}
  return GammaLattice(sigma_power(static_cast<long>(m_) - 1).transpose(), m_);
}

CocycleTable cocycle_from_value(const GammaLattice& lattice, CocycleAnchor anchor, const IntVector& value) {
  if (!lattice.in_norm_kernel(value)) {
    throw InputError("cocycle value " + to_string(value) + " is not killed by the norm");
  }
  const IntVector at_sigma = anchor == CocycleAnchor::Sigma ? value : -(lattice.sigma() * value);
  CocycleTable c;
  c.values.reserve(lattice.order());
  IntVector acc(lattice.rank(), Integer(0));
  for (unsigned k = 0; k < lattice.order(); ++k) {
    c.values.push_back(acc);
    acc = acc + lattice.sigma_power(k) * at_sigma;
  }
  return c;
}

bool is_cocycle(const GammaLattice& lattice, const CocycleTable& c) {
  const unsigned m = lattice.order();
  if (c.values.size() != m) return false;
  for (unsigned s = 0; s < m; ++s) {
    for (unsigned t = 0; t < m; ++t) {
      const IntVector rhs = c.values[s] + lattice.sigma_power(s) * c.values[t];
      if (c.values[(s + t) % m] != rhs) return false;
    }
  }
  return true;
}

}  // namespace endosign
