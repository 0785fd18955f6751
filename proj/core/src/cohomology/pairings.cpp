#include "endosign/cohomology/pairings.hpp"

#include <stdexcept>

#include "endosign/lattice/smith.hpp"

namespace endosign {

TwoCocycleZ TwoCocycleZ::coboundary(const std::vector<Integer>& f) {
  const unsigned m = static_cast<unsigned>(f.size());
  TwoCocycleZ b;
  b.m = m;
  b.values.assign(m, std::vector<Integer>(m, Integer(0)));
  for (unsigned s = 0; s < m; ++s)
    for (unsigned t = 0; t < m; ++t) b.values[s][t] = f[t] - f[(s + t) % m] + f[s];
  return b;
}

TwoCocycleZ TwoCocycleZ::fundamental_class(unsigned m) {
  TwoCocycleZ b;
  b.m = m;
  b.values.assign(m, std::vector<Integer>(m, Integer(0)));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned c = 0; c < m; ++c) b.values[a][c] = a + c >= m ? 1 : 0;
  return b;
}

bool TwoCocycleZ::is_cocycle() const {
  if (values.size() != m) return false;
  for (const auto& row : values)
    if (row.size() != m) return false;
  for (unsigned s = 0; s < m; ++s) {
    for (unsigned t = 0; t < m; ++t) {
      for (unsigned r = 0; r < m; ++r) {
        const Integer lhs = values[t][r] - values[(s + t) % m][r] + values[s][(t + r) % m] - values[s][t];
        if (lhs != 0) return false;
      }
    }
  }
  return true;
}

QmodZ invariant_map(const TwoCocycleZ& b) {
  if (b.m == 0) throw InputError("2-cocycle over a group of order 0");
  if (!b.is_cocycle()) throw InputError("table violates the 2-cocycle identity");
  const unsigned sigma = b.m > 1 ? 1 : 0;
  Integer sum = 0;
  for (unsigned k = 0; k < b.m; ++k) sum += b.values[sigma][k];
  return QmodZ(Rational(sum, b.m));
}

namespace {

void require_cycle(const GammaLattice& lattice, const IntVector& v, const char* what) {
  if (!lattice.in_norm_kernel(v)) {
    throw InputError(std::string(what) + " = " + to_string(v) + " is not killed by the norm");
  }
}

}  // namespace

QmodZ pairing_standard(const GammaLattice& lattice, const IntVector& c_sigma, const IntVector& mu) {
  const GammaLattice dual = lattice.dual();
  require_cycle(lattice, c_sigma, "cocycle value");
  require_cycle(dual, mu, "dual class");
  auto z = solve_rational(lattice.augmentation(), to_rational(c_sigma));
  if (!z) throw std::logic_error("(sigma - 1) z = c(sigma) has no rational solution");
  return QmodZ(dot(mu, *z));
}

QmodZ pairing_cup(const GammaLattice& lattice, const IntVector& c_sigma, const IntVector& mu) {
  const GammaLattice dual = lattice.dual();
  require_cycle(lattice, c_sigma, "cocycle value");
  require_cycle(dual, mu, "dual class");
  const CocycleTable c = cocycle_from_value(lattice, CocycleAnchor::Sigma, c_sigma);
  Integer sum = 0;
  for (unsigned k = 0; k < lattice.order(); ++k) sum += dot(dual.sigma_power(k) * mu, c.values[k]);
  return QmodZ(Rational(sum, lattice.order()));
}

TwoCocycleZ cft_cocycle(const GammaLattice& lattice, const IntVector& a_sigma, const IntVector& h) {
  const GammaLattice dual = lattice.dual();
  const CocycleTable a = cocycle_from_value(lattice, CocycleAnchor::Sigma, a_sigma);
  const CocycleTable z = cocycle_from_value(dual, CocycleAnchor::Sigma, h);
  const unsigned m = lattice.order();
  TwoCocycleZ b;
  b.m = m;
  b.values.assign(m, std::vector<Integer>(m, Integer(0)));
  for (unsigned s = 0; s < m; ++s)
    for (unsigned t = 0; t < m; ++t) b.values[s][t] = dot(a.values[s], dual.sigma_power(s) * z.values[t]);
  return b;
}

QmodZ pairing_cft(const GammaLattice& lattice, const IntVector& a_sigma, const IntVector& h) {
  require_cycle(lattice, a_sigma, "cocycle value");
  require_cycle(lattice.dual(), h, "torus class");
  return invariant_map(cft_cocycle(lattice, a_sigma, h));
}

PerfectnessReport check_perfectness(const GammaLattice& lattice) {
  const GammaLattice dual = lattice.dual();
  const TateGroup left = h1_lattice(lattice);
  const TateGroup right = tate_h_minus1(dual);
  PerfectnessReport report;
  report.order_left = left.group().order();
  report.order_right = right.group().order();

  const auto& lf = left.group().invariant_factors();
  const auto& rf = right.group().invariant_factors();
  std::vector<IntVector> left_gens, right_gens;
  for (std::size_t i = 0; i < lf.size(); ++i) {
    IntVector e(lf.size(), Integer(0));
    e[i] = 1;
    left_gens.push_back(left.representative(AbelianElement(left.group(), e)));
  }
  for (std::size_t j = 0; j < rf.size(); ++j) {
    IntVector e(rf.size(), Integer(0));
    e[j] = 1;
    right_gens.push_back(right.representative(AbelianElement(right.group(), e)));
  }

  report.injective = true;
  for (const auto& x : left.elements()) {
    if (x.is_zero()) continue;
    const IntVector rep = left.representative(x);
    bool detected = false;
    for (const auto& g : right_gens) {
      if (!pairing_cup(lattice, rep, g).is_zero()) {
        detected = true;
        break;
      }
    }
    if (!detected) {
      report.injective = false;
      break;
    }
  }

  // Phi(i, j) = e_j * <x_i, y_j> in Z/e_j, the image of generator x_i in
  // Hom(B, Q/Z) = sum_j Z/e_j. Surjectivity <=> unit elementary divisors.
  IntMatrix phi(rf.size(), lf.size() + rf.size());
  for (std::size_t j = 0; j < rf.size(); ++j) {
    for (std::size_t i = 0; i < lf.size(); ++i) {
      const QmodZ v = pairing_cup(lattice, left_gens[i], right_gens[j]);
      const Rational scaled = v.representative() * Rational(rf[j]);
      if (scaled.get_den() != 1) throw std::logic_error("pairing value not killed by the generator order");
      phi(j, i) = scaled.get_num();
    }
    phi(j, lf.size() + j) = rf[j];
  }
  const auto snf = smith_normal_form(phi);
  report.unit_elementary_divisors = snf.rank == rf.size();
  for (std::size_t i = 0; i < snf.rank && report.unit_elementary_divisors; ++i) {
    if (snf.D(i, i) != 1) report.unit_elementary_divisors = false;
  }
  return report;
}

}  // namespace endosign
