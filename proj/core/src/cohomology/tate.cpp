#include "endosign/cohomology/tate.hpp"

#include <stdexcept>

namespace endosign {

namespace {

IntMatrix relation_coordinates(const SmithDecomposition& snf, const IntMatrix& relations, std::size_t k) {
  IntMatrix coords(k, relations.cols());
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    const IntVector rhs = snf.U_inv * relations.column(j);
    IntVector y(k, Integer(0));
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      if (i < snf.rank) {
        if (!mpz_divisible_p(rhs[i].get_mpz_t(), snf.D(i, i).get_mpz_t())) {
          throw std::logic_error("Subquotient: relation outside the sublattice");
        }
        mpz_divexact(y[i].get_mpz_t(), rhs[i].get_mpz_t(), snf.D(i, i).get_mpz_t());
      } else if (rhs[i] != 0) {
        throw std::logic_error("Subquotient: relation outside the sublattice");
      }
    }
    const IntVector c = snf.V_inv * y;
    for (std::size_t i = 0; i < k; ++i) coords(i, j) = c[i];
  }
  return coords;
}

}  // namespace

Subquotient::Subquotient(IntMatrix sub_basis, const IntMatrix& relations)
    : basis_(std::move(sub_basis)),
      basis_snf_(smith_normal_form(basis_)),
      cokernel_(relation_coordinates(basis_snf_, relations, basis_.cols())) {
  if (basis_snf_.rank != basis_.cols()) throw std::logic_error("Subquotient: basis columns are dependent");
}

std::optional<IntVector> Subquotient::coordinates(const IntVector& v) const {
  if (v.size() != basis_.rows()) throw InputError("vector length does not match lattice rank");
  const IntVector rhs = basis_snf_.U_inv * v;
  IntVector y(basis_.cols(), Integer(0));
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < basis_snf_.rank) {
      if (!mpz_divisible_p(rhs[i].get_mpz_t(), basis_snf_.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), rhs[i].get_mpz_t(), basis_snf_.D(i, i).get_mpz_t());
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  if (basis_.cols() == 0) return IntVector{};
  return basis_snf_.V_inv * y;
}

bool Subquotient::contains(const IntVector& v) const { return coordinates(v).has_value(); }

AbelianElement Subquotient::project(const IntVector& v) const {
  auto c = coordinates(v);
  if (!c) throw InputError("vector " + to_string(v) + " is not in the sublattice");
  return cokernel_.project(*c);
}

IntVector Subquotient::lift(const AbelianElement& e) const {
  if (basis_.cols() == 0) return IntVector(basis_.rows(), Integer(0));
  return basis_ * cokernel_.lift(e);
}

TateGroup::TateGroup(const GammaLattice& lattice, std::string provenance)
    : lattice_(lattice),
      provenance_(std::move(provenance)),
      quotient_(kernel_basis(lattice.norm_operator()), lattice.augmentation()) {
  if (!quotient_.group().is_finite()) throw std::logic_error("ker N / (sigma-1)L is infinite");
}

TateGroup tate_h_minus1(const GammaLattice& lattice) { return TateGroup(lattice, "H^-1_T(Gamma,L)"); }

TateGroup h1_torus_model(const GammaLattice& lattice) { return TateGroup(lattice, "H^1(Gamma,T)"); }

TateGroup h1_lattice(const GammaLattice& lattice) { return TateGroup(lattice, "H^1(Gamma,L)"); }

Subquotient tate_h0(const GammaLattice& lattice) {
  return Subquotient(kernel_basis(lattice.augmentation()), lattice.norm_operator());
}

Coinvariants::Coinvariants(const GammaLattice& lattice) : cokernel_(lattice.augmentation()) {
  const TateGroup h = tate_h_minus1(lattice);
  for (const auto& cycle : h.cycles().columns()) {
    if (!project(cycle).is_torsion()) throw std::logic_error("a norm-kernel vector has non-torsion coinvariant class");
  }
  if (h.group().order() != group().torsion_order()) {
    throw std::logic_error("torsion of coinvariants differs in order from H^-1_T");
  }
}

AbelianElement Coinvariants::project_torsion(const IntVector& v) const {
  const AbelianElement full = project(v);
  if (!full.is_torsion()) throw InputError("class of " + to_string(v) + " is not torsion in the coinvariants");
  const FiniteAbelianGroup t = torsion();
  IntVector c(full.coords().begin(),
              full.coords().begin() + static_cast<std::ptrdiff_t>(t.invariant_factors().size()));
  return AbelianElement(t, std::move(c));
}

IntVector Coinvariants::lift_torsion(const AbelianElement& e) const {
  IntVector c = e.coords();
  c.resize(group().num_generators(), Integer(0));
  return cokernel_.lift(AbelianElement(group(), std::move(c)));
}

Coinvariants coinvariants(const GammaLattice& lattice) { return Coinvariants(lattice); }

CohomologyClass tn_map(const TateGroup& h1, const IntVector& lambda) {
  if (!h1.lattice().in_norm_kernel(lambda)) {
    throw InputError("lambda = " + to_string(lambda) + " is not torsion in the coinvariants");
  }
  return CohomologyClass{h1.project(lambda), lambda};
}

CohomologyClass dr_map(const TateGroup& h1, const IntVector& lambda) {
  if (!h1.lattice().in_norm_kernel(lambda)) {
    throw InputError("lambda = " + to_string(lambda) + " is not torsion in the coinvariants");
  }
  const CocycleTable z = cocycle_from_value(h1.lattice(), CocycleAnchor::Frobenius, lambda);
  const IntVector& at_sigma = z.values.size() > 1 ? z.values[1] : z.values[0];
  return CohomologyClass{h1.project(at_sigma), at_sigma};
}

}  // namespace endosign
