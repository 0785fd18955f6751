#include "endosign/packets/packets.hpp"

#include <stdexcept>

#include "endosign/cohomology/pairings.hpp"
#include "endosign/lattice/smith.hpp"

namespace endosign {

namespace {

IntMatrix coroot_columns(const RootDatum& g) {
  IntMatrix c(g.rank(), g.num_roots());
  for (std::size_t j = 0; j < g.num_roots(); ++j)
    for (std::size_t i = 0; i < g.rank(); ++i) c(i, j) = g.coroot(j)[i];
  return c;
}

IntMatrix coroot_rows(const RootDatum& g) { return coroot_columns(g).transpose(); }

AbelianElement truncate_to_torsion(const AbelianElement& full) {
  const FiniteAbelianGroup t = full.group().torsion_subgroup();
  IntVector c(full.coords().begin(),
              full.coords().begin() + static_cast<std::ptrdiff_t>(t.invariant_factors().size()));
  return AbelianElement(t, std::move(c));
}

/// Representatives of {r : M r integral} modulo Z^n and ker(M) (x) Q.
std::vector<DualTorusPoint> rational_torsion_points(const IntMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.D(i, i) != 1) slots.push_back(i);
  const std::size_t n = m.cols();
  std::vector<DualTorusPoint> out;
  std::vector<Integer> k(slots.size(), Integer(0));
  while (true) {
    RatVector s(n, Rational(0));
    for (std::size_t t = 0; t < slots.size(); ++t) s[slots[t]] = Rational(k[t], snf.D(slots[t], slots[t]));
    out.push_back(DualTorusPoint{snf.V_inv * s});
    std::size_t t = 0;
    for (; t < slots.size(); ++t) {
      if (++k[t] < snf.D(slots[t], slots[t])) break;
      k[t] = 0;
    }
    if (t == slots.size()) break;
  }
  return out;
}

RatVector act(const IntMatrix& a, const RatVector& r) { return a * r; }

void require_Xw(const ParameterCombinatorics& pc, const IntVector& lambda) {
  if (!membership_Xw(pc, lambda)) throw InputError("lambda = " + to_string(lambda) + " is not in X_w");
}

}  // namespace

ParameterCombinatorics::ParameterCombinatorics(RootDatum g, FrobeniusTwist twist)
    : g_(std::move(g)),
      twist_(std::move(twist)),
      xstar_(twist_.a, twist_.order),
      x_(xstar_.dual()),
      x_coinv_(x_),
      xbar_coinv_(coroot_columns(g_).hstack(x_.augmentation())) {
  if (!g_.coroot_permutation(twist_.a)) throw InputError("the twist does not permute the coroots");
}

bool membership_Xw(const ParameterCombinatorics& pc, const IntVector& lambda) {
  return pc.x().in_norm_kernel(lambda);
}

TrselpReport trselp_validate(const ParameterCombinatorics& pc) {
  TrselpReport report;
  report.fixed_basis = kernel_basis(pc.x().augmentation()).columns();
  report.ok = true;
  for (const auto& v : report.fixed_basis) {
    for (const auto& root : pc.datum().roots()) {
      if (dot(root, v) != 0) {
        report.ok = false;
        report.witness = std::make_pair(v, root);
        return report;
      }
    }
  }
  return report;
}

ComponentGroup component_group(const ParameterCombinatorics& pc) {
  return ComponentGroup{h1_lattice(pc.xstar()), pc.x_coinvariants().torsion().order()};
}

bool is_fixed_point(const ParameterCombinatorics& pc, const RatVector& r) {
  if (r.size() != pc.datum().rank()) throw InputError("point has the wrong number of coordinates");
  return is_integral(act(pc.xstar().augmentation(), r));
}

bool is_central_point(const ParameterCombinatorics& pc, const RatVector& r) {
  return is_fixed_point(pc, r) && is_integral(act(coroot_rows(pc.datum()), r));
}

DualTorusPoint make_dual_torus_point(const ParameterCombinatorics& pc, const RatVector& r) {
  if (!is_fixed_point(pc, r)) throw InputError("point " + to_string(r) + " is not fixed by the twist modulo X^*");
  return DualTorusPoint{r};
}

std::vector<DualTorusPoint> enumerate_fixed_points(const ParameterCombinatorics& pc) {
  return rational_torsion_points(pc.xstar().augmentation());
}

std::vector<DualTorusPoint> enumerate_central_points(const ParameterCombinatorics& pc) {
  return rational_torsion_points(coroot_rows(pc.datum()).vstack(pc.xstar().augmentation()));
}

DualTorusPoint point_of_component(const ParameterCombinatorics& pc, const ComponentGroup& c,
                                  const AbelianElement& e) {
  const IntVector rep = c.presentation.representative(e);
  auto r = solve_rational(pc.xstar().augmentation(), to_rational(rep));
  if (!r) throw std::logic_error("norm-kernel vector outside the rational image of a - 1");
  return DualTorusPoint{*r};
}

QmodZ character_eval(const ParameterCombinatorics& pc, const IntVector& lambda, const DualTorusPoint& t) {
  require_Xw(pc, lambda);
  if (!is_fixed_point(pc, t.r)) throw InputError("point " + to_string(t.r) + " is not fixed by the twist modulo X^*");
  return QmodZ(dot(lambda, t.r));
}

AbelianElement central_restriction(const ParameterCombinatorics& pc, const IntVector& lambda) {
  require_Xw(pc, lambda);
  const AbelianElement full = pc.xbar_coinvariants().project(lambda);
  if (!full.is_torsion()) throw std::logic_error("image of an X_w vector in Xbar_Gamma is not torsion");
  return truncate_to_torsion(full);
}

QmodZ central_pairing(const ParameterCombinatorics& pc, const AbelianElement& u, const DualTorusPoint& t) {
  if (!is_central_point(pc, t.r)) throw InputError("point " + to_string(t.r) + " is not central and fixed");
  IntVector c = u.coords();
  c.resize(pc.xbar_coinvariants().group().num_generators(), Integer(0));
  const IntVector lift = pc.xbar_coinvariants().lift(AbelianElement(pc.xbar_coinvariants().group(), std::move(c)));
  return QmodZ(dot(lift, t.r));
}

std::vector<AbelianElement> packet_fiber(const ParameterCombinatorics& pc, const AbelianElement& u) {
  std::vector<AbelianElement> out;
  for (const auto& e : enumerate_torsion(pc.x_coinvariants().torsion())) {
    if (central_restriction(pc, pc.x_coinvariants().lift_torsion(e)) == u) out.push_back(e);
  }
  return out;
}

std::vector<PacketFiber> packet_fibers(const ParameterCombinatorics& pc) {
  std::vector<PacketFiber> out;
  for (const auto& u : enumerate_torsion(pc.xbar_torsion())) out.push_back({u, {}});
  for (const auto& e : enumerate_torsion(pc.x_coinvariants().torsion())) {
    const AbelianElement u = central_restriction(pc, pc.x_coinvariants().lift_torsion(e));
    for (auto& f : out) {
      if (f.u == u) {
        f.members.push_back(e);
        break;
      }
    }
  }
  return out;
}

KottwitzCheck kottwitz_sign_check(const ParameterCombinatorics& pc, const IntVector& lambda, const DualTorusPoint& t,
                                  Normalization normalization) {
  const QmodZ character = character_eval(pc, lambda, t);
  const TateGroup h1_torus = h1_torus_model(pc.x());
  const CohomologyClass image =
      normalization == Normalization::DeBackerReeder ? dr_map(h1_torus, lambda) : tn_map(h1_torus, lambda);
  const RatVector c = act(pc.xstar().augmentation(), t.r);
  IntVector t_class(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) t_class[i] = c[i].get_num();
  const QmodZ pairing = pairing_cup(pc.xstar(), t_class, image.representative);
  return KottwitzCheck{pairing, character, pairing == -character};
}

}  // namespace endosign
