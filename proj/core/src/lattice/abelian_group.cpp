#include "endosign/lattice/abelian_group.hpp"

#include <sstream>
#include <stdexcept>

#include "endosign/lattice/smith.hpp"

namespace endosign {

FiniteAbelianGroup::FiniteAbelianGroup(IntVector invariant_factors, std::size_t free_rank)
    : free_rank_(free_rank) {
  for (auto& d : invariant_factors) {
    if (d < 0) d = -d;
    if (d == 1) continue;
    if (d == 0) throw InputError("FiniteAbelianGroup: zero invariant factor");
    if (!factors_.empty() && !mpz_divisible_p(d.get_mpz_t(), factors_.back().get_mpz_t())) {
      throw InputError("FiniteAbelianGroup: invariant factors must form a divisibility chain");
    }
    factors_.push_back(d);
  }
}

Integer FiniteAbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Integer FiniteAbelianGroup::order() const {
  if (free_rank_ != 0) throw std::logic_error("order of an infinite group");
  return torsion_order();
}

Integer FiniteAbelianGroup::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

std::string FiniteAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : factors_) {
    os << (first ? "" : " x ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank_ > 0) os << (first ? "" : " x ") << "Z^" << free_rank_;
  return os.str();
}

AbelianElement::AbelianElement(FiniteAbelianGroup group, IntVector coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.num_generators()) {
    throw InputError("AbelianElement: coordinate count does not match group");
  }
  reduce();
}

AbelianElement AbelianElement::zero(const FiniteAbelianGroup& group) {
  return AbelianElement(group, IntVector(group.num_generators(), Integer(0)));
}

void AbelianElement::reduce() {
  const auto& d = group_.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    mpz_fdiv_r(coords_[i].get_mpz_t(), coords_[i].get_mpz_t(), d[i].get_mpz_t());
  }
}

bool AbelianElement::is_zero() const { return endosign::is_zero(coords_); }

bool AbelianElement::is_torsion() const {
  for (std::size_t i = group_.invariant_factors().size(); i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

Integer AbelianElement::order() const {
  if (!is_torsion()) throw std::logic_error("order of a non-torsion element");
  Integer ord = 1;
  const auto& d = group_.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), coords_[i].get_mpz_t(), d[i].get_mpz_t());
    Integer oi = d[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), oi.get_mpz_t());
  }
  return ord;
}

AbelianElement AbelianElement::operator+(const AbelianElement& other) const {
  if (!(group_ == other.group_)) throw InputError("AbelianElement: group mismatch");
  return AbelianElement(group_, coords_ + other.coords_);
}

AbelianElement AbelianElement::operator-(const AbelianElement& other) const {
  if (!(group_ == other.group_)) throw InputError("AbelianElement: group mismatch");
  return AbelianElement(group_, coords_ - other.coords_);
}

AbelianElement AbelianElement::operator-() const { return AbelianElement(group_, -coords_); }

AbelianElement AbelianElement::multiple(const Integer& k) const {
  return AbelianElement(group_, scale(k, coords_));
}

bool AbelianElement::operator<(const AbelianElement& other) const { return coords_ < other.coords_; }

std::string AbelianElement::to_string() const { return endosign::to_string(coords_); }

std::vector<AbelianElement> enumerate_torsion(const FiniteAbelianGroup& group) {
  std::vector<AbelianElement> out;
  const auto& d = group.invariant_factors();
  IntVector coords(group.num_generators(), Integer(0));
  for (;;) {
    out.emplace_back(group, coords);
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      coords[i] += 1;
      if (coords[i] < d[i]) break;
      coords[i] = 0;
      if (i == 0) return out;
    }
    if (d.empty()) return out;
  }
}

Cokernel::Cokernel(const IntMatrix& a) : ambient_rank_(a.rows()) {
  const auto snf = smith_normal_form(a);
  std::vector<std::size_t> torsion_idx;
  std::vector<std::size_t> free_idx;
  IntVector factors;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < snf.rank) {
      if (snf.D(i, i) != 1) {
        torsion_idx.push_back(i);
        factors.push_back(snf.D(i, i));
      }
    } else {
      free_idx.push_back(i);
    }
  }
  group_ = FiniteAbelianGroup(factors, free_idx.size());

  std::vector<std::size_t> kept(torsion_idx);
  kept.insert(kept.end(), free_idx.begin(), free_idx.end());
  projection_ = IntMatrix(kept.size(), a.rows());
  section_ = IntMatrix(a.rows(), kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (std::size_t c = 0; c < a.rows(); ++c) {
      projection_(k, c) = snf.U_inv(kept[k], c);
      section_(c, k) = snf.U(c, kept[k]);
    }
  }
}

AbelianElement Cokernel::project(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw InputError("Cokernel::project: dimension mismatch");
  if (projection_.rows() == 0) return AbelianElement::zero(group_);
  return AbelianElement(group_, projection_ * v);
}

IntVector Cokernel::lift(const AbelianElement& e) const {
  if (!(e.group() == group_)) throw InputError("Cokernel::lift: group mismatch");
  if (section_.cols() == 0) return IntVector(ambient_rank_, Integer(0));
  return section_ * e.coords();
}

}  // namespace endosign
