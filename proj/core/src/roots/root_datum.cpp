#include "endosign/roots/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "endosign/lattice/smith.hpp"

namespace endosign {

namespace {

bool sign_coherent(const IntVector& c) {
  bool pos = false, neg = false;
  for (const auto& x : c) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  return !(pos && neg) && (pos || neg);
}

Integer height(const IntVector& c) {
  Integer h = 0;
  for (const auto& x : c) h += x;
  return h;
}

}  // namespace

GeneratedRoots generate_roots(const std::vector<IntVector>& simple_roots,
                              const std::vector<IntVector>& simple_coroots, std::size_t cap) {
  const std::size_t k = simple_roots.size();
  if (simple_coroots.size() != k) throw InputError("simple roots and coroots differ in number");
  if (k == 0) return {};
  const std::size_t n = simple_roots.front().size();
  for (std::size_t i = 0; i < k; ++i) {
    if (simple_roots[i].size() != n || simple_coroots[i].size() != n) {
      throw InputError("simple root/coroot vectors must all have length equal to the rank");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Integer aij = dot(simple_roots[i], simple_coroots[j]);
      const Integer aji = dot(simple_roots[j], simple_coroots[i]);
      if (i == j) {
        if (aij != 2) throw InputError("Cartan matrix: <a_i, a_i^v> != 2 for simple index " + std::to_string(i + 1));
        continue;
      }
      if (aij > 0) throw InputError("Cartan matrix: positive off-diagonal entry");
      if ((aij == 0) != (aji == 0)) throw InputError("Cartan matrix: zero pattern is not symmetric");
      if (aij * aji > 3) throw InputError("Cartan matrix: entry product exceeds 3 (not of finite type)");
    }
  }
  if (IntMatrix::from_rows(simple_roots).rank() != k || IntMatrix::from_rows(simple_coroots).rank() != k) {
    throw InputError("simple roots or simple coroots are linearly dependent");
  }

  GeneratedRoots out;
  std::map<IntVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto insert = [&](IntVector root, IntVector coroot, IntVector coords) {
    auto it = seen.find(root);
    if (it != seen.end()) {
      if (out.coroots[it->second] != coroot) throw InputError("reflection closure assigns two coroots to one root");
      return;
    }
    if (!sign_coherent(coords)) throw InputError("root " + to_string(root) + " is not sign-coherent in the simple basis");
    if (dot(root, coroot) != 2) throw InputError("root/coroot pair with pairing != 2");
    if (out.roots.size() >= cap) throw InputError("root closure exceeded " + std::to_string(cap) + " roots");
    seen.emplace(root, out.roots.size());
    queue.push_back(out.roots.size());
    out.roots.push_back(std::move(root));
    out.coroots.push_back(std::move(coroot));
    out.simple_coordinates.push_back(std::move(coords));
  };
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k, Integer(0));
    e[i] = 1;
    insert(simple_roots[i], simple_coroots[i], e);
    insert(-simple_roots[i], -simple_coroots[i], -e);
  }
  while (!queue.empty()) {
    const std::size_t b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      const IntVector beta = out.roots[b];
      const IntVector beta_v = out.coroots[b];
      const IntVector coords = out.simple_coordinates[b];
      const Integer c = dot(beta, simple_coroots[i]);
      const Integer cv = dot(simple_roots[i], beta_v);
      IntVector new_coords = coords;
      new_coords[i] -= c;
      insert(beta - scale(c, simple_roots[i]), beta_v - scale(cv, simple_coroots[i]), std::move(new_coords));
    }
  }
  for (const auto& r : out.roots) {
    if (seen.count(scale(2, r))) throw InputError("non-reduced root system: 2*" + to_string(r) + " is a root");
  }
  return out;
}

RootDatum RootDatum::from_simple(std::size_t rank, const std::vector<IntVector>& simple_roots,
                                 const std::vector<IntVector>& simple_coroots, std::string label) {
  for (const auto& v : simple_roots)
    if (v.size() != rank) throw InputError("simple root length differs from the rank");
  for (const auto& v : simple_coroots)
    if (v.size() != rank) throw InputError("simple coroot length differs from the rank");
  GeneratedRoots g = generate_roots(simple_roots, simple_coroots);

  std::vector<std::size_t> order(g.roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> pos, neg;
  for (std::size_t i : order) (height(g.simple_coordinates[i]) > 0 ? pos : neg).push_back(i);
  auto by_height = [&](std::size_t a, std::size_t b) {
    const Integer ha = height(g.simple_coordinates[a]);
    const Integer hb = height(g.simple_coordinates[b]);
    if (ha != hb) return ha < hb;
    return g.simple_coordinates[a] > g.simple_coordinates[b];
  };
  std::sort(pos.begin(), pos.end(), by_height);

  RootDatum d;
  d.label_ = std::move(label);
  d.rank_ = rank;
  d.simple_count_ = simple_roots.size();
  for (std::size_t i : pos) {
    d.roots_.push_back(g.roots[i]);
    d.coroots_.push_back(g.coroots[i]);
    d.coords_.push_back(g.simple_coordinates[i]);
  }
  for (std::size_t i : pos) {
    d.roots_.push_back(-g.roots[i]);
    d.coroots_.push_back(-g.coroots[i]);
    d.coords_.push_back(-g.simple_coordinates[i]);
  }
  for (std::size_t i = 0; i < d.roots_.size(); ++i) {
    d.root_index_.emplace(d.roots_[i], i);
    d.coroot_index_.emplace(d.coroots_[i], i);
  }
  if (d.coroot_index_.size() != d.coroots_.size()) throw InputError("coroots are not distinct");
  return d;
}

std::vector<std::size_t> RootDatum::simple_indices() const {
  std::vector<std::size_t> idx(simple_count_);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

std::vector<IntVector> RootDatum::simple_roots() const {
  return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(simple_count_)};
}

std::vector<IntVector> RootDatum::simple_coroots() const {
  return {coroots_.begin(), coroots_.begin() + static_cast<std::ptrdiff_t>(simple_count_)};
}

std::size_t RootDatum::negative_of(std::size_t i) const {
  const std::size_t half = roots_.size() / 2;
  return i < half ? i + half : i - half;
}

std::vector<std::size_t> RootDatum::positive_indices() const {
  std::vector<std::size_t> idx(roots_.size() / 2);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

std::optional<std::size_t> RootDatum::index_of_root(const IntVector& v) const {
  auto it = root_index_.find(v);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootDatum::index_of_coroot(const IntVector& v) const {
  auto it = coroot_index_.find(v);
  if (it == coroot_index_.end()) return std::nullopt;
  return it->second;
}

IntMatrix RootDatum::cartan_matrix() const {
  IntMatrix c(simple_count_, simple_count_);
  for (std::size_t i = 0; i < simple_count_; ++i)
    for (std::size_t j = 0; j < simple_count_; ++j) c(i, j) = dot(roots_[i], coroots_[j]);
  return c;
}

IntMatrix RootDatum::reflection(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(rank_);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) s(r, c) -= roots_[i][r] * coroots_[i][c];
  return s;
}

std::optional<std::vector<std::size_t>> RootDatum::root_permutation(const IntMatrix& a) const {
  if (a.rows() != rank_ || a.cols() != rank_) return std::nullopt;
  std::vector<std::size_t> perm(roots_.size());
  std::vector<bool> hit(roots_.size(), false);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    auto j = index_of_root(a * roots_[i]);
    if (!j || hit[*j]) return std::nullopt;
    hit[*j] = true;
    perm[i] = *j;
  }
  return perm;
}

std::optional<std::vector<std::size_t>> RootDatum::coroot_permutation(const IntMatrix& a) const {
  if (a.rows() != rank_ || a.cols() != rank_) return std::nullopt;
  IntMatrix dual_action;
  try {
    dual_action = a.unimodular_inverse().transpose();
  } catch (const InputError&) {
    return std::nullopt;
  }
  std::vector<std::size_t> perm(coroots_.size());
  std::vector<bool> hit(coroots_.size(), false);
  for (std::size_t i = 0; i < coroots_.size(); ++i) {
    auto j = index_of_coroot(dual_action * coroots_[i]);
    if (!j || hit[*j]) return std::nullopt;
    hit[*j] = true;
    perm[i] = *j;
  }
  return perm;
}

RootDatum RootDatum::dual() const {
  std::string label = label_.empty() ? std::string() : "dual(" + label_ + ")";
  return from_simple(rank_, simple_coroots(), simple_roots(), std::move(label));
}

std::optional<std::string> RootDatum::validate() const {
  if (roots_.size() != coroots_.size()) return "root and coroot lists differ in length";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (dot(roots_[i], coroots_[i]) != 2) return "pairing of root " + to_string(roots_[i]) + " with its coroot is not 2";
    if (!index_of_root(-roots_[i])) return "negative of root " + to_string(roots_[i]) + " missing";
    if (index_of_root(scale(2, roots_[i]))) return "non-reduced: twice " + to_string(roots_[i]) + " is a root";
    if (!sign_coherent(coords_[i])) return "root " + to_string(roots_[i]) + " is not sign-coherent";
  }
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    for (std::size_t b = 0; b < roots_.size(); ++b) {
      const Integer c = dot(roots_[b], coroots_[a]);
      auto img = index_of_root(roots_[b] - scale(c, roots_[a]));
      if (!img) return "root set not closed under reflection in " + to_string(roots_[a]);
      const Integer cv = dot(roots_[a], coroots_[b]);
      if (coroots_[*img] != coroots_[b] - scale(cv, coroots_[a])) return "root/coroot bijection not equivariant";
    }
  }
  return std::nullopt;
}

int determinant_sign(const IntMatrix& a) {
  const Integer d = a.determinant();
  if (d == 1) return 1;
  if (d == -1) return -1;
  throw InputError("determinant " + d.get_str() + " is not +-1");
}

std::vector<std::size_t> inversion_set(const RootDatum& datum, const IntMatrix& a) {
  auto perm = datum.root_permutation(a);
  if (!perm) throw InputError("matrix does not permute the roots");
  std::vector<std::size_t> out;
  for (std::size_t i : datum.positive_indices()) {
    if (!datum.is_positive((*perm)[i])) out.push_back(i);
  }
  return out;
}

std::size_t fixed_rank(const IntMatrix& a) {
  return rational_kernel_dimension(a - IntMatrix::identity(a.rows()));
}

}  // namespace endosign
