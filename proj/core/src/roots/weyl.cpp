#include "endosign/roots/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "endosign/lattice/smith.hpp"

namespace endosign {

std::string word_to_string(const WeylWord& word) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  os << ']';
  return os.str();
}

WeylElement weyl_from_word(const RootDatum& datum, const WeylWord& word) {
  IntMatrix m = IntMatrix::identity(datum.rank());
  for (int label : word) {
    if (label < 1 || static_cast<std::size_t>(label) > datum.semisimple_rank()) {
      throw InputError("simple reflection label " + std::to_string(label) + " out of range 1.." +
                       std::to_string(datum.semisimple_rank()));
    }
    m = m * datum.reflection(static_cast<std::size_t>(label - 1));
  }
  auto reduced = reduced_word(datum, m);
  return WeylElement{m, reduced ? *reduced : word};
}

std::optional<WeylWord> reduced_word(const RootDatum& datum, const IntMatrix& a) {
  if (!datum.root_permutation(a)) return std::nullopt;
  IntMatrix w = a;
  WeylWord reversed;
  const std::size_t max_len = datum.num_roots() / 2;
  for (;;) {
    std::optional<std::size_t> descent;
    for (std::size_t i = 0; i < datum.semisimple_rank(); ++i) {
      auto img = datum.index_of_root(w * datum.simple_root(i));
      if (!datum.is_positive(*img)) {
        descent = i;
        break;
      }
    }
    if (!descent) break;
    if (reversed.size() >= max_len) return std::nullopt;
    reversed.push_back(static_cast<int>(*descent + 1));
    w = w * datum.reflection(*descent);
  }
  if (!w.is_identity()) return std::nullopt;
  return WeylWord(reversed.rbegin(), reversed.rend());
}

std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum, std::size_t cap) {
  std::map<IntMatrix, std::size_t> seen;
  std::vector<WeylElement> out;
  std::deque<std::size_t> queue;
  out.push_back(WeylElement{IntMatrix::identity(datum.rank()), {}});
  seen.emplace(out.back().matrix, 0);
  queue.push_back(0);
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < datum.semisimple_rank(); ++i) gens.push_back(datum.reflection(i));
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      IntMatrix next = out[cur].matrix * gens[i];
      if (seen.count(next)) continue;
      if (out.size() >= cap) throw InputError("Weyl group exceeds " + std::to_string(cap) + " elements");
      WeylWord word = out[cur].reduced_word;
      word.push_back(static_cast<int>(i + 1));
      seen.emplace(next, out.size());
      queue.push_back(out.size());
      out.push_back(WeylElement{std::move(next), std::move(word)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.matrix < b.matrix;
  });
  return out;
}

BasedAutomorphism make_based_automorphism(const RootDatum& datum, const IntMatrix& matrix) {
  if (matrix.rows() != datum.rank() || matrix.cols() != datum.rank()) {
    throw InputError("theta must be a " + std::to_string(datum.rank()) + "x" + std::to_string(datum.rank()) +
                     " matrix");
  }
  const Integer det = matrix.determinant();
  if (det != 1 && det != -1) throw InputError("theta is not invertible over Z (det " + det.get_str() + ")");
  const unsigned order = multiplicative_order(matrix);
  if (order == 0) throw InputError("theta has no finite order below 10000");
  auto perm = datum.root_permutation(matrix);
  if (!perm) throw InputError("theta does not permute the roots");
  auto coperm = datum.coroot_permutation(matrix);
  if (!coperm || *coperm != *perm) throw InputError("theta is not compatible with the root/coroot bijection");
  std::vector<std::size_t> simple_perm(datum.semisimple_rank());
  for (std::size_t i = 0; i < datum.semisimple_rank(); ++i) {
    const std::size_t j = (*perm)[i];
    if (j >= datum.semisimple_rank()) {
      throw InputError("theta moves the base: simple root " + to_string(datum.simple_root(i)) + " maps to " +
                       to_string(datum.root(j)));
    }
    simple_perm[i] = j;
  }
  return BasedAutomorphism{matrix, order, std::move(simple_perm)};
}

BasedAutomorphism based_automorphism_from_permutation(const RootDatum& datum, const std::vector<int>& perm) {
  const std::size_t k = datum.semisimple_rank();
  const std::size_t n = datum.rank();
  if (perm.size() != k) throw InputError("theta permutation must have one entry per simple root");
  std::vector<bool> hit(k, false);
  for (int p : perm) {
    if (p < 1 || static_cast<std::size_t>(p) > k || hit[static_cast<std::size_t>(p - 1)]) {
      throw InputError("theta is not a permutation of 1.." + std::to_string(k));
    }
    hit[static_cast<std::size_t>(p - 1)] = true;
  }
  // Basis: simple roots followed by a basis of the common kernel of the coroots.
  IntMatrix coroot_rows = k ? IntMatrix::from_rows(datum.simple_coroots()) : IntMatrix(0, n);
  IntMatrix central = k ? kernel_basis(coroot_rows) : IntMatrix::identity(n);
  std::vector<IntVector> src, dst;
  for (std::size_t i = 0; i < k; ++i) {
    src.push_back(datum.simple_root(i));
    dst.push_back(datum.simple_root(static_cast<std::size_t>(perm[i] - 1)));
  }
  for (const auto& c : central.columns()) {
    src.push_back(c);
    dst.push_back(c);
  }
  const IntMatrix basis = IntMatrix::from_columns(src, n);
  const IntMatrix image = IntMatrix::from_columns(dst, n);
  // M * basis = image  <=>  basis^T * (row r of M)^T = (row r of image)^T
  const IntMatrix bt = basis.transpose();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto sol = solve_rational(bt, to_rational(image.row(r)));
    if (!sol) throw InputError("theta permutation does not define a linear map");
    for (std::size_t c = 0; c < n; ++c) {
      if ((*sol)[c].get_den() != 1) {
        throw InputError("theta permutation " + word_to_string(perm) + " does not preserve the lattice X");
      }
      m(r, c) = (*sol)[c].get_num();
    }
  }
  return make_based_automorphism(datum, m);
}

std::vector<BasedAutomorphism> enumerate_based_automorphisms(const RootDatum& datum) {
  const std::size_t k = datum.semisimple_rank();
  const IntMatrix cartan = datum.cartan_matrix();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<BasedAutomorphism> out;
  do {
    bool preserves = true;
    for (std::size_t i = 0; i < k && preserves; ++i)
      for (std::size_t j = 0; j < k && preserves; ++j)
        preserves = cartan(static_cast<std::size_t>(perm[i] - 1), static_cast<std::size_t>(perm[j] - 1)) ==
                    cartan(i, j);
    if (!preserves) continue;
    try {
      out.push_back(based_automorphism_from_permutation(datum, perm));
    } catch (const InputError&) {
      // diagram symmetry not realized on this isogeny class
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FrobeniusTwist make_twist(const RootDatum& datum, const WeylElement& w, const BasedAutomorphism& theta,
                          unsigned cap) {
  IntMatrix a = w.matrix * theta.matrix;
  const unsigned order = multiplicative_order(a, cap);
  if (order == 0) throw InputError("w*theta has no finite order below " + std::to_string(cap));
  if (!datum.root_permutation(a)) throw InputError("w*theta does not permute the roots");
  return FrobeniusTwist{w, theta, std::move(a), order};
}

}  // namespace endosign
