#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endosign/roots/root_datum.hpp"

namespace endosign {

/// Words in simple reflections use 1-based simple labels: [1, 2, 1] is
/// s_1 s_2 s_1, acting on X by matrix product in that order.
using WeylWord = std::vector<int>;

std::string word_to_string(const WeylWord& word);

/// Element of the Weyl group acting on X = X^*(T), certified by a reduced word.
struct WeylElement {
  IntMatrix matrix;
  WeylWord reduced_word;

  std::size_t length() const { return reduced_word.size(); }
};

/// Product of simple reflections in the given order. Throws InputError for
/// labels outside 1..semisimple_rank.
WeylElement weyl_from_word(const RootDatum& datum, const WeylWord& word);

/// Reduced word of a matrix lying in W, found by descent; nullopt when the
/// matrix does not permute the roots or is not a product of reflections.
std::optional<WeylWord> reduced_word(const RootDatum& datum, const IntMatrix& a);

/// Full Weyl group by breadth-first closure of the simple reflections,
/// ordered by length and then matrix. Throws InputError beyond `cap`.
std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum, std::size_t cap = 100000);

/// A finite-order automorphism of X that permutes R, preserves the base and
/// whose transpose-inverse carries each coroot to the coroot of the image root.
struct BasedAutomorphism {
  IntMatrix matrix;
  unsigned order = 1;
  /// Image of simple index i (0-based).
  std::vector<std::size_t> simple_permutation;
};

/// Validates an explicit matrix. Throws InputError with a diagnostic when
/// it moves the base, fails to permute the roots, or is incompatible with
/// the coroots.
BasedAutomorphism make_based_automorphism(const RootDatum& datum, const IntMatrix& matrix);

/// The automorphism sending simple root i to simple root perm[i] (1-based
/// labels, perm[i-1] = image of i) and fixing the common kernel of the
/// coroots. Throws when the result is not integral or not based.
BasedAutomorphism based_automorphism_from_permutation(const RootDatum& datum,
                                                      const std::vector<int>& perm);

/// Every Dynkin-diagram symmetry that lifts to an integral automorphism of X
/// acting trivially on the common kernel of the coroots. Identity first.
std::vector<BasedAutomorphism> enumerate_based_automorphisms(const RootDatum& datum);

/// a = w * theta with its multiplicative order m (cap 10000).
struct FrobeniusTwist {
  WeylElement w;
  BasedAutomorphism theta;
  IntMatrix a;
  unsigned order = 1;
};

/// Throws InputError when w*theta has no finite order below the cap or does
/// not permute the roots.
FrobeniusTwist make_twist(const RootDatum& datum, const WeylElement& w, const BasedAutomorphism& theta,
                          unsigned cap = 10000);

}  // namespace endosign
