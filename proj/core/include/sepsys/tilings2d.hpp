#pragma once

#include <string>

#include "sepsys/symmetry.hpp"

namespace sepsys {

// The permutation σ on [m] read off the middle line of a symmetric tiling,
// with its vertex sequence A_0 = [m], A_i = A_{i-1} - σ(i) + σ(i)°.
struct MiddlePermutation {
  int n = 0;
  std::vector<int> sigma;  // 1-based values, sigma[i-1] = σ(i)

  int m() const { return static_cast<int>(sigma.size()); }
  std::vector<ColorSet> middle_sequence() const;
  bool operator==(const MiddlePermutation&) const = default;
};

MiddlePermutation identity_permutation(int n);

// Extracts σ from the self-symmetric members of a maximal symmetric s- or
// w-collection (n even); rejects collections with the wrong middle profile.
MiddlePermutation sigma_of(const Collection& S);

// The unique tiling in the block of σ with all below-middle indegrees <= 2.
Cubillage min_tiling(const MiddlePermutation& sigma);

// BFS closure of the minimal tiling under symmetric double hexagonal flips.
std::vector<Cubillage> block_of(const MiddlePermutation& sigma);

// Grows a symmetric strongly separated family to an inclusion-maximal one,
// preferring smaller sets; the seed must already be symmetric and separated.
Collection complete_symmetric_strong(const Collection& seed);

// Direction of a double hexagonal move: raising when the below-middle capsid
// goes standard -> anti-standard.
Direction double_move_direction_below_middle(const Cubillage& Q, const SymmetricMove& mv);

struct SvgOptions {
  bool labels = false;
  double scale = 60.0;
};
std::string render_svg(const Cubillage& Q, const SvgOptions& opts = {});

}  // namespace sepsys
