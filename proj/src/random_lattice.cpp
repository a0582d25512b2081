#include "thilb/random_lattice.hpp"

namespace thilb {

GaleLattice random_gale_lattice(unsigned seed, const RandomLatticeOptions& opts) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nd(opts.min_n, opts.max_n);
  std::uniform_int_distribution<int> ed(-opts.max_entry, opts.max_entry);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int n = nd(rng);
    IntMat B(static_cast<std::size_t>(n), 2);
    for (int i = 0; i < n; ++i) {
      B[static_cast<std::size_t>(i)][0] = ed(rng);
      B[static_cast<std::size_t>(i)][1] = ed(rng);
    }
    try {
      auto [L, log] = normalize_gale(B);
      return L;
    } catch (const RankDeficient&) {
    }
  }
  throw InternalError("random_gale_lattice: could not draw a rank-2 lattice");
}

}  // namespace thilb
