#pragma once

#include <random>

#include "thilb/intlinalg.hpp"

namespace thilb {

struct RandomLatticeOptions {
  int min_n = 2;
  int max_n = 6;
  int max_entry = 5;
};

// seeded, reproducible normalized rank-2 lattice; redraws until the
// normalized matrix is valid
GaleLattice random_gale_lattice(unsigned seed, const RandomLatticeOptions& opts = {});

}  // namespace thilb
