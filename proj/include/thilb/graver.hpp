#pragma once

#include <vector>

#include "thilb/ideals.hpp"
#include "thilb/intlinalg.hpp"

namespace thilb {

// Conformally minimal nonzero lattice vectors, one representative per
// sign pair. The stored orientation is the one whose phi^{-1} clockwise
// normal lies in the closed upper halfplane (ties toward positive x).
struct GraverBasis {
  int nvars = 0;
  std::vector<Binomial> elements;  // sorted canonically

  bool contains_vector(const IntVec& l) const;  // up to sign
  Int max_total_degree() const;                  // max side degree
};

// orient a lattice vector by the storage convention
IntVec canonical_orientation(const GaleLattice& L, const IntVec& l);

// completion: seed with the signed lattice generators, close under
// pairwise sums with conformal reduction, then sieve to the minimal set
GraverBasis graver_basis(const GaleLattice& L);

// independent oracle: conformally minimal elements of { Bz : |z|_inf <= M }
GraverBasis graver_box_oracle(const GaleLattice& L, const Int& M);
GraverBasis graver_box_oracle_serial(const GaleLattice& L, const Int& M);

// doubles M until the output is stable for two consecutive doublings and
// the pairwise-sum closure test passes
GraverBasis graver_box_oracle_stabilized(const GaleLattice& L);

// do all pairwise sums of (signed) elements conformally reduce to zero?
bool completion_closed(const std::vector<IntVec>& signed_elements);

bool is_weakly_graded(const MonomialIdeal& I, const GraverBasis& Gr);

// ideal generated by the Graver sides whose partner lies outside M
MonomialIdeal forced_ideal(const MonomialIdeal& M, const GraverBasis& Gr);

}  // namespace thilb
