#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "thilb/intlinalg.hpp"

namespace thilb {

// A ray through the origin; dir is primitive and nonzero. Coincident Gale
// vectors are merged into one ray carrying all their source indices.
struct Ray2 {
  IntVec dir;                 // primitive, length 2
  std::vector<int> sources;   // 0-based Gale row indices, sorted; may be empty

  bool operator==(const Ray2& o) const { return dir == o.dir; }
};

// Pointed full-dimensional cone, rays listed in sweep order (lo comes
// first when sweeping from the positive x-axis through the upper
// halfplane).
struct Cone2 {
  Ray2 lo, hi;
};

enum class SupportKind { PointedCone, Halfplane, FullPlane };

const char* support_name(SupportKind k);

struct Chamber {
  int lo_ray, hi_ray;           // indices into ChamberComplex::rays
  std::pair<int, int> label;    // 0-based Gale indices (lo source, hi source)
};

struct ChamberComplex {
  SupportKind support;
  std::vector<Ray2> rays;       // sweep-ordered starting at the support's first ray
  std::vector<Chamber> chambers;

  Cone2 cone(int chamber_index) const {
    const Chamber& c = chambers[chamber_index];
    return Cone2{rays[c.lo_ray], rays[c.hi_ray]};
  }
  // closed membership in the support cone
  bool in_support(const IntVec& v) const;
};

ChamberComplex chamber_complex(const GaleLattice& L);

// Full-rank planar lattice given by two basis rows.
struct Lattice2 {
  std::array<IntVec, 2> basis;

  static Lattice2 standard();
  // lattice generated by the rows of an n x 2 matrix (e.g. the Gale rows)
  static Lattice2 from_rows(const IntMat& B);

  Int det() const { return cross2(basis[0], basis[1]); }
  // integral coordinates of v in this basis, if any
  std::optional<std::array<Int, 2>> coords(const IntVec& v) const;
  bool contains(const IntVec& v) const { return coords(v).has_value(); }
  // smallest positive multiple of the primitive direction of d lying in
  // the lattice
  IntVec primitive_generator(const IntVec& d) const;
};

// All lattice points on the bounded faces of conv((K cap lat) \ {0}), in
// sweep order from K.lo to K.hi. First and last entries are the primitive
// lat-generators of the extreme rays.
std::vector<IntVec> hilbert_basis(const Cone2& K, const Lattice2& lat);

// true iff the primitive lat-generators of K's rays form a lat-basis
bool is_unimodular(const Cone2& K, const Lattice2& lat);

}  // namespace thilb
