#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "thilb/geometry2d.hpp"
#include "thilb/graver.hpp"
#include "thilb/ideals.hpp"

namespace thilb {

// weight order refined by a fixed graded-lexicographic tiebreak
struct TermOrder {
  IntVec w;
};

// sign of u - v under the order: +1 when x^u is the larger term
int order_compare(const TermOrder& ord, const IntVec& u, const IntVec& v);

// x^lead - x^trail with the marked term first; a pure monomial when trail
// is absent (signs are irrelevant for ideal membership)
struct MarkedElem {
  IntVec lead;
  std::optional<IntVec> trail;

  bool is_binomial() const { return trail.has_value(); }
  bool is_zero() const { return lead.empty(); }
  bool operator==(const MarkedElem& o) const { return lead == o.lead && trail == o.trail; }
};

struct MarkedBasis {
  TermOrder ord;
  std::vector<MarkedElem> elems;  // reduced, sorted by (degree, lex) of the marked term
  bool reduced = true;

  // elements whose two terms tie under the weight alone
  std::vector<std::size_t> tied_indices() const;
};

MarkedBasis buchberger(std::vector<MarkedElem> gens, const TermOrder& ord);
MarkedBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& ord);

// initial ideal containing exactly one binomial generator: the form taken
// on a single wall of the fan
struct WallIdeal {
  MonomialIdeal monomials;
  Binomial wall;

  bool operator==(const WallIdeal& o) const {
    return monomials == o.monomials && (wall == o.wall || wall.l == neg_vec(o.wall.l));
  }
};

struct InitialIdealResult {
  std::variant<MonomialIdeal, WallIdeal> value;
  MarkedBasis basis;  // reduced basis of the lattice ideal under (w, tiebreak)
  IntVec what;        // w * B, the weight seen by the plane fan

  bool is_monomial() const { return std::holds_alternative<MonomialIdeal>(value); }
  const MonomialIdeal& monomial() const { return std::get<MonomialIdeal>(value); }
  const WallIdeal& wall() const { return std::get<WallIdeal>(value); }
};

// in_w(I_L) from the Graver generators; requires w*B inside pos(B) and
// nonzero. Generic w gives a monomial ideal; w on one wall gives a
// WallIdeal.
InitialIdealResult initial_ideal(const GaleLattice& L, const GraverBasis& Gr,
                                 const IntVec& w);
InitialIdealResult initial_ideal(const GaleLattice& L, const GraverBasis& Gr,
                                 const IntVec& w, const ChamberComplex& cc);

// integer lift of a plane weight: w with w*B = k*what for the smallest
// positive k (scaling keeps the weight in the same fan cone)
IntVec lift_weight(const GaleLattice& L, const IntVec& what);

struct FanCone {
  int lo_ray, hi_ray;      // indices into GroebnerFan2::rays
  MonomialIdeal ideal;
  IntVec weight;           // verified interior representative, length n
  int chamber = -1;        // index into the chamber complex
};

struct GroebnerFan2 {
  ChamberComplex cc;
  SupportKind support;
  std::vector<Ray2> rays;   // sweep-ordered cone boundary rays
  std::vector<FanCone> cones;
  int merged_sectors = 0;   // Graver-normal candidates that were not walls

  Cone2 cone_geom(int k) const {
    const FanCone& c = cones[static_cast<std::size_t>(k)];
    return Cone2{rays[static_cast<std::size_t>(c.lo_ray)],
                 rays[static_cast<std::size_t>(c.hi_ray)]};
  }
  int find_cone(const MonomialIdeal& I) const;  // -1 if absent
};

// maximal Groebner cones by sector sampling over the candidate walls
// (chamber rays plus Graver normals), merging sectors with equal ideals
GroebnerFan2 groebner_fan(const GaleLattice& L, const GraverBasis& Gr);

}  // namespace thilb
