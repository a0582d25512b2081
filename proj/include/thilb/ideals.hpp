#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thilb/geometry2d.hpp"
#include "thilb/intlinalg.hpp"

namespace thilb {

struct Monomial {
  IntVec e;  // nonnegative exponents

  Monomial() = default;
  explicit Monomial(IntVec exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  bool is_one() const { return is_zero_vec(e); }
  Int total_degree() const { return sum_vec(e); }
  std::vector<int> support() const;
  bool divides(const Monomial& m) const { return leq_componentwise(e, m.e); }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const;  // (degree, lex) order, for canonical listings

  std::string to_string() const;  // x1^2*x2 style; "1" for the empty monomial
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// x^{l+} - x^{l-}; the two supports are disjoint by construction
struct Binomial {
  IntVec l;
  Monomial plus, minus;

  explicit Binomial(IntVec lv)
      : l(std::move(lv)), plus(positive_part(l)), minus(negative_part(l)) {}

  bool operator==(const Binomial& o) const { return l == o.l; }
  std::string to_string() const;
};

// Finite set of minimal monomial generators. The zero ideal has no
// generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() : nvars_(0) {}
  static MonomialIdeal make(int nvars, std::vector<Monomial> gens);
  static MonomialIdeal zero(int nvars) { return make(nvars, {}); }
  static MonomialIdeal unit(int nvars) {
    return make(nvars, {Monomial(IntVec(static_cast<std::size_t>(nvars), 0))});
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
  }
  bool operator<(const MonomialIdeal& o) const;  // canonical, for sorted listings

  std::string to_string() const;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

// the unique prime decomposition of rad(I): inclusion-maximal index sets
// sigma (0-based, sorted) with I contained in <x_j : j not in sigma>
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I);

MonomialIdeal radical(const MonomialIdeal& I);

// intersection of monomial ideals (generator-pair lcms, minimalized)
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// the image of I under x_j -> 1 for j in sigma, as an ideal in the
// variables indexed by the sorted complement
MonomialIdeal localize(const MonomialIdeal& I, const std::vector<int>& sigma);

std::vector<int> complement(const std::vector<int>& sigma, int n);

// place an ideal in the variables `vars` (sorted, 0-based) back into n vars
MonomialIdeal embed(const MonomialIdeal& I, const std::vector<int>& vars, int n);

Monomial project_monomial(const Monomial& m, const std::vector<int>& vars);
IntVec project_vec(const IntVec& v, const std::vector<int>& vars);

// the chamber whose containing-simplex set matches the minimal primes of I
struct ChamberMatch {
  int chamber_index;
  Cone2 cone;
  std::pair<int, int> gale_pair;  // 0-based (lo source, hi source)
};

ChamberMatch delta_chamber(const MonomialIdeal& I, const GaleLattice& L,
                           const ChamberComplex& cc);
ChamberMatch delta_chamber(const MonomialIdeal& I, const GaleLattice& L);

// set of index pairs {r,s} with chamber `ci` contained in pos(b_r, b_s)
std::vector<std::vector<int>> containing_simplices(const ChamberComplex& cc, int ci,
                                                   const GaleLattice& L);

Int default_search_cap(const GaleLattice& L, const IntVec& u);

// the unique v >= 0 with u - v in the lattice and x^v not in I, found by
// scanning expanding square shells in phi-coordinates
Monomial standard_monomial(const MonomialIdeal& I, const Monomial& u,
                           const GaleLattice& L, const Int& cap);
Monomial standard_monomial(const MonomialIdeal& I, const Monomial& u,
                           const GaleLattice& L);

}  // namespace thilb
