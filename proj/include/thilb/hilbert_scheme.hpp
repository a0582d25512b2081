#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thilb/groebner.hpp"

namespace thilb {

struct SpecialSimplex {
  std::vector<int> sigma;  // 0-based, sorted; empty when n = 2
  int i, j;                // Gale pair: i the sweep-later ray, j the earlier
  int chamber_index;
};

// sigma = [n] \ {i,j} for the chamber carrying I's minimal primes
SpecialSimplex special_simplex(const MonomialIdeal& I, const GaleLattice& L);
SpecialSimplex special_simplex(const MonomialIdeal& I, const GaleLattice& L,
                               const ChamberComplex& cc);

// cost vector with in_w(I_L) = I, built from the pure powers of the
// special localization; verified before returning
IntVec coherence_witness(const MonomialIdeal& I, const GaleLattice& L,
                         const GraverBasis& Gr);

// projection of the lattice to the two coordinates in `bar` (sorted)
GaleLattice project_lattice(const GaleLattice& L, const std::vector<int>& bar);

// forced-ideal pipeline: chamber -> special localization of the projected
// lattice -> forced ideal; cross-checked against the cone's Buchberger ideal
MonomialIdeal monomial_ideal_for_cone(const GroebnerFan2& fan, int cone_index,
                                      const GaleLattice& L, const GraverBasis& Gr);

// one ideal per maximal cone, in fan order, pairwise distinct
std::vector<MonomialIdeal> enumerate_monomial_ideals(const GroebnerFan2& fan,
                                                     const GaleLattice& L,
                                                     const GraverBasis& Gr);

struct Flip {
  Binomial binomial;  // generator side first
  bool is_true;
  std::optional<MonomialIdeal> target;  // present iff true
  int wall_ray = -1;                    // fan ray index for a true flip
};

// exactly two flips per monomial ideal of the fan; cap <= 0 uses the
// default standard-monomial search bound
std::vector<Flip> flips(const MonomialIdeal& I, const GaleLattice& L,
                        const GraverBasis& Gr, const GroebnerFan2& fan,
                        Int cap = 0);

// target of a true flip by the forced-generator formula
MonomialIdeal flip_target_formula(const MonomialIdeal& I, const Monomial& u,
                                  const Monomial& v, const GraverBasis& Gr);

struct WallWitness {
  WallIdeal wall;
  IntVec w_prime;
  // which certificate worked: the composite of the coherence witnesses, the
  // composite of the fan's interior cone weights, or the support indicator
  enum class Branch { CompositeWitness, CompositeConeWeight, SupportIndicator };
  Branch branch = Branch::CompositeWitness;
};

// composite cost vector certifying that the wall ideal between two
// adjacent monomial ideals is an initial ideal
WallWitness wall_coherence_witness(const MonomialIdeal& I, const MonomialIdeal& J,
                                   const GaleLattice& L, const GraverBasis& Gr,
                                   const GroebnerFan2& fan, Int cap = 0);

// dim of the degree-zero homomorphisms I -> S/I via syzygy constraint
// propagation over the generator coefficients
int tangent_dimension(const MonomialIdeal& I, const GaleLattice& L,
                      const GraverBasis& Gr, Int cap = 0);

struct OracleOptions {
  Int degree_bound = 0;  // 0 = 4 * max Graver degree
  Int margin = 0;        // 0 = max Graver degree
};

// brute-force enumeration over all Graver side-choices, filtered by
// bounded-degree standard-monomial uniqueness per degree class
std::vector<MonomialIdeal> exhaustive_ideal_oracle(const GaleLattice& L,
                                                   const GraverBasis& Gr,
                                                   const OracleOptions& opts);
std::vector<MonomialIdeal> exhaustive_ideal_oracle_serial(const GaleLattice& L,
                                                          const GraverBasis& Gr,
                                                          const OracleOptions& opts);

// cheapest members of the classes the bounded window judged empty (or
// doubly occupied) for a candidate; used to adjudicate window artifacts
std::vector<Monomial> oracle_dead_classes(const GaleLattice& L,
                                          const MonomialIdeal& cand,
                                          const GraverBasis& Gr,
                                          const OracleOptions& opts);

enum class GraphShape { Path, Cycle };

struct FlipGraph {
  std::vector<MonomialIdeal> vertices;  // fan order
  struct Edge {
    int a, b;
    Binomial flip;  // oriented: plus side is a generator of vertex a
    Edge(int a_, int b_, Binomial f) : a(a_), b(b_), flip(std::move(f)) {}
  };
  std::vector<Edge> edges;
  std::vector<std::pair<int, Binomial>> fake_flips;  // vertex, binomial
  GraphShape shape;
};

FlipGraph flip_graph(const GroebnerFan2& fan, const GaleLattice& L,
                     const GraverBasis& Gr, Int cap = 0);

struct CheckResult {
  std::string name;
  std::string statement;  // the property being checked, human readable
  bool pass = false;
  bool ran = true;        // false when a precondition (size budget) skipped it
  nlohmann::json witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall = false;
  nlohmann::json summary;
};

struct VerifyOptions {
  Int degree_bound = 0;       // oracle override, 0 = default
  Int margin = 0;             // oracle override, 0 = default
  Int search_cap = 0;         // standard-monomial cap override, 0 = default
  unsigned seed = 0xC0FFEE;   // weight sampling seed
  Int oracle_budget = 300000; // max monomials the oracle may enumerate
  int random_weights = 5;     // samples for the reduced-basis checks
};

VerificationReport verify(const GaleLattice& L, const VerifyOptions& opts = {});

}  // namespace thilb
