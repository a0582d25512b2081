#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "thilb/hilbert_scheme.hpp"

namespace thilb {

SpecialSimplex special_simplex(const MonomialIdeal& I, const GaleLattice& L,
                               const ChamberComplex& cc) {
  ChamberMatch m = delta_chamber(I, L, cc);
  // the sweep-later ray plays the role of b_i, the earlier one b_j
  int i = m.gale_pair.second;
  int j = m.gale_pair.first;
  std::vector<int> bar{i, j};
  std::sort(bar.begin(), bar.end());
  return SpecialSimplex{complement(bar, L.n()), i, j, m.chamber_index};
}

SpecialSimplex special_simplex(const MonomialIdeal& I, const GaleLattice& L) {
  return special_simplex(I, L, chamber_complex(L));
}

GaleLattice project_lattice(const GaleLattice& L, const std::vector<int>& bar) {
  IntMat B2;
  for (int r : bar) B2.rows.push_back(L.row(r));
  return GaleLattice(std::move(B2));
}

namespace {

Monomial std_mono(const MonomialIdeal& I, const Monomial& u, const GaleLattice& L,
                  const Int& cap) {
  return cap > 0 ? standard_monomial(I, u, L, cap) : standard_monomial(I, u, L);
}

// minimal pure-power exponent of variable k among the generators
std::optional<Int> pure_power(const MonomialIdeal& I, int k) {
  std::optional<Int> best;
  for (const Monomial& g : I.gens()) {
    bool pure = !g.is_one();
    for (int v = 0; v < I.nvars() && pure; ++v)
      if (v != k && g.e[static_cast<std::size_t>(v)] != 0) pure = false;
    if (!pure) continue;
    const Int& e = g.e[static_cast<std::size_t>(k)];
    if (!best || e < *best) best = e;
  }
  return best;
}

int index_in(const std::vector<int>& v, int x) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] == x) return static_cast<int>(k);
  throw InternalError("index_in: element missing");
}

}  // namespace

IntVec coherence_witness(const MonomialIdeal& I, const GaleLattice& L,
                         const GraverBasis& Gr) {
  SpecialSimplex sp = special_simplex(I, L);
  std::vector<int> bar = complement(sp.sigma, L.n());
  MonomialIdeal I_sigma = localize(I, sp.sigma);
  auto a = pure_power(I_sigma, index_in(bar, sp.i));
  auto b = pure_power(I_sigma, index_in(bar, sp.j));
  if (!a || !b)
    throw WitnessFailed("coherence_witness: special localization is not artinian");
  IntVec w(static_cast<std::size_t>(L.n()), 0);
  w[static_cast<std::size_t>(sp.i)] = *b;
  w[static_cast<std::size_t>(sp.j)] = *a;
  InitialIdealResult res = initial_ideal(L, Gr, w);
  if (!res.is_monomial() || !(res.monomial() == I))
    throw WitnessFailed("coherence_witness: in_w does not reproduce the ideal");
  return w;
}

MonomialIdeal monomial_ideal_for_cone(const GroebnerFan2& fan, int cone_index,
                                      const GaleLattice& L, const GraverBasis& Gr) {
  const FanCone& fc = fan.cones[static_cast<std::size_t>(cone_index)];
  const Chamber& ch = fan.cc.chambers[static_cast<std::size_t>(fc.chamber)];
  std::vector<int> bar{ch.label.first, ch.label.second};
  std::sort(bar.begin(), bar.end());
  std::vector<int> sigma = complement(bar, L.n());

  GaleLattice L_sigma = project_lattice(L, bar);
  GraverBasis Gr_sigma = graver_basis(L_sigma);

  Cone2 geom = fan.cone_geom(cone_index);
  IntVec what = row_times_mat(fc.weight, L.B());
  IntVec bary = add_vec(geom.lo.dir, geom.hi.dir);
  MonomialIdeal I_sigma;
  bool found = false;
  for (int attempt = 0; attempt < 8 && !found; ++attempt) {
    IntVec w2 = lift_weight(L_sigma, what);
    InitialIdealResult res = initial_ideal(L_sigma, Gr_sigma, w2);
    if (res.is_monomial()) {
      I_sigma = res.monomial();
      found = true;
    } else {
      what = add_vec(scale_vec(2, what), bary);
    }
  }
  if (!found)
    throw InternalError("monomial_ideal_for_cone: no generic projected weight");

  MonomialIdeal forced = forced_ideal(embed(I_sigma, bar, L.n()), Gr);
  if (!(forced == fc.ideal))
    throw InternalError(
        "monomial_ideal_for_cone: forced ideal disagrees with the cone ideal");
  return forced;
}

std::vector<MonomialIdeal> enumerate_monomial_ideals(const GroebnerFan2& fan,
                                                     const GaleLattice& L,
                                                     const GraverBasis& Gr) {
  std::vector<MonomialIdeal> ideals;
  for (int k = 0; k < static_cast<int>(fan.cones.size()); ++k)
    ideals.push_back(monomial_ideal_for_cone(fan, k, L, Gr));
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = a + 1; b < ideals.size(); ++b)
      if (ideals[a] == ideals[b])
        throw InternalError("enumerate_monomial_ideals: duplicate ideals");
  return ideals;
}

MonomialIdeal flip_target_formula(const MonomialIdeal& I, const Monomial& u,
                                  const Monomial& v, const GraverBasis& Gr) {
  std::vector<Monomial> gens;
  for (const Binomial& b : Gr.elements) {
    if (I.contains(b.plus) && !(b.plus.e == u.e) && !I.contains(b.minus))
      gens.push_back(b.plus);
    if (I.contains(b.minus) && !(b.minus.e == u.e) && !I.contains(b.plus))
      gens.push_back(b.minus);
  }
  gens.push_back(v);
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

std::vector<Flip> flips(const MonomialIdeal& I, const GaleLattice& L,
                        const GraverBasis& Gr, const GroebnerFan2& fan, Int cap) {
  int idx = fan.find_cone(I);
  if (idx < 0) throw NotAChamber("flips: not a monomial initial ideal of the lattice");
  const bool plane = fan.support == SupportKind::FullPlane;
  const int nc = static_cast<int>(fan.cones.size());
  const FanCone& fc = fan.cones[static_cast<std::size_t>(idx)];

  struct Facet {
    int ray;
    int neighbor;
  };
  std::vector<Facet> interior;
  if (plane || idx > 0)
    interior.push_back(Facet{fc.lo_ray, (idx + nc - 1) % nc});
  if (plane || idx + 1 < nc)
    interior.push_back(Facet{fc.hi_ray, (idx + 1) % nc});

  std::vector<Flip> out;
  for (const Monomial& u : I.gens()) {
    Monomial v = std_mono(I, u, L, cap);
    IntVec l = sub_vec(u.e, v.e);
    if (v.is_one()) {
      bool disjoint = true;
      for (const Monomial& other : I.gens()) {
        if (other == u) continue;
        for (int k = 0; k < I.nvars(); ++k)
          if (u.e[static_cast<std::size_t>(k)] != 0 &&
              other.e[static_cast<std::size_t>(k)] != 0) {
            disjoint = false;
            break;
          }
        if (!disjoint) break;
      }
      if (disjoint) out.push_back(Flip{Binomial(l), false, std::nullopt, -1});
      continue;
    }
    auto z = L.solve_in_lattice(l);
    if (!z) throw InternalError("flips: generator minus standard monomial not in lattice");
    IntVec zp = primitive(*z);
    for (const Facet& f : interior) {
      const IntVec& d = fan.rays[static_cast<std::size_t>(f.ray)].dir;
      if (dot_vec(d, zp) != 0) continue;
      const MonomialIdeal& target = fan.cones[static_cast<std::size_t>(f.neighbor)].ideal;
      MonomialIdeal formula = flip_target_formula(I, u, v, Gr);
      if (!(formula == target))
        throw InternalError("flips: adjacent-cone target disagrees with the "
                            "forced-generator formula");
      Binomial b(l);  // plus side = u since the supports are disjoint
      if (!(b.plus.e == u.e))
        throw InternalError("flips: flip binomial sides are not disjoint");
      out.push_back(Flip{std::move(b), true, target, f.ray});
      break;
    }
  }
  if (out.size() != 2)
    throw FlipCountViolation("flips: ideal " + I.to_string() + " has " +
                             std::to_string(out.size()) + " flips");
  return out;
}

namespace {

std::vector<MarkedElem> wall_presentation(const MonomialIdeal& I, const Monomial& u,
                                          const Monomial& v) {
  std::vector<MarkedElem> elems;
  for (const Monomial& g : I.gens())
    if (!(g == u)) elems.push_back(MarkedElem{g.e, std::nullopt});
  elems.push_back(MarkedElem{u.e, v.e});
  return elems;
}

bool initial_matches_wall(const InitialIdealResult& res,
                          const std::vector<MarkedElem>& wall_elems) {
  if (res.is_monomial()) return false;
  // generators of in_w(I_L): the untied marked terms plus the tied binomial
  std::vector<MarkedElem> lhs_gens;
  for (const Monomial& g : res.wall().monomials.gens())
    lhs_gens.push_back(MarkedElem{g.e, std::nullopt});
  lhs_gens.push_back(MarkedElem{res.wall().wall.plus.e, res.wall().wall.minus.e});
  MarkedBasis lhs = buchberger(lhs_gens, res.basis.ord);
  MarkedBasis rhs = buchberger(wall_elems, res.basis.ord);
  return lhs.elems == rhs.elems;
}

}  // namespace

WallWitness wall_coherence_witness(const MonomialIdeal& I, const MonomialIdeal& J,
                                   const GaleLattice& L, const GraverBasis& Gr,
                                   const GroebnerFan2& fan, Int cap) {
  if (I == J) throw InvalidPair("wall_coherence_witness: identical ideals");
  std::vector<Flip> fl = flips(I, L, Gr, fan, cap);
  const Flip* over = nullptr;
  for (const Flip& f : fl)
    if (f.is_true && f.target && *f.target == J) over = &f;
  if (!over) throw InvalidPair("wall_coherence_witness: ideals are not flip-adjacent");

  const Monomial& u = over->binomial.plus;
  const Monomial& v = over->binomial.minus;
  IntVec d = sub_vec(u.e, v.e);

  std::vector<MarkedElem> wall_elems = wall_presentation(I, u, v);
  WallIdeal wall{MonomialIdeal::make(L.n(), [&] {
                   std::vector<Monomial> gs;
                   for (const Monomial& g : I.gens())
                     if (!(g == u)) gs.push_back(g);
                   return gs;
                 }()),
                 Binomial(canonical_orientation(L, d))};

  auto try_weight = [&](IntVec w) -> std::optional<IntVec> {
    try {
      InitialIdealResult res = initial_ideal(L, Gr, w);
      if (initial_matches_wall(res, wall_elems)) return w;
    } catch (const WeightOutsideSupport&) {
    }
    return std::nullopt;
  };
  auto composite = [&](const IntVec& w0, const IntVec& w1) {
    Int c0 = dot_vec(w0, d);
    Int c1 = dot_vec(w1, d);
    return try_weight(sub_vec(scale_vec(c0, w1), scale_vec(c1, w0)));
  };

  if (auto w = composite(coherence_witness(I, L, Gr), coherence_witness(J, L, Gr)))
    return WallWitness{std::move(wall), std::move(*w),
                       WallWitness::Branch::CompositeWitness};

  // the coherence-witness pair can degenerate (antipodal plane weights);
  // any pair of certifying cost vectors serves, so retry with the fan's
  // verified interior weights
  int ci = fan.find_cone(I), cj = fan.find_cone(J);
  if (auto w = composite(fan.cones[static_cast<std::size_t>(ci)].weight,
                         fan.cones[static_cast<std::size_t>(cj)].weight))
    return WallWitness{std::move(wall), std::move(*w),
                       WallWitness::Branch::CompositeConeWeight};

  // last resort: indicator weight of the support of a generator whose two
  // standard monomials differ
  for (const Monomial& alpha : wall.monomials.gens()) {
    Monomial cI = std_mono(I, alpha, L, cap);
    Monomial cJ = std_mono(J, alpha, L, cap);
    if (cI == cJ) continue;
    IntVec w2(static_cast<std::size_t>(L.n()), 0);
    for (int k : alpha.support()) w2[static_cast<std::size_t>(k)] = 1;
    if (auto w = try_weight(std::move(w2)))
      return WallWitness{std::move(wall), std::move(*w),
                         WallWitness::Branch::SupportIndicator};
  }
  throw WallNotCoherent("wall_coherence_witness: no certifying cost vector found");
}

int tangent_dimension(const MonomialIdeal& I, const GaleLattice& L,
                      const GraverBasis& Gr, Int cap) {
  (void)Gr;
  const auto& gens = I.gens();
  const int k = static_cast<int>(gens.size());
  std::vector<Monomial> std_monos;
  for (const Monomial& g : gens) std_monos.push_back(std_mono(I, g, L, cap));

  // union-find over generator coefficients, with a forced-zero mark per class
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> zero(static_cast<std::size_t>(k), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[static_cast<std::size_t>(a)] = b;
    zero[static_cast<std::size_t>(b)] =
        static_cast<char>(zero[static_cast<std::size_t>(a)] | zero[static_cast<std::size_t>(b)]);
  };
  auto force_zero = [&](int a) { zero[static_cast<std::size_t>(find(a))] = 1; };

  for (int s = 0; s < k; ++s)
    for (int t = s + 1; t < k; ++t) {
      Monomial gamma = mono_lcm(gens[static_cast<std::size_t>(s)],
                                gens[static_cast<std::size_t>(t)]);
      IntVec ms = sub_vec(gamma.e, gens[static_cast<std::size_t>(s)].e);
      IntVec mt = sub_vec(gamma.e, gens[static_cast<std::size_t>(t)].e);
      Monomial a(add_vec(ms, std_monos[static_cast<std::size_t>(s)].e));
      Monomial b(add_vec(mt, std_monos[static_cast<std::size_t>(t)].e));
      bool in_a = I.contains(a), in_b = I.contains(b);
      if (!in_a && !in_b) {
        if (!(a == b))
          throw InternalError("tangent_dimension: two standard monomials in one class");
        unite(s, t);
      } else if (!in_a) {
        force_zero(s);
      } else if (!in_b) {
        force_zero(t);
      }
    }

  std::set<int> live;
  for (int t = 0; t < k; ++t) {
    int r = find(t);
    if (!zero[static_cast<std::size_t>(r)]) live.insert(r);
  }
  return static_cast<int>(live.size());
}

namespace {

struct ClassTable {
  std::vector<Monomial> monomials;
  // class key (canonical coset representative) -> indices of its monomials
  // within the degree window
  std::map<IntVec, std::vector<std::uint32_t>> classes;
  std::map<IntVec, Int> min_degree;  // cheapest monomial representative
};

ClassTable build_class_table(const GaleLattice& L, const Int& bound) {
  ClassTable tab;
  const int n = L.n();
  IntVec e(static_cast<std::size_t>(n), 0);
  // odometer over exponent vectors of total degree <= bound
  while (true) {
    tab.monomials.emplace_back(e);
    // advance
    int pos = n - 1;
    while (pos >= 0) {
      e[static_cast<std::size_t>(pos)] += 1;
      if (sum_vec(e) <= bound) break;
      e[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  for (std::uint32_t i = 0; i < tab.monomials.size(); ++i) {
    IntVec key = L.degree_class(tab.monomials[i].e);
    Int deg = tab.monomials[i].total_degree();
    auto it = tab.min_degree.find(key);
    if (it == tab.min_degree.end() || deg < it->second) tab.min_degree[key] = deg;
    tab.classes[std::move(key)].push_back(i);
  }
  return tab;
}

// Two standard monomials inside the window refute gradedness outright, for
// any class. A zero count is only conclusive for classes reaching down to
// the safe half of the window: degree-raising trades can double a standard
// monomial's degree relative to the class's cheapest monomial, which the
// margin must absorb.
bool candidate_passes(const MonomialIdeal& cand, const ClassTable& tab,
                      const Int& cutoff) {
  for (const auto& [key, members] : tab.classes) {
    int standard = 0;
    for (std::uint32_t idx : members) {
      if (!cand.contains(tab.monomials[idx])) {
        if (++standard > 1) break;
      }
    }
    if (standard > 1) return false;
    if (standard == 0 && tab.min_degree.at(key) <= cutoff) return false;
  }
  return true;
}

void oracle_params(const GraverBasis& Gr, const OracleOptions& opts, Int& bound,
                   Int& margin) {
  Int maxdeg = Gr.max_total_degree();
  bound = opts.degree_bound > 0 ? opts.degree_bound : 4 * maxdeg;
  // degree-raising trades can double a standard monomial's degree relative
  // to its class representative, so the safety margin is half the window
  margin = opts.margin > 0 ? opts.margin : 2 * maxdeg;
}

}  // namespace

std::vector<Monomial> oracle_dead_classes(const GaleLattice& L,
                                          const MonomialIdeal& cand,
                                          const GraverBasis& Gr,
                                          const OracleOptions& opts) {
  Int bound, margin;
  oracle_params(Gr, opts, bound, margin);
  ClassTable tab = build_class_table(L, bound);
  Int cutoff = bound - margin;
  std::vector<Monomial> dead;
  for (const auto& [key, members] : tab.classes) {
    int standard = 0;
    std::uint32_t cheapest = members.front();
    for (std::uint32_t idx : members) {
      if (!cand.contains(tab.monomials[idx])) ++standard;
      if (tab.monomials[idx].total_degree() <
          tab.monomials[cheapest].total_degree())
        cheapest = idx;
    }
    if (standard == 0 && tab.min_degree.at(key) <= cutoff)
      dead.push_back(tab.monomials[cheapest]);
    if (standard > 1) dead.push_back(tab.monomials[cheapest]);
  }
  return dead;
}

std::vector<MonomialIdeal> exhaustive_ideal_oracle_serial(const GaleLattice& L,
                                                          const GraverBasis& Gr,
                                                          const OracleOptions& opts) {
  const std::size_t g = Gr.elements.size();
  if (g > 20)
    throw TooManyGraverElements("exhaustive_ideal_oracle: " + std::to_string(g) +
                                " Graver elements");
  Int bound, margin;
  oracle_params(Gr, opts, bound, margin);
  ClassTable tab = build_class_table(L, bound);
  Int cutoff = bound - margin;

  std::vector<MonomialIdeal> found;
  for (std::uint64_t mask = 0; mask < (1ull << g); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t b = 0; b < g; ++b)
      gens.push_back((mask >> b) & 1 ? Gr.elements[b].plus : Gr.elements[b].minus);
    MonomialIdeal cand = MonomialIdeal::make(L.n(), std::move(gens));
    if (!is_weakly_graded(cand, Gr)) continue;
    if (candidate_passes(cand, tab, cutoff)) found.push_back(std::move(cand));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<MonomialIdeal> exhaustive_ideal_oracle(const GaleLattice& L,
                                                   const GraverBasis& Gr,
                                                   const OracleOptions& opts) {
  const std::size_t g = Gr.elements.size();
  if (g > 20)
    throw TooManyGraverElements("exhaustive_ideal_oracle: " + std::to_string(g) +
                                " Graver elements");
  Int bound, margin;
  oracle_params(Gr, opts, bound, margin);
  ClassTable tab = build_class_table(L, bound);
  Int cutoff = bound - margin;

  const std::int64_t total = static_cast<std::int64_t>(1ull << g);
  std::vector<MonomialIdeal> found;
#pragma omp parallel
  {
    std::vector<MonomialIdeal> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      std::vector<Monomial> gens;
      for (std::size_t b = 0; b < g; ++b)
        gens.push_back((static_cast<std::uint64_t>(mask) >> b) & 1
                           ? Gr.elements[b].plus
                           : Gr.elements[b].minus);
      MonomialIdeal cand = MonomialIdeal::make(L.n(), std::move(gens));
      if (!is_weakly_graded(cand, Gr)) continue;
      if (candidate_passes(cand, tab, cutoff)) local.push_back(std::move(cand));
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

FlipGraph flip_graph(const GroebnerFan2& fan, const GaleLattice& L,
                     const GraverBasis& Gr, Int cap) {
  FlipGraph g;
  g.shape = fan.support == SupportKind::FullPlane ? GraphShape::Cycle : GraphShape::Path;
  for (const FanCone& fc : fan.cones) g.vertices.push_back(fc.ideal);
  const int nc = static_cast<int>(fan.cones.size());
  for (int k = 0; k < nc; ++k) {
    std::vector<Flip> fl = flips(g.vertices[static_cast<std::size_t>(k)], L, Gr, fan, cap);
    for (const Flip& f : fl) {
      if (!f.is_true) {
        g.fake_flips.emplace_back(k, f.binomial);
        continue;
      }
      int to = fan.find_cone(*f.target);
      if (to < 0) throw InternalError("flip_graph: flip target is not a fan ideal");
      int forward = (g.shape == GraphShape::Cycle) ? (k + 1) % nc : k + 1;
      if (to == forward) g.edges.emplace_back(k, to, f.binomial);
    }
  }
  return g;
}

}  // namespace thilb
