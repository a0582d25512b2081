#include "thilb/groebner.hpp"

#include <algorithm>
#include <deque>

namespace thilb {

int order_compare(const TermOrder& ord, const IntVec& u, const IntVec& v) {
  Int wu = dot_vec(ord.w, u), wv = dot_vec(ord.w, v);
  if (wu != wv) return wu > wv ? 1 : -1;
  Int du = sum_vec(u), dv = sum_vec(v);
  if (du != dv) return du > dv ? 1 : -1;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
  return 0;
}

std::vector<std::size_t> MarkedBasis::tied_indices() const {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const MarkedElem& e = elems[i];
    if (e.is_binomial() && dot_vec(ord.w, e.lead) == dot_vec(ord.w, *e.trail))
      t.push_back(i);
  }
  return t;
}

namespace {

MarkedElem make_elem(const TermOrder& ord, IntVec a, IntVec b) {
  int c = order_compare(ord, a, b);
  if (c == 0) return MarkedElem{};  // equal terms cancel
  if (c > 0) return MarkedElem{std::move(a), std::move(b)};
  return MarkedElem{std::move(b), std::move(a)};
}

// full normal form against the current basis (skipping element `skip`)
MarkedElem normal_form(MarkedElem f, const std::vector<MarkedElem>& basis,
                       const TermOrder& ord, std::size_t skip) {
  auto find_reducer = [&](const IntVec& t) -> const MarkedElem* {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].is_zero()) continue;
      if (leq_componentwise(basis[i].lead, t)) return &basis[i];
    }
    return nullptr;
  };

  while (!f.is_zero()) {
    if (const MarkedElem* g = find_reducer(f.lead)) {
      if (g->is_binomial()) {
        IntVec nl = add_vec(sub_vec(f.lead, g->lead), *g->trail);
        if (f.is_binomial()) {
          f = make_elem(ord, std::move(nl), std::move(*f.trail));
          if (f.is_zero()) return f;
        } else {
          f = MarkedElem{std::move(nl), std::nullopt};
        }
      } else {
        if (f.is_binomial())
          f = MarkedElem{std::move(*f.trail), std::nullopt};
        else
          return MarkedElem{};
      }
      continue;
    }
    if (f.is_binomial()) {
      if (const MarkedElem* g = find_reducer(*f.trail)) {
        if (g->is_binomial()) {
          f.trail = add_vec(sub_vec(*f.trail, g->lead), *g->trail);
        } else {
          f.trail.reset();
        }
        continue;
      }
    }
    break;
  }
  return f;
}

MarkedElem s_pair(const MarkedElem& f, const MarkedElem& g, const TermOrder& ord) {
  if (!f.is_binomial() && !g.is_binomial()) return MarkedElem{};
  IntVec gamma(f.lead.size());
  for (std::size_t i = 0; i < gamma.size(); ++i)
    gamma[i] = std::max(f.lead[i], g.lead[i]);
  if (f.is_binomial() && g.is_binomial()) {
    IntVec a = add_vec(sub_vec(gamma, f.lead), *f.trail);
    IntVec b = add_vec(sub_vec(gamma, g.lead), *g.trail);
    return make_elem(ord, std::move(a), std::move(b));
  }
  const MarkedElem& bin = f.is_binomial() ? f : g;
  return MarkedElem{add_vec(sub_vec(gamma, bin.lead), *bin.trail), std::nullopt};
}

bool elem_less(const MarkedElem& a, const MarkedElem& b) {
  Int da = sum_vec(a.lead), db = sum_vec(b.lead);
  if (da != db) return da < db;
  if (a.lead != b.lead) return a.lead < b.lead;
  bool ta = a.is_binomial(), tb = b.is_binomial();
  if (ta != tb) return ta < tb;
  if (!ta) return false;
  return *a.trail < *b.trail;
}

}  // namespace

MarkedBasis buchberger(std::vector<MarkedElem> gens, const TermOrder& ord) {
  std::vector<MarkedElem> basis;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;

  auto insert = [&](MarkedElem h) {
    h = normal_form(std::move(h), basis, ord, basis.size());
    if (h.is_zero()) return;
    std::size_t idx = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t j = 0; j < idx; ++j) pairs.emplace_back(idx, j);
  };

  for (MarkedElem& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_binomial()) g = make_elem(ord, std::move(g.lead), std::move(*g.trail));
    insert(std::move(g));
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    MarkedElem s = s_pair(basis[i], basis[j], ord);
    if (!s.is_zero()) insert(std::move(s));
  }

  // interreduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      MarkedElem h = normal_form(basis[i], basis, ord, i);
      if (!(h == basis[i])) {
        basis[i] = std::move(h);
        changed = true;
      }
    }
  }
  std::vector<MarkedElem> out;
  for (MarkedElem& e : basis)
    if (!e.is_zero()) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), elem_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const MarkedElem& a, const MarkedElem& b) { return a == b; }),
            out.end());
  return MarkedBasis{ord, std::move(out), true};
}

MarkedBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& ord) {
  std::vector<MarkedElem> elems;
  for (const Binomial& b : gens) elems.push_back(MarkedElem{b.plus.e, b.minus.e});
  return buchberger(std::move(elems), ord);
}

InitialIdealResult initial_ideal(const GaleLattice& L, const GraverBasis& Gr,
                                 const IntVec& w) {
  return initial_ideal(L, Gr, w, chamber_complex(L));
}

InitialIdealResult initial_ideal(const GaleLattice& L, const GraverBasis& Gr,
                                 const IntVec& w, const ChamberComplex& cc) {
  IntVec what = row_times_mat(w, L.B());
  if (is_zero_vec(what) || !cc.in_support(what))
    throw WeightOutsideSupport("initial_ideal: w*B = " + vec_to_string(what) +
                               " outside pos(B)");
  MarkedBasis mb = buchberger(Gr.elements, TermOrder{w});
  auto tied = mb.tied_indices();
  if (tied.empty()) {
    std::vector<Monomial> leads;
    for (const MarkedElem& e : mb.elems) leads.emplace_back(e.lead);
    return InitialIdealResult{MonomialIdeal::make(L.n(), std::move(leads)),
                              std::move(mb), std::move(what)};
  }
  if (tied.size() == 1) {
    std::vector<Monomial> leads;
    for (std::size_t i = 0; i < mb.elems.size(); ++i)
      if (i != tied[0]) leads.emplace_back(mb.elems[i].lead);
    const MarkedElem& t = mb.elems[tied[0]];
    Binomial wall(canonical_orientation(L, sub_vec(t.lead, *t.trail)));
    return InitialIdealResult{
        WallIdeal{MonomialIdeal::make(L.n(), std::move(leads)), std::move(wall)},
        std::move(mb), std::move(what)};
  }
  throw InternalError("initial_ideal: " + std::to_string(tied.size()) +
                      " tied basis elements at one weight");
}

IntVec lift_weight(const GaleLattice& L, const IntVec& what) {
  HnfResult h = hnf(L.B());
  // nonzero rows of H: (a, b) and (0, c) with a, c > 0
  const Int a = h.H[0][0], b = h.H[0][1], c = h.H[1][1];
  if (a == 0 || c == 0) throw InternalError("lift_weight: unexpected HNF shape");
  Int k1 = a / gcd_int(a, what[0]);
  Int bound = abs_int(a * c) + 1;
  for (Int t = 1; t <= bound; ++t) {
    Int k = k1 * t;
    Int y0 = k * what[0] / a;
    Int rem = k * what[1] - y0 * b;
    if (rem % c != 0) continue;
    Int y1 = rem / c;
    IntVec w = add_vec(scale_vec(y0, h.U[0]), scale_vec(y1, h.U[1]));
    if (row_times_mat(w, L.B()) != scale_vec(k, what))
      throw InternalError("lift_weight: verification failed");
    return w;
  }
  throw InternalError("lift_weight: no integral lift found");
}

int GroebnerFan2::find_cone(const MonomialIdeal& I) const {
  for (std::size_t k = 0; k < cones.size(); ++k)
    if (cones[k].ideal == I) return static_cast<int>(k);
  return -1;
}

namespace {

struct Sector {
  IntVec lo, hi;           // primitive boundary directions
  MonomialIdeal ideal;
  IntVec weight;           // verified interior lift
};

// interior representative with retry toward the barycenter when the
// sampled weight accidentally ties
std::pair<MonomialIdeal, IntVec> sector_ideal(const GaleLattice& L,
                                              const GraverBasis& Gr,
                                              const ChamberComplex& cc,
                                              const IntVec& lo, const IntVec& hi) {
  if (cross2(lo, hi) <= 0)
    throw InternalError("sector_ideal: sector is not pointed");
  IntVec what = add_vec(lo, hi);
  IntVec bary = what;
  for (int attempt = 0; attempt < 8; ++attempt) {
    IntVec w = lift_weight(L, what);
    InitialIdealResult res = initial_ideal(L, Gr, w, cc);
    if (res.is_monomial()) return {res.monomial(), std::move(w)};
    what = add_vec(scale_vec(2, what), bary);
  }
  throw InternalError("sector_ideal: interior weight kept landing on a wall");
}

}  // namespace

GroebnerFan2 groebner_fan(const GaleLattice& L, const GraverBasis& Gr) {
  ChamberComplex cc = chamber_complex(L);

  // candidate walls: chamber rays plus the rays normal to Graver vectors
  std::vector<IntVec> dirs;
  auto add_dir = [&](const IntVec& d) {
    for (const IntVec& e : dirs)
      if (same_ray(e, d)) return;
    dirs.push_back(d);
  };
  for (const Ray2& r : cc.rays) add_dir(r.dir);
  for (const Binomial& bin : Gr.elements) {
    auto z = L.solve_in_lattice(bin.l);
    if (!z) throw InternalError("groebner_fan: Graver vector outside lattice");
    IntVec zp = primitive(*z);
    IntVec d = ray_with_clockwise_normal(zp);
    for (const IntVec& dd : {d, neg_vec(d)})
      if (cc.in_support(dd)) add_dir(dd);
  }
  std::sort(dirs.begin(), dirs.end(), sweep_less);
  // start the sweep at the support's first ray
  auto it = std::find_if(dirs.begin(), dirs.end(),
                         [&](const IntVec& d) { return same_ray(d, cc.rays.front().dir); });
  if (cc.support != SupportKind::FullPlane) {
    if (it == dirs.end()) throw InternalError("groebner_fan: support ray missing");
    std::rotate(dirs.begin(), it, dirs.end());
  }

  const std::size_t m = dirs.size();
  const std::size_t nsec = (cc.support == SupportKind::FullPlane) ? m : m - 1;
  std::vector<Sector> sectors;
  for (std::size_t i = 0; i < nsec; ++i) {
    const IntVec& lo = dirs[i];
    const IntVec& hi = dirs[(i + 1) % m];
    auto [ideal, w] = sector_ideal(L, Gr, cc, lo, hi);
    sectors.push_back(Sector{lo, hi, std::move(ideal), std::move(w)});
  }

  // merge runs of equal ideals into maximal cones
  const bool plane = cc.support == SupportKind::FullPlane;
  if (plane) {
    std::size_t s = sectors.size();
    for (std::size_t i = 0; i < sectors.size(); ++i)
      if (!(sectors[i].ideal ==
            sectors[(i + sectors.size() - 1) % sectors.size()].ideal)) {
        s = i;
        break;
      }
    if (s == sectors.size())
      throw InternalError("groebner_fan: one ideal covering the whole plane");
    std::rotate(sectors.begin(), sectors.begin() + static_cast<std::ptrdiff_t>(s),
                sectors.end());
  }
  std::vector<Sector> cones_raw;
  for (Sector& s : sectors) {
    if (!cones_raw.empty() && cones_raw.back().ideal == s.ideal &&
        same_ray(cones_raw.back().hi, s.lo)) {
      cones_raw.back().hi = s.hi;
    } else {
      cones_raw.push_back(std::move(s));
    }
  }
  int merged = static_cast<int>(sectors.size() - cones_raw.size());

  if (plane) {
    // canonical start: sweep-least boundary ray
    std::size_t best = 0;
    for (std::size_t i = 1; i < cones_raw.size(); ++i)
      if (sweep_less(cones_raw[i].lo, cones_raw[best].lo)) best = i;
    std::rotate(cones_raw.begin(), cones_raw.begin() + static_cast<std::ptrdiff_t>(best),
                cones_raw.end());
  }

  GroebnerFan2 fan;
  fan.support = cc.support;
  fan.merged_sectors = merged;

  auto ray_of = [&](const IntVec& d) -> int {
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
      if (fan.rays[i].dir == d) return static_cast<int>(i);
    Ray2 r{d, {}};
    for (const Ray2& cr : cc.rays)
      if (cr.dir == d) r.sources = cr.sources;
    fan.rays.push_back(std::move(r));
    return static_cast<int>(fan.rays.size() - 1);
  };
  for (const Sector& s : cones_raw) {
    FanCone fc;
    fc.lo_ray = ray_of(s.lo);
    fc.hi_ray = ray_of(s.hi);
    fc.ideal = s.ideal;
    fc.weight = s.weight;
    fan.cones.push_back(std::move(fc));
  }
  // each cone lies in exactly one chamber
  for (FanCone& fc : fan.cones) {
    const IntVec& lo = fan.rays[static_cast<std::size_t>(fc.lo_ray)].dir;
    const IntVec& hi = fan.rays[static_cast<std::size_t>(fc.hi_ray)].dir;
    for (std::size_t ci = 0; ci < cc.chambers.size(); ++ci) {
      Cone2 ch = cc.cone(static_cast<int>(ci));
      if (cross2(ch.lo.dir, lo) >= 0 && cross2(lo, ch.hi.dir) >= 0 &&
          cross2(ch.lo.dir, hi) >= 0 && cross2(hi, ch.hi.dir) >= 0) {
        fc.chamber = static_cast<int>(ci);
        break;
      }
    }
    if (fc.chamber < 0)
      throw InternalError("groebner_fan: cone not contained in a single chamber");
  }
  fan.cc = std::move(cc);
  return fan;
}

}  // namespace thilb
