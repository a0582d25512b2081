#include "thilb/geometry2d.hpp"

#include <algorithm>
#include <set>

namespace thilb {

const char* support_name(SupportKind k) {
  switch (k) {
    case SupportKind::PointedCone: return "pointed";
    case SupportKind::Halfplane: return "halfplane";
    case SupportKind::FullPlane: return "plane";
  }
  return "?";
}

bool ChamberComplex::in_support(const IntVec& v) const {
  if (is_zero_vec(v)) return true;
  if (support == SupportKind::FullPlane) return true;
  const IntVec& start = rays.front().dir;
  const IntVec& end = rays.back().dir;
  return cross2(start, v) >= 0 && cross2(v, end) >= 0;
}

ChamberComplex chamber_complex(const GaleLattice& L) {
  // merge coincident directions, keep source indices
  std::vector<Ray2> rays;
  for (int i = 0; i < L.n(); ++i) {
    IntVec d = primitive(L.row(i));
    bool merged = false;
    for (Ray2& r : rays)
      if (r.dir == d) {
        r.sources.push_back(i);
        merged = true;
        break;
      }
    if (!merged) rays.push_back(Ray2{std::move(d), {i}});
  }
  if (rays.size() < 2) throw DegenerateGale("chamber_complex: fewer than 2 distinct rays");
  std::sort(rays.begin(), rays.end(),
            [](const Ray2& a, const Ray2& b) { return sweep_less(a.dir, b.dir); });

  // locate the unique cyclic gap of at least pi, if any; the support starts
  // just after it
  const std::size_t k = rays.size();
  std::size_t start = 0;
  SupportKind support = SupportKind::FullPlane;
  for (std::size_t i = 0; i < k; ++i) {
    const IntVec& a = rays[i].dir;
    const IntVec& b = rays[(i + 1) % k].dir;
    Int c = cross2(a, b);
    if (c == 0 && !same_ray(a, b)) {
      support = SupportKind::Halfplane;
      start = (i + 1) % k;
      break;
    }
    if (c < 0) {
      support = SupportKind::PointedCone;
      start = (i + 1) % k;
      break;
    }
  }
  std::rotate(rays.begin(), rays.begin() + static_cast<std::ptrdiff_t>(start), rays.end());

  ChamberComplex cc;
  cc.support = support;
  cc.rays = std::move(rays);
  const std::size_t m = cc.rays.size();
  const std::size_t count = (support == SupportKind::FullPlane) ? m : m - 1;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = (i + 1) % m;
    Chamber ch;
    ch.lo_ray = static_cast<int>(i);
    ch.hi_ray = static_cast<int>(j);
    ch.label = {cc.rays[i].sources.front(), cc.rays[j].sources.front()};
    cc.chambers.push_back(ch);
  }
  return cc;
}

Lattice2 Lattice2::standard() {
  return Lattice2{{IntVec{1, 0}, IntVec{0, 1}}};
}

Lattice2 Lattice2::from_rows(const IntMat& B) {
  HnfResult h = hnf(B);
  if (h.rank != 2) throw RankDeficient("Lattice2::from_rows: rank < 2");
  return Lattice2{{h.H[0], h.H[1]}};
}

std::optional<std::array<Int, 2>> Lattice2::coords(const IntVec& v) const {
  Int D = det();
  if (D == 0) throw RankDeficient("Lattice2: degenerate basis");
  Int a = cross2(v, basis[1]);
  Int b = cross2(basis[0], v);
  if (a % D != 0 || b % D != 0) return std::nullopt;
  return std::array<Int, 2>{a / D, b / D};
}

IntVec Lattice2::primitive_generator(const IntVec& d) const {
  IntVec p = primitive(d);
  Int D = det();
  if (D == 0) throw RankDeficient("Lattice2: degenerate basis");
  Int a = cross2(p, basis[1]);
  Int b = cross2(basis[0], p);
  // smallest k with k*a and k*b divisible by D
  Int k1 = abs_int(D / gcd_int(a, D));
  Int k2 = abs_int(D / gcd_int(b, D));
  Int k = lcm_int(k1, k2);
  if (k == 0) k = 1;
  return scale_vec(k, p);
}

std::vector<IntVec> hilbert_basis(const Cone2& K, const Lattice2& lat) {
  if (lat.det() == 0) throw RankDeficient("hilbert_basis: lattice rank < 2");
  if (cross2(K.lo.dir, K.hi.dir) <= 0)
    throw InternalError("hilbert_basis: cone must be pointed and full-dimensional");
  IntVec u = lat.primitive_generator(K.lo.dir);
  IntVec v = lat.primitive_generator(K.hi.dir);
  Int D = cross2(u, v);  // > 0

  // every irreducible semigroup element lies in the parallelogram [0,1]u + [0,1]v
  Int sx = u[0] + v[0], sy = u[1] + v[1];
  Int minx = std::min(Int(0), std::min(u[0], std::min(v[0], sx)));
  Int maxx = std::max(Int(0), std::max(u[0], std::max(v[0], sx)));
  Int miny = std::min(Int(0), std::min(u[1], std::min(v[1], sy)));
  Int maxy = std::max(Int(0), std::max(u[1], std::max(v[1], sy)));

  // (s,t) bounds for lattice points s*L0 + t*L1 in the bounding box
  Int Dl = lat.det();
  auto corner_coords = [&](const Int& x, const Int& y) {
    IntVec p{x, y};
    return std::array<Int, 2>{cross2(p, lat.basis[1]), cross2(lat.basis[0], p)};
  };
  Int smin, smax, tmin, tmax;
  bool first = true;
  for (const Int& x : {minx, maxx})
    for (const Int& y : {miny, maxy}) {
      auto c = corner_coords(x, y);
      Int s = floor_div(c[0], Dl), t = floor_div(c[1], Dl);
      if (first) {
        smin = smax = s;
        tmin = tmax = t;
        first = false;
      } else {
        smin = std::min(smin, s);
        smax = std::max(smax, s);
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
      }
    }
  smin -= 1, smax += 1, tmin -= 1, tmax += 1;

  std::vector<IntVec> pts;
  for (Int s = smin; s <= smax; ++s)
    for (Int t = tmin; t <= tmax; ++t) {
      if (s == 0 && t == 0) continue;
      IntVec z = add_vec(scale_vec(s, lat.basis[0]), scale_vec(t, lat.basis[1]));
      if (is_zero_vec(z)) continue;
      Int alpha = cross2(z, v);  // = a * D with a in [0,1] required
      Int beta = cross2(u, z);
      if (alpha < 0 || alpha > D || beta < 0 || beta > D) continue;
      pts.push_back(std::move(z));
    }

  std::set<IntVec> pt_set(pts.begin(), pts.end());
  std::vector<IntVec> hb;
  for (const IntVec& z : pts) {
    bool reducible = false;
    for (const IntVec& z1 : pts) {
      if (z1 == z) continue;
      IntVec z2 = sub_vec(z, z1);
      if (is_zero_vec(z2)) continue;
      if (pt_set.count(z2)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.push_back(z);
  }
  std::sort(hb.begin(), hb.end(),
            [](const IntVec& a, const IntVec& b) { return cross2(a, b) > 0; });
  if (hb.empty() || !same_ray(hb.front(), u) || !same_ray(hb.back(), v))
    throw InternalError("hilbert_basis: extreme generators missing");
  return hb;
}

bool is_unimodular(const Cone2& K, const Lattice2& lat) {
  IntVec u = lat.primitive_generator(K.lo.dir);
  IntVec v = lat.primitive_generator(K.hi.dir);
  return abs_int(cross2(u, v)) == abs_int(lat.det());
}

}  // namespace thilb
