#include "thilb/graver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace thilb {

namespace {

// subtract conformal divisors until none applies; empty result means zero
IntVec conformal_nf(IntVec h, const std::vector<IntVec>& G) {
  bool again = true;
  while (again && !is_zero_vec(h)) {
    again = false;
    for (const IntVec& g : G) {
      if (conformally_divides(g, h)) {
        h = sub_vec(h, g);
        again = true;
        if (is_zero_vec(h)) return h;
      }
    }
  }
  return h;
}

GraverBasis finalize(const GaleLattice& L, const std::vector<IntVec>& signed_min) {
  std::set<IntVec> kept;
  for (const IntVec& l : signed_min) kept.insert(canonical_orientation(L, l));
  std::vector<Binomial> elems;
  for (const IntVec& l : kept) elems.emplace_back(l);
  std::sort(elems.begin(), elems.end(), [](const Binomial& a, const Binomial& b) {
    Int da = sum_vec(positive_part(a.l)) + sum_vec(negative_part(a.l));
    Int db = sum_vec(positive_part(b.l)) + sum_vec(negative_part(b.l));
    if (da != db) return da < db;
    return a.l < b.l;
  });
  GraverBasis gr;
  gr.nvars = L.n();
  gr.elements = std::move(elems);
  return gr;
}

std::vector<IntVec> sieve_minimal(const std::vector<IntVec>& set) {
  std::vector<IntVec> minimal;
  for (const IntVec& h : set) {
    bool reducible = false;
    for (const IntVec& g : set) {
      if (g == h) continue;
      if (conformally_divides(g, h)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) minimal.push_back(h);
  }
  return minimal;
}

}  // namespace

IntVec canonical_orientation(const GaleLattice& L, const IntVec& l) {
  auto z = L.solve_in_lattice(l);
  if (!z) throw InternalError("canonical_orientation: vector not in lattice");
  const IntVec& zz = *z;
  if (zz[0] < 0 || (zz[0] == 0 && zz[1] > 0)) return l;
  return neg_vec(l);
}

bool GraverBasis::contains_vector(const IntVec& l) const {
  for (const Binomial& b : elements)
    if (b.l == l || b.l == neg_vec(l)) return true;
  return false;
}

Int GraverBasis::max_total_degree() const {
  Int m = 0;
  for (const Binomial& b : elements) {
    m = std::max(m, b.plus.total_degree());
    m = std::max(m, b.minus.total_degree());
  }
  return m;
}

GraverBasis graver_basis(const GaleLattice& L) {
  std::vector<IntVec> G;
  std::deque<std::pair<std::size_t, std::size_t>> queue;  // FIFO pair queue

  auto insert = [&](const IntVec& v) {
    IntVec nf = conformal_nf(v, G);
    if (is_zero_vec(nf)) return;
    for (const IntVec& s : {nf, neg_vec(nf)}) {
      std::size_t idx = G.size();
      G.push_back(s);
      for (std::size_t j = 0; j < idx; ++j) queue.emplace_back(idx, j);
    }
  };

  insert(L.B().col(0));
  insert(L.B().col(1));
  insert(neg_vec(L.B().col(0)));
  insert(neg_vec(L.B().col(1)));

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    insert(add_vec(G[i], G[j]));
  }

  return finalize(L, sieve_minimal(G));
}

namespace {

std::vector<IntVec> box_points(const GaleLattice& L, const Int& M) {
  std::vector<IntVec> pts;
  for (Int zx = -M; zx <= M; ++zx)
    for (Int zy = -M; zy <= M; ++zy) {
      if (zx == 0 && zy == 0) continue;
      pts.push_back(mat_times_col(L.B(), IntVec{zx, zy}));
    }
  return pts;
}

}  // namespace

GraverBasis graver_box_oracle_serial(const GaleLattice& L, const Int& M) {
  std::vector<IntVec> pts = box_points(L, M);
  return finalize(L, sieve_minimal(pts));
}

GraverBasis graver_box_oracle(const GaleLattice& L, const Int& M) {
  std::vector<IntVec> pts = box_points(L, M);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pts.size());
  std::vector<char> minimal(pts.size(), 1);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const IntVec& h = pts[static_cast<std::size_t>(i)];
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const IntVec& g = pts[static_cast<std::size_t>(j)];
      if (g == h) continue;
      if (conformally_divides(g, h)) {
        minimal[static_cast<std::size_t>(i)] = 0;
        break;
      }
    }
  }
  std::vector<IntVec> kept;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (minimal[i]) kept.push_back(pts[i]);
  return finalize(L, kept);
}

bool completion_closed(const std::vector<IntVec>& signed_elements) {
  for (std::size_t i = 0; i < signed_elements.size(); ++i)
    for (std::size_t j = 0; j < signed_elements.size(); ++j) {
      IntVec s = add_vec(signed_elements[i], signed_elements[j]);
      if (!is_zero_vec(conformal_nf(s, signed_elements))) return false;
    }
  return true;
}

GraverBasis graver_box_oracle_stabilized(const GaleLattice& L) {
  const Int limit = 4096;
  Int M = 4;
  GraverBasis prev2 = graver_box_oracle(L, M);
  GraverBasis prev1 = graver_box_oracle(L, M * 2);
  M *= 4;
  while (M <= limit) {
    GraverBasis cur = graver_box_oracle(L, M);
    if (prev2.elements == prev1.elements && prev1.elements == cur.elements) {
      std::vector<IntVec> sgn;
      for (const Binomial& b : cur.elements) {
        sgn.push_back(b.l);
        sgn.push_back(neg_vec(b.l));
      }
      if (completion_closed(sgn)) return cur;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
    M *= 2;
  }
  throw InternalError("graver_box_oracle_stabilized: no stabilization up to M = " +
                      limit.str());
}

bool is_weakly_graded(const MonomialIdeal& I, const GraverBasis& Gr) {
  for (const Binomial& b : Gr.elements)
    if (!I.contains(b.plus) && !I.contains(b.minus)) return false;
  return true;
}

MonomialIdeal forced_ideal(const MonomialIdeal& M, const GraverBasis& Gr) {
  if (!is_weakly_graded(M, Gr))
    throw NotWeaklyGraded("forced_ideal: input is not weakly graded");
  std::vector<Monomial> gens;
  for (const Binomial& b : Gr.elements) {
    if (!M.contains(b.minus)) gens.push_back(b.plus);
    if (!M.contains(b.plus)) gens.push_back(b.minus);
  }
  return MonomialIdeal::make(M.nvars(), std::move(gens));
}

}  // namespace thilb
