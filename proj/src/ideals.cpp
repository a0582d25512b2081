#include "thilb/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thilb {

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i)
    if (e[static_cast<std::size_t>(i)] != 0) s.push_back(i);
  return s;
}

bool Monomial::operator<(const Monomial& o) const {
  Int da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  return e < o.e;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    const Int& p = e[static_cast<std::size_t>(i)];
    if (p == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (p != 1) s += "^" + p.str();
  }
  return s;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  return Monomial(add_vec(a.e, b.e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  IntVec r(a.e.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e[i], b.e[i]);
  return Monomial(std::move(r));
}

std::string Binomial::to_string() const {
  return plus.to_string() + " - " + minus.to_string();
}

MonomialIdeal MonomialIdeal::make(int nvars, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool divisible = false;
    for (std::size_t j = 0; j < gens.size() && !divisible; ++j)
      if (j != i && gens[j].divides(gens[i])) divisible = true;
    if (!divisible) minimal.push_back(gens[i]);
  }
  MonomialIdeal I;
  I.nvars_ = nvars;
  I.gens_ = std::move(minimal);
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::operator<(const MonomialIdeal& o) const {
  std::vector<IntVec> a, b;
  for (const Monomial& g : gens_) a.push_back(g.e);
  for (const Monomial& g : o.gens_) b.push_back(g.e);
  return a < b;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  if (gens_.empty()) s += "0";
  return s + ">";
}

namespace {

// minimal hitting sets of the generator supports, by branching on the
// variables of the first unhit generator
void minimal_covers_rec(const std::vector<std::vector<int>>& supports,
                        std::vector<char>& chosen, std::vector<int>& current,
                        std::set<std::vector<int>>& out) {
  const std::vector<int>* first = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (int v : s)
      if (chosen[static_cast<std::size_t>(v)]) {
        hit = true;
        break;
      }
    if (!hit) {
      first = &s;
      break;
    }
  }
  if (!first) {
    std::vector<int> c = current;
    std::sort(c.begin(), c.end());
    out.insert(c);
    return;
  }
  for (int v : *first) {
    chosen[static_cast<std::size_t>(v)] = 1;
    current.push_back(v);
    minimal_covers_rec(supports, chosen, current, out);
    current.pop_back();
    chosen[static_cast<std::size_t>(v)] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I) {
  if (I.is_unit()) throw NotProper("minimal_primes: unit ideal");
  if (I.is_zero()) throw NotProper("minimal_primes: zero ideal");
  std::vector<std::vector<int>> supports;
  for (const Monomial& g : I.gens()) supports.push_back(g.support());

  std::set<std::vector<int>> covers;
  std::vector<char> chosen(static_cast<std::size_t>(I.nvars()), 0);
  std::vector<int> current;
  minimal_covers_rec(supports, chosen, current, covers);

  // prune non-minimal covers produced by different branch orders
  std::vector<std::vector<int>> cover_list(covers.begin(), covers.end());
  std::vector<std::vector<int>> minimal;
  for (const auto& c : cover_list) {
    bool has_subset = false;
    for (const auto& d : cover_list) {
      if (d == c) continue;
      if (std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        has_subset = true;
        break;
      }
    }
    if (!has_subset) minimal.push_back(c);
  }

  std::vector<std::vector<int>> sigmas;
  for (const auto& c : minimal) sigmas.push_back(complement(c, I.nvars()));
  std::sort(sigmas.begin(), sigmas.end());
  return sigmas;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens()) {
    IntVec e = g.e;
    for (Int& x : e)
      if (x > 1) x = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Monomial> gens;
  for (const Monomial& a : I.gens())
    for (const Monomial& b : J.gens()) gens.push_back(mono_lcm(a, b));
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

std::vector<int> complement(const std::vector<int>& sigma, int n) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int i : sigma) in[static_cast<std::size_t>(i)] = 1;
  std::vector<int> bar;
  for (int i = 0; i < n; ++i)
    if (!in[static_cast<std::size_t>(i)]) bar.push_back(i);
  return bar;
}

Monomial project_monomial(const Monomial& m, const std::vector<int>& vars) {
  IntVec e(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k)
    e[k] = m.e[static_cast<std::size_t>(vars[k])];
  return Monomial(std::move(e));
}

IntVec project_vec(const IntVec& v, const std::vector<int>& vars) {
  IntVec r(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k)
    r[k] = v[static_cast<std::size_t>(vars[k])];
  return r;
}

MonomialIdeal localize(const MonomialIdeal& I, const std::vector<int>& sigma) {
  std::vector<int> bar = complement(sigma, I.nvars());
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens()) gens.push_back(project_monomial(g, bar));
  return MonomialIdeal::make(static_cast<int>(bar.size()), std::move(gens));
}

MonomialIdeal embed(const MonomialIdeal& I, const std::vector<int>& vars, int n) {
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens()) {
    IntVec e(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < vars.size(); ++k)
      e[static_cast<std::size_t>(vars[k])] = g.e[k];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(n, std::move(gens));
}

std::vector<std::vector<int>> containing_simplices(const ChamberComplex& cc, int ci,
                                                   const GaleLattice& L) {
  Cone2 C = cc.cone(ci);
  std::vector<std::vector<int>> pairs;
  for (int r = 0; r < L.n(); ++r)
    for (int s = r + 1; s < L.n(); ++s) {
      Int c = cross2(L.row(r), L.row(s));
      if (c == 0) continue;  // not a 2-simplex
      const IntVec& lo = (c > 0) ? L.row(r) : L.row(s);
      const IntVec& hi = (c > 0) ? L.row(s) : L.row(r);
      if (cross2(lo, C.lo.dir) >= 0 && cross2(C.lo.dir, hi) >= 0 &&
          cross2(lo, C.hi.dir) >= 0 && cross2(C.hi.dir, hi) >= 0)
        pairs.push_back({r, s});
    }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

ChamberMatch delta_chamber(const MonomialIdeal& I, const GaleLattice& L,
                           const ChamberComplex& cc) {
  auto primes = minimal_primes(I);
  std::vector<std::vector<int>> bars;
  for (const auto& sigma : primes) {
    auto bar = complement(sigma, L.n());
    if (bar.size() != 2)
      throw NotAChamber("delta_chamber: minimal prime complement of size " +
                        std::to_string(bar.size()));
    bars.push_back(bar);
  }
  std::sort(bars.begin(), bars.end());
  for (int ci = 0; ci < static_cast<int>(cc.chambers.size()); ++ci) {
    if (containing_simplices(cc, ci, L) == bars) {
      return ChamberMatch{ci, cc.cone(ci), cc.chambers[static_cast<std::size_t>(ci)].label};
    }
  }
  throw NotAChamber("delta_chamber: minimal primes do not match any chamber");
}

ChamberMatch delta_chamber(const MonomialIdeal& I, const GaleLattice& L) {
  return delta_chamber(I, L, chamber_complex(L));
}

Int default_search_cap(const GaleLattice& L, const IntVec& u) {
  Int mu = 0;
  for (const Int& x : u) mu = std::max(mu, abs_int(x));
  return 10 * (1 + mu + L.max_abs_entry());
}

Monomial standard_monomial(const MonomialIdeal& I, const Monomial& u,
                           const GaleLattice& L, const Int& cap) {
  if (!I.contains(u)) return u;
  // v = u - B z >= 0 with x^v outside I; shells in |z|_inf, lexicographic
  // within a shell, so the scan order is deterministic
  for (Int r = 0; r <= cap; ++r) {
    for (Int zx = -r; zx <= r; ++zx) {
      bool edge_x = (zx == -r || zx == r);
      for (Int zy = -r; zy <= r; ++zy) {
        if (!edge_x && zy != -r && zy != r) continue;
        IntVec z{zx, zy};
        IntVec v = sub_vec(u.e, mat_times_col(L.B(), z));
        bool nonneg = true;
        for (const Int& x : v)
          if (x < 0) {
            nonneg = false;
            break;
          }
        if (!nonneg) continue;
        Monomial m(std::move(v));
        if (!I.contains(m)) return m;
      }
    }
  }
  throw CapExceeded("standard_monomial: no standard monomial within cap " + cap.str());
}

Monomial standard_monomial(const MonomialIdeal& I, const Monomial& u,
                           const GaleLattice& L) {
  return standard_monomial(I, u, L, default_search_cap(L, u.e));
}

}  // namespace thilb
