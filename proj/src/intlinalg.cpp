#include "thilb/intlinalg.hpp"

#include <algorithm>
#include <limits>

namespace thilb {

IntVec row_times_mat(const IntVec& w, const IntMat& M) {
  IntVec r(M.n_cols(), 0);
  for (std::size_t i = 0; i < M.n_rows(); ++i)
    for (std::size_t j = 0; j < M.n_cols(); ++j) r[j] += w[i] * M[i][j];
  return r;
}

IntVec mat_times_col(const IntMat& M, const IntVec& v) {
  IntVec r(M.n_rows(), 0);
  for (std::size_t i = 0; i < M.n_rows(); ++i) r[i] = dot_vec(M[i], v);
  return r;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  IntMat C(A.n_rows(), B.n_cols());
  for (std::size_t i = 0; i < A.n_rows(); ++i)
    for (std::size_t k = 0; k < A.n_cols(); ++k)
      if (A[i][k] != 0)
        for (std::size_t j = 0; j < B.n_cols(); ++j) C[i][j] += A[i][k] * B[k][j];
  return C;
}

HnfResult hnf(const IntMat& M) {
  const std::size_t nr = M.n_rows(), nc = M.n_cols();
  IntMat H = M;
  IntMat U(nr, nr);
  for (std::size_t i = 0; i < nr; ++i) U[i][i] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    // gcd elimination below the working row
    while (true) {
      std::size_t best = nr;
      for (std::size_t r = row; r < nr; ++r) {
        if (H[r][col] == 0) continue;
        if (best == nr || abs_int(H[r][col]) < abs_int(H[best][col])) best = r;
      }
      if (best == nr) break;  // column clear
      if (best != row) {
        std::swap(H.rows[best], H.rows[row]);
        std::swap(U.rows[best], U.rows[row]);
      }
      bool others = false;
      for (std::size_t r = row + 1; r < nr; ++r) {
        if (H[r][col] == 0) continue;
        others = true;
        Int q = floor_div(H[r][col], H[row][col]);
        for (std::size_t j = 0; j < nc; ++j) H[r][j] -= q * H[row][j];
        for (std::size_t j = 0; j < nr; ++j) U[r][j] -= q * U[row][j];
      }
      if (!others) break;
    }
    if (H[row][col] == 0) continue;
    if (H[row][col] < 0) {
      for (std::size_t j = 0; j < nc; ++j) H[row][j] = -H[row][j];
      for (std::size_t j = 0; j < nr; ++j) U[row][j] = -U[row][j];
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t r = 0; r < row; ++r) {
      if (H[r][col] == 0) continue;
      Int q = floor_div(H[r][col], H[row][col]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < nc; ++j) H[r][j] -= q * H[row][j];
      for (std::size_t j = 0; j < nr; ++j) U[r][j] -= q * U[row][j];
    }
    ++row;
  }
  return HnfResult{std::move(H), std::move(U), row};
}

IntMat integer_kernel(const IntMat& B) {
  const std::size_t n = B.n_rows();
  HnfResult h = hnf(B);
  if (h.rank < B.n_cols())
    throw RankDeficient("integer_kernel: input has rank " + std::to_string(h.rank));
  IntMat K;
  for (std::size_t r = h.rank; r < n; ++r) K.rows.push_back(h.U[r]);
  if (K.rows.empty()) {
    IntMat empty;
    return empty;  // 0 x n
  }
  HnfResult canon = hnf(K);
  IntMat A;
  for (std::size_t r = 0; r < canon.rank; ++r) A.rows.push_back(canon.H[r]);
  return A;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g == 0) throw ZeroVector("primitive: zero vector");
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec clockwise_normal(const IntVec& g) {
  if (g.size() != 2) throw InternalError("clockwise_normal: expected a plane vector");
  IntVec p = primitive(g);
  return IntVec{p[1], -p[0]};
}

std::string NormalizationStep::to_string() const {
  if (kind == Kind::DropZero)
    return "dropped zero row b" + std::to_string(dropped_row);
  return "merged row b" + std::to_string(dropped_row) + " = " + multiplier.str() +
         "*b" + std::to_string(kept_row) + " (substitution x" +
         std::to_string(kept_row) + " -> x" + std::to_string(dropped_row) + "^" +
         multiplier.str() + " x" + std::to_string(kept_row) + ")";
}

namespace {

// acyclic iff some row has every other row weakly on one side of it
bool compute_cyclic(const IntMat& B) {
  const std::size_t n = B.n_rows();
  for (std::size_t j = 0; j < n; ++j) {
    bool all_left = true, all_right = true;
    for (std::size_t i = 0; i < n; ++i) {
      Int c = cross2(B[j], B[i]);
      if (c > 0) all_right = false;
      if (c < 0) all_left = false;
    }
    if (all_left || all_right) return false;
  }
  return true;
}

// b_i = m * b_j for a single positive integer m?
std::optional<Int> positive_integer_ratio(const IntVec& bi, const IntVec& bj) {
  Int m = 0;
  for (std::size_t k = 0; k < bi.size(); ++k) {
    if (bj[k] == 0) {
      if (bi[k] != 0) return std::nullopt;
      continue;
    }
    if (bi[k] % bj[k] != 0) return std::nullopt;
    Int q = bi[k] / bj[k];
    if (q <= 0) return std::nullopt;
    if (m == 0)
      m = q;
    else if (m != q)
      return std::nullopt;
  }
  if (m == 0) return std::nullopt;  // bj = 0 handled by the zero-row pass
  return m;
}

}  // namespace

GaleLattice::GaleLattice(IntMat B) : B_(std::move(B)) {
  n_ = static_cast<int>(B_.n_rows());
  if (B_.n_cols() != 2) throw InputError("GaleLattice: matrix must have 2 columns");
  HnfResult h = hnf(B_);
  if (h.rank != 2) throw RankDeficient("GaleLattice: rank(B) = " + std::to_string(h.rank));
  A_ = (n_ >= 3) ? integer_kernel(B_) : IntMat{};
  cyclic_ = compute_cyclic(B_);

  // first pair of independent rows, for phi^{-1}
  solve_rows_ = {0, 1};
  bool found = false;
  for (std::size_t i = 0; i < B_.n_rows() && !found; ++i)
    for (std::size_t j = i + 1; j < B_.n_rows() && !found; ++j)
      if (cross2(B_[i], B_[j]) != 0) {
        solve_rows_ = {i, j};
        found = true;
      }
  if (!found) throw RankDeficient("GaleLattice: no independent row pair");
  solve_det_ = cross2(B_[solve_rows_[0]], B_[solve_rows_[1]]);

  // generator rows of the lattice (columns of B) for coset reduction
  IntMat gen(2, static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    gen[0][i] = B_[i][0];
    gen[1][i] = B_[i][1];
  }
  HnfResult lh = hnf(gen);
  if (lh.rank != 2) throw RankDeficient("GaleLattice: generator rank");
  lat_hnf_ = IntMat{{lh.H[0], lh.H[1]}};
  for (std::size_t r = 0; r < 2; ++r) {
    std::size_t p = 0;
    while (lat_hnf_[r][p] == 0) ++p;
    lat_pivot_[r] = p;
  }
}

std::optional<IntVec> GaleLattice::solve_in_lattice(const IntVec& c) const {
  if (c.size() != static_cast<std::size_t>(n_))
    throw InputError("solve_in_lattice: length mismatch");
  const IntVec& r0 = B_[solve_rows_[0]];
  const IntVec& r1 = B_[solve_rows_[1]];
  const Int& c0 = c[solve_rows_[0]];
  const Int& c1 = c[solve_rows_[1]];
  // Cramer on the 2x2 subsystem (r0; r1) z = (c0; c1)
  Int num_x = c0 * r1[1] - c1 * r0[1];
  Int num_y = r0[0] * c1 - r1[0] * c0;
  if (num_x % solve_det_ != 0 || num_y % solve_det_ != 0) return std::nullopt;
  IntVec z{num_x / solve_det_, num_y / solve_det_};
  for (int i = 0; i < n_; ++i)
    if (dot_vec(B_[i], z) != c[i]) return std::nullopt;
  return z;
}

IntVec GaleLattice::degree_class(const IntVec& u) const {
  IntVec r = u;
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t p = lat_pivot_[k];
    Int q = floor_div(r[p], lat_hnf_[k][p]);
    if (q != 0)
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= q * lat_hnf_[k][j];
  }
  return r;
}

Int GaleLattice::max_abs_entry() const {
  Int m = 0;
  for (const auto& row : B_.rows)
    for (const Int& x : row) m = std::max(m, abs_int(x));
  return m;
}

std::pair<GaleLattice, NormalizationLog> normalize_gale(const IntMat& B) {
  if (B.n_cols() != 2) throw InputError("normalize_gale: matrix must have 2 columns");
  NormalizationLog log;
  std::vector<std::pair<int, IntVec>> rows;  // (1-based original index, row)
  for (std::size_t i = 0; i < B.n_rows(); ++i) {
    if (is_zero_vec(B[i])) {
      log.push_back({NormalizationStep::Kind::DropZero, static_cast<int>(i + 1), 0, 0});
    } else {
      rows.emplace_back(static_cast<int>(i + 1), B[i]);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rows.size() && !changed; ++i) {
      for (std::size_t j = 0; j < rows.size() && !changed; ++j) {
        if (i == j) continue;
        auto m = positive_integer_ratio(rows[i].second, rows[j].second);
        if (!m) continue;
        // duplicates keep the lowest original index
        if (*m == 1 && rows[i].first < rows[j].first) continue;
        log.push_back({NormalizationStep::Kind::Merge, rows[i].first, rows[j].first, *m});
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  IntMat R;
  for (auto& [idx, row] : rows) R.rows.push_back(row);
  if (R.n_rows() < 2) throw RankDeficient("normalize_gale: fewer than 2 rows remain");
  return {GaleLattice(std::move(R)), std::move(log)};
}

}  // namespace thilb
