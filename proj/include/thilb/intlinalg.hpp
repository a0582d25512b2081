#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thilb/ints.hpp"

namespace thilb {

struct IntMat {
  std::vector<IntVec> rows;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r, IntVec(c, 0)) {}
  explicit IntMat(std::vector<IntVec> rs) : rows(std::move(rs)) {}

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_cols() const { return rows.empty() ? 0 : rows[0].size(); }
  IntVec& operator[](std::size_t i) { return rows[i]; }
  const IntVec& operator[](std::size_t i) const { return rows[i]; }
  bool operator==(const IntMat& o) const { return rows == o.rows; }

  IntVec col(std::size_t j) const {
    IntVec c(n_rows());
    for (std::size_t i = 0; i < n_rows(); ++i) c[i] = rows[i][j];
    return c;
  }
};

// left multiplication of a row vector: (w M)_j = sum_i w_i M_ij
IntVec row_times_mat(const IntVec& w, const IntMat& M);

// M v for a column vector v
IntVec mat_times_col(const IntMat& M, const IntVec& v);

IntMat mat_mul(const IntMat& A, const IntMat& B);

struct HnfResult {
  IntMat H;  // row-style Hermite normal form of M
  IntMat U;  // unimodular, U * M = H
  std::size_t rank;
};

// Row-style Hermite normal form with unimodular transform. Pivots are
// positive, entries above a pivot are reduced into [0, pivot), zero rows
// are pushed to the bottom.
HnfResult hnf(const IntMat& M);

// Z-basis of { a in Z^n : a * B = 0 } as the rows of an (n - rank) x n
// matrix, canonicalized to the HNF of the kernel basis so runs are
// reproducible. Requires rank(B) = n_cols for the Gale use case.
IntMat integer_kernel(const IntMat& B);

// divide out the gcd, preserving direction
IntVec primitive(const IntVec& v);

// (a,b) -> (b,-a) applied to the primitive vector
IntVec clockwise_normal(const IntVec& g);

// 90-degree rotation in sweep direction: the ray whose clockwise normal is z
inline IntVec ray_with_clockwise_normal(const IntVec& z) {
  return IntVec{-z[1], z[0]};
}

struct NormalizationStep {
  enum class Kind { DropZero, Merge } kind;
  int dropped_row = 0;     // 1-based index into the original matrix
  int kept_row = 0;        // 1-based, Merge only
  Int multiplier = 0;      // Merge only: b_dropped = multiplier * b_kept
  std::string to_string() const;
};

using NormalizationLog = std::vector<NormalizationStep>;

class GaleLattice {
 public:
  // B must already satisfy the normalized-Gale invariants; use
  // normalize_gale to build from raw input.
  explicit GaleLattice(IntMat B);

  const IntMat& B() const { return B_; }
  int n() const { return n_; }
  const IntMat& A() const { return A_; }
  bool cyclic() const { return cyclic_; }
  const IntVec& row(int i) const { return B_.rows[i]; }

  // phi^{-1}: the unique z with B z = c when c lies in the lattice
  std::optional<IntVec> solve_in_lattice(const IntVec& c) const;
  bool contains(const IntVec& c) const { return solve_in_lattice(c).has_value(); }

  // canonical coset representative of u + L (HNF reduction against the
  // generator rows); equal iff the difference lies in the lattice
  IntVec degree_class(const IntVec& u) const;

  Int max_abs_entry() const;

  bool operator==(const GaleLattice& o) const { return B_ == o.B_; }

 private:
  IntMat B_;
  int n_;
  IntMat A_;
  bool cyclic_;
  IntMat lat_hnf_;                 // row HNF of the 2 x n generator matrix B^T
  std::array<std::size_t, 2> lat_pivot_;
  std::array<std::size_t, 2> solve_rows_;  // two independent rows of B
  Int solve_det_;
};

// Drops zero rows and merges positively-parallel integer-multiple rows
// until a fixpoint, recording the variable substitutions. Ties between
// duplicate rows keep the lowest index.
std::pair<GaleLattice, NormalizationLog> normalize_gale(const IntMat& B);

}  // namespace thilb
