#pragma once

// Sparse matrices over Rat and the exact linear algebra the rest of the
// project leans on: rank, nullspace, reduced row echelon form, and a linear
// solver. Two elimination kernels are kept on purpose:
//
//   * rank()/rref()/nullspace() clear denominators and run a fraction-free
//     (Bareiss-style) or rational elimination whose row-update loop is
//     OpenMP-parallel,
//   * rank_serial() is an independent, deliberately plain rational
//     Gauss-Jordan used as a cross-check in tests and in bench_rank.
//
// All results are exact; there are no tolerances anywhere.

#include <map>
#include <utility>
#include <vector>

#include "sl3ido/rational.hpp"

namespace sl3ido {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& at(int r, int c) const;        // zero when absent
  void set(int r, int c, const Rat& v);     // erases on v == 0
  void add_at(int r, int c, const Rat& v);

  const std::map<int, Rat>& row(int r) const { return data_[r]; }
  long nnz() const;

  bool operator==(const RatMatrix&) const = default;

  // Fraction-free elimination on denominator-cleared rows; OpenMP kernel.
  int rank() const;
  // Independent rational Gauss-Jordan, no pragmas. Reference implementation.
  int rank_serial() const;

  // Reduced row echelon form over Rat (OpenMP row updates).
  // pivot_cols receives the pivot column of each nonzero row, in order.
  RatMatrix rref(std::vector<int>* pivot_cols = nullptr) const;

  // Basis of { v : Mv = 0 }, one vector per free column, entries exact.
  std::vector<std::vector<Rat>> nullspace() const;

  // Multiply by a dense vector.
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  // Least structure needed for tests: solve Mx = b if consistent.
  // Returns false if inconsistent.
  bool solve(const std::vector<Rat>& b, std::vector<Rat>& x) const;

 private:
  int rows_, cols_;
  std::vector<std::map<int, Rat>> data_;
};

}  // namespace sl3ido
