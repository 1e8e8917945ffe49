#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kltgraph/rational.hpp"

namespace kltgraph {

/// Dense square matrix of machine integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Runs in 128-bit
/// checked machine arithmetic and restarts in GMP integers if any
/// intermediate minor leaves the 64-bit range. The empty matrix has
/// determinant 1.
BigInt determinant(const IntMatrix& m);

/// Leading principal minors d_1..d_n of `m`, exact.
std::vector<BigInt> leading_principal_minors(const IntMatrix& m);

}  // namespace kltgraph
