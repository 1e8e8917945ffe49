#include "kltgraph/determinant.hpp"

#include <limits>
#include <optional>
#include <utility>

namespace kltgraph {

namespace {

__extension__ using Wide = __int128;

// One Bareiss update (a*d - b*c) / prev; the division is exact.
struct MachineOps {
  using Scalar = std::int64_t;
  static std::optional<Scalar> update(Scalar a, Scalar b, Scalar c, Scalar d, Scalar prev) {
    Scalar ad, bc, diff;
    if (!__builtin_mul_overflow(a, d, &ad) && !__builtin_mul_overflow(b, c, &bc) &&
        !__builtin_sub_overflow(ad, bc, &diff)) {
      return diff / prev;
    }
    const Wide num = static_cast<Wide>(a) * d - static_cast<Wide>(b) * c;
    const Wide q = num / prev;
    if (q > std::numeric_limits<Scalar>::max() || q < std::numeric_limits<Scalar>::min()) {
      return std::nullopt;
    }
    return static_cast<Scalar>(q);
  }
};

struct BigOps {
  using Scalar = BigInt;
  static std::optional<Scalar> update(const Scalar& a, const Scalar& b, const Scalar& c,
                                      const Scalar& d, const Scalar& prev) {
    Scalar num = a * d - b * c;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
    return num;
  }
};

// In-place Bareiss elimination on a row-major n x n buffer. When
// `pivoting` is false and a zero pivot appears, elimination stops and the
// returned step index says where. `minors`, if given, receives the pivots,
// which are the leading principal minors while no row has been swapped.
template <typename Ops>
struct Bareiss {
  using T = typename Ops::Scalar;

  std::vector<T> a;
  std::size_t n;

  T& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  // Returns nullopt on overflow; otherwise the signed determinant.
  std::optional<T> run(bool pivoting, std::vector<T>* minors, std::size_t* stopped_at) {
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (at(k, k) == 0) {
        if (!pivoting) {
          if (stopped_at) *stopped_at = k;
          return T(0);
        }
        std::size_t swap_row = k + 1;
        while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
        if (swap_row == n) return T(0);
        for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
        sign = -sign;
      }
      if (minors) minors->push_back(at(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          auto v = Ops::update(at(i, j), at(i, k), at(k, j), at(k, k), prev);
          if (!v) return std::nullopt;
          at(i, j) = std::move(*v);
        }
        at(i, k) = 0;
      }
      prev = at(k, k);
    }
    if (stopped_at) *stopped_at = n;
    T det = at(n - 1, n - 1);
    return sign < 0 ? T(-det) : det;
  }
};

Bareiss<MachineOps> machine_copy(const IntMatrix& m) {
  Bareiss<MachineOps> b;
  b.n = m.size();
  b.a.resize(b.n * b.n);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j) b.a[i * b.n + j] = m(i, j);
  return b;
}

Bareiss<BigOps> big_copy(const IntMatrix& m) {
  Bareiss<BigOps> b;
  b.n = m.size();
  b.a.resize(b.n * b.n);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j) b.a[i * b.n + j] = static_cast<long>(m(i, j));
  return b;
}

IntMatrix leading_block(const IntMatrix& m, std::size_t k) {
  IntMatrix out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  auto fast = machine_copy(m);
  if (auto det = fast.run(true, nullptr, nullptr)) return BigInt(static_cast<long>(*det));
  auto slow = big_copy(m);
  return *slow.run(true, nullptr, nullptr);
}

std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> out;
  out.reserve(n);
  std::size_t stopped = n;

  auto fast = machine_copy(m);
  std::vector<std::int64_t> pivots;
  if (fast.run(false, &pivots, &stopped)) {
    for (auto p : pivots) out.emplace_back(static_cast<long>(p));
  } else {
    auto slow = big_copy(m);
    std::vector<BigInt> big_pivots;
    stopped = n;
    slow.run(false, &big_pivots, &stopped);
    out = std::move(big_pivots);
  }
  // A zero pivot ends the swap-free pass; the remaining minors are computed
  // one by one.
  for (std::size_t k = out.size() + 1; k <= n; ++k) {
    out.push_back(k == stopped + 1 ? BigInt(0) : determinant(leading_block(m, k)));
  }
  return out;
}

}  // namespace kltgraph
