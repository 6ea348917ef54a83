#include "fspt/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace fspt {
namespace {

using big = boost::multiprecision::cpp_int;

std::int64_t mod_floor(const big& x, std::int64_t m) {
  big r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

// x with a x = 1 mod m, gcd(a, m) = 1
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) throw std::logic_error("mod_inverse: not invertible");
  s0 %= m;
  return s0 < 0 ? s0 + m : s0;
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_congruences(const IntMatrix& a_in,
                                                           const std::vector<std::int64_t>& d_in,
                                                           std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("solve_congruences: modulus must be positive");
  const std::size_t rows = a_in.size();
  const std::size_t cols = rows ? a_in[0].size() : 0;
  if (d_in.size() != rows) throw std::invalid_argument("solve_congruences: rhs size");

  std::vector<std::vector<big>> a(rows, std::vector<big>(cols));
  std::vector<big> e(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = a_in[i][j];
    e[i] = d_in[i];
  }
  // column operations are accumulated in v so that x = v y
  std::vector<std::vector<big>> v(cols, std::vector<big>(cols));
  for (std::size_t j = 0; j < cols; ++j) v[j][j] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    std::swap(e[i], e[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (auto& row : a) std::swap(row[j], row[k]);
    for (auto& row : v) std::swap(row[j], row[k]);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const big q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        e[i] -= q * e[t];
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const big q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
      }
      // leftover remainders are strictly smaller than the pivot; move the
      // smallest one into pivot position and repeat
      std::size_t ri = 0, rj = 0;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0 && (ri == 0 || abs(a[i][t]) < abs(a[ri][t]))) ri = i;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0 && (rj == 0 || abs(a[t][j]) < abs(a[t][rj]))) rj = j;
      if (ri == 0 && rj == 0) break;
      if (ri != 0 && (rj == 0 || abs(a[ri][t]) <= abs(a[t][rj])))
        swap_rows(t, ri);
      else
        swap_cols(t, rj);
    }
  }
  const std::size_t rank = t;

  for (std::size_t i = rank; i < rows; ++i)
    if (mod_floor(e[i], m) != 0) return std::nullopt;

  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    const std::int64_t di = mod_floor(a[i][i], m);
    const std::int64_t ei = mod_floor(e[i], m);
    const std::int64_t g = std::gcd(di, m);  // gcd(0, m) = m
    if (ei % g != 0) return std::nullopt;
    const std::int64_t mg = m / g;
    if (mg == 1) continue;
    const __int128 yi = static_cast<__int128>(ei / g) * mod_inverse((di / g) % mg, mg) % mg;
    y[i] = static_cast<std::int64_t>(yi);
  }

  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    big s = 0;
    for (std::size_t j = 0; j < rank; ++j) s += v[i][j] * y[j];
    x[i] = mod_floor(s, m);
  }

  for (std::size_t i = 0; i < rows; ++i) {
    big s = -big(d_in[i]);
    for (std::size_t j = 0; j < cols; ++j) s += big(a_in[i][j]) * x[j];
    if (mod_floor(s, m) != 0) throw std::logic_error("solve_congruences: back-substitution failed");
  }
  return x;
}

}  // namespace fspt
