#include "fspt/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fspt {

Phase::Phase(std::int64_t k, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("Phase: denominator must be positive");
  k %= n;
  if (k < 0) k += n;
  const std::int64_t g = std::gcd(k, n);
  k_ = k / g;
  n_ = n / g;
  if (k_ == 0) n_ = 1;
}

Phase Phase::operator*(const Phase& o) const {
  const std::int64_t l = std::lcm(n_, o.n_);
  return Phase(k_ * (l / n_) + o.k_ * (l / o.n_), l);
}

Phase Phase::pow(std::int64_t e) const {
  // k*e can overflow only for absurd exponents; reduce e first
  e %= n_;
  if (e < 0) e += n_;
  return Phase(k_ * e, n_);
}

std::complex<double> Phase::value() const {
  if (k_ == 0) return {1.0, 0.0};
  // exact values on the axes keep printed output clean
  if (4 * k_ == n_) return {0.0, 1.0};
  if (2 * k_ == n_) return {-1.0, 0.0};
  if (4 * k_ == 3 * n_) return {0.0, -1.0};
  const double t = 2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(n_);
  return {std::cos(t), std::sin(t)};
}

std::optional<std::int64_t> Phase::exponent_mod(std::int64_t m) const {
  if (m <= 0 || m % n_ != 0) return std::nullopt;
  return k_ * (m / n_);
}

Phase minus_one() { return Phase(1, 2); }

std::optional<Phase> snap_phase(std::complex<double> z, std::int64_t n, double tol) {
  if (n <= 0) return std::nullopt;
  const double t = std::arg(z) / (2.0 * std::numbers::pi) * static_cast<double>(n);
  const auto k = static_cast<std::int64_t>(std::llround(t));
  Phase p(k, n);
  if (std::abs(p.value() - z) > tol) return std::nullopt;
  return p;
}

std::optional<Phase> snap_phase_auto(std::complex<double> z, std::int64_t max_n, double tol) {
  for (std::int64_t n = 1; n <= max_n; ++n)
    if (auto p = snap_phase(z, n, tol)) return p;
  return std::nullopt;
}

}  // namespace fspt
