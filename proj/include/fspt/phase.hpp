#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace fspt {

// Root of unity exp(2 pi i k / n), kept reduced with 0 <= k < n.
class Phase {
 public:
  Phase() = default;
  Phase(std::int64_t k, std::int64_t n);

  std::int64_t k() const { return k_; }
  std::int64_t n() const { return n_; }
  bool is_one() const { return k_ == 0; }

  Phase operator*(const Phase& o) const;
  Phase operator/(const Phase& o) const { return *this * o.inverse(); }
  Phase inverse() const { return Phase(n_ - k_, n_); }
  // complex conjugate; for a unit phase this is the inverse
  Phase conj() const { return inverse(); }
  Phase conj_if(int flag) const { return flag ? conj() : *this; }
  Phase pow(std::int64_t e) const;

  std::complex<double> value() const;
  // k' with this = exp(2 pi i k'/m); empty when n does not divide m
  std::optional<std::int64_t> exponent_mod(std::int64_t m) const;

  bool operator==(const Phase&) const = default;

 private:
  std::int64_t k_ = 0;
  std::int64_t n_ = 1;
};

Phase minus_one();

// Nearest n-th root of unity if within tol of z.
std::optional<Phase> snap_phase(std::complex<double> z, std::int64_t n, double tol = 1e-6);
// Tries n = 1..max_n and returns the first (smallest order) match.
std::optional<Phase> snap_phase_auto(std::complex<double> z, std::int64_t max_n = 64,
                                     double tol = 1e-6);

}  // namespace fspt
