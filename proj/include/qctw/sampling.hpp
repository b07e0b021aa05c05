#pragma once

// Deterministic random generators for exact test data. Every trial derives its
// own seed from (suite seed, check name, trial index), so results do not depend
// on evaluation order or thread count.

#include "qctw/g0_actions.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace qctw {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(engine_) == 1; }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  /// num/den with |num| <= 9, 1 <= den <= 6.
  Rational rational();
  Complex complex();
  Quaternion quaternion();
  Quaternion imaginary_quaternion();
  HVector hvector(int n);

  /// Rational point of S^3 (inverse stereographic image of a random imaginary quaternion, random sign).
  Quaternion unit_quaternion();
  /// Rational point of U(1) = unit complex numbers inside Sp(1).
  Quaternion u1_element();
  /// Rational A in Sp(n): products of unit diagonals and Pythagorean real rotations.
  QMatrix sp_n(int n);
  Rational positive_rational();
  G0Element g0(int n);
  /// s = 1 slice.
  G0Element sp1spn(int n, bool force_u1 = false);
  /// Point of the form z i conj(z) for a random rational unit z.
  TwistorPoint twistor_point();

  /// Random element of sp(n) (skew-hermitian quaternionic).
  QMatrix sp_n_algebra(int n);
  /// Random element of sp(Q) with random slot values in the grades lo..hi and zeros elsewhere.
  QMatrix g_element(int n, int lo, int hi);
  QMatrix g_element(int n) { return g_element(n, -2, 2); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qctw
