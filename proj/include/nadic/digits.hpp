#pragma once

// Base-n digit machinery: eventually periodic digit sequences, tie lengths,
// n-far decisions and the limit points of normalized signed digit sums.

#include <cstddef>
#include <optional>
#include <vector>

#include "nadic/extended.hpp"
#include "nadic/rational.hpp"

namespace nadic {

// Eventually periodic sequence d_0 d_1 ... over {0, ..., base-1}:
// preperiod followed by period repeated forever.
class DigitSequence {
 public:
  // Validates digit ranges and a nonempty period, then canonicalizes
  // (minimal period, minimal preperiod). Throws std::invalid_argument.
  DigitSequence(int base, std::vector<int> preperiod, std::vector<int> period);

  // Constant sequence (digit digit digit ...).
  static DigitSequence constant(int base, int digit);

  int base() const { return base_; }
  const std::vector<int>& preperiod() const { return preperiod_; }
  const std::vector<int>& period() const { return period_; }

  int digit(std::size_t index) const;

  // Sum_k d_k n^{-(k+1)}, exact.
  Rational value() const;

  bool operator==(const DigitSequence&) const = default;

 private:
  int base_;
  std::vector<int> preperiod_;
  std::vector<int> period_;
};

// Eventually periodic sequence over [-(base-1), base-1].
class SignedDigitSequence {
 public:
  // Throws std::invalid_argument on out-of-range entries or an empty period.
  SignedDigitSequence(int base, std::vector<int> preperiod, std::vector<int> period);

  int base() const { return base_; }
  const std::vector<int>& preperiod() const { return preperiod_; }
  const std::vector<int>& period() const { return period_; }

  int digit(std::size_t index) const;

 private:
  int base_;
  std::vector<int> preperiod_;
  std::vector<int> period_;
};

// Columnwise difference a - b, aligned to max preperiod and lcm period.
SignedDigitSequence difference(const DigitSequence& a, const DigitSequence& b);

// Canonical base-n expansion of x in [0, 1). Throws std::invalid_argument
// when x is out of range or n < 2.
DigitSequence base_n_expansion(const Rational& x, int n);

// Maximal run of digit 0 or digit n-1 in the expansion of x in [0, 1);
// infinite exactly when x = k/n^m.
Extended<std::size_t> tie_length(const Rational& x, int n);

struct FarResult {
  bool far = false;
  // 1/q for x = p/q reduced; present iff far.
  std::optional<Rational> constant;
};

// |x - k/n^m| >= C/n^m for all m >= 0, k in Z, decided exactly:
// x = p/q (reduced) is n-far iff q divides no power of n.
FarResult is_n_far(const Rational& x, int n);

// inf over m >= 0 of dist(n^m x, Z); positive iff x is n-far. This is the
// largest constant C in the n-far inequality.
Rational far_infimum(const Rational& x, int n);

// True iff x = k/n^m for some m >= 0 (the reduced denominator divides a power of n).
bool is_n_adic(const Rational& x, int n);

// Limits of x_j = (Sum_{i<j} c_i n^i) / n^j along j, indexed by the period
// position of the last digit c_{j-1}: entry q is the limit over j with
// (j - 1 - preperiod) = q (mod period). Each is the value of the reversed
// periodic word, (Sum_{t=1}^{p} c'_{j-t} n^{p-t}) / (n^p - 1).
//
// The preperiod drops out: its contribution to x_j is bounded by
// 2 n^{preperiod - j}, so it vanishes in the limit.
std::vector<Rational> residue_limits(const SignedDigitSequence& c);

// Sorted distinct subsequential limits of x_j.
std::vector<Rational> periodic_limit_points(const SignedDigitSequence& c);

// Same construction for an unsigned row: limit of L(j)/n^j for the class of
// j whose last digit sits at period position q. Values lie in [0, 1].
std::vector<Rational> residue_limits(const DigitSequence& a);

// Reversed periodic word value at an arbitrary j >= 0, using the periodic
// extension of the row to negative indices. For j >= preperiod this is the
// limit of L(j')/n^{j'} over j' = j (mod period).
Rational backward_limit(const DigitSequence& a, std::size_t j);

std::size_t lcm_size(std::size_t a, std::size_t b);

}  // namespace nadic
