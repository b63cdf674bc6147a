#include "nadic/digits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace nadic {

namespace {

void check_base(int n) {
  if (n < 2) throw std::invalid_argument("base must be at least 2, got " + std::to_string(n));
}

std::size_t minimal_period_length(const std::vector<int>& period) {
  const std::size_t p = period.size();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool repeats = true;
    for (std::size_t i = q; i < p && repeats; ++i) repeats = period[i] == period[i % q];
    if (repeats) return q;
  }
  return p;
}

void canonicalize(std::vector<int>& preperiod, std::vector<int>& period) {
  period.resize(minimal_period_length(period));
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
}

// Sum_{t=1}^{p} w_{j-t} n^{p-t} / (n^p - 1) where w is the periodic extension
// of (preperiod, period) to all integer indices.
template <class Seq>
Rational reversed_word_value(const Seq& seq, long j) {
  const long pre = static_cast<long>(seq.preperiod().size());
  const long p = static_cast<long>(seq.period().size());
  auto extended = [&](long i) {
    long r = (i - pre) % p;
    if (r < 0) r += p;
    return seq.period()[static_cast<std::size_t>(r)];
  };
  Integer word = 0;
  for (long t = 1; t <= p; ++t) word = word * seq.base() + extended(j - t);
  return Rational(word, ipow(seq.base(), static_cast<unsigned long>(p)) - 1);
}

}  // namespace

std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

DigitSequence::DigitSequence(int base, std::vector<int> preperiod, std::vector<int> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  check_base(base_);
  if (period_.empty()) throw std::invalid_argument("digit sequence needs a nonempty period");
  auto in_range = [&](int d) { return d >= 0 && d < base_; };
  if (!std::all_of(preperiod_.begin(), preperiod_.end(), in_range) ||
      !std::all_of(period_.begin(), period_.end(), in_range)) {
    throw std::invalid_argument("digit out of range for base " + std::to_string(base_));
  }
  canonicalize(preperiod_, period_);
}

DigitSequence DigitSequence::constant(int base, int digit) { return DigitSequence(base, {}, {digit}); }

int DigitSequence::digit(std::size_t index) const {
  if (index < preperiod_.size()) return preperiod_[index];
  return period_[(index - preperiod_.size()) % period_.size()];
}

Rational DigitSequence::value() const {
  Integer head = 0;
  for (int d : preperiod_) head = head * base_ + d;
  Integer word = 0;
  for (int d : period_) word = word * base_ + d;
  const Integer scale = ipow(base_, preperiod_.size());
  const Integer cycle = ipow(base_, period_.size()) - 1;
  return Rational(head, scale) + Rational(word, cycle * scale);
}

SignedDigitSequence::SignedDigitSequence(int base, std::vector<int> preperiod, std::vector<int> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  check_base(base_);
  if (period_.empty()) throw std::invalid_argument("signed digit sequence needs a nonempty period");
  auto in_range = [&](int d) { return d > -base_ && d < base_; };
  if (!std::all_of(preperiod_.begin(), preperiod_.end(), in_range) ||
      !std::all_of(period_.begin(), period_.end(), in_range)) {
    throw std::invalid_argument("signed digit out of range for base " + std::to_string(base_));
  }
}

int SignedDigitSequence::digit(std::size_t index) const {
  if (index < preperiod_.size()) return preperiod_[index];
  return period_[(index - preperiod_.size()) % period_.size()];
}

SignedDigitSequence difference(const DigitSequence& a, const DigitSequence& b) {
  if (a.base() != b.base()) throw std::invalid_argument("difference of digit sequences in different bases");
  const std::size_t pre = std::max(a.preperiod().size(), b.preperiod().size());
  const std::size_t per = lcm_size(a.period().size(), b.period().size());
  std::vector<int> head, cycle;
  for (std::size_t i = 0; i < pre; ++i) head.push_back(a.digit(i) - b.digit(i));
  for (std::size_t i = pre; i < pre + per; ++i) cycle.push_back(a.digit(i) - b.digit(i));
  return SignedDigitSequence(a.base(), std::move(head), std::move(cycle));
}

DigitSequence base_n_expansion(const Rational& x, int n) {
  check_base(n);
  if (x.sign() < 0 || x >= Rational(1)) {
    throw std::invalid_argument("base_n_expansion expects x in [0, 1), got " + x.to_string());
  }
  const Integer q = x.denominator();
  Integer r = x.numerator();
  std::map<Integer, std::size_t> seen;
  std::vector<int> digits;
  while (true) {
    if (auto it = seen.find(r); it != seen.end()) {
      std::vector<int> head(digits.begin(), digits.begin() + static_cast<long>(it->second));
      std::vector<int> cycle(digits.begin() + static_cast<long>(it->second), digits.end());
      return DigitSequence(n, std::move(head), std::move(cycle));
    }
    seen.emplace(r, digits.size());
    const Integer scaled = r * n;
    const Integer digit = scaled / q;
    digits.push_back(static_cast<int>(digit.get_si()));
    r = scaled - digit * q;
  }
}

bool is_n_adic(const Rational& x, int n) {
  check_base(n);
  Integer q = x.denominator();
  const Integer base(n);
  while (q != 1) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), base.get_mpz_t());
    if (g == 1) return false;
    while (mpz_divisible_p(q.get_mpz_t(), g.get_mpz_t())) q /= g;
  }
  return true;
}

Extended<std::size_t> tie_length(const Rational& x, int n) {
  if (is_n_adic(x, n)) {
    base_n_expansion(x, n);  // range validation
    return Extended<std::size_t>::infinite();
  }
  const DigitSequence seq = base_n_expansion(x, n);
  std::vector<int> word = seq.preperiod();
  for (int copy = 0; copy < 3; ++copy) word.insert(word.end(), seq.period().begin(), seq.period().end());
  std::size_t best = 0;
  for (int target : {0, n - 1}) {
    std::size_t run = 0;
    for (int d : word) {
      run = d == target ? run + 1 : 0;
      best = std::max(best, run);
    }
  }
  return best;
}

FarResult is_n_far(const Rational& x, int n) {
  if (is_n_adic(x, n)) return {false, std::nullopt};
  return {true, Rational(Integer(1), x.denominator())};
}

Rational far_infimum(const Rational& x, int n) {
  if (is_n_adic(x, n)) return Rational(0);
  const Integer q = x.denominator();
  Integer r = x.numerator() % q;
  if (r < 0) r += q;
  std::set<Integer> seen;
  Integer best = q;
  while (seen.insert(r).second) {
    const Integer nearest = r < q - r ? r : Integer(q - r);
    if (nearest < best) best = nearest;
    r = (r * n) % q;
  }
  return Rational(best, q);
}

std::vector<Rational> residue_limits(const SignedDigitSequence& c) {
  const long pre = static_cast<long>(c.preperiod().size());
  const long p = static_cast<long>(c.period().size());
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p));
  for (long q = 0; q < p; ++q) out.push_back(reversed_word_value(c, pre + 1 + q));
  return out;
}

std::vector<Rational> periodic_limit_points(const SignedDigitSequence& c) {
  std::vector<Rational> pts = residue_limits(c);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<Rational> residue_limits(const DigitSequence& a) {
  const long pre = static_cast<long>(a.preperiod().size());
  const long p = static_cast<long>(a.period().size());
  std::vector<Rational> out;
  for (long q = 0; q < p; ++q) out.push_back(reversed_word_value(a, pre + 1 + q));
  return out;
}

Rational backward_limit(const DigitSequence& a, std::size_t j) {
  return reversed_word_value(a, static_cast<long>(j));
}

}  // namespace nadic
