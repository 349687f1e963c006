#ifndef KTRI_COUNTABLE_HPP
#define KTRI_COUNTABLE_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ktri/rational.hpp"

namespace ktri {

// A set function on finite subsets of the naturals, backed by a closed-form
// weight rule with eval(A) = |sum of weights over A| and a certified tail
// oracle: tail_bound(N) >= sum_{n >= N} |w_n|, non-increasing in N. The
// absolute value of an additive series is 1-triangular, which is what makes
// the prefix+tail certificates below sound.
class CountableSetFunction {
 public:
  struct AlternatingPower {
    long exponent;  // w_n = (-1)^n / n^exponent, exponent >= 2
  };
  struct Geometric {
    Rational ratio;  // w_n = ratio^n, 0 < ratio < 1
  };
  struct Zero {};

  using Rule = std::variant<AlternatingPower, Geometric, Zero>;

  // Rejects rules without a summable tail (alternating exponent < 2,
  // geometric ratio outside (0,1)).
  explicit CountableSetFunction(Rule rule, Rational scale = Rational(1));

  static CountableSetFunction alternating_power(long exponent);
  static CountableSetFunction geometric(const Rational& ratio);
  static CountableSetFunction zero();

  CountableSetFunction scaled(const Rational& c) const;

  Rational weight(long n) const;  // n >= 1
  Rational eval(const std::vector<long>& elements) const;

  // Upper bound for sum_{n >= N} |w_n|; exact closed forms per rule:
  //   alternating exponent p:  1/(N-1) for N >= 2 (telescoping majorant),
  //                            1 + tail_bound(2) at N = 1
  //   geometric q:             q^N / (1 - q), with the exponent capped so the
  //                            exact rational stays small (still an upper
  //                            bound since q < 1)
  Rational tail_bound(long n) const;

  // Triangularity constant of |additive series| functions.
  const Rational& triangularity_k() const;

  std::string descriptor() const;
  const Rule& rule() const { return rule_; }
  const Rational& scale() const { return scale_; }

 private:
  Rule rule_;
  Rational scale_;
};

// A disjoint sequence rule h -> C_h of finite sets of naturals.
class DisjointSetsRule {
 public:
  // C_h = { stride * h }; stride 1 is the singleton sequence {h}.
  static DisjointSetsRule singleton_stride(long stride = 1);
  // Explicit finite prefix; queries beyond it error.
  static DisjointSetsRule explicit_sets(std::vector<std::vector<long>> sets);

  std::vector<long> at(long h) const;  // h >= 1
  long min_element(long h) const;
  std::string descriptor() const;

 private:
  struct Stride {
    long stride;
  };
  struct Explicit {
    std::vector<std::vector<long>> sets;
  };
  explicit DisjointSetsRule(std::variant<Stride, Explicit> impl) : impl_(std::move(impl)) {}

  std::variant<Stride, Explicit> impl_;
};

}  // namespace ktri

#endif  // KTRI_COUNTABLE_HPP
