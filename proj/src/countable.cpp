#include "ktri/countable.hpp"

#include <algorithm>
#include <set>

#include "ktri/error.hpp"

namespace ktri {

namespace {

constexpr long kGeometricTailCap = 512;

}  // namespace

CountableSetFunction::CountableSetFunction(Rule rule, Rational scale)
    : rule_(std::move(rule)), scale_(std::move(scale)) {
  require(scale_.sign() >= 0, "NEGATIVE-SCALE", "scale must be non-negative");
  if (const auto* ap = std::get_if<AlternatingPower>(&rule_))
    require(ap->exponent >= 2, "NO-TAIL-BOUND",
            "alternating weights 1/n^p need p >= 2 for a summable tail, got p = " +
                std::to_string(ap->exponent));
  if (const auto* g = std::get_if<Geometric>(&rule_))
    require(g->ratio > Rational(0) && g->ratio < Rational(1), "NO-TAIL-BOUND",
            "geometric ratio must be in (0,1), got " + g->ratio.str());
}

CountableSetFunction CountableSetFunction::alternating_power(long exponent) {
  return CountableSetFunction(AlternatingPower{exponent});
}

CountableSetFunction CountableSetFunction::geometric(const Rational& ratio) {
  return CountableSetFunction(Geometric{ratio});
}

CountableSetFunction CountableSetFunction::zero() { return CountableSetFunction(Zero{}); }

CountableSetFunction CountableSetFunction::scaled(const Rational& c) const {
  return CountableSetFunction(rule_, scale_ * c);
}

Rational CountableSetFunction::weight(long n) const {
  require(n >= 1, "BAD-INDEX", "weights are indexed from 1");
  Rational w(0);
  if (const auto* ap = std::get_if<AlternatingPower>(&rule_)) {
    w = Rational(1) / Rational(n).pow(static_cast<unsigned long>(ap->exponent));
    if (n % 2 == 1) w = -w;
  } else if (const auto* g = std::get_if<Geometric>(&rule_)) {
    w = g->ratio.pow(static_cast<unsigned long>(n));
  }
  return w * scale_;
}

Rational CountableSetFunction::eval(const std::vector<long>& elements) const {
  Rational sum(0);
  for (long n : elements) sum += weight(n);
  return sum.abs();
}

Rational CountableSetFunction::tail_bound(long n) const {
  require(n >= 1, "BAD-INDEX", "tail bounds are indexed from 1");
  Rational bound(0);
  if (std::holds_alternative<AlternatingPower>(rule_)) {
    // sum_{i >= n} 1/i^p <= sum_{i >= n} 1/(i(i-1)) = 1/(n-1) for n >= 2.
    bound = n >= 2 ? Rational(1, n - 1) : Rational(2);
  } else if (const auto* g = std::get_if<Geometric>(&rule_)) {
    const long e = std::min(n, kGeometricTailCap);
    bound = g->ratio.pow(static_cast<unsigned long>(e)) / (Rational(1) - g->ratio);
  }
  return bound * scale_;
}

const Rational& CountableSetFunction::triangularity_k() const { return Rational::one(); }

std::string CountableSetFunction::descriptor() const {
  std::string base;
  if (const auto* ap = std::get_if<AlternatingPower>(&rule_))
    base = "alternating-power " + std::to_string(ap->exponent);
  else if (const auto* g = std::get_if<Geometric>(&rule_))
    base = "geometric " + g->ratio.str();
  else
    base = "zero";
  if (scale_ != Rational(1)) base += " scaled " + scale_.str();
  return base;
}

DisjointSetsRule DisjointSetsRule::singleton_stride(long stride) {
  require(stride >= 1, "BAD-STRIDE", "stride must be >= 1");
  return DisjointSetsRule(Stride{stride});
}

DisjointSetsRule DisjointSetsRule::explicit_sets(std::vector<std::vector<long>> sets) {
  require(!sets.empty(), "EMPTY-SEQUENCE", "need at least one set");
  std::set<long> seen;
  for (const auto& s : sets) {
    require(!s.empty(), "EMPTY-SET", "rule sets must be nonempty");
    for (long e : s) {
      require(e >= 1, "BAD-INDEX", "elements are naturals >= 1");
      require(seen.insert(e).second, "NON-DISJOINT",
              "element " + std::to_string(e) + " appears twice");
    }
  }
  return DisjointSetsRule(Explicit{std::move(sets)});
}

std::vector<long> DisjointSetsRule::at(long h) const {
  require(h >= 1, "BAD-INDEX", "sequence is indexed from 1");
  if (const auto* s = std::get_if<Stride>(&impl_)) return {s->stride * h};
  const auto& e = std::get<Explicit>(impl_);
  require(static_cast<std::size_t>(h) <= e.sets.size(), "BEYOND-PREFIX",
          "explicit rule has only " + std::to_string(e.sets.size()) + " sets");
  return e.sets[h - 1];
}

long DisjointSetsRule::min_element(long h) const {
  const auto s = at(h);
  return *std::min_element(s.begin(), s.end());
}

std::string DisjointSetsRule::descriptor() const {
  if (const auto* s = std::get_if<Stride>(&impl_))
    return s->stride == 1 ? "singletons {h}" : "singletons {" + std::to_string(s->stride) + "h}";
  return "explicit prefix of " + std::to_string(std::get<Explicit>(impl_).sets.size()) + " sets";
}

}  // namespace ktri
