#pragma once

#include <map>
#include <utility>
#include <vector>

#include "causalgames/errors.hpp"
#include "causalgames/histories.hpp"
#include "causalgames/rational.hpp"
#include "causalgames/strategies.hpp"

namespace causalgames {

/// Exact nonnegative probabilities. Addition/multiplication are the usual
/// ones; a distribution is normalised when the weights sum to one.
struct RationalSemiring {
  using Value = Rational;
  static constexpr const char* name = "rational";
  static Value zero() { return Value(0); }
  static Value one() { return Value(1); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static bool is_zero(const Value& v) { return v == 0; }
  static bool valid_weight(const Value& v) { return v >= 0; }
};

/// Possibilistic weights: join/meet semiring over booleans. A distribution
/// is normalised when its support is nonempty.
struct BooleanSemiring {
  using Value = bool;
  static constexpr const char* name = "boolean";
  static Value zero() { return false; }
  static Value one() { return true; }
  static Value add(Value a, Value b) { return a || b; }
  static Value mul(Value a, Value b) { return a && b; }
  static bool is_zero(Value v) { return !v; }
  static bool valid_weight(Value) { return true; }
};

/// A finitely supported, normalised distribution with exact semiring
/// weights. Elements are kept in their canonical order; zero weights are
/// never stored.
template <class T, class S>
class Dist {
 public:
  using Value = typename S::Value;
  using Semiring = S;

  Dist() = default;

  static Dist point(T element) {
    Dist d;
    d.weights_.emplace(std::move(element), S::one());
    return d;
  }

  /// Collects weights (summing duplicates), drops zeros, checks
  /// normalisation.
  static Dist from_weights(std::vector<std::pair<T, Value>> entries) {
    Dist d;
    for (auto& [elem, w] : entries) {
      if (!S::valid_weight(w)) {
        throw Error(Errc::weight_sum_not_one, "negative weight");
      }
      if (S::is_zero(w)) continue;
      auto [it, inserted] = d.weights_.emplace(std::move(elem), w);
      if (!inserted) it->second = S::add(it->second, w);
    }
    if (!d.normalised()) {
      throw Error(Errc::weight_sum_not_one, "weights do not sum to one");
    }
    return d;
  }

  bool normalised() const {
    if (weights_.empty()) return false;
    Value total = S::zero();
    for (const auto& [elem, w] : weights_) total = S::add(total, w);
    return total == S::one();
  }

  Value weight(const T& element) const {
    auto it = weights_.find(element);
    return it == weights_.end() ? S::zero() : it->second;
  }

  std::size_t support_size() const { return weights_.size(); }
  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }

  /// Pushes the distribution forward along an arbitrary map, merging
  /// weights of elements with equal image.
  template <class U, class F>
  Dist<U, S> map(F&& f) const {
    Dist<U, S> out;
    for (const auto& [elem, w] : weights_) {
      U image = f(elem);
      auto [it, inserted] = out.weights_.emplace(std::move(image), w);
      if (!inserted) it->second = S::add(it->second, w);
    }
    return out;
  }

  bool operator==(const Dist& other) const { return weights_ == other.weights_; }

 private:
  template <class U, class R>
  friend class Dist;

  std::map<T, Value> weights_;
};

/// Marginalisation of a distribution over strategies: push forward along
/// restriction to U. Preserves normalisation.
template <class S>
Dist<NatureStrategy, S> pushforward(const Dist<NatureStrategy, S>& d, const MeasurementSet& U) {
  return d.template map<NatureStrategy>(
      [&](const NatureStrategy& sigma) { return sigma.restrict(U); });
}

/// Convex (semiring) combination of distributions over a common index set.
/// The coefficient weights must themselves be normalised.
template <class T, class S>
Dist<T, S> mix(const std::vector<std::pair<typename S::Value, Dist<T, S>>>& coeffs) {
  typename S::Value total = S::zero();
  for (const auto& [w, d] : coeffs) {
    if (!S::valid_weight(w)) throw Error(Errc::weight_sum_not_one, "negative mixing weight");
    total = S::add(total, w);
  }
  if (!(total == S::one())) {
    throw Error(Errc::weight_sum_not_one, "mixing weights do not sum to one");
  }
  std::vector<std::pair<T, typename S::Value>> entries;
  for (const auto& [w, d] : coeffs) {
    if (S::is_zero(w)) continue;
    for (const auto& [elem, dw] : d) entries.emplace_back(elem, S::mul(w, dw));
  }
  return Dist<T, S>::from_weights(std::move(entries));
}

/// Bilinear extension of play to mixed strategies: the weight of a playout
/// set is the total weight of the strategy pairs producing it.
template <class S>
Dist<HistorySet, S> play_mixed(const Dist<NatureStrategy, S>& nature,
                               const Dist<ExperimenterStrategy, S>& experimenter) {
  std::vector<std::pair<HistorySet, typename S::Value>> entries;
  for (const auto& [sigma, wn] : nature) {
    for (const auto& [tau, we] : experimenter) {
      entries.emplace_back(play(sigma, tau), S::mul(wn, we));
    }
  }
  return Dist<HistorySet, S>::from_weights(std::move(entries));
}

/// XOR of the outcome bits of the listed measurements, pushed forward over
/// a distribution of playout sets. Outcomes must be two-valued; the bit of
/// an outcome is its declaration index, optionally flipped per measurement.
/// Every history of every playout must perform each listed measurement and
/// all histories within one playout must agree on the parity.
template <class S>
Dist<int, S> readout_parity(const Dist<HistorySet, S>& d, const Scenario& scenario,
                            const std::vector<MeasurementIndex>& measurements,
                            const std::vector<MeasurementIndex>& flipped = {}) {
  for (MeasurementIndex x : measurements) {
    if (scenario.outcome_count(x) != 2) {
      throw Error(Errc::non_binary_outcome, "measurement '" + scenario.measurement_id(x) + "'");
    }
  }
  auto parity_of = [&](const HistorySet& playout) -> int {
    if (playout.empty()) {
      throw Error(Errc::missing_measurement_in_playout, "empty playout");
    }
    int agreed = -1;
    for (const Section& h : playout) {
      int bit = 0;
      for (MeasurementIndex x : measurements) {
        auto o = h.outcome_of(x);
        if (!o) {
          throw Error(Errc::missing_measurement_in_playout,
                      "playout lacks measurement '" + scenario.measurement_id(x) + "'");
        }
        int b = static_cast<int>(*o);
        if (std::find(flipped.begin(), flipped.end(), x) != flipped.end()) b ^= 1;
        bit ^= b;
      }
      if (agreed == -1) {
        agreed = bit;
      } else if (agreed != bit) {
        throw Error(Errc::missing_measurement_in_playout,
                    "playout histories disagree on the parity");
      }
    }
    return agreed;
  };
  return d.template map<int>(parity_of);
}

}  // namespace causalgames
