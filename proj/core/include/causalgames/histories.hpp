#pragma once

#include <vector>

#include "causalgames/scenario.hpp"

namespace causalgames {

/// A canonically ordered finite set of histories: ascending by
/// (size, lexicographic). Also used for playout sets.
class HistorySet {
 public:
  HistorySet() = default;
  explicit HistorySet(std::vector<Section> sections);

  bool contains(const Section& s) const;
  std::size_t size() const { return sections_.size(); }
  bool empty() const { return sections_.empty(); }
  auto begin() const { return sections_.begin(); }
  auto end() const { return sections_.end(); }
  const std::vector<Section>& sections() const { return sections_; }

  auto operator<=>(const HistorySet&) const = default;

 private:
  std::vector<Section> sections_;
};

/// All histories of M: the least family containing the empty section and
/// closed under adding any outcome of any accessible measurement. The
/// frontier expansion stops at the first fixed point.
HistorySet enumerate_histories(const Scenario& M);

/// All histories of M whose events are drawn from `within`. Equivalently,
/// the down-set of `within` inside the history poset when `within` is
/// itself a history.
std::vector<Section> histories_within(const Scenario& M, const Section& within);

/// Membership test without full enumeration. Saturates upward from the
/// empty section using only events of s: any-order insertion is confluent
/// because accessibility is monotone and every outcome of an accessible
/// measurement extends a history.
bool is_history(const Scenario& M, const Section& s);

/// s is maximal in the history poset iff no measurement is accessible
/// from it. Precondition: s is a history of M.
bool is_maximal(const Scenario& M, const Section& s);

/// The maximal elements of enumerate_histories(M).
HistorySet maximal_histories(const Scenario& M);

}  // namespace causalgames
