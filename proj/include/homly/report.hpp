#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "homly/linalg.hpp"

namespace homly {

inline constexpr std::size_t kDefaultCounterexampleCap = 5;

/// A basis-index tuple on which an identity failed, with its exact residual
/// (left side minus right side).
struct Counterexample {
  std::vector<std::size_t> tuple;
  Vector residual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct AxiomVerdict {
  std::string axiom_id;
  bool passed = true;
  std::size_t checked_tuples = 0;
  /// Total failing tuples; `counterexamples` holds at most the cap, sorted.
  std::size_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;

  friend bool operator==(const AxiomVerdict&, const AxiomVerdict&) = default;
};

/// Outcome of one checker. `passed` is the conjunction of `axioms`;
/// `informational` verdicts are reported but never affect it.
struct CheckReport {
  std::string suite_id;
  bool passed = true;
  std::size_t checked_tuples = 0;
  std::vector<AxiomVerdict> axioms;
  std::vector<AxiomVerdict> informational;

  const AxiomVerdict* find(std::string_view axiom_id) const;
  /// Appends and updates `passed` and `checked_tuples`.
  void add(AxiomVerdict v);

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Accumulates residuals for one axiom. Records are accepted in any order;
/// finish() sorts counterexamples lexicographically before truncating.
class VerdictBuilder {
 public:
  VerdictBuilder(std::string axiom_id, std::size_t cap);

  void record(const std::vector<std::size_t>& tuple, Vector residual);
  AxiomVerdict finish() &&;

 private:
  void prune();

  AxiomVerdict v_;
  std::size_t cap_;
};

}  // namespace homly
