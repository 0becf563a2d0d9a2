#include "homly/report.hpp"

#include <algorithm>

namespace homly {

const AxiomVerdict* CheckReport::find(std::string_view axiom_id) const {
  for (const auto* list : {&axioms, &informational})
    for (const auto& v : *list)
      if (v.axiom_id == axiom_id) return &v;
  return nullptr;
}

void CheckReport::add(AxiomVerdict v) {
  passed = passed && v.passed;
  checked_tuples += v.checked_tuples;
  axioms.push_back(std::move(v));
}

VerdictBuilder::VerdictBuilder(std::string axiom_id, std::size_t cap) : cap_(cap) {
  v_.axiom_id = std::move(axiom_id);
}

void VerdictBuilder::record(const std::vector<std::size_t>& tuple, Vector residual) {
  ++v_.checked_tuples;
  if (residual.is_zero()) return;
  v_.passed = false;
  ++v_.counterexample_count;
  v_.counterexamples.push_back({tuple, std::move(residual)});
  if (v_.counterexamples.size() > 2 * cap_ + 16) prune();
}

void VerdictBuilder::prune() {
  auto& ces = v_.counterexamples;
  const auto keep = std::min(cap_, ces.size());
  std::partial_sort(ces.begin(), ces.begin() + static_cast<std::ptrdiff_t>(keep), ces.end(),
                    [](const Counterexample& a, const Counterexample& b) { return a.tuple < b.tuple; });
  ces.resize(keep);
}

AxiomVerdict VerdictBuilder::finish() && {
  prune();
  return std::move(v_);
}

}  // namespace homly
