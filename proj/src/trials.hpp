#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherical/axioms.hpp"
#include "spherical/sampling.hpp"

namespace spherical::detail {

template <class T>
using TrialOutcome = std::optional<Counterexample<T>>;

/// Runs `trial(index, rng)` for every index, each with its own generator, and keeps the
/// lowest-index counterexample. Serial and parallel execution give identical reports.
template <class T, class Trial>
AxiomReport<T> run_trials(std::string axiom, const CheckOptions& options, Trial&& trial) {
  if (options.trials == 0) throw std::invalid_argument("trials must be >= 1");
  std::vector<TrialOutcome<T>> outcomes(options.trials);
  for_each_index(options.trials, options.execution, [&](std::size_t i) {
    Rng rng = stream_rng(options.seed, i);
    outcomes[i] = trial(i, rng);
  });
  AxiomReport<T> report{std::move(axiom), options.trials, 0, std::nullopt, std::nullopt};
  for (auto& outcome : outcomes) {
    if (!outcome) continue;
    if (report.violations++ == 0) report.counterexample = std::move(outcome);
  }
  return report;
}

}  // namespace spherical::detail
