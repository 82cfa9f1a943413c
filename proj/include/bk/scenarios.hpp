#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bk/cloud_spec.hpp"
#include "bk/homology.hpp"

namespace bk {

/// Free parameters of the built-in scenarios.
struct ScenarioOptions {
  int m = 2;             ///< kmn: C-side points
  int n = 2;             ///< kmn: Y-side points
  double r_plus = 0.9;   ///< k22 / mixed-loop: r_Y(y+)
  double r_minus = 0.9;  ///< k22 / mixed-loop: r_Y(y-)
  double D = 1.8;        ///< k22 / mixed-loop: d(y+, y-); must not exceed r_plus + r_minus
  int n_max = 64;        ///< anchor-separation: number of psi_n points
};

/// A known value of one complex of a scenario.
struct ComplexExpectation {
  ComplexKind kind = ComplexKind::Rips;
  double t = 0.0;
  std::optional<std::vector<std::size_t>> betti;     ///< compared on this prefix
  std::optional<std::vector<Simplex>> maximal;       ///< exact set of maximal simplices
  std::optional<bool> contractible;
  std::string note;
};

struct Scenario {
  std::string id;
  std::string summary;
  CloudSpec spec;
  std::vector<double> grid;
  ComplexKind kind = ComplexKind::Rips;
  int max_dim = 0;
  std::vector<ComplexExpectation> expected;
  /// C-side index of a second anchor for anchor comparisons, if any.
  std::optional<std::size_t> alt_anchor;
};

const std::vector<std::string>& scenario_ids();

/// Throws std::invalid_argument for an unknown id or out-of-domain options.
Scenario make_scenario(const std::string& id, const ScenarioOptions& opts = {});

struct ExpectationOutcome {
  ComplexExpectation expectation;
  bool pass = false;
  std::string detail;
};

/// Builds each expected complex with the scenario's ambient oracles and
/// compares it. Throws SolverError if an oracle fails to converge.
std::vector<ExpectationOutcome> check_expectations(const Scenario& scenario);

}  // namespace bk
