#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spohn/evidence.hpp"
#include "spohn/network.hpp"
#include "spohn/propagation.hpp"

namespace spohn {

// Brute-force ground truth. Everything here works on the full joint OCF and
// is exponential in the number of variables.

struct Divergence {
  std::string node;
  std::string state;
  Rank engine;
  Rank oracle;
};

struct IndependenceRecord {
  std::string x;
  std::string y;
  std::vector<std::string> gamma;
  bool separated = false;
  bool independent = false;
};

struct OracleReport {
  bool passed = true;
  std::optional<Divergence> first_divergence;
  std::vector<IndependenceRecord> independence_audit;
};

/// Applies each piece of evidence to the joint in order: revise for finite
/// strength, revise_certain for infinite strength, and for a target marginal
/// kappa'(s) = kappa(s) - kappa(v) + target(v) where v is the state's value.
OCF oracle_revise(const OCF& kappa, const std::vector<EvidenceSpec>& evidence);

/// The joint conditioned on the conjunction of certain evidence. Throws
/// ContradictoryEvidence if the conjunction is impossible.
OCF oracle_condition(const OCF& kappa, const std::vector<EvidenceSpec>& evidence);

/// Exact comparison of every family table of `net_result` against the
/// projection of `oracle_joint` onto the same diagram.
OracleReport compare(const SpohnianNetwork& net_result, const OCF& oracle_joint);

/// Same, against tables that are already projected. Use this for oracle
/// networks: after evidence on a common child the projected tables no longer
/// determine the joint, so joint(expected) is not a substitute.
OracleReport compare(const SpohnianNetwork& net_result, const SpohnianNetwork& expected);

/// For every pair of variables and every separating candidate of at most two
/// other variables, records the diagram's separation verdict and whether
/// the independence actually holds in `kappa`.
OracleReport independence_audit(const OCF& kappa, const InfluenceDiagram& d);

enum class PropagationMode { Single, Certain, Uncertain };

/// Oracle result for a propagation run, projected onto `net`'s diagram:
/// single applies the evidence list in order at the joint; certain
/// conditions on the conjunction; uncertain adds the dummy children,
/// conditions on every dummy observation, and drops them again.
SpohnianNetwork oracle_propagate(const SpohnianNetwork& net,
                                 const std::vector<EvidenceSpec>& evidence,
                                 PropagationMode mode);

/// Line-oriented text rendering.
std::string render(const OracleReport& report);

}  // namespace spohn
