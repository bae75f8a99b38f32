#pragma once

// Random instances for property and acceptance tests. Joints are built as a
// sum of per-family conditional rows with minimum 0, so every diagram
// independence holds by construction.

#include <cstdint>
#include <random>
#include <vector>

#include "spohn/diagram.hpp"
#include "spohn/network.hpp"
#include "spohn/ocf.hpp"

namespace spohn::testing {

using Rng = std::mt19937_64;

struct RankParams {
  int max_rank = 3;
  double inf_prob = 0.0;
};

int uniform_int(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);

Variable random_variable(Rng& rng, const std::string& name, int max_domain);

/// Random forest over n variables with random edge orientations: always
/// acyclic and singly-connected.
InfluenceDiagram random_forest(Rng& rng, int n, int max_domain,
                               double edge_prob = 0.85);

/// A->B, B->D, C->D, C->E with random domain sizes.
InfluenceDiagram collider_diagram(Rng& rng, int max_domain);

/// Row of ranks with minimum 0.
std::vector<Rank> random_row(Rng& rng, std::size_t size, const RankParams& p);

OCF random_ocf(Rng& rng, const SpacePtr& space, const RankParams& p);

OCF random_factorized_joint(Rng& rng, const InfluenceDiagram& d,
                            const RankParams& p);

SpohnianNetwork random_network(Rng& rng, const InfluenceDiagram& d,
                               const RankParams& p);

}  // namespace spohn::testing
