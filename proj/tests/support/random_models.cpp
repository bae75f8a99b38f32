#include "random_models.hpp"

#include <algorithm>

namespace spohn::testing {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Variable random_variable(Rng& rng, const std::string& name, int max_domain) {
  const int size = uniform_int(rng, 2, std::max(2, max_domain));
  std::vector<std::string> values;
  for (int v = 0; v < size; ++v) values.push_back(name + "_" + std::to_string(v));
  return Variable(name, std::move(values));
}

InfluenceDiagram random_forest(Rng& rng, int n, int max_domain, double edge_prob) {
  std::vector<Variable> vars;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    vars.push_back(random_variable(rng, "X" + std::to_string(i), max_domain));
    if (i == 0 || !coin(rng, edge_prob)) continue;
    const auto other = "X" + std::to_string(uniform_int(rng, 0, i - 1));
    const auto self = "X" + std::to_string(i);
    if (coin(rng, 0.5)) {
      edges.push_back({other, self});
    } else {
      edges.push_back({self, other});
    }
  }
  return InfluenceDiagram(std::move(vars), std::move(edges));
}

InfluenceDiagram collider_diagram(Rng& rng, int max_domain) {
  std::vector<Variable> vars;
  for (const char* n : {"A", "B", "C", "D", "E"}) {
    vars.push_back(random_variable(rng, n, max_domain));
  }
  return InfluenceDiagram(std::move(vars),
                          {{"A", "B"}, {"B", "D"}, {"C", "D"}, {"C", "E"}});
}

std::vector<Rank> random_row(Rng& rng, std::size_t size, const RankParams& p) {
  std::vector<Rank> row(size);
  for (auto& r : row) {
    r = coin(rng, p.inf_prob) ? Rank::infinity() : Rank(uniform_int(rng, 0, p.max_rank));
  }
  // Force at least one finite entry, then shift so the minimum is 0.
  if (std::all_of(row.begin(), row.end(), [](Rank r) { return r.is_infinite(); })) {
    row[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(size) - 1))] =
        Rank(uniform_int(rng, 0, p.max_rank));
  }
  const Rank low = *std::min_element(row.begin(), row.end());
  for (auto& r : row) r = r.is_infinite() ? r : r.minus(low);
  return row;
}

OCF random_ocf(Rng& rng, const SpacePtr& space, const RankParams& p) {
  return OCF(space, random_row(rng, space->size(), p));
}

OCF random_factorized_joint(Rng& rng, const InfluenceDiagram& d,
                            const RankParams& p) {
  const auto space = d.space();
  std::vector<Rank> joint(space->size(), Rank(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto fam = family(d, d.variables()[i].name());
    const auto fam_space = space->subspace(fam.members());
    const auto child_size = d.variables()[i].size();
    std::vector<Rank> conditional;
    for (std::size_t row = 0; row < fam_space.size() / child_size; ++row) {
      const auto r = random_row(rng, child_size, p);
      conditional.insert(conditional.end(), r.begin(), r.end());
    }
    const auto proj = projection(*space, fam_space);
    for (std::size_t s = 0; s < joint.size(); ++s) joint[s] += conditional[proj[s]];
  }
  return OCF(space, std::move(joint));
}

SpohnianNetwork random_network(Rng& rng, const InfluenceDiagram& d,
                               const RankParams& p) {
  return from_joint(random_factorized_joint(rng, d, p), d);
}

}  // namespace spohn::testing
