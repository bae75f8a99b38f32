#include <functional>

#include "doctest.h"
#include "spohn/diagram.hpp"
#include "support/check.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace spohn;
using namespace spohn::testing;

namespace {

// Counts simple undirected paths between every pair, capped at 2.
bool at_most_one_path_everywhere(const InfluenceDiagram& d) {
  const auto n = d.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      int count = 0;
      std::vector<bool> seen(n, false);
      std::function<void(std::size_t)> walk = [&](std::size_t at) {
        if (count > 1) return;
        if (at == b) {
          ++count;
          return;
        }
        seen[at] = true;
        for (auto next : d.neighbors(at)) {
          if (!seen[next]) walk(next);
        }
        seen[at] = false;
      };
      walk(a);
      if (count > 1) return false;
    }
  }
  return true;
}

InfluenceDiagram random_dag(Rng& rng, int n, double edge_prob) {
  std::vector<Variable> vars;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    vars.push_back(binary("N" + std::to_string(i)));
    for (int j = 0; j < i; ++j) {
      if (coin(rng, edge_prob)) {
        edges.push_back({"N" + std::to_string(j), "N" + std::to_string(i)});
      }
    }
  }
  return InfluenceDiagram(vars, edges);
}

}  // namespace

TEST_CASE("construction rejects malformed graphs") {
  CHECK_ERROR(InfluenceDiagram({binary("A"), binary("A")}, {}), ErrorCode::InvalidNetwork);
  CHECK_ERROR(InfluenceDiagram({binary("A")}, {{"A", "B"}}), ErrorCode::InvalidNetwork);
  CHECK_ERROR(InfluenceDiagram({binary("A")}, {{"A", "A"}}), ErrorCode::InvalidNetwork);
  CHECK_ERROR(InfluenceDiagram({binary("A"), binary("B")}, {{"A", "B"}, {"A", "B"}}),
              ErrorCode::InvalidNetwork);
}

TEST_CASE("validate") {
  CHECK(validate(collider_example()));
  CHECK(validate(InfluenceDiagram({binary("A")}, {})));

  const InfluenceDiagram diamond(
      {binary("A"), binary("B"), binary("C"), binary("D")},
      {{"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}});
  const auto report = validate(diamond);
  CHECK(!report);
  CHECK(report.message.find("multiply-connected") != std::string::npos);

  const InfluenceDiagram cycle({binary("A"), binary("B")}, {{"A", "B"}, {"B", "A"}});
  const auto cyc = validate(cycle);
  CHECK(!cyc);
  CHECK(cyc.message.find("cycle") != std::string::npos);
  CHECK_ERROR(cycle.topological_order(), ErrorCode::InvalidNetwork);
}

TEST_CASE("validate matches brute-force path counting") {
  Rng rng(3);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto d = random_dag(rng, uniform_int(rng, 1, 8), 0.1 + 0.3 * coin(rng, 0.5));
    const bool ok = static_cast<bool>(validate(d));
    CHECK(ok == at_most_one_path_everywhere(d));
    accepted += ok;
  }
  CHECK(accepted > 50);
  CHECK(accepted < 400);
}

TEST_CASE("separation on the two-parent example") {
  const auto d = collider_example();
  CHECK(separated(d, "D", "A", {"B", "C"}));
  CHECK(separated(d, "D", "E", {"B", "C"}));
  CHECK(!separated(d, "B", "C", {"D"}));
  CHECK(!separated(d, "B", "C", {}));
  CHECK(!separated(d, "A", "B", {"C"}));
  CHECK(separated(d, "A", "E", {"C"}));
  CHECK(separated(d, "A", "D", {"B"}));
  CHECK(!separated(d, "A", "D", {"C"}));
  CHECK_ERROR(separated(d, "A", "A", {}), ErrorCode::InvalidArgument);
  CHECK_ERROR(separated(d, "A", "B", {"A"}), ErrorCode::InvalidArgument);
  CHECK_ERROR(separated(d, "A", "Q", {}), ErrorCode::UnknownVariable);

  const InfluenceDiagram apart({binary("A"), binary("B")}, {});
  CHECK(separated(apart, "A", "B", {}));
}

TEST_CASE("separation is symmetric") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = random_forest(rng, 6, 2);
    const auto names = d.space()->names();
    for (std::size_t x = 0; x < names.size(); ++x) {
      for (std::size_t y = 0; y < names.size(); ++y) {
        if (x == y) continue;
        for (std::size_t g = 0; g < names.size(); ++g) {
          if (g == x || g == y) continue;
          CHECK(separated(d, names[x], names[y], {names[g]}) ==
                separated(d, names[y], names[x], {names[g]}));
        }
      }
    }
  }
}

TEST_CASE("families") {
  const auto d = collider_example();
  const auto fd = family(d, "D");
  CHECK(fd.child == "D");
  CHECK(fd.parents == std::vector<std::string>{"B", "C"});
  CHECK(fd.members() == std::vector<std::string>{"B", "C", "D"});
  CHECK(family(d, "A").parents.empty());
  CHECK(family(d, "E").parents == std::vector<std::string>{"C"});
  CHECK_ERROR(family(d, "Q"), ErrorCode::UnknownVariable);
}

TEST_CASE("unique connector") {
  const auto d = collider_example();
  const auto fd = family(d, "D");
  CHECK(unique_connector(d, fd, "A") == std::optional<std::string>("B"));
  CHECK(unique_connector(d, fd, "E") == std::optional<std::string>("C"));
  CHECK(unique_connector(d, fd, "C") == std::optional<std::string>("C"));
  CHECK(unique_connector(d, family(d, "A"), "E") == std::optional<std::string>("A"));

  const InfluenceDiagram two({binary("A"), binary("B"), binary("Z")}, {{"A", "B"}});
  CHECK(!unique_connector(two, family(two, "B"), "Z").has_value());

  const InfluenceDiagram diamond(
      {binary("A"), binary("B"), binary("C"), binary("D")},
      {{"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}});
  CHECK_ERROR(unique_connector(diamond, family(diamond, "D"), "A"),
              ErrorCode::NotSinglyConnected);
}

TEST_CASE("unique connector lies on every path into the family") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = random_forest(rng, 7, 2, 0.8);
    for (std::size_t c = 0; c < d.size(); ++c) {
      const auto fam = family(d, d.variables()[c].name());
      for (std::size_t u = 0; u < d.size(); ++u) {
        const auto& uname = d.variables()[u].name();
        const auto y = unique_connector(d, fam, uname);
        bool any = false;
        for (const auto& m : fam.members()) {
          const auto path = undirected_path(d, u, d.index_of(m));
          if (path.empty()) continue;
          any = true;
          REQUIRE(y.has_value());
          bool on_path = false;
          for (auto p : path) on_path |= d.variables()[p].name() == *y;
          CHECK(on_path);
        }
        CHECK(any == y.has_value());
      }
    }
  }
}
