#pragma once

// The six-state bird example: species x flight, flight varying fastest, so
// state k (1-based) of the example table is index k-1 here.

#include <string>
#include <vector>

#include "spohn/diagram.hpp"
#include "spohn/network.hpp"
#include "spohn/ocf.hpp"

namespace spohn::testing {

inline Variable species() {
  return Variable("species", {"PENGUIN", "TYPICAL-BIRD", "NOT-BIRD"});
}
inline Variable flight() { return Variable("flight", {"FLYS", "NOT-FLYS"}); }

inline SpacePtr bird_space() { return make_space({species(), flight()}); }

inline std::vector<Rank> ranks(std::initializer_list<int> values) {
  std::vector<Rank> out;
  for (int v : values) out.push_back(v < 0 ? Rank::infinity() : Rank(v));
  return out;
}

inline OCF bird_ocf(const SpacePtr& space, std::initializer_list<int> values) {
  return OCF(space, ranks(values));
}

struct BirdExample {
  SpacePtr space = bird_space();
  OCF t0 = bird_ocf(space, {2, 1, 0, 1, 0, 0});
  OCF t1 = bird_ocf(space, {2, 1, 0, 1, 1, 1});
  OCF t2 = bird_ocf(space, {1, 0, 1, 2, 2, 2});
  Proposition bird = Proposition::where(space, "species", {"PENGUIN", "TYPICAL-BIRD"});
  Proposition penguin = Proposition::where(space, "species", {"PENGUIN"});
  Proposition flys = Proposition::where(space, "flight", {"FLYS"});
  Proposition not_flys = Proposition::where(space, "flight", {"NOT-FLYS"});
  Proposition all = Proposition::everything(space);
};

inline InfluenceDiagram bird_chain() {
  return InfluenceDiagram({species(), flight()}, {{"species", "flight"}});
}

inline Variable binary(const std::string& name) {
  return Variable(name, {name + "0", name + "1"});
}

/// A->B, B->D, C->D, C->E over binary variables.
inline InfluenceDiagram collider_example() {
  return InfluenceDiagram(
      {binary("A"), binary("B"), binary("C"), binary("D"), binary("E")},
      {{"A", "B"}, {"B", "D"}, {"C", "D"}, {"C", "E"}});
}

}  // namespace spohn::testing
