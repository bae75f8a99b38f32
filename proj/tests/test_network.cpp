#include "doctest.h"
#include "spohn/network.hpp"
#include "support/check.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace spohn;
using namespace spohn::testing;

TEST_CASE("the bird chain") {
  BirdExample ex;
  const auto d = bird_chain();
  const auto net = from_joint(ex.t0, d);
  CHECK(net.table("species") == OCF::over(species(), ranks({1, 0, 0})));
  CHECK(net.table("flight") == ex.t0);
  CHECK(validate_network(net));
  CHECK(joint(net) == ex.t0);
  CHECK(marginal(net, "species") == OCF::over(species(), ranks({1, 0, 0})));
  CHECK(marginal(net, "flight") == OCF::over(flight(), ranks({0, 0})));
  CHECK_ERROR(marginal(net, "colour"), ErrorCode::UnknownVariable);
}

TEST_CASE("single node network") {
  const auto v = binary("A");
  const auto t = OCF::over(v, ranks({2, 0}));
  const SpohnianNetwork net(InfluenceDiagram({v}, {}), {t});
  CHECK(joint(net) == t);
  CHECK(marginal(net, "A") == t);
  CHECK(from_joint(t, net.diagram()) == net);
}

TEST_CASE("tables are stored parents first") {
  BirdExample ex;
  const auto swapped = marginalize(ex.t0, {"flight", "species"});
  const SpohnianNetwork net(bird_chain(),
                            {OCF::over(species(), ranks({1, 0, 0})), swapped});
  CHECK(net.table("flight") == ex.t0);
  CHECK_ERROR(SpohnianNetwork(bird_chain(), {OCF::over(species(), ranks({1, 0, 0})),
                                             OCF::over(flight(), ranks({0, 0}))}),
              ErrorCode::InvalidNetwork);
  CHECK_ERROR(SpohnianNetwork(bird_chain(), {OCF::over(species(), ranks({1, 0, 0}))}),
              ErrorCode::InvalidNetwork);
}

TEST_CASE("network validation names the first violation") {
  BirdExample ex;
  const auto net = from_joint(ex.t0, bird_chain());

  // Parent marginal shifted by one.
  const auto shifted = net.with_table("species", OCF::over(species(), ranks({2, 0, 0})));
  auto report = validate_network(shifted);
  CHECK(!report);
  CHECK(report.message.find("species->flight") != std::string::npos);
  CHECK_ERROR(joint(shifted), ErrorCode::InconsistentTables);

  // Minimum 1.
  const auto bad = net.with_table(
      "species", OCF::unchecked(make_space({species()}), ranks({2, 1, 1})));
  report = validate_network(bad);
  CHECK(!report);
  CHECK(report.message.find("species") != std::string::npos);
  CHECK(report.message.find("not an OCF") != std::string::npos);

  const InfluenceDiagram diamond(
      {binary("A"), binary("B"), binary("C"), binary("D")},
      {{"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}});
  Rng rng(1);
  const auto k = random_ocf(rng, diamond.space(), {});
  const auto dn = from_joint(k, diamond);
  CHECK(!validate_network(dn));
  CHECK_ERROR(joint(dn), ErrorCode::InvalidNetwork);
}

TEST_CASE("from_joint rejects other spaces") {
  BirdExample ex;
  CHECK_ERROR(from_joint(ex.t0, collider_example()), ErrorCode::SpaceMismatch);
  CHECK_ERROR(from_joint(marginalize(ex.t0, {"species"}), bird_chain()),
              ErrorCode::SpaceMismatch);
}

TEST_CASE("reconstruction on random forests") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = random_forest(rng, uniform_int(rng, 1, 6), 3);
    const RankParams p{uniform_int(rng, 1, 4), trial % 4 == 0 ? 0.15 : 0.0};
    const auto k = random_factorized_joint(rng, d, p);
    const auto net = from_joint(k, d);
    REQUIRE(validate_network(net));
    CHECK(joint(net) == k);
    for (const auto& v : d.variables()) {
      CHECK(marginal(net, v.name()) == marginalize(k, {v.name()}));
      // Every table containing v agrees on it.
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (net.table(i).space().contains(v.name())) {
          CHECK(marginalize(net.table(i), {v.name()}) == marginal(net, v.name()));
        }
      }
    }
  }
}

TEST_CASE("joint follows the five-term formula when parent marginals add") {
  Rng rng(29);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = collider_diagram(rng, 3);
    const auto net = random_network(rng, d, {3, 0.0});
    const auto k = joint(net);
    const auto& sp = k.space();
    const auto bc = marginalize(net.table("D"), {"B", "C"});
    const auto b = marginal(net, "B");
    const auto c = marginal(net, "C");
    bool additive = true;
    for (std::size_t s = 0; s < bc.space().size(); ++s) {
      additive &= bc.rank(s) == b.rank(bc.space().value_at(s, 0)) +
                                    c.rank(bc.space().value_at(s, 1));
    }
    // Random factorized joints keep B and C marginally independent.
    CHECK(additive);
    if (!additive) continue;
    ++checked;
    for (std::size_t s = 0; s < sp.size(); ++s) {
      const auto st = sp.decode(s);
      const auto a_ = st.values[0], b_ = st.values[1], c_ = st.values[2],
                 d_ = st.values[3], e_ = st.values[4];
      const auto& tb = net.table("B");
      const auto& td = net.table("D");
      const auto& te = net.table("E");
      const SignedDelta expected =
          SignedDelta(tb.rank(State{{a_, b_}}) + td.rank(State{{b_, c_, d_}}) +
                      te.rank(State{{c_, e_}})) -
          (b.rank(b_) + c.rank(c_));
      CHECK(SignedDelta(k.rank(s)) == expected);
    }
  }
  CHECK(checked == 200);
}
