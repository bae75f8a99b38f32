#include <limits>

#include "doctest.h"
#include "spohn/ocf.hpp"
#include "spohn/rank.hpp"
#include "support/check.hpp"

using namespace spohn;

TEST_CASE("rank arithmetic saturates at infinity") {
  const Rank inf = Rank::infinity();
  CHECK(Rank(2) + Rank(3) == Rank(5));
  CHECK(inf + Rank(7) == inf);
  CHECK(Rank(7) + inf == inf);
  CHECK((inf - Rank(4)).is_infinite());
  CHECK(Rank(4) < inf);
  CHECK(Rank(0) < Rank(1));
  CHECK(to_string(inf) == "inf");
  CHECK(to_string(Rank(12)) == "12");
}

TEST_CASE("rank construction and subtraction errors") {
  CHECK_ERROR(Rank(-1), ErrorCode::InvalidArgument);
  CHECK_ERROR(Rank::infinity() - Rank::infinity(), ErrorCode::Internal);
  CHECK_ERROR(Rank(3) - Rank::infinity(), ErrorCode::Internal);
  CHECK_ERROR(Rank(1).minus(Rank(2)), ErrorCode::Internal);
  CHECK_ERROR(Rank(std::numeric_limits<std::int64_t>::max()) + Rank(1),
              ErrorCode::Overflow);
  CHECK(Rank(5).minus(Rank(2)) == Rank(3));
}

TEST_CASE("signed deltas carry negative changes") {
  const SignedDelta d = Rank(1) - Rank(3);
  CHECK(d == SignedDelta(-2));
  CHECK(d + SignedDelta(5) == SignedDelta(3));
  CHECK((d + SignedDelta::infinity()).is_infinite());
  CHECK_ERROR(d.to_rank(), ErrorCode::Internal);
  CHECK(SignedDelta(4).to_rank() == Rank(4));
  CHECK(SignedDelta::infinity().to_rank().is_infinite());
  CHECK(SignedDelta(-3) < SignedDelta(0));
  CHECK(SignedDelta(100) < SignedDelta::infinity());
}

TEST_CASE("belief strength values") {
  CHECK(BeliefStrength(3).positive());
  CHECK(BeliefStrength(-3).negative());
  CHECK(!BeliefStrength(0).positive());
  CHECK(!BeliefStrength(0).negative());
  CHECK(BeliefStrength::plus_infinity().positive());
  CHECK(BeliefStrength::negated(Rank::infinity()) == BeliefStrength::minus_infinity());
  CHECK(to_string(BeliefStrength::minus_infinity()) == "-inf");
}

TEST_CASE("s_normalize") {
  auto norm = [](std::vector<SignedDelta> v) { return s_normalize(v); };
  using D = SignedDelta;
  CHECK(norm({D(3), D(1), D(5)}) == std::vector<Rank>{Rank(2), Rank(0), Rank(4)});
  CHECK(norm({D(0), D(2)}) == std::vector<Rank>{Rank(0), Rank(2)});
  CHECK(norm({D::infinity(), D(4), D(7)}) ==
        std::vector<Rank>{Rank::infinity(), Rank(0), Rank(3)});
  CHECK(norm({D(-4), D(-1)}) == std::vector<Rank>{Rank(0), Rank(3)});
  CHECK_ERROR(norm({D::infinity(), D::infinity()}), ErrorCode::AllInfinite);

  SUBCASE("idempotent and translation invariant") {
    const std::vector<SignedDelta> v{D(5), D(-2), D::infinity(), D(9)};
    const auto once = s_normalize(v);
    std::vector<SignedDelta> again(once.begin(), once.end());
    CHECK(s_normalize(again) == once);
    for (int c : {-10, -1, 3, 40}) {
      std::vector<SignedDelta> shifted;
      for (auto x : v) shifted.push_back(x + D(c));
      CHECK(s_normalize(shifted) == once);
    }
  }
}
