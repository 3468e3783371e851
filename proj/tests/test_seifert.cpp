#include "doctest.h"

#include "toledo/errors.hpp"
#include "toledo/seifert.hpp"

using namespace toledo;

TEST_CASE("signature validation accepts the working examples") {
  auto s1 = make_signature({2, 3, 11});
  CHECK(s1->cone_points() == 3);
  CHECK(s1->fibre_product() == 66);

  auto s2 = make_signature({5, 7, 9, 11});
  CHECK(s2->cone_points() == 4);
  CHECK(s2->fibre_product() == 3465);

  auto s3 = make_signature({2, 3, 7});
  CHECK(s3->fibre_product() == 42);
  CHECK(make_signature({3, 4, 5})->fibre_product() == 60);
}

TEST_CASE("signature validation rejections") {
  CHECK_THROWS_AS(make_signature({2, 3}), TooFewConePoints);
  CHECK_THROWS_AS(make_signature({2, 4, 5}), NotCoprime);
  CHECK_THROWS_AS(make_signature({6, 10, 11}), NotCoprime);
  CHECK_THROWS_AS(make_signature({1, 3, 5}), BadMultiplicity);
  CHECK_THROWS_AS(make_signature({2, 3, 5}), ExcludedTriple);
  CHECK_THROWS_AS(make_signature({5, 3, 2}), ExcludedTriple);
  // four or more cone points never hit the excluded-triple rule
  CHECK_NOTHROW(make_signature({2, 3, 5, 7}));
  CHECK_THROWS_AS(make_signature({2, 3, 11}, SeifertTwists{1, {1, 2}}),
                  LengthMismatch);
}

TEST_CASE("twists are carried but never interpreted") {
  auto sig = make_signature({2, 3, 11}, SeifertTwists{1, {1, 1, 5}});
  REQUIRE(sig->twists().has_value());
  CHECK(sig->twists()->c0 == 1);
  CHECK(sig->twists()->c == std::vector<long long>{1, 1, 5});
}

TEST_CASE("signature literal round trip") {
  for (const std::string lit : {"2,3,11", "5,7,9,11", "2,3,11;1:1,1,5"}) {
    auto sig = parse_signature(lit);
    CHECK(signature_literal(*sig) == lit);
  }
  CHECK_THROWS_AS(parse_signature(""), ParseError);
  CHECK_THROWS_AS(parse_signature("2,x,11"), ParseError);
  CHECK_THROWS_AS(parse_signature("2,3,11;1,2"), ParseError);
}

TEST_CASE("orbifold presentation") {
  auto sig = make_signature({2, 3, 11});
  CHECK(orbifold_presentation(*sig) ==
        "⟨u1,u2,u3 | u1^2 = u2^3 = u3^11 = u1·u2·u3 = 1⟩");
}
