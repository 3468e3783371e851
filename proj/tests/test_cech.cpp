#include "doctest.h"

#include "toledo/cech.hpp"
#include "toledo/errors.hpp"

using namespace toledo;

namespace {

SigmaVector sigma_of(long long d2, std::vector<Rational> coeffs) {
  SigmaVector s;
  s.d2 = d2;
  s.coeffs = std::move(coeffs);
  return s;
}

}  // namespace

TEST_CASE("theta matrix construction") {
  // d2 = -3, rows j = -2, -1, single column: (sigma_-2; sigma_-1)
  auto s = sigma_of(-3, {Rational(5), Rational(7)});  // sigma_-1=5, sigma_-2=7
  auto t = theta_matrix(s, 0, -3);
  CHECK(t.rows() == 2);
  CHECK(t.cols() == 1);
  CHECK(t.entries[0][0] == 7);
  CHECK(t.entries[1][0] == 5);

  // single window coefficient
  auto t1 = theta_matrix(s, 0, -2);
  CHECK(t1.rows() == 1);
  CHECK(t1.cols() == 1);
  CHECK(t1.entries[0][0] == 5);

  // d2 = -2: only sigma_{-1} is inside the window, so rows j=-2,-1 and
  // columns i=0,1 give exactly one nonzero entry at (j,i)=(-1,0).
  auto s2 = sigma_of(-2, {Rational(3)});
  auto t2 = theta_matrix(s2, 1, -3);
  CHECK(t2.entries[0][0] == 0);
  CHECK(t2.entries[0][1] == 0);
  CHECK(t2.entries[1][0] == 3);
  CHECK(t2.entries[1][1] == 0);

  CHECK_THROWS_AS(theta_matrix(s, -1, -3), BadShape);
  CHECK_THROWS_AS(theta_matrix(s, 0, -1), BadShape);
}

TEST_CASE("theta matrix is Toeplitz") {
  auto s = construct_generic_sigma(-5);
  auto t = theta_matrix(s, 3, -6);
  for (std::size_t j = 0; j + 1 < t.entries.size(); ++j)
    for (std::size_t i = 0; i + 1 < t.entries[j].size(); ++i)
      CHECK(t.entries[j][i] == t.entries[j + 1][i + 1]);
}

TEST_CASE("last column vanishes exactly when d1 + d2 + 1 >= 0") {
  for (long long d2 = -5; d2 <= -2; ++d2) {
    auto s = construct_generic_sigma(d2);
    for (long long d1 = 0; d1 <= 6; ++d1)
      for (long long d3 = -8; d3 <= -2; ++d3) {
        auto t = theta_matrix(s, d1, d3);
        bool zero_col = true;
        for (const auto& row : t.entries)
          if (row.back() != 0) zero_col = false;
        CHECK(zero_col == (d1 + d2 + 1 >= 0));
      }
  }
}

TEST_CASE("rank and injectivity") {
  auto s1 = sigma_of(-2, {Rational(1)});
  CHECK(delta_injective(s1, 0, -3));

  // fewer rows than columns can never be injective
  auto g = construct_generic_sigma(-6);
  CHECK(!delta_injective(g, 3, -3));
  CHECK(!delta_injective(g, 5, -4));

  auto g4 = construct_generic_sigma(-4);
  CHECK(delta_injective(g4, 1, -4));

  CHECK(rank_exact({}) == 0);
  CHECK(rank_exact({{Rational(0), Rational(0)}}) == 0);
  CHECK(rank_exact({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) ==
        1);
}

TEST_CASE("kernel dimensions") {
  auto g4 = construct_generic_sigma(-4);
  CHECK(h0_extension_twist(g4, 1, -4) == 0);

  auto zero = sigma_of(-4, {Rational(0), Rational(0), Rational(0)});
  CHECK(h0_extension_twist(zero, 2, -4) == 3);

  auto g6 = construct_generic_sigma(-6);
  CHECK(h0_extension_twist(g6, 3, -3) >= 2);  // cols - rows = 2

  // h0 = (d1+1) - rank always
  for (long long d1 = 0; d1 <= 4; ++d1)
    for (long long d3 = -6; d3 <= -2; ++d3) {
      auto t = theta_matrix(g4, d1, d3);
      CHECK(h0_extension_twist(g4, d1, d3) ==
            d1 + 1 - rank_exact(t.entries));
    }
}

TEST_CASE("generic construction") {
  auto s2 = construct_generic_sigma(-2);
  CHECK(s2.coeffs == std::vector<Rational>{Rational(1)});
  CHECK(s2.certified);

  auto s3 = construct_generic_sigma(-3);
  CHECK(s3.length() == 2);
  CHECK(s3.certified);

  auto s6 = construct_generic_sigma(-6);
  CHECK(s6.length() == 5);
  CHECK(s6.certified);
  CHECK(s6.coeffs[0] == 1);

  CHECK_THROWS_AS(construct_generic_sigma(-1), BadShape);
}

TEST_CASE("scaling a sigma vector preserves injectivity verdicts") {
  auto g = construct_generic_sigma(-5);
  auto scaled = g;
  for (auto& c : scaled.coeffs) c *= Rational(-3, 7);
  for (long long d1 = 0; d1 <= 5; ++d1)
    for (long long d3 = -7; d3 <= -2; ++d3)
      CHECK(delta_injective(g, d1, d3) == delta_injective(scaled, d1, d3));
}

TEST_CASE("equivalence scans") {
  auto r4 = lemma_equivalence_scan(-4, 6);
  CHECK(r4.mismatches == 0);
  CHECK(r4.cells.size() == 7 * 8);  // d1 in [0,6] x d3 in [-9,-2]

  auto r2 = lemma_equivalence_scan(-2, 4);
  CHECK(r2.mismatches == 0);
  for (const auto& cell : r2.cells)
    CHECK(cell.predicate == (cell.d1 == 0 && cell.d3 <= -2));

  auto r3 = lemma_equivalence_scan(-3, 5, 20, 7);
  CHECK(r3.mismatches == 0);
  CHECK(r3.random_vectors == 20);
  CHECK(r3.random_mismatches == 0);
}

TEST_CASE("random sigma is deterministic per seed") {
  auto a = random_sigma(-5, 42);
  auto b = random_sigma(-5, 42);
  auto c = random_sigma(-5, 43);
  CHECK(a.coeffs == b.coeffs);
  CHECK(a.coeffs != c.coeffs);
  CHECK(!a.certified);
}
