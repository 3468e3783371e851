#include "toledo/cech.hpp"

#include <random>

#include "toledo/errors.hpp"

namespace toledo {

const Rational& SigmaVector::at(long long index) const {
  static const Rational zero(0);
  if (index > -1 || index < d2 + 1) return zero;
  return coeffs[static_cast<std::size_t>(-1 - index)];
}

ThetaMatrix theta_matrix(const SigmaVector& sigma, long long d1, long long d3) {
  if (d1 < 0 || d3 > -2)
    throw BadShape("need d1 >= 0 and d3 <= -2");
  ThetaMatrix t;
  t.d1 = d1;
  t.d3 = d3;
  t.entries.assign(static_cast<std::size_t>(-d3 - 1),
                   std::vector<Rational>(static_cast<std::size_t>(d1 + 1)));
  for (long long j = d3 + 1; j <= -1; ++j)
    for (long long i = 0; i <= d1; ++i)
      t.entries[static_cast<std::size_t>(j - d3 - 1)]
               [static_cast<std::size_t>(i)] = sigma.at(j - i);
  return t;
}

long long rank_exact(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  long long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool delta_injective(const SigmaVector& sigma, long long d1, long long d3) {
  ThetaMatrix t = theta_matrix(sigma, d1, d3);
  return rank_exact(std::move(t.entries)) == d1 + 1;
}

long long h0_extension_twist(const SigmaVector& sigma, long long d1,
                             long long d3) {
  ThetaMatrix t = theta_matrix(sigma, d1, d3);
  return (d1 + 1) - rank_exact(std::move(t.entries));
}

namespace {

// Every square window matrix is the bottom block of any taller one, so
// nonsingularity of the squares gives full column rank throughout.
bool squares_nonsingular(const SigmaVector& sigma) {
  const long long len = sigma.length();
  for (long long l1 = 0; l1 < len; ++l1) {
    long long l3 = -(l1 + 2);
    ThetaMatrix t = theta_matrix(sigma, l1, l3);
    if (rank_exact(std::move(t.entries)) != l1 + 1) return false;
  }
  return true;
}

}  // namespace

SigmaVector construct_generic_sigma(long long d2) {
  if (d2 > -2) throw BadShape("need d2 <= -2");
  SigmaVector sigma;
  sigma.coeffs.push_back(Rational(1));  // sigma_{-1}
  sigma.d2 = -2;
  const long long len = -d2 - 1;
  const long long budget = 10 * d2 * d2;
  while (sigma.length() < len) {
    sigma.coeffs.push_back(Rational(0));
    sigma.d2 -= 1;
    bool found = false;
    for (long long candidate = 1; candidate <= budget; ++candidate) {
      sigma.coeffs.back() = Rational(candidate);
      if (squares_nonsingular(sigma)) {
        found = true;
        break;
      }
    }
    if (!found)
      throw SearchExhausted("no candidate within 10*d2^2 kept all square "
                            "submatrices nonsingular");
  }
  sigma.certified = squares_nonsingular(sigma);
  return sigma;
}

SigmaVector random_sigma(long long d2, std::uint64_t seed) {
  if (d2 > -2) throw BadShape("need d2 <= -2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> num(-5, 5);
  std::uniform_int_distribution<long long> den(1, 4);
  SigmaVector sigma;
  sigma.d2 = d2;
  for (long long t = 0; t < -d2 - 1; ++t)
    sigma.coeffs.push_back(Rational(num(rng), den(rng)));
  return sigma;
}

ScanReport lemma_equivalence_scan(long long d2, long long d1_max,
                                  long long random_count, std::uint64_t seed) {
  SigmaVector sigma = construct_generic_sigma(d2);
  ScanReport report;
  report.d2 = d2;
  report.sigma = sigma.coeffs;
  report.seed = seed;
  report.random_vectors = random_count;

  std::vector<SigmaVector> randoms;
  for (long long r = 0; r < random_count; ++r)
    randoms.push_back(random_sigma(d2, seed + static_cast<std::uint64_t>(r)));

  for (long long d1 = 0; d1 <= d1_max; ++d1) {
    for (long long d3 = -d1_max - 3; d3 <= -2; ++d3) {
      bool predicate = d1 + 1 <= std::min(-d2 - 1, -d3 - 1);
      bool injective = delta_injective(sigma, d1, d3);
      report.cells.push_back({d1, d3, predicate, injective});
      if (predicate != injective) ++report.mismatches;
      if (!predicate) {
        // Necessity holds for every extension class, not just the
        // certified one.
        for (const auto& rs : randoms)
          if (delta_injective(rs, d1, d3)) ++report.random_mismatches;
      }
    }
  }
  return report;
}

}  // namespace toledo
