#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toledo/rational.hpp"

namespace toledo {

/// Extension-class coefficients sigma_{-1}, sigma_{-2}, ..., sigma_{d2+1}
/// of a nonsplit extension with twist gap d2 <= -2.  coeffs[t] holds
/// sigma_{-1-t}.
struct SigmaVector {
  long long d2 = -2;
  std::vector<Rational> coeffs;
  bool certified = false;  // every square Theta submatrix nonsingular

  const Rational& at(long long index) const;  // sigma_index, index in [d2+1,-1]
  long long length() const { return static_cast<long long>(coeffs.size()); }
};

/// Coboundary matrix of the linear system Theta * (s_0..s_d1)^T = 0.
/// Rows are H^1 basis exponents j = d3+1..-1, columns section
/// coefficients i = 0..d1; entry(j, i) = sigma_{j-i} inside the window
/// d2+1 <= j-i <= -1, else 0 (Toeplitz).
struct ThetaMatrix {
  long long d1 = 0;
  long long d3 = -2;
  std::vector<std::vector<Rational>> entries;  // (-d3-1) x (d1+1)

  long long rows() const { return -d3 - 1; }
  long long cols() const { return d1 + 1; }
};

ThetaMatrix theta_matrix(const SigmaVector& sigma, long long d1, long long d3);

/// Exact rank by rational Gaussian elimination.
long long rank_exact(std::vector<std::vector<Rational>> m);

/// True iff rank(Theta) = d1 + 1.
bool delta_injective(const SigmaVector& sigma, long long d1, long long d3);

/// dim ker(Theta) = (d1+1) - rank; equals h^0 of the twisted extension
/// bundle when d3 <= -2.
long long h0_extension_twist(const SigmaVector& sigma, long long d1,
                             long long d3);

/// Deterministic inductive construction: sigma_{-1} = 1, each later
/// coefficient is the first positive integer keeping every square Theta
/// submatrix nonsingular.  Throws SearchExhausted past 10*d2^2 candidates.
SigmaVector construct_generic_sigma(long long d2);

/// Seeded random sigma for necessity scans (never certified).
SigmaVector random_sigma(long long d2, std::uint64_t seed);

struct ScanCell {
  long long d1;
  long long d3;
  bool predicate;  // d1+1 <= min(-d2-1, -d3-1)
  bool injective;
};

struct ScanReport {
  long long d2;
  std::vector<Rational> sigma;
  std::vector<ScanCell> cells;
  long long mismatches = 0;          // predicate vs injectivity, generic sigma
  long long random_vectors = 0;      // necessity re-checked with these
  long long random_mismatches = 0;   // injectivity where the predicate fails
  std::uint64_t seed = 0;
};

/// Compares exact-rank injectivity against the combinatorial criterion
/// over 0 <= d1 <= d1_max, -d1_max-3 <= d3 <= -2.  random_count extra
/// sigma vectors re-check that injectivity fails wherever the predicate
/// fails, for any sigma.
ScanReport lemma_equivalence_scan(long long d2, long long d1_max,
                                  long long random_count = 0,
                                  std::uint64_t seed = 1);

}  // namespace toledo
