#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toledo/divisor.hpp"

namespace toledo {

/// The four Higgs-bundle families realizing Toledo values.
enum class Family { StableTernary, StableBinary, ReducibleTernary, Trivial };

const char* family_name(Family f);

/// A = a + sum a_k/m_k etc.; d2 = a - b - #{a_k < b_k}; d1, d3 only
/// defined when a third divisor c is bound.
struct DerivedQuantities {
  Rational A;
  Rational B;
  std::optional<Rational> C;
  std::optional<long long> d1;
  long long d2 = 0;
  std::optional<long long> d3;
};

DerivedQuantities derived_quantities(const VerticalDivisor& a,
                                     const VerticalDivisor& b);
DerivedQuantities derived_quantities(const VerticalDivisor& a,
                                     const VerticalDivisor& b,
                                     const VerticalDivisor& c);

/// All violated conditions are reported, never just the first.
struct Verdict {
  bool ok = false;
  std::vector<std::string> failed_conditions;
};

/// Conditions "tern.i".."tern.iv": b <= -2; a + #{a_k != 0} >= 2;
/// 2A < B; A < 2B.
Verdict check_stable_ternary(const VerticalDivisor& a,
                             const VerticalDivisor& b);

/// Every normalized c-tuple with d1 >= 0 and C >= (2/3)(A+B).
std::vector<VerticalDivisor> admissible_c_tuples(const VerticalDivisor& a,
                                                 const VerticalDivisor& b);

/// Conditions "bin.i".."bin.iv": -B < A < B/2; d2 <= -2; b <= -2;
/// d1+1 <= min(-d2-1, -d3-1) for every admissible c-tuple.
Verdict check_stable_binary(const VerticalDivisor& a,
                            const VerticalDivisor& b);

/// Conditions "redtern.i", "redtern.ii": B > 0; 2b + #{2 b_k >= m_k} <= -2.
Verdict check_reducible_ternary(const VerticalDivisor& b);

/// Parameter tuples that passed their family's check.
struct FamilyWitness {
  Family family = Family::Trivial;
  std::optional<VerticalDivisor> a_div;
  std::optional<VerticalDivisor> b_div;
};

/// A+B for the stable families, B for reducible ternary, 0 for trivial.
/// The +- closure happens at spectrum level, not here.
Rational toledo_of_witness(const FamilyWitness& w);

}  // namespace toledo
