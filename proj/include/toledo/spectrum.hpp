#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toledo/families.hpp"

namespace toledo {

enum class GroupVariant { U21, PU21 };

const char* group_name(GroupVariant g);

/// Integer windows for the F-coefficients; residues always range over
/// the full [0, m_k).  Derived from the family inequalities; guarded by
/// completeness_margin_check.
struct FamilyBounds {
  bool has_a = true;
  long long a_lo = 0;
  long long a_hi = 0;
  long long b_lo = 0;
  long long b_hi = 0;

  FamilyBounds widened(long long delta) const;
};

FamilyBounds enumeration_bounds(const SeifertSignature& sig, Family family);

/// Every tuple inside the bounds passing the family check, in
/// lexicographic coefficient order.  Materializes the full list; use
/// for small signatures.
std::vector<FamilyWitness> enumerate_family(const SignaturePtr& sig,
                                            Family family);

struct SpectrumOptions {
  std::size_t witness_cap = 100;
  long long margin_delta = 3;  // 0 skips the margin re-scan
  int jobs = 1;
};

struct ValueEntry {
  Rational tau;
  std::vector<FamilyWitness> witnesses;  // direct witnesses (see direct_sign)
  std::uint64_t witness_count = 0;       // exact, uncapped
  std::optional<StarCertificate> via_star;
  std::string direct_sign;  // "+", "-", or "both"
};

struct BoundsRecord {
  std::string family;
  FamilyBounds bounds;
};

struct SpectrumReport {
  SignaturePtr sig;
  GroupVariant group = GroupVariant::U21;
  std::vector<ValueEntry> values;  // strictly ascending, closed under negation
  std::size_t component_lower_bound = 0;
  std::vector<BoundsRecord> search_bounds_used;
  bool margin_check_passed = true;
  long long margin_delta_used = 0;
};

/// U21: cases (i) ternary+(*), (ii) binary+(*), (iii) reducible ternary,
/// (iv) zero.  PU21: cases (i)/(ii) only.
SpectrumReport toledo_spectrum(const SignaturePtr& sig, GroupVariant group,
                               const SpectrumOptions& opts = {});

/// Re-runs every family scan with windows widened by delta; true iff no
/// new accepted tuple appears.
bool completeness_margin_check(const SeifertSignature& sig, long long delta,
                               int jobs = 1);

/// Accepted-tuple count for one family inside the given bounds (margin
/// checking and tests).
std::uint64_t count_family_tuples(const SeifertSignature& sig, Family family,
                                  const FamilyBounds& bounds, int jobs = 1);

}  // namespace toledo
