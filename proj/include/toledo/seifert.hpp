#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toledo/rational.hpp"

namespace toledo {

/// Seifert integers (c0; c1,...,cn).  Carried as metadata only; no
/// computation in this library reads them.
struct SeifertTwists {
  long long c0 = 0;
  std::vector<long long> c;

  bool operator==(const SeifertTwists&) const = default;
};

/// Multiplicities m1,...,mn of the multiple fibres (orders of the cone
/// points of the base orbifold).  Immutable after validation; safe to
/// share across threads.
class SeifertSignature {
 public:
  /// Validates and constructs.  Throws BadMultiplicity, NotCoprime,
  /// TooFewConePoints or ExcludedTriple.
  static SeifertSignature validate(std::vector<long long> m,
                                   std::optional<SeifertTwists> twists = {});

  std::size_t cone_points() const { return m_.size(); }
  const std::vector<long long>& multiplicities() const { return m_; }

  /// M = prod m_k = lcm(m_1,...,m_n) (pairwise coprime).
  const Int& fibre_product() const { return product_; }

  const std::optional<SeifertTwists>& twists() const { return twists_; }

  bool operator==(const SeifertSignature& o) const {
    return m_ == o.m_ && twists_ == o.twists_;
  }

 private:
  SeifertSignature() = default;

  std::vector<long long> m_;
  Int product_;
  std::optional<SeifertTwists> twists_;
};

using SignaturePtr = std::shared_ptr<const SeifertSignature>;

/// Human-readable presentation of the orbifold fundamental group,
/// <u1,...,un | u_k^{m_k} = u1...un = 1>.  Documentation aid only.
std::string orbifold_presentation(const SeifertSignature& sig);

/// "2,3,11" or "2,3,11;c0:c1,c2,c3".
SignaturePtr parse_signature(const std::string& literal);
std::string signature_literal(const SeifertSignature& sig);

SignaturePtr make_signature(std::vector<long long> m,
                            std::optional<SeifertTwists> twists = {});

}  // namespace toledo
