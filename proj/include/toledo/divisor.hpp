#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toledo/seifert.hpp"

namespace toledo {

/// A vertical divisor class a*F + sum a_k*F_k in normalized form:
/// 0 <= a_k < m_k.  The carry rule m_k*F_k ~ F makes the normalized
/// representative unique.
class VerticalDivisor {
 public:
  /// Reduce each raw residue mod m_k, adding the carries to the
  /// F-coefficient.  Throws LengthMismatch.
  static VerticalDivisor normalized(SignaturePtr sig, long long f_coeff,
                                    std::vector<long long> raw_residues);

  static VerticalDivisor zero(SignaturePtr sig);

  long long f_coeff() const { return f_coeff_; }
  const std::vector<long long>& residues() const { return residues_; }
  const SeifertSignature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }

  /// a + sum a_k/m_k.  Injective on normalized divisors over one
  /// signature; denominator divides M.
  Rational a_value() const;

  VerticalDivisor operator+(const VerticalDivisor& o) const;
  VerticalDivisor operator-() const;
  VerticalDivisor scaled(long long k) const;

  bool operator==(const VerticalDivisor& o) const {
    return f_coeff_ == o.f_coeff_ && residues_ == o.residues_ &&
           signature().multiplicities() == o.signature().multiplicities();
  }

 private:
  VerticalDivisor(SignaturePtr sig, long long f, std::vector<long long> res)
      : sig_(std::move(sig)), f_coeff_(f), residues_(std::move(res)) {}

  SignaturePtr sig_;
  long long f_coeff_;
  std::vector<long long> residues_;
};

struct CohomologyDims {
  long long h0;
  long long h1;
};

/// h0 = max(a+1, 0), h1 = max(a, -a-1) for the normalized divisor.
CohomologyDims cohomology_dims(const VerticalDivisor& d);

/// K_X = -F + sum (m_k - 1) F_k.
VerticalDivisor canonical_divisor(SignaturePtr sig);

/// dim H0(O(-B) (x) Omega^1) = max(0, -2-b).
long long twisted_one_form_h0(const VerticalDivisor& b);

/// Existence predicate for a nonzero twisted one-form: b <= -2.  Kept
/// separate from the dimension formula; family checks use this one.
bool twisted_one_form_exists(const VerticalDivisor& b);

/// Witness that (t)F + sum t_k F_k is divisible by 3 in the vertical
/// class group: 3y + sum s_k = t and 3 y_k - m_k s_k = t_k, 0 <= y_k < m_k.
struct StarCertificate {
  long long y = 0;
  std::vector<long long> y_res;
  std::vector<long long> s;
};

/// Inputs are raw pair-sum coefficients and need not be normalized.
std::optional<StarCertificate> star_certificate(
    const SeifertSignature& sig, long long t,
    const std::vector<long long>& t_res);

bool verify_star(const SeifertSignature& sig, long long t,
                 const std::vector<long long>& t_res,
                 const StarCertificate& cert);

/// Witness in the floor form: 3y + sum floor(3 y_k/m_k) = T and
/// 3 y_k mod m_k = T_k for the *normalized* class (T; T_1..T_n) of the
/// input.  Found by brute force; independent of star_certificate.
struct FloorCertificate {
  long long y = 0;
  std::vector<long long> y_res;
};

std::optional<FloorCertificate> star_certificate_floorform(
    const SeifertSignature& sig, long long t,
    const std::vector<long long>& t_res);

/// "a:a1,a2,...,an", accepted unnormalized.
VerticalDivisor parse_divisor(SignaturePtr sig, const std::string& literal);
std::string divisor_literal(const VerticalDivisor& d);

}  // namespace toledo
