#include "toledo/divisor.hpp"

#include <sstream>

#include "toledo/errors.hpp"

namespace toledo {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod_floor(long long a, long long b) { return a - floor_div(a, b) * b; }

void require_same_signature(const VerticalDivisor& x, const VerticalDivisor& y) {
  if (x.signature().multiplicities() != y.signature().multiplicities())
    throw SignatureMismatch("divisors bound to different signatures");
}

}  // namespace

VerticalDivisor VerticalDivisor::normalized(SignaturePtr sig, long long f_coeff,
                                            std::vector<long long> raw) {
  const auto& m = sig->multiplicities();
  if (raw.size() != m.size())
    throw LengthMismatch("expected " + std::to_string(m.size()) +
                         " residues, got " + std::to_string(raw.size()));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    f_coeff += floor_div(raw[k], m[k]);
    raw[k] = mod_floor(raw[k], m[k]);
  }
  return VerticalDivisor(std::move(sig), f_coeff, std::move(raw));
}

VerticalDivisor VerticalDivisor::zero(SignaturePtr sig) {
  std::vector<long long> res(sig->multiplicities().size(), 0);
  return VerticalDivisor(std::move(sig), 0, std::move(res));
}

Rational VerticalDivisor::a_value() const {
  Rational v(f_coeff_);
  const auto& m = signature().multiplicities();
  for (std::size_t k = 0; k < residues_.size(); ++k)
    v += Rational(residues_[k], m[k]);
  return v;
}

VerticalDivisor VerticalDivisor::operator+(const VerticalDivisor& o) const {
  require_same_signature(*this, o);
  std::vector<long long> res = residues_;
  for (std::size_t k = 0; k < res.size(); ++k) res[k] += o.residues_[k];
  return normalized(sig_, f_coeff_ + o.f_coeff_, std::move(res));
}

VerticalDivisor VerticalDivisor::operator-() const {
  std::vector<long long> res = residues_;
  for (auto& r : res) r = -r;
  return normalized(sig_, -f_coeff_, std::move(res));
}

VerticalDivisor VerticalDivisor::scaled(long long k) const {
  std::vector<long long> res = residues_;
  for (auto& r : res) r *= k;
  return normalized(sig_, f_coeff_ * k, std::move(res));
}

CohomologyDims cohomology_dims(const VerticalDivisor& d) {
  long long a = d.f_coeff();
  return {std::max(a + 1, 0LL), std::max(a, -a - 1)};
}

VerticalDivisor canonical_divisor(SignaturePtr sig) {
  std::vector<long long> res;
  for (long long mk : sig->multiplicities()) res.push_back(mk - 1);
  return VerticalDivisor::normalized(std::move(sig), -1, std::move(res));
}

long long twisted_one_form_h0(const VerticalDivisor& b) {
  return std::max(0LL, -2 - b.f_coeff());
}

bool twisted_one_form_exists(const VerticalDivisor& b) {
  return b.f_coeff() <= -2;
}

std::optional<StarCertificate> star_certificate(
    const SeifertSignature& sig, long long t,
    const std::vector<long long>& t_res) {
  const auto& m = sig.multiplicities();
  if (t_res.size() != m.size())
    throw LengthMismatch("coefficient list length != number of cone points");

  // Per coordinate: all y_k in [0, m_k) with 3 y_k = t_k (mod m_k).
  // Unique when gcd(3, m_k) = 1; zero or three candidates when 3 | m_k.
  std::vector<std::vector<long long>> candidates(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    long long target = mod_floor(t_res[k], m[k]);
    for (long long y = 0; y < m[k]; ++y)
      if (mod_floor(3 * y, m[k]) == target) candidates[k].push_back(y);
    if (candidates[k].empty()) return std::nullopt;
  }

  // Walk the finitely many residue choices for one making
  // (t - sum s_k) divisible by 3.  With pairwise coprime m_k at most
  // one coordinate has several candidates.
  std::vector<std::size_t> pick(m.size(), 0);
  while (true) {
    long long s_sum = 0;
    StarCertificate cert;
    cert.y_res.resize(m.size());
    cert.s.resize(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      long long y = candidates[k][pick[k]];
      cert.y_res[k] = y;
      cert.s[k] = (3 * y - t_res[k]) / m[k];
      s_sum += cert.s[k];
    }
    if (mod_floor(t - s_sum, 3) == 0) {
      cert.y = (t - s_sum) / 3;
      return cert;
    }
    std::size_t k = 0;
    for (; k < m.size(); ++k) {
      if (++pick[k] < candidates[k].size()) break;
      pick[k] = 0;
    }
    if (k == m.size()) return std::nullopt;
  }
}

bool verify_star(const SeifertSignature& sig, long long t,
                 const std::vector<long long>& t_res,
                 const StarCertificate& cert) {
  const auto& m = sig.multiplicities();
  if (cert.y_res.size() != m.size() || cert.s.size() != m.size() ||
      t_res.size() != m.size())
    return false;
  long long s_sum = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (cert.y_res[k] < 0 || cert.y_res[k] >= m[k]) return false;
    if (3 * cert.y_res[k] - m[k] * cert.s[k] != t_res[k]) return false;
    s_sum += cert.s[k];
  }
  return 3 * cert.y + s_sum == t;
}

std::optional<FloorCertificate> star_certificate_floorform(
    const SeifertSignature& sig, long long t,
    const std::vector<long long>& t_res) {
  const auto& m = sig.multiplicities();
  if (t_res.size() != m.size())
    throw LengthMismatch("coefficient list length != number of cone points");
  long long n = static_cast<long long>(m.size());

  // The floor equations hold on the normalized representative of the
  // class; raw pair sums may carry.
  long long cap_t = t;
  std::vector<long long> cap_res = t_res;
  for (std::size_t k = 0; k < m.size(); ++k) {
    cap_t += floor_div(cap_res[k], m[k]);
    cap_res[k] = mod_floor(cap_res[k], m[k]);
  }

  // Each floor(3 y_k/m_k) lies in [0, 2], so 3y = T - sum(...) pins y to
  // a short window; one unit of slack on both ends for the margin test.
  long long y_lo = floor_div(cap_t - 2 * n, 3) - 1;
  long long y_hi = floor_div(cap_t, 3) + 1;

  for (long long y = y_lo; y <= y_hi; ++y) {
    std::vector<long long> pick(m.size(), 0);
    while (true) {
      long long floor_sum = 0;
      bool ok = true;
      for (std::size_t k = 0; k < m.size() && ok; ++k) {
        long long yk = pick[k];
        long long fl = floor_div(3 * yk, m[k]);
        if (3 * yk - fl * m[k] != cap_res[k]) ok = false;
        floor_sum += fl;
      }
      if (ok && 3 * y + floor_sum == cap_t) {
        FloorCertificate cert;
        cert.y = y;
        cert.y_res = pick;
        return cert;
      }
      std::size_t k = 0;
      for (; k < m.size(); ++k) {
        if (++pick[k] < m[k]) break;
        pick[k] = 0;
      }
      if (k == m.size()) break;
    }
  }
  return std::nullopt;
}

VerticalDivisor parse_divisor(SignaturePtr sig, const std::string& literal) {
  auto colon = literal.find(':');
  if (colon == std::string::npos)
    throw ParseError("divisor literal must look like 'a:a1,...,an'");
  long long f = 0;
  try {
    f = std::stoll(literal.substr(0, colon));
  } catch (const std::logic_error&) {
    throw ParseError("bad F-coefficient '" + literal.substr(0, colon) + "'");
  }
  std::vector<long long> res;
  std::stringstream in(literal.substr(colon + 1));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      res.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
      throw ParseError("bad residue '" + item + "'");
    }
  }
  return VerticalDivisor::normalized(std::move(sig), f, std::move(res));
}

std::string divisor_literal(const VerticalDivisor& d) {
  std::ostringstream out;
  out << d.f_coeff() << ":";
  for (std::size_t k = 0; k < d.residues().size(); ++k) {
    if (k) out << ",";
    out << d.residues()[k];
  }
  return out.str();
}

}  // namespace toledo
