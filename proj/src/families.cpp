#include "toledo/families.hpp"

#include "toledo/errors.hpp"

namespace toledo {

namespace {

void require_same_signature(const VerticalDivisor& x, const VerticalDivisor& y) {
  if (x.signature().multiplicities() != y.signature().multiplicities())
    throw SignatureMismatch("divisors bound to different signatures");
}

long long count_less(const std::vector<long long>& x,
                     const std::vector<long long>& y) {
  long long c = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] < y[k]) ++c;
  return c;
}

long long count_nonzero(const std::vector<long long>& x) {
  long long c = 0;
  for (long long v : x)
    if (v != 0) ++c;
  return c;
}

long long ceil_rational(const Rational& r) {
  Int p = numerator(r);
  Int q = denominator(r);  // q > 0
  Int c;
  if (p >= 0)
    c = (p + q - 1) / q;
  else
    c = p / q;  // truncation is ceil for p < 0
  return c.convert_to<long long>();
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::StableTernary: return "stable-ternary";
    case Family::StableBinary: return "stable-binary";
    case Family::ReducibleTernary: return "reducible-ternary";
    case Family::Trivial: return "trivial";
  }
  return "?";
}

DerivedQuantities derived_quantities(const VerticalDivisor& a,
                                     const VerticalDivisor& b) {
  require_same_signature(a, b);
  DerivedQuantities q;
  q.A = a.a_value();
  q.B = b.a_value();
  q.d2 = a.f_coeff() - b.f_coeff() - count_less(a.residues(), b.residues());
  return q;
}

DerivedQuantities derived_quantities(const VerticalDivisor& a,
                                     const VerticalDivisor& b,
                                     const VerticalDivisor& c) {
  require_same_signature(a, c);
  DerivedQuantities q = derived_quantities(a, b);
  q.C = c.a_value();
  q.d1 = b.f_coeff() - c.f_coeff() - count_less(b.residues(), c.residues());
  q.d3 = a.f_coeff() - c.f_coeff() - count_less(a.residues(), c.residues());
  return q;
}

Verdict check_stable_ternary(const VerticalDivisor& a,
                             const VerticalDivisor& b) {
  require_same_signature(a, b);
  Verdict v;
  const Rational A = a.a_value();
  const Rational B = b.a_value();
  if (!(b.f_coeff() <= -2)) v.failed_conditions.push_back("tern.i: b<=-2");
  if (!(a.f_coeff() + count_nonzero(a.residues()) >= 2))
    v.failed_conditions.push_back("tern.ii: a+#{a_k!=0}>=2");
  if (!(2 * A < B)) v.failed_conditions.push_back("tern.iii: 2A<B");
  if (!(A < 2 * B)) v.failed_conditions.push_back("tern.iv: A<2B");
  v.ok = v.failed_conditions.empty();
  return v;
}

std::vector<VerticalDivisor> admissible_c_tuples(const VerticalDivisor& a,
                                                 const VerticalDivisor& b) {
  require_same_signature(a, b);
  const auto& sig = a.signature_ptr();
  const auto& m = sig->multiplicities();
  const long long n = static_cast<long long>(m.size());
  const Rational threshold = Rational(2, 3) * (a.a_value() + b.a_value());

  // d1 >= 0 forces c <= b; C >= (2/3)(A+B) forces c > threshold - n.
  long long c_lo = ceil_rational(threshold) - n;
  long long c_hi = b.f_coeff();

  std::vector<VerticalDivisor> out;
  for (long long c = c_lo; c <= c_hi; ++c) {
    std::vector<long long> res(m.size(), 0);
    while (true) {
      VerticalDivisor cd = VerticalDivisor::normalized(sig, c, res);
      auto q = derived_quantities(a, b, cd);
      if (*q.d1 >= 0 && *q.C >= threshold) out.push_back(cd);
      std::size_t k = 0;
      for (; k < m.size(); ++k) {
        if (++res[k] < m[k]) break;
        res[k] = 0;
      }
      if (k == m.size()) break;
    }
  }
  return out;
}

Verdict check_stable_binary(const VerticalDivisor& a,
                            const VerticalDivisor& b) {
  require_same_signature(a, b);
  Verdict v;
  const Rational A = a.a_value();
  const Rational B = b.a_value();
  const auto q = derived_quantities(a, b);
  if (!(-B < A && A < B / 2))
    v.failed_conditions.push_back("bin.i: -B<A<B/2");
  if (!(q.d2 <= -2)) v.failed_conditions.push_back("bin.ii: d2<=-2");
  if (!(b.f_coeff() <= -2)) v.failed_conditions.push_back("bin.iii: b<=-2");
  bool iv_ok = true;
  for (const auto& c : admissible_c_tuples(a, b)) {
    auto qc = derived_quantities(a, b, c);
    if (!(*qc.d1 + 1 <= std::min(-qc.d2 - 1, -*qc.d3 - 1))) {
      iv_ok = false;
      break;
    }
  }
  if (!iv_ok)
    v.failed_conditions.push_back("bin.iv: d1+1<=min(-d2-1,-d3-1)");
  v.ok = v.failed_conditions.empty();
  return v;
}

Verdict check_reducible_ternary(const VerticalDivisor& b) {
  Verdict v;
  if (!(b.a_value() > 0)) v.failed_conditions.push_back("redtern.i: B>0");
  const auto& m = b.signature().multiplicities();
  long long half_count = 0;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (2 * b.residues()[k] >= m[k]) ++half_count;
  if (!(2 * b.f_coeff() + half_count <= -2))
    v.failed_conditions.push_back("redtern.ii: 2b+#{b_k>=m_k/2}<=-2");
  v.ok = v.failed_conditions.empty();
  return v;
}

Rational toledo_of_witness(const FamilyWitness& w) {
  switch (w.family) {
    case Family::StableTernary:
    case Family::StableBinary:
      return w.a_div->a_value() + w.b_div->a_value();
    case Family::ReducibleTernary:
      return w.b_div->a_value();
    case Family::Trivial:
      return Rational(0);
  }
  return Rational(0);
}

}  // namespace toledo
