#include "doctest.h"

#include <algorithm>

#include "toledo/errors.hpp"
#include "toledo/families.hpp"

using namespace toledo;

namespace {

const SignaturePtr k2311 = make_signature({2, 3, 11});

std::vector<VerticalDivisor> naive_admissible(const VerticalDivisor& a,
                                              const VerticalDivisor& b) {
  const auto& sig = a.signature_ptr();
  const auto& m = sig->multiplicities();
  const long long n = static_cast<long long>(m.size());
  const Rational threshold =
      Rational(2, 3) * (a.a_value() + b.a_value());
  std::vector<VerticalDivisor> out;
  for (long long c = -3 * n; c <= 3 * n; ++c) {
    std::vector<long long> res(m.size(), 0);
    while (true) {
      auto cd = VerticalDivisor::normalized(sig, c, res);
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

bool same_divisor_set(std::vector<VerticalDivisor> x,
                      std::vector<VerticalDivisor> y) {
  auto key = [](const VerticalDivisor& d) {
    auto k = d.residues();
    k.insert(k.begin(), d.f_coeff());
    return k;
  };
  auto by_key = [&](const VerticalDivisor& p, const VerticalDivisor& q) {
    return key(p) < key(q);
  };
  std::sort(x.begin(), x.end(), by_key);
  std::sort(y.begin(), y.end(), by_key);
  return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
}

}  // namespace

TEST_CASE("derived quantities") {
  auto a = parse_divisor(k2311, "-1:0,1,7");
  auto b = parse_divisor(k2311, "-2:1,2,10");
  auto q = derived_quantities(a, b);
  CHECK(q.A == Rational(-1, 33));
  CHECK(q.B == Rational(5, 66));
  CHECK(q.d2 == -2);

  auto q3 = derived_quantities(a, b, b);
  CHECK(*q3.C == Rational(5, 66));
  CHECK(*q3.d1 == 0);
  CHECK(*q3.d3 == -2);

  auto qq = derived_quantities(a, a);
  CHECK(qq.d2 == 0);
  CHECK(qq.A == qq.B);

  auto v1a = parse_divisor(k2311, "-1:1,1,1");
  auto qv = derived_quantities(v1a, b);
  CHECK(qv.A == Rational(-5, 66));
  CHECK(qv.B == Rational(5, 66));

  CHECK_THROWS_AS(
      derived_quantities(a, parse_divisor(make_signature({2, 3, 7}), "0:0,0,0")),
      SignatureMismatch);
}

TEST_CASE("stable ternary verdicts") {
  auto b = parse_divisor(k2311, "-2:1,2,10");
  CHECK(check_stable_ternary(parse_divisor(k2311, "-1:1,1,1"), b).ok);
  CHECK(check_stable_ternary(parse_divisor(k2311, "-1:1,1,2"), b).ok);

  auto v = check_stable_ternary(parse_divisor(k2311, "0:0,0,0"), b);
  CHECK(!v.ok);
  CHECK(v.failed_conditions ==
        std::vector<std::string>{"tern.ii: a+#{a_k!=0}>=2"});

  // multiple violations are all reported, not just the first
  auto w = check_stable_ternary(parse_divisor(k2311, "1:0,0,1"),
                                parse_divisor(k2311, "0:1,2,10"));
  CHECK(!w.ok);
  CHECK(w.failed_conditions ==
        std::vector<std::string>{"tern.i: b<=-2", "tern.iii: 2A<B"});
}

TEST_CASE("admissible c tuples match a naive scan") {
  auto a = parse_divisor(k2311, "-1:0,1,7");
  auto b = parse_divisor(k2311, "-2:1,2,10");
  auto fast = admissible_c_tuples(a, b);
  CHECK(same_divisor_set(fast, naive_admissible(a, b)));
  // this pair admits exactly c = b
  REQUIRE(fast.size() == 1);
  CHECK(fast[0] == b);

  auto zero = VerticalDivisor::zero(k2311);
  auto z = admissible_c_tuples(zero, zero);
  CHECK(same_divisor_set(z, naive_admissible(zero, zero)));
  REQUIRE(z.size() == 1);
  CHECK(z[0] == zero);

  auto a2 = parse_divisor(k2311, "-1:1,1,1");
  CHECK(same_divisor_set(admissible_c_tuples(a2, b), naive_admissible(a2, b)));
}

TEST_CASE("stable binary verdicts") {
  auto a = parse_divisor(k2311, "-1:0,1,7");
  auto b = parse_divisor(k2311, "-2:1,2,10");
  CHECK(check_stable_binary(a, b).ok);

  auto same = check_stable_binary(a, a);
  CHECK(!same.ok);  // -B < A < B/2 is impossible with A = B

  auto shallow = check_stable_binary(parse_divisor(k2311, "0:0,0,0"),
                                     parse_divisor(k2311, "-1:1,2,10"));
  CHECK(!shallow.ok);
  CHECK(std::find(shallow.failed_conditions.begin(),
                  shallow.failed_conditions.end(),
                  "bin.iii: b<=-2") != shallow.failed_conditions.end());
}

TEST_CASE("binary acceptance implies B positive") {
  std::size_t accepted = 0;
  for (long long af = -3; af <= 2; ++af)
    for (long long r1 = 0; r1 < 2; ++r1)
      for (long long r2 = 0; r2 < 3; ++r2)
        for (long long r3 = 0; r3 < 11; ++r3) {
          auto a = VerticalDivisor::normalized(k2311, af, {0, 1, 7});
          auto b = VerticalDivisor::normalized(k2311, -2, {r1, r2, r3});
          if (check_stable_binary(a, b).ok) {
            CHECK(b.a_value() > 0);
            ++accepted;
          }
        }
  CHECK(accepted > 0);
}

TEST_CASE("reducible ternary verdicts") {
  auto sig = make_signature({5, 7, 9, 11});
  auto good = parse_divisor(sig, "-2:4,6,4,5");
  auto v = check_reducible_ternary(good);
  CHECK(v.ok);
  CHECK(good.a_value() == Rational(1927, 3465));

  auto bad = check_reducible_ternary(parse_divisor(k2311, "-2:1,2,10"));
  CHECK(!bad.ok);
  CHECK(bad.failed_conditions ==
        std::vector<std::string>{"redtern.ii: 2b+#{b_k>=m_k/2}<=-2"});

  // the zero divisor violates both conditions and both are reported
  auto zero = check_reducible_ternary(VerticalDivisor::zero(k2311));
  CHECK(!zero.ok);
  CHECK(zero.failed_conditions ==
        std::vector<std::string>{"redtern.i: B>0",
                                 "redtern.ii: 2b+#{b_k>=m_k/2}<=-2"});
}

TEST_CASE("toledo values of the worked example bundles") {
  auto b = parse_divisor(k2311, "-2:1,2,10");
  FamilyWitness v1{Family::StableTernary, parse_divisor(k2311, "-1:1,1,1"), b};
  FamilyWitness v3{Family::StableBinary, parse_divisor(k2311, "-1:0,1,7"), b};
  FamilyWitness v4{Family::StableTernary, parse_divisor(k2311, "-1:1,1,2"), b};
  CHECK(toledo_of_witness(v1) == 0);
  CHECK(toledo_of_witness(v3) == Rational(1, 22));
  CHECK(toledo_of_witness(v4) == Rational(1, 11));
  CHECK(toledo_of_witness(FamilyWitness{}) == 0);

  // sanity window: M*(A+B) integral and |A+B| < 2n for accepted pairs
  for (const auto& w : {v1, v3, v4}) {
    Rational tau = toledo_of_witness(w);
    CHECK(Int(66) % denominator(tau) == 0);
    CHECK(abs(tau) < 6);
  }
}
