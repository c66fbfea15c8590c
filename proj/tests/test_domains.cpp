#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "rrgb/domains.hpp"
#include "support.hpp"

using namespace rrgb;
using rrgb::testing::el;
using rrgb::testing::Generator;
using rrgb::testing::qxy;

namespace {

std::vector<RingDescriptor> law_rings() {
  return {RingDescriptor::integers(),
          RingDescriptor::rationals(),
          RingDescriptor::quotient(6),
          RingDescriptor::quotient(7),
          RingDescriptor::quotient(12),
          qxy(),
          qxy(MonomialOrder::DegRevLex),
          RingDescriptor::polynomial(RingDescriptor::integers(), {"x", "y"}, MonomialOrder::DegLex),
          RingDescriptor::polynomial(RingDescriptor::quotient(6), {"x", "y", "z"})};
}

// Reference comparators written straight from the order definitions.
int sign_of(long long v) { return (v > 0) - (v < 0); }

int brute_lex(const Exponents& a, const Exponents& b) {
  if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) return -1;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return 1;
  return 0;
}

long long degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0LL); }

int brute_deglex(const Exponents& a, const Exponents& b) {
  if (degree(a) != degree(b)) return sign_of(degree(a) - degree(b));
  return brute_lex(a, b);
}

int brute_degrevlex(const Exponents& a, const Exponents& b) {
  if (degree(a) != degree(b)) return sign_of(degree(a) - degree(b));
  // Reversed, negated exponent vectors compared lexicographically.
  std::vector<long long> ra, rb;
  for (auto it = a.rbegin(); it != a.rend(); ++it) ra.push_back(-static_cast<long long>(*it));
  for (auto it = b.rbegin(); it != b.rend(); ++it) rb.push_back(-static_cast<long long>(*it));
  if (ra < rb) return -1;
  if (rb < ra) return 1;
  return 0;
}

std::vector<Exponents> all_monomials(std::size_t vars, std::uint32_t max_exp) {
  std::vector<Exponents> out{Exponents{}};
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Exponents> next;
    for (const auto& e : out) {
      for (std::uint32_t d = 0; d <= max_exp; ++d) {
        auto f = e;
        f.push_back(d);
        next.push_back(std::move(f));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(RingLaws, RandomTriples) {
  Generator gen(101);
  for (const auto& ring : law_rings()) {
    SCOPED_TRACE(render_ring(ring));
    for (int t = 0; t < 1000; ++t) {
      const Element a = gen.element(ring);
      const Element b = gen.element(ring);
      const Element c = gen.element(ring);
      ASSERT_TRUE(is_canonical(add(a, b, ring), ring));
      ASSERT_TRUE(is_canonical(mul(a, b, ring), ring));
      ASSERT_EQ(add(a, b, ring), add(b, a, ring));
      ASSERT_EQ(mul(a, b, ring), mul(b, a, ring));
      ASSERT_EQ(add(add(a, b, ring), c, ring), add(a, add(b, c, ring), ring));
      ASSERT_EQ(mul(mul(a, b, ring), c, ring), mul(a, mul(b, c, ring), ring));
      ASSERT_EQ(mul(a, add(b, c, ring), ring), add(mul(a, b, ring), mul(a, c, ring), ring));
      ASSERT_EQ(add(a, zero(ring), ring), a);
      ASSERT_EQ(mul(a, one(ring), ring), a);
      ASSERT_TRUE(is_zero(add(a, neg(a, ring), ring)));
      ASSERT_EQ(sub(a, b, ring), add(a, neg(b, ring), ring));
    }
  }
}

TEST(IntegerQuotient, MatchesIntegerArithmeticModN) {
  for (long n = 2; n <= 16; ++n) {
    const auto ring = RingDescriptor::quotient(n);
    for (long x = 0; x < n; ++x) {
      for (long y = 0; y < n; ++y) {
        const Element a = Residue{mpz_class(x)};
        const Element b = Residue{mpz_class(y)};
        EXPECT_EQ(add(a, b, ring), Element(Residue{mpz_class((x + y) % n)}));
        EXPECT_EQ(mul(a, b, ring), Element(Residue{mpz_class((x * y) % n)}));
        EXPECT_EQ(sub(a, b, ring), Element(Residue{mpz_class(((x - y) % n + n) % n)}));
      }
    }
  }
}

TEST(Arithmetic, SpecExamples) {
  const auto z6 = RingDescriptor::quotient(6);
  EXPECT_TRUE(is_zero(mul(el("2", z6), el("3", z6), z6)));
  const auto q = RingDescriptor::rationals();
  EXPECT_EQ(add(el("1/2", q), el("1/3", q), q), el("5/6", q));
  const auto r = qxy();
  const Element p = mul(el("x + 1", r), el("x - 1", r), r);
  EXPECT_EQ(p, el("x^2 - 1", r));
  EXPECT_EQ(p.get_if<Poly>()->terms.front().exponents, (Exponents{2, 0}));
}

TEST(Arithmetic, FromIntAndMismatch) {
  EXPECT_EQ(from_int(-1, RingDescriptor::quotient(5)), Element(Residue{4}));
  EXPECT_EQ(from_int(3, qxy()), el("3", qxy()));
  try {
    add(Element(Integer{1}), Element(Residue{1}), RingDescriptor::integers());
    FAIL() << "expected mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DescriptorMismatch);
  }
  EXPECT_THROW(add(Element(Residue{7}), Element(Residue{1}), RingDescriptor::quotient(5)), Error);
}

TEST(MonomialOrder, MatchesBruteForceDefinitions) {
  const auto monomials = all_monomials(3, 3);
  for (const auto& a : monomials) {
    for (const auto& b : monomials) {
      ASSERT_EQ(compare_monomials(a, b, MonomialOrder::Lex), brute_lex(a, b));
      ASSERT_EQ(compare_monomials(a, b, MonomialOrder::DegLex), brute_deglex(a, b));
      ASSERT_EQ(compare_monomials(a, b, MonomialOrder::DegRevLex), brute_degrevlex(a, b));
    }
  }
}

TEST(MonomialOrder, TermOrderAxioms) {
  const auto monomials = all_monomials(2, 3);
  for (auto order : {MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex}) {
    for (const auto& a : monomials) {
      EXPECT_GE(compare_monomials(a, Exponents(2, 0), order), 0);
      for (const auto& b : monomials) {
        const int ab = compare_monomials(a, b, order);
        for (const auto& c : monomials) {
          EXPECT_EQ(compare_monomials(monomial_product(a, c), monomial_product(b, c), order), ab);
        }
      }
    }
  }
}

TEST(Monomials, LcmAndDivision) {
  EXPECT_EQ(monomial_lcm({2, 0}, {1, 1}), (Exponents{2, 1}));
  EXPECT_EQ(monomial_lcm({3, 1}, {3, 1}), (Exponents{3, 1}));
  EXPECT_EQ(monomial_lcm({0, 0}, {1, 4}), (Exponents{1, 4}));
  EXPECT_TRUE(monomial_divides({1, 0}, {2, 1}));
  EXPECT_FALSE(monomial_divides({0, 2}, {2, 1}));
  EXPECT_EQ(monomial_quotient({2, 1}, {1, 1}), (Exponents{1, 0}));
  try {
    monomial_product({0xFFFFFFFFu}, {1});
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExponentOverflow);
  }
}

TEST(Polynomials, LeadingMonomial) {
  const auto lex = qxy();
  auto lm = leading_monomial(el("xy - 1", lex), lex);
  EXPECT_EQ(lm.exponents, (Exponents{1, 1}));
  EXPECT_EQ(lm.coefficient, Scalar(Rational{1}));
  EXPECT_EQ(leading_monomial(el("x^2 - 1", lex), lex).exponents, (Exponents{2, 0}));
  const auto drl = qxy(MonomialOrder::DegRevLex);
  EXPECT_EQ(leading_monomial(el("x + y^2", drl), drl).exponents, (Exponents{0, 2}));
  try {
    leading_monomial(zero(lex), lex);
    FAIL() << "expected error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoLeadingMonomial);
  }
}

TEST(Polynomials, MakePolyCanonicalizes) {
  const auto r = qxy();
  const Element p = make_poly({{Rational{1}, {0, 1}}, {Rational{2}, {1, 0}},
                               {Rational{-1}, {0, 1}}, {Rational{0}, {3, 3}}},
                              r);
  EXPECT_EQ(p, el("2x", r));
  EXPECT_TRUE(is_canonical(p, r));
  EXPECT_TRUE(is_zero(make_poly({{Rational{1}, {1, 1}}, {Rational{-1}, {1, 1}}}, r)));
}

TEST(Order, IntegerExamples) {
  const auto z = RingDescriptor::integers();
  auto below = [&](long a, long b) { return compare(Integer{a}, Integer{b}, z) == Ordering::Less; };
  EXPECT_TRUE(below(0, 5));
  EXPECT_FALSE(below(3, 3));
  EXPECT_TRUE(below(4, -4));
  EXPECT_TRUE(below(1, -1));
  EXPECT_TRUE(below(-1, 2));
  EXPECT_FALSE(below(-4, 4));
}

TEST(Order, IntegerOrderIsStrictTotalAndWellFounded) {
  // Every element has finitely many predecessors: 2|x| - (x > 0 ? 1 : 0) of them.
  const auto z = RingDescriptor::integers();
  for (long a = -64; a <= 64; ++a) {
    long below = 0;
    for (long b = -200; b <= 200; ++b) {
      const auto ab = compare(Integer{a}, Integer{b}, z);
      const auto ba = compare(Integer{b}, Integer{a}, z);
      if (a == b) {
        EXPECT_EQ(ab, Ordering::Equivalent);
      } else {
        EXPECT_NE(ab, Ordering::Equivalent);
        EXPECT_NE(ab, ba);
      }
      if (ba == Ordering::Less) ++below;
    }
    EXPECT_EQ(below, a == 0 ? 0 : 2 * std::labs(a) - (a > 0 ? 1 : 0));
  }
}

TEST(Order, RationalsOnlyZeroIsBelow) {
  const auto q = RingDescriptor::rationals();
  EXPECT_EQ(compare(el("0", q), el("3", q), q), Ordering::Less);
  EXPECT_EQ(compare(el("3", q), el("-1/2", q), q), Ordering::Equivalent);
  EXPECT_EQ(compare(el("0", q), el("0", q), q), Ordering::Equivalent);
}

TEST(Order, QuotientUsesSymmetricValues) {
  const auto z8 = RingDescriptor::quotient(8);
  // Ascending: 0, 1, 7, 2, 6, 3, 5, 4.
  const std::vector<long> chain{0, 1, 7, 2, 6, 3, 5, 4};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    EXPECT_EQ(compare(Residue{chain[i]}, Residue{chain[i + 1]}, z8), Ordering::Less);
  }
  EXPECT_EQ(symmetric_value(5, 8), -3);
  EXPECT_EQ(symmetric_value(4, 8), 4);
}

TEST(Order, PolynomialComparesTermwise) {
  const auto r = qxy();
  EXPECT_EQ(compare(el("x", r), el("x^2", r), r), Ordering::Less);
  EXPECT_EQ(compare(el("y^5", r), el("x", r), r), Ordering::Less);
  EXPECT_EQ(compare(el("x + 1", r), el("x + y", r), r), Ordering::Less);
  EXPECT_EQ(compare(el("2x + y", r), el("x + 3y", r), r), Ordering::Equivalent);
  EXPECT_EQ(compare(el("0", r), el("1", r), r), Ordering::Less);
  const auto zr = RingDescriptor::polynomial(RingDescriptor::integers(), {"x"});
  EXPECT_EQ(compare(el("x + 1", zr), el("x - 1", zr), zr), Ordering::Less);
}

TEST(Symmetric, RemainderRange) {
  for (long a = -40; a <= 40; ++a) {
    for (long d = 1; d <= 12; ++d) {
      const mpz_class r = symmetric_remainder(a, d);
      EXPECT_EQ((a - r) % d, 0);
      EXPECT_TRUE(2 * r > -d && 2 * r <= d) << a << " " << d;
    }
  }
}

TEST(ReduceScalar, IntegerMatchesExhaustiveMultiplierSearch) {
  const auto z = RingDescriptor::integers();
  for (long a = -30; a <= 30; ++a) {
    for (long c = -10; c <= 10; ++c) {
      if (c == 0) continue;
      // Least a - m c under the integer order over a window wide enough to cover it.
      long best = a;
      for (long m = -70; m <= 70; ++m) {
        const long b = a - m * c;
        if (compare(Integer{b}, Integer{best}, z) == Ordering::Less) best = b;
      }
      const auto red = reduce_scalar(Integer{a}, Integer{c}, z);
      if (best == a) {
        EXPECT_FALSE(red.has_value()) << a << " by " << c;
      } else {
        ASSERT_TRUE(red.has_value()) << a << " by " << c;
        EXPECT_EQ(std::get<Integer>(red->result).value, best);
        EXPECT_EQ(a - std::get<Integer>(red->multiplier).value * c, best);
      }
    }
  }
  const auto r = reduce_scalar(Integer{7}, Integer{3}, z);
  ASSERT_TRUE(r);
  EXPECT_EQ(std::get<Integer>(r->multiplier).value, 2);
  EXPECT_EQ(std::get<Integer>(r->result).value, 1);
}

TEST(ReduceScalar, QuotientMatchesExhaustiveMultiplierSearch) {
  for (long n = 2; n <= 16; ++n) {
    const auto ring = RingDescriptor::quotient(n);
    for (long a = 0; a < n; ++a) {
      for (long c = 1; c < n; ++c) {
        long best = a;
        for (long m = 0; m < n; ++m) {
          const long b = ((a - m * c) % n + n) % n;
          if (compare(Residue{b}, Residue{best}, ring) == Ordering::Less) best = b;
        }
        const auto red = reduce_scalar(Residue{a}, Residue{c}, ring);
        if (best == a) {
          EXPECT_FALSE(red.has_value()) << n << ": " << a << " by " << c;
          continue;
        }
        ASSERT_TRUE(red.has_value()) << n << ": " << a << " by " << c;
        EXPECT_EQ(std::get<Residue>(red->result).value, best);
        const mpz_class m = std::get<Residue>(red->multiplier).value;
        const mpz_class back = ((a - m * c) % n + n) % n;
        EXPECT_EQ(back, best);
      }
    }
  }
}

TEST(ReduceScalar, RationalsReachZero) {
  const auto q = RingDescriptor::rationals();
  const auto r = reduce_scalar(Rational{mpq_class(3, 4)}, Rational{mpq_class(-1, 2)}, q);
  ASSERT_TRUE(r);
  EXPECT_EQ(std::get<Rational>(r->multiplier).value, mpq_class(-3, 2));
  EXPECT_TRUE(scalar_is_zero(r->result));
  EXPECT_FALSE(reduce_scalar(Rational{0}, Rational{5}, q));
}

TEST(EffectiveReducers, QuotientCoefficientMultiples) {
  const auto r = RingDescriptor::polynomial(RingDescriptor::quotient(12), {"x"});
  const auto reducers = effective_reducers(el("4x + 1", r), r);
  // 4x+1 times each proper divisor g of 12 with g*(4x+1) != 0, deduplicated.
  std::vector<Element> got;
  for (const auto& e : reducers) got.push_back(e.reducer);
  ASSERT_EQ(got.size(), 5u);
  for (const auto& expected : {"4x + 1", "8x + 2", "3", "4x + 4", "6"}) {
    EXPECT_NE(std::find(got.begin(), got.end(), el(expected, r)), got.end()) << expected;
  }
  for (const auto& e : reducers) {
    EXPECT_EQ(mul(make_monomial(e.factor, {0}, r), el("4x + 1", r), r), e.reducer);
  }
  const auto z = RingDescriptor::polynomial(RingDescriptor::integers(), {"x"});
  ASSERT_EQ(effective_reducers(el("2x", z), z).size(), 1u);
}
