#pragma once

// Shared fixtures: parsing shorthands and seeded random element generators.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "rrgb/buchberger.hpp"
#include "rrgb/domains.hpp"
#include "rrgb/parse.hpp"

namespace rrgb::testing {

inline Element el(const std::string& text, const RingDescriptor& ring) {
  return parse_element(text, ring);
}

inline Basis basis_of(std::initializer_list<const char*> texts, const RingDescriptor& ring) {
  Basis b;
  for (const char* t : texts) b.push_back(parse_element(t, ring));
  return b;
}

inline RingDescriptor qxy(MonomialOrder order = MonomialOrder::Lex) {
  return RingDescriptor::polynomial(RingDescriptor::rationals(), {"x", "y"}, order);
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar scalar(const RingDescriptor& r, long span = 20) {
    switch (r.kind()) {
      case RingKind::Integers: return Integer{mpz_class(integer(-span, span))};
      case RingKind::Rationals: {
        mpq_class q(mpz_class(integer(-span, span)), mpz_class(integer(1, 6)));
        q.canonicalize();
        return Rational{q};
      }
      case RingKind::IntegerQuotient: {
        const long n = r.modulus().get_si();
        return Residue{mpz_class(integer(0, n - 1))};
      }
      case RingKind::Polynomial: break;
    }
    return Integer{};
  }

  // Sparse polynomial: up to `max_terms` terms, total degree <= max_degree.
  Element polynomial(const RingDescriptor& r, int max_terms = 4, int max_degree = 3,
                     long span = 5) {
    std::vector<Term> terms;
    const int count = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < count; ++t) {
      Exponents e(r.arity(), 0);
      int budget = static_cast<int>(integer(0, max_degree));
      for (std::size_t v = 0; v < e.size() && budget > 0; ++v) {
        const int d = v + 1 == e.size() ? budget : static_cast<int>(integer(0, budget));
        e[v] = static_cast<std::uint32_t>(d);
        budget -= d;
      }
      terms.push_back({scalar(r.coefficient(), span), std::move(e)});
    }
    return make_poly(std::move(terms), r);
  }

  Element element(const RingDescriptor& r, long span = 20) {
    if (r.is_polynomial()) return polynomial(r);
    return Element::from_scalar(scalar(r, span));
  }

  Element nonzero(const RingDescriptor& r, long span = 20) {
    while (true) {
      Element e = element(r, span);
      if (!is_zero(e)) return e;
    }
  }

  Basis basis(const RingDescriptor& r, std::size_t lo, std::size_t hi, long span = 20) {
    Basis b;
    const auto count = static_cast<std::size_t>(integer(static_cast<long>(lo),
                                                        static_cast<long>(hi)));
    for (std::size_t i = 0; i < count; ++i) b.push_back(nonzero(r, span));
    return b;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rrgb::testing
