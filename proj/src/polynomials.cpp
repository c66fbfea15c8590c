// Polynomials represented as tuples of monomials over Q, Z or Z/n.

#include <algorithm>

#include "poly_internal.hpp"

namespace rrgb {

namespace {

const Poly& poly_of(const Element& e) {
  if (const auto* p = e.get_if<Poly>()) return *p;
  throw Error(ErrorCode::DescriptorMismatch, "element is not a polynomial");
}

void require_arity(const Term& t, const RingDescriptor& ring) {
  if (t.exponents.size() != ring.arity()) {
    throw Error(ErrorCode::DescriptorMismatch, "exponent vector length differs from ring arity");
  }
}

}  // namespace

Element make_poly(std::vector<Term> terms, const RingDescriptor& ring) {
  const auto order = ring.order();
  const auto& coeff = ring.coefficient();
  for (const auto& t : terms) require_arity(t, ring);
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.exponents, b.exponents, order) > 0;
  });
  Poly out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().exponents == t.exponents) {
      out.terms.back().coefficient = scalar_add(out.terms.back().coefficient, t.coefficient, coeff);
    } else {
      if (!out.terms.empty() && scalar_is_zero(out.terms.back().coefficient)) {
        out.terms.pop_back();
      }
      out.terms.push_back(std::move(t));
    }
  }
  if (!out.terms.empty() && scalar_is_zero(out.terms.back().coefficient)) out.terms.pop_back();
  return Element(std::move(out));
}

Element make_monomial(const Scalar& coefficient, const Exponents& exponents,
                      const RingDescriptor& ring) {
  return make_poly({Term{coefficient, exponents}}, ring);
}

LeadingMonomial leading_monomial(const Element& p, const RingDescriptor& ring) {
  if (!ring.is_polynomial()) {
    throw Error(ErrorCode::DescriptorMismatch, "leading monomial needs a polynomial ring");
  }
  const auto& poly = poly_of(p);
  if (poly.terms.empty()) {
    throw Error(ErrorCode::NoLeadingMonomial, "zero polynomial has no leading monomial");
  }
  return LeadingMonomial{poly.terms.front().coefficient, poly.terms.front().exponents};
}

Element poly_add(const Element& x, const Element& y, const RingDescriptor& ring) {
  const auto& a = poly_of(x).terms;
  const auto& b = poly_of(y).terms;
  const auto& coeff = ring.coefficient();
  Poly out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = compare_monomials(a[i].exponents, b[j].exponents, ring.order());
    }
    if (c > 0) {
      out.terms.push_back(a[i++]);
    } else if (c < 0) {
      out.terms.push_back(b[j++]);
    } else {
      Scalar s = scalar_add(a[i].coefficient, b[j].coefficient, coeff);
      if (!scalar_is_zero(s)) out.terms.push_back(Term{std::move(s), a[i].exponents});
      ++i;
      ++j;
    }
  }
  return Element(std::move(out));
}

Element poly_neg(const Element& x, const RingDescriptor& ring) {
  Poly out = poly_of(x);
  for (auto& t : out.terms) t.coefficient = scalar_neg(t.coefficient, ring.coefficient());
  return Element(std::move(out));
}

Element poly_mul(const Element& x, const Element& y, const RingDescriptor& ring) {
  const auto& a = poly_of(x).terms;
  const auto& b = poly_of(y).terms;
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a) {
    for (const auto& t : b) {
      terms.push_back(Term{scalar_mul(s.coefficient, t.coefficient, ring.coefficient()),
                           monomial_product(s.exponents, t.exponents)});
    }
  }
  return make_poly(std::move(terms), ring);
}

// Term-by-term from the top: the first position where the two polynomials
// differ decides, with a missing monomial counting as coefficient zero.
Ordering poly_compare(const Element& x, const Element& y, const RingDescriptor& ring) {
  const auto& a = poly_of(x).terms;
  const auto& b = poly_of(y).terms;
  const auto& coeff = ring.coefficient();
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    if (i == a.size() && j == b.size()) return Ordering::Equivalent;
    if (i == a.size()) return Ordering::Less;
    if (j == b.size()) return Ordering::Greater;
    const int c = compare_monomials(a[i].exponents, b[j].exponents, ring.order());
    if (c > 0) return Ordering::Greater;
    if (c < 0) return Ordering::Less;
    const auto oc = compare_scalars(a[i].coefficient, b[j].coefficient, coeff);
    if (oc != Ordering::Equivalent) return oc;
    ++i;
    ++j;
  }
}

std::vector<EffectiveReducer> effective_reducers(const Element& c, const RingDescriptor& ring) {
  if (!ring.is_polynomial() || ring.coefficient().kind() != RingKind::IntegerQuotient) {
    return {EffectiveReducer{scalar_one(ring.is_polynomial() ? ring.coefficient() : ring), c}};
  }
  const auto& coeff = ring.coefficient();
  const mpz_class& n = coeff.modulus();
  std::vector<EffectiveReducer> out;
  for (mpz_class g = 1; g < n; ++g) {
    if (!mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t())) continue;
    Element scaled = poly_mul(make_monomial(Residue{g}, Exponents(ring.arity(), 0), ring), c, ring);
    if (poly_of(scaled).terms.empty()) continue;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const EffectiveReducer& r) { return r.reducer == scaled; });
    if (!seen) out.push_back(EffectiveReducer{Residue{g}, std::move(scaled)});
  }
  return out;
}

}  // namespace rrgb
