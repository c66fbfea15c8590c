#pragma once

// Concrete reduction-ring domains: rationals (as a field), integers,
// integer quotient rings Z/n and polynomial tuples over one of those.

#include <optional>
#include <vector>

#include "rrgb/ring.hpp"

namespace rrgb {

// ---------------------------------------------------------------------------
// Ring arithmetic

Element zero(const RingDescriptor& ring);
Element one(const RingDescriptor& ring);
Element add(const Element& x, const Element& y, const RingDescriptor& ring);
Element neg(const Element& x, const RingDescriptor& ring);
Element sub(const Element& x, const Element& y, const RingDescriptor& ring);
Element mul(const Element& x, const Element& y, const RingDescriptor& ring);
bool eq(const Element& x, const Element& y, const RingDescriptor& ring);
bool is_zero(const Element& x);

// Integer n embedded into the ring via 1 + 1 + ... + 1.
Element from_int(const mpz_class& n, const RingDescriptor& ring);

Scalar scalar_zero(const RingDescriptor& scalar_ring);
Scalar scalar_one(const RingDescriptor& scalar_ring);
Scalar scalar_add(const Scalar& x, const Scalar& y, const RingDescriptor& scalar_ring);
Scalar scalar_neg(const Scalar& x, const RingDescriptor& scalar_ring);
Scalar scalar_mul(const Scalar& x, const Scalar& y, const RingDescriptor& scalar_ring);
bool scalar_is_zero(const Scalar& x);

// ---------------------------------------------------------------------------
// Integer helpers shared by Z and Z/n

// The unique r with r = a (mod d) and -d/2 < r <= d/2. Requires d > 0.
mpz_class symmetric_remainder(const mpz_class& a, const mpz_class& d);

// Value of a residue in the symmetric range (-n/2, n/2].
mpz_class symmetric_value(const mpz_class& residue, const mpz_class& modulus);

// ---------------------------------------------------------------------------
// Monomials

// Negative, zero or positive as e1 is below, equal to or above e2.
int compare_monomials(const Exponents& e1, const Exponents& e2, MonomialOrder order);
Exponents monomial_lcm(const Exponents& e1, const Exponents& e2);
bool monomial_divides(const Exponents& divisor, const Exponents& e);
Exponents monomial_product(const Exponents& e1, const Exponents& e2);
Exponents monomial_quotient(const Exponents& e, const Exponents& divisor);

struct LeadingMonomial {
  Scalar coefficient;
  Exponents exponents;
};

LeadingMonomial leading_monomial(const Element& p, const RingDescriptor& ring);

// Sorts, merges equal monomials and drops zero coefficients.
Element make_poly(std::vector<Term> terms, const RingDescriptor& ring);
Element make_monomial(const Scalar& coefficient, const Exponents& exponents,
                      const RingDescriptor& ring);

// ---------------------------------------------------------------------------
// Domain bindings for the reduction-ring contract. MODULE core dispatches
// to these; see core.hpp for the contract itself.

enum class Ordering { Less, Equivalent, Greater };

// Preorder underlying the Noetherian order: x is strictly below y iff
// compare(x, y) == Less. Equivalent covers both equality and the mutual
// incomparability of nonzero field elements.
Ordering compare(const Element& x, const Element& y, const RingDescriptor& ring);
Ordering compare_scalars(const Scalar& x, const Scalar& y, const RingDescriptor& scalar_ring);

struct ScalarReduction {
  Scalar multiplier;
  Scalar result;
};

// Canonical one-step reduction of u by c inside a scalar ring. c must be
// nonzero.
std::optional<ScalarReduction> reduce_scalar(const Scalar& u, const Scalar& c,
                                             const RingDescriptor& scalar_ring);

// For polynomials over Z/n the reducers of c are the nonzero multiples g*c
// for the proper divisors g of n; over a domain it is just c itself.
struct EffectiveReducer {
  Scalar factor;
  Element reducer;
};

std::vector<EffectiveReducer> effective_reducers(const Element& c, const RingDescriptor& ring);

}  // namespace rrgb
