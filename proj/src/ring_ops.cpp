#include "poly_internal.hpp"

namespace rrgb {

namespace {

Scalar scalar_of(const Element& e, const RingDescriptor& ring) {
  return std::visit(
      [&](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Poly>) {
          throw Error(ErrorCode::DescriptorMismatch, "polynomial given for a scalar ring");
        } else {
          if (!is_canonical_scalar(Scalar(v), ring)) {
            throw Error(ErrorCode::DescriptorMismatch, "scalar does not belong to the ring");
          }
          return v;
        }
      },
      e.value());
}

void require_poly(const Element& e, const RingDescriptor& ring) {
  if (e.get_if<Poly>() == nullptr) {
    throw Error(ErrorCode::DescriptorMismatch, "scalar given for a polynomial ring");
  }
  (void)ring;
}

}  // namespace

Element zero(const RingDescriptor& ring) {
  if (ring.is_polynomial()) return Element(Poly{});
  return Element::from_scalar(scalar_zero(ring));
}

Element one(const RingDescriptor& ring) {
  if (ring.is_polynomial()) {
    return make_monomial(scalar_one(ring.coefficient()), Exponents(ring.arity(), 0), ring);
  }
  return Element::from_scalar(scalar_one(ring));
}

Element from_int(const mpz_class& n, const RingDescriptor& ring) {
  const RingDescriptor& scalar_ring = ring.is_polynomial() ? ring.coefficient() : ring;
  Scalar s;
  switch (scalar_ring.kind()) {
    case RingKind::Rationals: s = Rational{mpq_class(n)}; break;
    case RingKind::Integers: s = Integer{n}; break;
    case RingKind::IntegerQuotient: {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), scalar_ring.modulus().get_mpz_t());
      s = Residue{r};
      break;
    }
    case RingKind::Polynomial: break;
  }
  if (ring.is_polynomial()) return make_monomial(s, Exponents(ring.arity(), 0), ring);
  return Element::from_scalar(s);
}

bool is_zero(const Element& x) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Poly>) {
          return v.terms.empty();
        } else {
          return v.value == 0;
        }
      },
      x.value());
}

Element add(const Element& x, const Element& y, const RingDescriptor& ring) {
  if (ring.is_polynomial()) {
    require_poly(x, ring);
    require_poly(y, ring);
    return poly_add(x, y, ring);
  }
  return Element::from_scalar(scalar_add(scalar_of(x, ring), scalar_of(y, ring), ring));
}

Element neg(const Element& x, const RingDescriptor& ring) {
  if (ring.is_polynomial()) {
    require_poly(x, ring);
    return poly_neg(x, ring);
  }
  return Element::from_scalar(scalar_neg(scalar_of(x, ring), ring));
}

Element sub(const Element& x, const Element& y, const RingDescriptor& ring) {
  return add(x, neg(y, ring), ring);
}

Element mul(const Element& x, const Element& y, const RingDescriptor& ring) {
  if (ring.is_polynomial()) {
    require_poly(x, ring);
    require_poly(y, ring);
    return poly_mul(x, y, ring);
  }
  return Element::from_scalar(scalar_mul(scalar_of(x, ring), scalar_of(y, ring), ring));
}

bool eq(const Element& x, const Element& y, const RingDescriptor& ring) {
  require_member(x, ring);
  require_member(y, ring);
  return x == y;
}

Ordering compare(const Element& x, const Element& y, const RingDescriptor& ring) {
  if (ring.is_polynomial()) {
    require_poly(x, ring);
    require_poly(y, ring);
    return poly_compare(x, y, ring);
  }
  return compare_scalars(scalar_of(x, ring), scalar_of(y, ring), ring);
}

}  // namespace rrgb
