// Scalar domains: Q as a field, Z, and Z/n.

#include <algorithm>

#include "rrgb/domains.hpp"

namespace rrgb {

namespace {

[[noreturn]] void mismatch() {
  throw Error(ErrorCode::DescriptorMismatch, "scalar does not belong to the ring");
}

const mpz_class& int_of(const Scalar& s) {
  if (const auto* v = std::get_if<Integer>(&s)) return v->value;
  mismatch();
}

const mpq_class& rat_of(const Scalar& s) {
  if (const auto* v = std::get_if<Rational>(&s)) return v->value;
  mismatch();
}

const mpz_class& res_of(const Scalar& s) {
  if (const auto* v = std::get_if<Residue>(&s)) return v->value;
  mismatch();
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& n) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

Residue residue(const mpz_class& a, const mpz_class& n) { return Residue{mod_floor(a, n)}; }

// a < b in the integer order: smaller magnitude first, positive before
// negative at equal magnitude.
Ordering compare_integer_order(const mpz_class& a, const mpz_class& b) {
  if (a == b) return Ordering::Equivalent;
  const int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return a > 0 ? Ordering::Less : Ordering::Greater;
}

}  // namespace

mpz_class symmetric_remainder(const mpz_class& a, const mpz_class& d) {
  mpz_class r = mod_floor(a, d);
  if (2 * r > d) r -= d;
  return r;
}

mpz_class symmetric_value(const mpz_class& residue_value, const mpz_class& modulus) {
  if (2 * residue_value > modulus) return residue_value - modulus;
  return residue_value;
}

Scalar scalar_zero(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: return Rational{mpq_class(0)};
    case RingKind::Integers: return Integer{mpz_class(0)};
    case RingKind::IntegerQuotient: return Residue{mpz_class(0)};
    case RingKind::Polynomial: break;
  }
  mismatch();
}

Scalar scalar_one(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: return Rational{mpq_class(1)};
    case RingKind::Integers: return Integer{mpz_class(1)};
    case RingKind::IntegerQuotient: return Residue{mpz_class(1)};
    case RingKind::Polynomial: break;
  }
  mismatch();
}

bool scalar_is_zero(const Scalar& x) {
  return std::visit([](const auto& v) { return v.value == 0; }, x);
}

Scalar scalar_add(const Scalar& x, const Scalar& y, const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: return Rational{mpq_class(rat_of(x) + rat_of(y))};
    case RingKind::Integers: return Integer{mpz_class(int_of(x) + int_of(y))};
    case RingKind::IntegerQuotient:
      return residue(res_of(x) + res_of(y), ring.modulus());
    case RingKind::Polynomial: break;
  }
  mismatch();
}

Scalar scalar_neg(const Scalar& x, const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: return Rational{mpq_class(-rat_of(x))};
    case RingKind::Integers: return Integer{mpz_class(-int_of(x))};
    case RingKind::IntegerQuotient: return residue(-res_of(x), ring.modulus());
    case RingKind::Polynomial: break;
  }
  mismatch();
}

Scalar scalar_mul(const Scalar& x, const Scalar& y, const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: return Rational{mpq_class(rat_of(x) * rat_of(y))};
    case RingKind::Integers: return Integer{mpz_class(int_of(x) * int_of(y))};
    case RingKind::IntegerQuotient:
      return residue(res_of(x) * res_of(y), ring.modulus());
    case RingKind::Polynomial: break;
  }
  mismatch();
}

Ordering compare_scalars(const Scalar& x, const Scalar& y, const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: {
      // 0 is below everything else; nonzero elements are mutually
      // incomparable.
      const bool xz = rat_of(x) == 0;
      const bool yz = rat_of(y) == 0;
      if (xz && !yz) return Ordering::Less;
      if (!xz && yz) return Ordering::Greater;
      return Ordering::Equivalent;
    }
    case RingKind::Integers:
      return compare_integer_order(int_of(x), int_of(y));
    case RingKind::IntegerQuotient:
      return compare_integer_order(symmetric_value(res_of(x), ring.modulus()),
                                   symmetric_value(res_of(y), ring.modulus()));
    case RingKind::Polynomial: break;
  }
  mismatch();
}

std::optional<ScalarReduction> reduce_scalar(const Scalar& u, const Scalar& c,
                                             const RingDescriptor& ring) {
  if (scalar_is_zero(c)) {
    throw Error(ErrorCode::ZeroReducer, "reduction by zero");
  }
  switch (ring.kind()) {
    case RingKind::Rationals: {
      const auto& a = rat_of(u);
      if (a == 0) return std::nullopt;
      return ScalarReduction{Rational{mpq_class(a / rat_of(c))}, Rational{mpq_class(0)}};
    }
    case RingKind::Integers: {
      const auto& a = int_of(u);
      const auto& cv = int_of(c);
      const mpz_class d = abs(cv);
      mpz_class b = symmetric_remainder(a, d);
      if (b == a) return std::nullopt;
      mpz_class m;
      mpz_divexact(m.get_mpz_t(), mpz_class(a - b).get_mpz_t(), cv.get_mpz_t());
      return ScalarReduction{Integer{m}, Integer{b}};
    }
    case RingKind::IntegerQuotient: {
      const auto& n = ring.modulus();
      const auto& a = res_of(u);
      const auto& cv = res_of(c);
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), cv.get_mpz_t(), n.get_mpz_t());
      // The coset a + (c) is a + dZ mod n; its least element in the
      // symmetric order is the symmetric remainder of a modulo d.
      mpz_class b = mod_floor(symmetric_remainder(a, d), n);
      if (b == a) return std::nullopt;
      const mpz_class n1 = n / d;
      const mpz_class c1 = cv / d;
      mpz_class t = mod_floor(a - b, n) / d;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), c1.get_mpz_t(), n1.get_mpz_t());
      mpz_class m = mod_floor(t * inv, n1);
      return ScalarReduction{Residue{m}, Residue{b}};
    }
    case RingKind::Polynomial: break;
  }
  mismatch();
}

}  // namespace rrgb
