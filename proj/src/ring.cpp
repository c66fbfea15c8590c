#include "rrgb/ring.hpp"

#include "rrgb/domains.hpp"

namespace rrgb {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Range: return "range";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::DescriptorMismatch: return "descriptor-mismatch";
    case ErrorCode::ZeroReducer: return "zero-reducer";
    case ErrorCode::NoLeadingMonomial: return "no-leading-monomial";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::StateCorruption: return "state-corruption";
    case ErrorCode::ContractViolation: return "contract-violation";
    case ErrorCode::StepLimit: return "step-limit";
    case ErrorCode::DomainOrderViolation: return "domain-order-violation";
    case ErrorCode::ExponentOverflow: return "exponent-overflow";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

const char* monomial_order_name(MonomialOrder order) noexcept {
  switch (order) {
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::DegLex: return "deglex";
    case MonomialOrder::DegRevLex: return "degrevlex";
  }
  return "lex";
}

Element Element::from_scalar(const Scalar& s) {
  return std::visit([](const auto& v) { return Element(v); }, s);
}

RingDescriptor RingDescriptor::rationals() {
  RingDescriptor r;
  r.kind_ = RingKind::Rationals;
  return r;
}

RingDescriptor RingDescriptor::integers() {
  RingDescriptor r;
  r.kind_ = RingKind::Integers;
  return r;
}

RingDescriptor RingDescriptor::quotient(const mpz_class& modulus) {
  if (modulus < 2) {
    throw Error(ErrorCode::Range, "modulus must be at least 2, got " + modulus.get_str());
  }
  RingDescriptor r;
  r.kind_ = RingKind::IntegerQuotient;
  r.modulus_ = modulus;
  return r;
}

RingDescriptor RingDescriptor::polynomial(const RingDescriptor& coefficient,
                                          std::vector<std::string> variables,
                                          MonomialOrder order) {
  if (coefficient.is_polynomial()) {
    throw Error(ErrorCode::Unsupported, "polynomial coefficients must not be polynomials");
  }
  if (variables.empty()) {
    throw Error(ErrorCode::InvalidArgument, "polynomial ring needs at least one variable");
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty variable name");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i] == variables[j]) {
        throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + variables[i] + "'");
      }
    }
  }
  RingDescriptor r;
  r.kind_ = RingKind::Polynomial;
  r.coefficient_ = std::make_shared<const RingDescriptor>(coefficient);
  r.variables_ = std::move(variables);
  r.order_ = order;
  return r;
}

const RingDescriptor& RingDescriptor::coefficient() const {
  if (!coefficient_) {
    throw Error(ErrorCode::DescriptorMismatch, "ring has no coefficient domain");
  }
  return *coefficient_;
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RingKind::Rationals:
    case RingKind::Integers:
      return true;
    case RingKind::IntegerQuotient:
      return a.modulus_ == b.modulus_;
    case RingKind::Polynomial:
      return a.variables_ == b.variables_ && a.order_ == b.order_ &&
             *a.coefficient_ == *b.coefficient_;
  }
  return false;
}

bool is_canonical_scalar(const Scalar& s, const RingDescriptor& scalar_ring) {
  switch (scalar_ring.kind()) {
    case RingKind::Rationals: {
      const auto* q = std::get_if<Rational>(&s);
      if (q == nullptr) return false;
      if (q->value.get_den() <= 0) return false;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), q->value.get_num_mpz_t(), q->value.get_den_mpz_t());
      return g == 1;
    }
    case RingKind::Integers:
      return std::holds_alternative<Integer>(s);
    case RingKind::IntegerQuotient: {
      const auto* r = std::get_if<Residue>(&s);
      return r != nullptr && r->value >= 0 && r->value < scalar_ring.modulus();
    }
    case RingKind::Polynomial:
      return false;
  }
  return false;
}

bool is_canonical(const Element& e, const RingDescriptor& ring) {
  if (!ring.is_polynomial()) {
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Poly>) {
            return false;
          } else {
            return is_canonical_scalar(Scalar(v), ring);
          }
        },
        e.value());
  }
  const auto* p = e.get_if<Poly>();
  if (p == nullptr) return false;
  const auto& coeff = ring.coefficient();
  for (std::size_t i = 0; i < p->terms.size(); ++i) {
    const auto& t = p->terms[i];
    if (t.exponents.size() != ring.arity()) return false;
    if (!is_canonical_scalar(t.coefficient, coeff)) return false;
    if (scalar_is_zero(t.coefficient)) return false;
    if (i > 0 && compare_monomials(p->terms[i - 1].exponents, t.exponents, ring.order()) <= 0) {
      return false;
    }
  }
  return true;
}

void require_member(const Element& e, const RingDescriptor& ring) {
  if (!is_canonical(e, ring)) {
    throw Error(ErrorCode::DescriptorMismatch, "element is not a canonical member of the ring");
  }
}

}  // namespace rrgb
