#pragma once

// Ring descriptors, ring elements and the library-wide error type.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rrgb {

enum class ErrorCode {
  Parse,
  Range,
  Unsupported,
  DescriptorMismatch,
  ZeroReducer,
  NoLeadingMonomial,
  LengthMismatch,
  StateCorruption,
  ContractViolation,
  StepLimit,
  DomainOrderViolation,
  ExponentOverflow,
  InvalidArgument,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Integer {
  mpz_class value;
};

struct Rational {
  mpq_class value;
};

// Canonical representative in 0..n-1; the modulus lives in the descriptor.
struct Residue {
  mpz_class value;
};

inline bool operator==(const Integer& a, const Integer& b) { return a.value == b.value; }
inline bool operator==(const Rational& a, const Rational& b) { return a.value == b.value; }
inline bool operator==(const Residue& a, const Residue& b) { return a.value == b.value; }

using Scalar = std::variant<Integer, Rational, Residue>;
using Exponents = std::vector<std::uint32_t>;

struct Term {
  Scalar coefficient;
  Exponents exponents;
};

inline bool operator==(const Term& a, const Term& b) {
  return a.exponents == b.exponents && a.coefficient == b.coefficient;
}

// Monomials strictly descending in the ring's monomial order, no zero
// coefficients. The zero polynomial has no terms.
struct Poly {
  std::vector<Term> terms;
};

inline bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }

// An element of some reduction ring. Carries no ring identity; every
// operation receives the ambient RingDescriptor.
class Element {
 public:
  using Value = std::variant<Integer, Rational, Residue, Poly>;

  Element() : value_(Integer{}) {}
  Element(Integer v) : value_(std::move(v)) {}
  Element(Rational v) : value_(std::move(v)) {}
  Element(Residue v) : value_(std::move(v)) {}
  Element(Poly v) : value_(std::move(v)) {}

  static Element from_scalar(const Scalar& s);

  const Value& value() const noexcept { return value_; }

  template <typename T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&value_);
  }

  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }

 private:
  Value value_;
};

enum class RingKind { Rationals, Integers, IntegerQuotient, Polynomial };
enum class MonomialOrder { Lex, DegLex, DegRevLex };

const char* monomial_order_name(MonomialOrder order) noexcept;

class RingDescriptor {
 public:
  static RingDescriptor rationals();
  static RingDescriptor integers();
  static RingDescriptor quotient(const mpz_class& modulus);
  static RingDescriptor polynomial(const RingDescriptor& coefficient,
                                   std::vector<std::string> variables,
                                   MonomialOrder order = MonomialOrder::Lex);

  RingKind kind() const noexcept { return kind_; }
  bool is_polynomial() const noexcept { return kind_ == RingKind::Polynomial; }
  bool is_finite() const noexcept { return kind_ == RingKind::IntegerQuotient; }

  // Only meaningful for IntegerQuotient.
  const mpz_class& modulus() const noexcept { return modulus_; }

  // Only meaningful for Polynomial.
  const RingDescriptor& coefficient() const;
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t arity() const noexcept { return variables_.size(); }
  MonomialOrder order() const noexcept { return order_; }

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  RingDescriptor() = default;

  RingKind kind_ = RingKind::Integers;
  mpz_class modulus_;
  std::shared_ptr<const RingDescriptor> coefficient_;
  std::vector<std::string> variables_;
  MonomialOrder order_ = MonomialOrder::Lex;
};

// True iff `e` is a canonical element of `ring` (right alternative, residue
// in range, reduced rational, sorted nonzero monomials of the right arity).
bool is_canonical(const Element& e, const RingDescriptor& ring);

// Throws DescriptorMismatch unless is_canonical(e, ring).
void require_member(const Element& e, const RingDescriptor& ring);

bool is_canonical_scalar(const Scalar& s, const RingDescriptor& scalar_ring);

}  // namespace rrgb
