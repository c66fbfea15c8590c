#include <algorithm>
#include <limits>

#include "rrgb/domains.hpp"

namespace rrgb {

namespace {

void require_same_length(const Exponents& e1, const Exponents& e2) {
  if (e1.size() != e2.size()) {
    throw Error(ErrorCode::LengthMismatch, "exponent vectors differ in length");
  }
}

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

int compare_lex(const Exponents& e1, const Exponents& e2) {
  for (std::size_t i = 0; i < e1.size(); ++i) {
    if (e1[i] != e2[i]) return e1[i] < e2[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare_monomials(const Exponents& e1, const Exponents& e2, MonomialOrder order) {
  require_same_length(e1, e2);
  if (order != MonomialOrder::Lex) {
    const auto d1 = total_degree(e1);
    const auto d2 = total_degree(e2);
    if (d1 != d2) return d1 < d2 ? -1 : 1;
  }
  if (order == MonomialOrder::DegRevLex) {
    // Ties: the monomial with the smaller exponent in the last differing
    // variable is the larger one.
    for (std::size_t i = e1.size(); i-- > 0;) {
      if (e1[i] != e2[i]) return e1[i] > e2[i] ? -1 : 1;
    }
    return 0;
  }
  return compare_lex(e1, e2);
}

Exponents monomial_lcm(const Exponents& e1, const Exponents& e2) {
  require_same_length(e1, e2);
  Exponents out(e1.size());
  for (std::size_t i = 0; i < e1.size(); ++i) out[i] = std::max(e1[i], e2[i]);
  return out;
}

bool monomial_divides(const Exponents& divisor, const Exponents& e) {
  require_same_length(divisor, e);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (divisor[i] > e[i]) return false;
  }
  return true;
}

Exponents monomial_product(const Exponents& e1, const Exponents& e2) {
  require_same_length(e1, e2);
  Exponents out(e1.size());
  for (std::size_t i = 0; i < e1.size(); ++i) {
    if (e1[i] > std::numeric_limits<std::uint32_t>::max() - e2[i]) {
      throw Error(ErrorCode::ExponentOverflow, "exponent overflow in monomial product");
    }
    out[i] = e1[i] + e2[i];
  }
  return out;
}

Exponents monomial_quotient(const Exponents& e, const Exponents& divisor) {
  if (!monomial_divides(divisor, e)) {
    throw Error(ErrorCode::InvalidArgument, "monomial does not divide");
  }
  Exponents out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i] - divisor[i];
  return out;
}

}  // namespace rrgb
