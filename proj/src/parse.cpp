#include "rrgb/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "rrgb/domains.hpp"

namespace rrgb {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                               text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  mpz_class digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  // Longest variable name that is a prefix of the remaining input.
  std::optional<std::size_t> variable(const std::vector<std::string>& names) {
    skip_space();
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (text_.substr(pos_, names[i].size()) == names[i] &&
          (!best || names[i].size() > names[*best].size())) {
        best = i;
      }
    }
    if (best) pos_ += names[*best].size();
    return best;
  }

  bool at_identifier_start() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::Parse) const {
    throw Error(code, what + " at position " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

RingDescriptor ring_expr(Cursor& cur, int depth) {
  if (cur.accept_word("poly")) {
    cur.expect('(');
    RingDescriptor coeff = ring_expr(cur, depth + 1);
    cur.expect(';');
    std::vector<std::string> vars{cur.identifier()};
    while (cur.accept(',')) vars.push_back(cur.identifier());
    MonomialOrder order = MonomialOrder::Lex;
    if (cur.accept(';')) {
      if (cur.accept_word("lex")) {
        order = MonomialOrder::Lex;
      } else if (cur.accept_word("deglex")) {
        order = MonomialOrder::DegLex;
      } else if (cur.accept_word("degrevlex")) {
        order = MonomialOrder::DegRevLex;
      } else {
        cur.fail("unknown monomial order");
      }
    }
    cur.expect(')');
    if (depth > 0) cur.fail("nested polynomial rings are not supported", ErrorCode::Unsupported);
    if (coeff.is_polynomial()) {
      cur.fail("nested polynomial rings are not supported", ErrorCode::Unsupported);
    }
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      cur.fail("duplicate variable name");
    }
    return RingDescriptor::polynomial(coeff, std::move(vars), order);
  }
  if (cur.accept_word("Q")) return RingDescriptor::rationals();
  if (cur.accept('Z')) {
    if (cur.accept('/')) {
      mpz_class n = cur.digits();
      if (n < 2) cur.fail("modulus must be at least 2", ErrorCode::Range);
      return RingDescriptor::quotient(n);
    }
    return RingDescriptor::integers();
  }
  cur.fail("expected ring descriptor");
}

// Unsigned coefficient literal: digits, or digits/digits over Q.
Scalar coefficient_literal(Cursor& cur, const RingDescriptor& scalar_ring) {
  mpz_class num = cur.digits();
  if (cur.accept('/')) {
    if (scalar_ring.kind() != RingKind::Rationals) cur.fail("fraction outside Q");
    mpz_class den = cur.digits();
    if (den == 0) cur.fail("zero denominator", ErrorCode::Range);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational{q};
  }
  switch (scalar_ring.kind()) {
    case RingKind::Rationals: return Rational{mpq_class(num)};
    case RingKind::Integers: return Integer{num};
    case RingKind::IntegerQuotient: {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), scalar_ring.modulus().get_mpz_t());
      return Residue{r};
    }
    case RingKind::Polynomial: break;
  }
  cur.fail("unsupported coefficient ring");
}

Element scalar_expr(Cursor& cur, const RingDescriptor& ring) {
  bool negative = false;
  while (cur.peek() == '+' || cur.peek() == '-') {
    if (cur.accept('-')) {
      negative = !negative;
    } else {
      cur.accept('+');
    }
  }
  Scalar s = coefficient_literal(cur, ring);
  if (negative) s = scalar_neg(s, ring);
  return Element::from_scalar(s);
}

Term poly_term(Cursor& cur, const RingDescriptor& ring) {
  const auto& coeff = ring.coefficient();
  Term t{scalar_one(coeff), Exponents(ring.arity(), 0)};
  bool any = false;
  if (cur.at_digit()) {
    t.coefficient = coefficient_literal(cur, coeff);
    any = true;
  }
  while (true) {
    const bool star = any && cur.accept('*');
    if (star && cur.at_digit()) {
      t.coefficient = scalar_mul(t.coefficient, coefficient_literal(cur, coeff), coeff);
      continue;
    }
    if (!cur.at_identifier_start()) {
      if (star) cur.fail("expected factor after '*'");
      break;
    }
    auto v = cur.variable(ring.variables());
    if (!v) cur.fail("unknown variable");
    std::uint64_t e = 1;
    if (cur.accept('^')) {
      if (!cur.at_digit()) cur.fail("malformed exponent");
      mpz_class x = cur.digits();
      if (x > std::numeric_limits<std::uint32_t>::max()) {
        cur.fail("exponent too large", ErrorCode::ExponentOverflow);
      }
      e = x.get_ui();
    }
    if (t.exponents[*v] + e > std::numeric_limits<std::uint32_t>::max()) {
      cur.fail("exponent too large", ErrorCode::ExponentOverflow);
    }
    t.exponents[*v] += static_cast<std::uint32_t>(e);
    any = true;
  }
  if (!any) cur.fail("expected term");
  return t;
}

Element poly_expr(Cursor& cur, const RingDescriptor& ring) {
  std::vector<Term> terms;
  bool first = true;
  while (true) {
    bool negative = false;
    bool had_sign = false;
    while (cur.peek() == '+' || cur.peek() == '-') {
      had_sign = true;
      if (cur.accept('-')) {
        negative = !negative;
      } else {
        cur.accept('+');
      }
    }
    if (!first && !had_sign) break;
    Term t = poly_term(cur, ring);
    if (negative) t.coefficient = scalar_neg(t.coefficient, ring.coefficient());
    terms.push_back(std::move(t));
    first = false;
    if (cur.at_end()) break;
  }
  return make_poly(std::move(terms), ring);
}

std::string render_scalar(const Scalar& s) {
  return std::visit([](const auto& v) { return v.value.get_str(); }, s);
}

}  // namespace

RingDescriptor parse_ring(std::string_view text) {
  Cursor cur(text);
  RingDescriptor ring = ring_expr(cur, 0);
  if (!cur.at_end()) cur.fail("trailing input");
  return ring;
}

std::string render_ring(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: return "Q";
    case RingKind::Integers: return "Z";
    case RingKind::IntegerQuotient: return "Z/" + ring.modulus().get_str();
    case RingKind::Polynomial: {
      std::string out = "poly(" + render_ring(ring.coefficient()) + "; ";
      for (std::size_t i = 0; i < ring.variables().size(); ++i) {
        if (i > 0) out += ",";
        out += ring.variables()[i];
      }
      return out + "; " + monomial_order_name(ring.order()) + ")";
    }
  }
  return "?";
}

Element parse_element(std::string_view text, const RingDescriptor& ring) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty element");
  Element e = ring.is_polynomial() ? poly_expr(cur, ring) : scalar_expr(cur, ring);
  if (!cur.at_end()) cur.fail("trailing input");
  return e;
}

std::string render_element(const Element& e, const RingDescriptor& ring) {
  require_member(e, ring);
  if (!ring.is_polynomial()) {
    return std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Poly>) {
            return "";
          } else {
            return v.value.get_str();
          }
        },
        e.value());
  }
  const auto& terms = e.get_if<Poly>()->terms;
  if (terms.empty()) return "0";
  const auto& coeff = ring.coefficient();
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    Scalar c = t.coefficient;
    bool negative = false;
    if (coeff.kind() != RingKind::IntegerQuotient &&
        compare_scalars(c, scalar_zero(coeff), coeff) != Ordering::Equivalent) {
      negative = std::visit([](const auto& v) { return v.value < 0; }, c);
    }
    if (negative) c = scalar_neg(c, coeff);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t v = 0; v < t.exponents.size(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.variables()[v];
      if (t.exponents[v] > 1) mono += "^" + std::to_string(t.exponents[v]);
    }
    const bool unit = c == scalar_one(coeff);
    if (mono.empty()) {
      out += render_scalar(c);
    } else if (unit) {
      out += mono;
    } else {
      out += render_scalar(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace rrgb
