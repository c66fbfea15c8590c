#include "rrgb/core.hpp"

#include <algorithm>

#include "rrgb/domains.hpp"

namespace rrgb {

const Element& Basis::at(std::size_t k) const {
  if (k == 0 || k > elements_.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "basis index " + std::to_string(k) + " out of range 1.." +
                    std::to_string(elements_.size()));
  }
  return elements_[k - 1];
}

Basis strip_zeros(const Basis& basis) {
  Basis out;
  for (const auto& e : basis.elements()) {
    if (!is_zero(e)) out.push_back(e);
  }
  return out;
}

bool order_below(const Element& x, const Element& y, const RingDescriptor& ring) {
  return compare(x, y, ring) == Ordering::Less;
}

namespace {

void require_nonzero(const Element& c) {
  if (is_zero(c)) throw Error(ErrorCode::ZeroReducer, "reduction by zero");
}

const Scalar& scalar_view(const Element& e, Scalar& storage) {
  storage = std::visit(
      [](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Poly>) {
          throw Error(ErrorCode::DescriptorMismatch, "polynomial given for a scalar ring");
        } else {
          return v;
        }
      },
      e.value());
  return storage;
}

std::optional<ReductionStep> poly_reduce_step(const Element& a, const Element& c,
                                              const RingDescriptor& ring) {
  const auto& coeff = ring.coefficient();
  const auto reducers = effective_reducers(c, ring);
  std::vector<LeadingMonomial> leads;
  leads.reserve(reducers.size());
  for (const auto& r : reducers) leads.push_back(leading_monomial(r.reducer, ring));

  // The highest term of a that some reducer can lower decides the step.
  for (const auto& t : a.get_if<Poly>()->terms) {
    std::optional<ScalarReduction> best;
    std::size_t best_index = 0;
    for (std::size_t idx = 0; idx < reducers.size(); ++idx) {
      if (!monomial_divides(leads[idx].exponents, t.exponents)) continue;
      auto r = reduce_scalar(t.coefficient, leads[idx].coefficient, coeff);
      if (!r) continue;
      if (!best || compare_scalars(r->result, best->result, coeff) == Ordering::Less) {
        best = std::move(r);
        best_index = idx;
      }
    }
    if (best) {
      const Scalar factor = scalar_mul(best->multiplier, reducers[best_index].factor, coeff);
      Element m = make_monomial(factor, monomial_quotient(t.exponents, leads[best_index].exponents),
                                ring);
      Element result = sub(a, mul(m, c, ring), ring);
      return ReductionStep{c, std::move(m), std::move(result)};
    }
  }
  return std::nullopt;
}

bool nontrivial_common_reducible(const Element& a, const Element& c1, const Element& c2,
                                 const RingDescriptor& ring) {
  auto s1 = reduce_step(a, c1, ring);
  if (!s1) return false;
  auto s2 = reduce_step(a, c2, ring);
  if (!s2) return false;
  return !(s1->result == s2->result);
}

// Residues 0, 1, -1, 2, -2, ... in ascending order.
std::vector<mpz_class> residues_ascending(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (mpz_class k = 0; 2 * k <= n; ++k) {
    out.push_back(k);
    if (k > 0 && 2 * k < n) out.push_back(n - k);
  }
  return out;
}

// First non-trivial common reducible in the integer order, scanning
// magnitudes from floor(D/2) up to 2*lcm; below D/2 nothing is reducible by
// the coefficient of magnitude D.
template <typename Candidate>
std::vector<Element> integer_scan(const mpz_class& c1, const mpz_class& c2, Candidate&& candidate,
                                  const Element& r1, const Element& r2,
                                  const RingDescriptor& ring) {
  const mpz_class a1 = abs(c1);
  const mpz_class a2 = abs(c2);
  const mpz_class top = std::max(a1, a2);
  mpz_class bound;
  mpz_lcm(bound.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
  bound *= 2;
  for (mpz_class k = top / 2; k <= bound; ++k) {
    for (int sign : {1, -1}) {
      if (sign < 0 && k == 0) continue;
      Element a = candidate(mpz_class(sign * k));
      if (nontrivial_common_reducible(a, r1, r2, ring)) return {a};
    }
  }
  return {};
}

// Over Z/n, each scalar multiple g*c with g | n reduces on its own. Pairs
// come from every combination of such multiples: the source s*X^L is
// lead-reduced once by each side, and kept when the two reducts differ.
std::vector<CriticalPair> quotient_poly_pairs(const Element& c1, const Element& c2,
                                              const RingDescriptor& ring) {
  const auto& coeff = ring.coefficient();
  const auto e1 = effective_reducers(c1, ring);
  const auto e2 = effective_reducers(c2, ring);
  const bool self = c1 == c2;
  auto lead_reduce = [&](const Element& a, const Scalar& s, const Exponents& at,
                         const EffectiveReducer& r, const Element& c) -> std::optional<Element> {
    const auto lm = leading_monomial(r.reducer, ring);
    auto red = reduce_scalar(s, lm.coefficient, coeff);
    if (!red) return std::nullopt;
    const Scalar factor = scalar_mul(red->multiplier, r.factor, coeff);
    return sub(a, mul(make_monomial(factor, monomial_quotient(at, lm.exponents), ring), c, ring),
               ring);
  };
  std::vector<CriticalPair> out;
  for (const auto& r1 : e1) {
    for (const auto& r2 : e2) {
      const auto l = monomial_lcm(leading_monomial(r1.reducer, ring).exponents,
                                  leading_monomial(r2.reducer, ring).exponents);
      for (const auto& v : residues_ascending(coeff.modulus())) {
        if (v == 0) continue;
        const Scalar s = Residue{v};
        Element a = make_monomial(s, l, ring);
        auto b1 = lead_reduce(a, s, l, r1, c1);
        if (!b1) continue;
        auto b2 = lead_reduce(a, s, l, r2, c2);
        if (!b2 || *b1 == *b2) continue;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const CriticalPair& p) {
          return p.source == a && ((p.first == *b1 && p.second == *b2) ||
                                   (self && p.first == *b2 && p.second == *b1));
        });
        if (!seen) out.push_back(CriticalPair{std::move(*b1), std::move(*b2), std::move(a), {}});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const CriticalPair& x, const CriticalPair& y) {
    return compare(x.source, y.source, ring) == Ordering::Less;
  });
  return out;
}

std::vector<Element> poly_mntcr(const Element& c1, const Element& c2,
                                const RingDescriptor& ring) {
  const auto& coeff = ring.coefficient();
  const auto lm1 = leading_monomial(c1, ring);
  const auto lm2 = leading_monomial(c2, ring);
  switch (coeff.kind()) {
    case RingKind::Rationals:
      return {make_monomial(scalar_one(coeff), monomial_lcm(lm1.exponents, lm2.exponents), ring)};
    case RingKind::Integers: {
      const auto lcm = monomial_lcm(lm1.exponents, lm2.exponents);
      return integer_scan(
          std::get<Integer>(lm1.coefficient).value, std::get<Integer>(lm2.coefficient).value,
          [&](const mpz_class& s) { return make_monomial(Integer{s}, lcm, ring); }, c1, c2, ring);
    }
    case RingKind::IntegerQuotient: {
      std::vector<Element> out;
      for (auto& p : quotient_poly_pairs(c1, c2, ring)) {
        if (std::find(out.begin(), out.end(), p.source) == out.end()) {
          out.push_back(std::move(p.source));
        }
      }
      return out;
    }
    case RingKind::Polynomial: break;
  }
  throw Error(ErrorCode::Unsupported, "nested polynomial rings are not supported");
}

}  // namespace

std::optional<ReductionStep> reduce_step(const Element& a, const Element& c,
                                         const RingDescriptor& ring) {
  require_member(a, ring);
  require_member(c, ring);
  require_nonzero(c);
  std::optional<ReductionStep> step;
  if (ring.is_polynomial()) {
    step = poly_reduce_step(a, c, ring);
  } else {
    Scalar sa;
    Scalar sc;
    auto r = reduce_scalar(scalar_view(a, sa), scalar_view(c, sc), ring);
    if (r) {
      step = ReductionStep{c, Element::from_scalar(r->multiplier),
                           Element::from_scalar(r->result)};
    }
  }
  if (step && !order_below(step->result, a, ring)) {
    throw Error(ErrorCode::Internal, "reduction step does not descend");
  }
  return step;
}

bool is_reducible(const Element& a, const Basis& basis, const RingDescriptor& ring) {
  for (const auto& c : basis.elements()) {
    if (reduce_step(a, c, ring)) return true;
  }
  return false;
}

NormalForm normal_form(const Element& a, const Basis& basis, const RingDescriptor& ring,
                       Strategy strategy) {
  NormalForm nf{a, a, {}};
  const std::size_t n = basis.size();
  while (true) {
    bool progressed = false;
    for (std::size_t pos = 0; pos < n && !progressed; ++pos) {
      const std::size_t k = strategy == Strategy::LowestIndexFirst ? pos + 1 : n - pos;
      if (auto step = reduce_step(nf.value, basis.at(k), ring)) {
        nf.value = step->result;
        nf.chain.push_back(AppliedStep{k, std::move(*step)});
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  return nf;
}

std::vector<Element> mntcr(const Element& c1, const Element& c2, const RingDescriptor& ring) {
  require_member(c1, ring);
  require_member(c2, ring);
  require_nonzero(c1);
  require_nonzero(c2);
  switch (ring.kind()) {
    case RingKind::Rationals:
      return {one(ring)};
    case RingKind::Integers:
      return integer_scan(
          c1.get_if<Integer>()->value, c2.get_if<Integer>()->value,
          [](const mpz_class& s) { return Element(Integer{s}); }, c1, c2, ring);
    case RingKind::IntegerQuotient: {
      // Every non-trivial common reducible, ascending; not just the least.
      std::vector<Element> out;
      for (const auto& s : residues_ascending(ring.modulus())) {
        Element a(Residue{s});
        if (nontrivial_common_reducible(a, c1, c2, ring)) out.push_back(std::move(a));
      }
      return out;
    }
    case RingKind::Polynomial:
      return poly_mntcr(c1, c2, ring);
  }
  return {};
}

std::vector<CriticalPair> cp(const Element& ck, const Element& cl, const RingDescriptor& ring,
                             IndexPair reducers) {
  if (ring.is_polynomial() && ring.coefficient().kind() == RingKind::IntegerQuotient) {
    require_member(ck, ring);
    require_member(cl, ring);
    require_nonzero(ck);
    require_nonzero(cl);
    auto pairs = quotient_poly_pairs(ck, cl, ring);
    for (auto& p : pairs) p.reducers = reducers;
    return pairs;
  }
  std::vector<CriticalPair> out;
  for (auto& a : mntcr(ck, cl, ring)) {
    auto s1 = reduce_step(a, ck, ring);
    auto s2 = reduce_step(a, cl, ring);
    if (!s1 || !s2) {
      throw Error(ErrorCode::Internal, "common reducible is not reducible by both elements");
    }
    out.push_back(CriticalPair{std::move(s1->result), std::move(s2->result), std::move(a),
                               reducers});
  }
  return out;
}

}  // namespace rrgb
