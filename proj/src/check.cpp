#include "rrgb/check.hpp"

#include <algorithm>

#include "rrgb/domains.hpp"
#include "rrgb/oracle.hpp"

namespace rrgb {

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

bool trace_measure_decreases(const GbTrace& trace) {
  for (std::size_t s = 1; s < trace.steps.size(); ++s) {
    if (!measure_decreases(trace.steps[s - 1].measure, trace.steps[s].measure)) return false;
  }
  return true;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void finite_checks(CheckReport& report, const RingDescriptor& ring, const Basis& input,
                   const Basis& output, const Universe& universe) {
  const bool in_conf = is_confluent(input, universe);
  const bool in_crit = main_theorem_criterion(input, universe);
  report.items.push_back({"basis-confluent", in_conf,
                          "unique normal forms over " + std::to_string(universe.size()) +
                              " elements"});
  report.items.push_back({"basis-criterion", in_crit,
                          "critical pairs of all basis pairs connect below their sources"});
  report.items.push_back({"criterion-matches-confluence", in_conf == in_crit,
                          "confluent: " + yes_no(in_conf) + ", criterion: " + yes_no(in_crit)});
  report.items.push_back({"gb-confluent", is_confluent(output, universe),
                          "completed basis of " + std::to_string(output.size()) + " elements"});
  report.items.push_back({"gb-criterion", main_theorem_criterion(output, universe),
                          "completed basis of " + std::to_string(output.size()) + " elements"});

  if (ring.kind() == RingKind::IntegerQuotient) {
    const bool same = ideal_enumerate(input, ring) == ideal_enumerate(output, ring);
    report.items.push_back({"ideal-preserved", same, "exhaustive ideal enumeration"});
  } else {
    // The ideal of integers c_1..c_k is gcd * Z.
    mpz_class g = 0;
    for (const auto& e : input.elements()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_if<Integer>()->value.get_mpz_t());
    }
    std::size_t mismatches = 0;
    for (const auto& x : universe.elements()) {
      const mpz_class& v = x.get_if<Integer>()->value;
      const bool expected = g == 0 ? v == 0 : mpz_divisible_p(v.get_mpz_t(), g.get_mpz_t()) != 0;
      if (is_member(x, output, ring) != expected) ++mismatches;
    }
    report.items.push_back({"ideal-preserved", mismatches == 0,
                            "membership against gcd " + g.get_str() + ", " +
                                std::to_string(mismatches) + " mismatches"});
  }
}

std::size_t nonzero_s_polynomials(const Basis& basis, const RingDescriptor& ring) {
  std::size_t bad = 0;
  for (std::size_t k = 1; k <= basis.size(); ++k) {
    for (std::size_t l = k + 1; l <= basis.size(); ++l) {
      if (!is_zero(classical_reduce(s_polynomial(basis.at(k), basis.at(l), ring), basis, ring))) {
        ++bad;
      }
    }
  }
  return bad;
}

void polynomial_checks(CheckReport& report, const RingDescriptor& ring, const Basis& input,
                       const Basis& output) {
  const std::size_t bad_input = nonzero_s_polynomials(input, ring);
  report.items.push_back({"basis-s-polynomials-reduce", bad_input == 0,
                          std::to_string(bad_input) + " S-polynomials with nonzero remainder"});

  const std::size_t bad_s = nonzero_s_polynomials(output, ring);
  std::size_t bad_cp = 0;
  for (std::size_t k = 1; k <= output.size(); ++k) {
    for (std::size_t l = k; l <= output.size(); ++l) {
      for (const auto& p : cp(output.at(k), output.at(l), ring, {k, l})) {
        if (!is_zero(classical_reduce(sub(p.first, p.second, ring), output, ring))) ++bad_cp;
      }
    }
  }
  report.items.push_back({"gb-s-polynomials-reduce", bad_s == 0,
                          std::to_string(bad_s) + " S-polynomials with nonzero remainder"});
  report.items.push_back({"gb-critical-pairs-reduce", bad_cp == 0,
                          std::to_string(bad_cp) + " critical pairs with nonzero remainder"});

  const Basis classical = classical_buchberger(input, ring);
  std::size_t mismatches = 0;
  for (const auto& e : classical.elements()) {
    if (!is_zero(classical_reduce(e, output, ring))) ++mismatches;
  }
  for (const auto& e : output.elements()) {
    if (!is_zero(classical_reduce(e, classical, ring))) ++mismatches;
  }
  report.items.push_back({"ideal-matches-classical", mismatches == 0,
                          std::to_string(mismatches) + " elements outside the other ideal"});
}

}  // namespace

CheckReport run_checks(const RingDescriptor& ring, const Basis& basis,
                       std::optional<mpz_class> bound, const GbOptions& options) {
  const bool rational_poly =
      ring.is_polynomial() && ring.coefficient().kind() == RingKind::Rationals;
  if (ring.kind() != RingKind::IntegerQuotient && ring.kind() != RingKind::Integers &&
      !rational_poly) {
    throw Error(ErrorCode::Unsupported, "check supports Z, Z/n and polynomials over Q");
  }
  const Basis input = strip_zeros(basis);
  const GbResult result = gb(input, ring, options);

  CheckReport report;
  if (rational_poly) {
    polynomial_checks(report, ring, input, result.basis);
  } else {
    std::optional<mpz_class> universe_bound;
    if (ring.kind() == RingKind::Integers) {
      Basis all = input;
      for (const auto& e : result.basis.elements()) all.push_back(e);
      universe_bound = bound.value_or(default_integer_bound(all));
      report.bound = *universe_bound;
    }
    const Universe universe = Universe::of(ring, universe_bound);
    finite_checks(report, ring, input, result.basis, universe);
  }
  report.items.push_back({"measure-decreasing", trace_measure_decreases(result.trace),
                          std::to_string(result.trace.steps.size()) + " recursion steps"});
  return report;
}

}  // namespace rrgb
