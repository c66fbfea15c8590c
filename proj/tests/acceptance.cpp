// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "rrgb/buchberger.hpp"
#include "rrgb/check.hpp"
#include "rrgb/domains.hpp"
#include "rrgb/oracle.hpp"
#include "support.hpp"

using namespace rrgb;
using rrgb::testing::basis_of;
using rrgb::testing::el;
using rrgb::testing::Generator;
using rrgb::testing::qxy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Q[x,y] systems: up to three generators of total degree <= 3.
Basis qxy_system(Generator& gen, const RingDescriptor& ring, std::size_t max_gens = 3) {
  Basis b;
  const auto count = gen.integer(1, static_cast<long>(max_gens));
  while (b.size() < static_cast<std::size_t>(count)) {
    Element p = gen.polynomial(ring, 3, 3, 5);
    if (!is_zero(p)) b.push_back(std::move(p));
  }
  return b;
}

Basis random_basis(Generator& gen, const RingDescriptor& ring) {
  if (ring.is_polynomial()) return qxy_system(gen, ring);
  return gen.basis(ring, 1, 3, 60);
}

mpz_class gcd_of(const Basis& b) {
  mpz_class g = 0;
  for (const auto& e : b.elements()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_if<Integer>()->value.get_mpz_t());
  }
  return g;
}

std::vector<RingDescriptor> quotients(long lo, long hi) {
  std::vector<RingDescriptor> out;
  for (long n = lo; n <= hi; ++n) out.push_back(RingDescriptor::quotient(n));
  return out;
}

Outcome criterion_termination_and_type(Outcome& type_outcome) {
  const std::vector<RingDescriptor> rings{
      RingDescriptor::integers(),  RingDescriptor::rationals(), RingDescriptor::quotient(4),
      RingDescriptor::quotient(6), RingDescriptor::quotient(8),  RingDescriptor::quotient(9),
      RingDescriptor::quotient(12), qxy()};
  Generator gen(1001);
  Outcome out;
  std::size_t runs = 0;
  std::size_t transitions = 0;
  std::size_t outputs = 0;
  std::size_t bad_measure = 0;
  std::size_t bad_type = 0;
  std::size_t limit_hits = 0;
  const auto start = Clock::now();
  for (const auto& ring : rings) {
    for (int t = 0; t < 200; ++t) {
      const Basis c = random_basis(gen, ring);
      try {
        const GbResult r = gb(c, ring);
        ++runs;
        transitions += r.trace.steps.size() - 1;
        if (!trace_measure_decreases(r.trace)) ++bad_measure;
        for (const auto& e : r.basis.elements()) {
          ++outputs;
          if (!is_canonical(e, ring)) ++bad_type;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::StepLimit) throw;
        ++limit_hits;
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.passed = limit_hits == 0 && bad_measure == 0 && elapsed < 120.0;
  out.detail = std::to_string(runs) + " runs over 8 domains, " + std::to_string(limit_hits) +
               " step-limit hits, " + std::to_string(bad_measure) + " traces with a non-decreasing "
               "transition out of " + std::to_string(transitions) + " transitions, " +
               std::to_string(elapsed).substr(0, 5) + " s";
  type_outcome.passed = bad_type == 0 && runs > 0;
  type_outcome.detail = std::to_string(outputs) + " output elements, " +
                        std::to_string(bad_type) + " non-canonical";
  return out;
}

Outcome criterion_ideal_preservation() {
  Generator gen(2002);
  std::size_t finite_mismatch = 0;
  std::size_t finite_runs = 0;
  for (const auto& ring : quotients(2, 12)) {
    for (int t = 0; t < 50; ++t) {
      const Basis c = gen.basis(ring, 1, 3);
      ++finite_runs;
      if (ideal_enumerate(c, ring) != ideal_enumerate(gb(c, ring).basis, ring)) ++finite_mismatch;
    }
  }

  const auto z = RingDescriptor::integers();
  std::size_t z_mismatch = 0;
  std::size_t z_samples = 0;
  for (int t = 0; t < 50; ++t) {
    const Basis c = gen.basis(z, 1, 3, 60);
    const Basis g = gb(c, z).basis;
    const mpz_class d = gcd_of(c);
    for (long x = -100; x <= 100; ++x) {
      ++z_samples;
      const bool expected = x % d.get_si() == 0;
      if (is_member(Integer{x}, g, z) != expected) ++z_mismatch;
    }
  }

  const auto r = qxy();
  std::size_t poly_mismatch = 0;
  for (int t = 0; t < 20; ++t) {
    const Basis c = qxy_system(gen, r);
    const Basis g = gb(c, r).basis;
    const Basis classical = classical_buchberger(c, r);
    for (const auto& e : classical.elements()) {
      if (!is_zero(normal_form(e, g, r).value)) ++poly_mismatch;
    }
    for (const auto& e : g.elements()) {
      if (!is_zero(classical_reduce(e, classical, r))) ++poly_mismatch;
    }
  }
  Outcome out;
  out.passed = finite_mismatch == 0 && z_mismatch == 0 && poly_mismatch == 0;
  out.detail = "Z/n: " + std::to_string(finite_mismatch) + "/" + std::to_string(finite_runs) +
               " ideal mismatches; Z: " + std::to_string(z_mismatch) + "/" +
               std::to_string(z_samples) + " membership mismatches; Q[x,y]: " +
               std::to_string(poly_mismatch) + " mutual reduction failures over 20 systems";
  return out;
}

Outcome criterion_groebner_property() {
  const auto start = Clock::now();
  Generator gen(3003);
  std::size_t finite_fail = 0;
  std::size_t finite_runs = 0;
  for (const auto& ring : quotients(2, 12)) {
    const Universe u = Universe::of(ring);
    for (int t = 0; t < 50; ++t) {
      const Basis g = gb(gen.basis(ring, 1, 3), ring).basis;
      ++finite_runs;
      if (!is_confluent(g, u) || !main_theorem_criterion(g, u)) ++finite_fail;
    }
  }
  const auto r = qxy();
  std::size_t poly_fail = 0;
  std::size_t checked_pairs = 0;
  for (int t = 0; t < 50; ++t) {
    const Basis g = gb(qxy_system(gen, r), r).basis;
    for (std::size_t k = 1; k <= g.size(); ++k) {
      for (std::size_t l = k; l <= g.size(); ++l) {
        for (const auto& p : cp(g.at(k), g.at(l), r, {k, l})) {
          ++checked_pairs;
          if (!is_zero(classical_reduce(sub(p.first, p.second, r), g, r)) ||
              normal_form(p.first, g, r).value != normal_form(p.second, g, r).value) {
            ++poly_fail;
          }
        }
        if (k < l) {
          ++checked_pairs;
          if (!is_zero(classical_reduce(s_polynomial(g.at(k), g.at(l), r), g, r))) ++poly_fail;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  Outcome out;
  out.passed = finite_fail == 0 && poly_fail == 0 && elapsed < 300.0;
  out.detail = "Z/n: " + std::to_string(finite_fail) + "/" + std::to_string(finite_runs) +
               " outputs not confluent or failing the criterion; Q[x,y]: " +
               std::to_string(poly_fail) + "/" + std::to_string(checked_pairs) +
               " critical pairs or S-polynomials not reducing to 0; " +
               std::to_string(elapsed).substr(0, 5) + " s";
  return out;
}

Outcome criterion_theorem_instances() {
  Generator gen(4004);
  std::size_t disagreements = 0;
  std::size_t confluent = 0;
  std::size_t total = 0;
  for (long n : {4L, 5L, 6L, 8L}) {
    const auto ring = RingDescriptor::quotient(n);
    const Universe u = Universe::of(ring);
    for (int t = 0; t < 100; ++t) {
      const Basis c = gen.basis(ring, 1, 3);
      const bool conf = is_confluent(c, u);
      ++total;
      if (conf) ++confluent;
      if (main_theorem_criterion(c, u) != conf) ++disagreements;
    }
  }
  Outcome out;
  out.passed = disagreements == 0 && confluent > 0 && confluent < total;
  out.detail = std::to_string(total) + " bases (" + std::to_string(confluent) + " confluent), " +
               std::to_string(disagreements) + " disagreements";
  return out;
}

Outcome criterion_structural_differences() {
  Outcome out;
  // (a) Self-pairs are scheduled.
  bool self_pairs = true;
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto p = pairs(n);
    for (std::size_t k = 1; k <= n; ++k) {
      self_pairs = self_pairs && std::find(p.begin(), p.end(), IndexPair{k, k}) != p.end();
    }
  }

  // (b) First Z/n pair, by enumeration, with at least two critical pairs.
  std::string instance = "none found";
  bool multi_exercised = false;
  for (long n = 2; n <= 16 && !multi_exercised; ++n) {
    const auto ring = RingDescriptor::quotient(n);
    for (long a = 1; a < n && !multi_exercised; ++a) {
      for (long b = 1; b < n && !multi_exercised; ++b) {
        const Element c = Residue{a};
        const Element cbar = Residue{b};
        const auto pairs_found = cp(c, cbar, ring, {1, 2});
        if (pairs_found.size() < 2) continue;
        Basis basis;
        basis.push_back(c);
        basis.push_back(cbar);
        const GbResult r = gb(basis, ring);
        bool loaded = false;
        for (const auto& rec : r.trace.steps) {
          if (rec.action == TraceAction::LoadPair && rec.loaded == IndexPair{1, 2} &&
              rec.critical_pairs_loaded == pairs_found.size()) {
            loaded = true;
          }
        }
        const Universe u = Universe::of(ring);
        multi_exercised = loaded && is_confluent(r.basis, u);
        instance = "Z/" + std::to_string(n) + " cp(" + std::to_string(a) + ", " +
                   std::to_string(b) + ") with " + std::to_string(pairs_found.size()) + " pairs";
      }
    }
  }

  // (c) Each cpd step reduces b and b-bar, in that order, and only then subtracts.
  Generator gen(6006);
  std::size_t cpd_records = 0;
  std::size_t cpd_bad = 0;
  const std::vector<RingDescriptor> rings{RingDescriptor::quotient(12), RingDescriptor::integers(),
                                          qxy()};
  for (const auto& ring : rings) {
    for (int t = 0; t < 40; ++t) {
      const GbResult r = gb(random_basis(gen, ring), ring);
      for (const auto& rec : r.trace.steps) {
        if (!rec.cpd) continue;
        ++cpd_records;
        const auto& c = *rec.cpd;
        const bool ok = c.reduced_inputs.size() == 2 && c.reduced_inputs[0] == c.b &&
                        c.reduced_inputs[1] == c.bbar && c.g.input == c.b &&
                        c.gbar.input == c.bbar && c.h == sub(c.g.value, c.gbar.value, ring);
        if (!ok) ++cpd_bad;
      }
    }
  }
  out.passed = self_pairs && multi_exercised && cpd_bad == 0 && cpd_records > 0;
  out.detail = std::string("(a) self-pairs ") + (self_pairs ? "present" : "missing") +
               "; (b) " + instance + (multi_exercised ? ", completed and confluent" : "") +
               "; (c) " + std::to_string(cpd_bad) + "/" + std::to_string(cpd_records) +
               " cpd records reducing anything but b then b-bar";
  return out;
}

Outcome criterion_unique_normal_forms() {
  Generator gen(7007);
  std::size_t finite_checked = 0;
  std::size_t differ = 0;
  for (const auto& ring : quotients(2, 12)) {
    const Universe u = Universe::of(ring);
    for (int t = 0; t < 50; ++t) {
      const Basis g = gb(gen.basis(ring, 1, 3), ring).basis;
      for (const auto& a : u.elements()) {
        ++finite_checked;
        if (normal_form(a, g, ring).value !=
            normal_form(a, g, ring, Strategy::HighestIndexFirst).value) {
          ++differ;
        }
      }
    }
  }
  std::size_t sampled = 0;
  const std::vector<RingDescriptor> infinite{RingDescriptor::integers(), qxy()};
  for (const auto& ring : infinite) {
    std::vector<Basis> bases;
    for (int t = 0; t < 20; ++t) bases.push_back(gb(random_basis(gen, ring), ring).basis);
    for (int s = 0; s < 1000; ++s) {
      const Basis& g = bases[static_cast<std::size_t>(s) % bases.size()];
      const Element a = ring.is_polynomial() ? gen.polynomial(ring, 4, 4, 9)
                                             : gen.element(ring, 1000);
      ++sampled;
      if (normal_form(a, g, ring).value !=
          normal_form(a, g, ring, Strategy::HighestIndexFirst).value) {
        ++differ;
      }
    }
  }
  Outcome out;
  out.passed = differ == 0;
  out.detail = std::to_string(finite_checked) + " exhaustive Z/n elements and " +
               std::to_string(sampled) + " sampled Z and Q[x,y] elements, " +
               std::to_string(differ) + " strategy disagreements";
  return out;
}

Outcome criterion_classical_cross_check() {
  const auto r = qxy();
  const auto start = Clock::now();
  const Basis g = gb(basis_of({"x^2 - 1", "xy - 1"}, r), r).basis;
  const Basis expected = basis_of({"x^2 - 1", "xy - 1", "x - y", "y^2 - 1"}, r);
  const bool equal = ideals_equal(g, expected, r);
  const double elapsed = seconds_since(start);
  const Basis classical = classical_buchberger(expected, r);
  bool classical_agrees = true;
  for (const auto& e : g.elements()) {
    classical_agrees = classical_agrees && is_zero(classical_reduce(e, classical, r));
  }
  for (const auto& e : expected.elements()) {
    classical_agrees = classical_agrees && is_zero(normal_form(e, g, r).value);
  }
  Outcome out;
  out.passed = equal && classical_agrees && elapsed < 1.0;
  out.detail = "gb has " + std::to_string(g.size()) + " elements, ideal-equal " +
               (equal ? "yes" : "no") + ", classical oracle " +
               (classical_agrees ? "agrees" : "disagrees") + ", " +
               std::to_string(elapsed * 1000).substr(0, 6) + " ms";
  return out;
}

}  // namespace

int main() {
  struct Line {
    int number;
    const char* name;
    Outcome outcome;
  };
  std::vector<Line> lines;
  auto run = [&](int number, const char* name, const std::function<Outcome()>& body) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %d %s: %s\n", o.passed ? "PASS" : "FAIL", number, name,
                o.detail.c_str());
    std::fflush(stdout);
    lines.push_back({number, name, o});
  };

  Outcome type_outcome{false, "not run"};
  run(1, "termination", [&] { return criterion_termination_and_type(type_outcome); });
  run(2, "canonical output", [&] { return type_outcome; });
  run(3, "ideal preservation", criterion_ideal_preservation);
  run(4, "groebner property", criterion_groebner_property);
  run(5, "criterion matches confluence", criterion_theorem_instances);
  run(6, "structural differences", criterion_structural_differences);
  run(7, "unique normal forms", criterion_unique_normal_forms);
  run(8, "classical cross-check", criterion_classical_cross_check);

  const bool all = std::all_of(lines.begin(), lines.end(),
                               [](const Line& l) { return l.outcome.passed; });
  std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "FAILURES", lines.size());
  return all ? 0 : 1;
}
