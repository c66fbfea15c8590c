#pragma once

// Buchberger's critical-pair/completion algorithm in reduction rings, the
// GB/GBAux recursion with its helpers, and ideal deciders built on it.

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "rrgb/core.hpp"

namespace rrgb {

using PairQueue = std::deque<IndexPair>;

enum class TraceAction { Base, LoadPair, HZero, HAdded };

const char* trace_action_name(TraceAction action) noexcept;

// Termination measure of one GBAux call. basis_size stands in for red[C]:
// it only grows when an element is appended, and each append is checked to
// enlarge the reducible set.
struct Measure {
  std::size_t basis_size = 0;
  std::size_t queue_size = 0;
  std::size_t crit_size = 0;

  friend bool operator==(const Measure&, const Measure&) = default;
};

// Lexicographic strict decrease from `before` to `after`: larger basis
// first, then shorter pair queue, then shorter critical-pair tuple.
bool measure_decreases(const Measure& before, const Measure& after);

struct CpdRecord {
  Element b;
  Element bbar;
  NormalForm g;
  NormalForm gbar;
  Element h;
  // Arguments of the normal-form computations, in call order.
  std::vector<Element> reduced_inputs;
};

struct TraceRecord {
  TraceAction action = TraceAction::Base;
  Measure measure;
  std::size_t i = 1;
  std::size_t j = 1;
  std::optional<IndexPair> loaded;
  std::size_t critical_pairs_loaded = 0;
  std::optional<CpdRecord> cpd;
  std::optional<Element> added;
  // Element that was irreducible before `added` and reducible after.
  std::optional<Element> red_witness;
};

struct GbTrace {
  std::vector<TraceRecord> steps;
};

struct GbStats {
  std::uint64_t recursion_steps = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t critical_pairs = 0;
  std::uint64_t elements_added = 0;
  std::uint64_t h_zero = 0;
  std::uint64_t reductions = 0;
};

struct GbState {
  Basis basis;
  PairQueue queue;
  std::size_t i = 1;
  std::size_t j = 1;
  std::deque<CriticalPair> crit;
};

struct GbOptions {
  std::uint64_t step_limit = 1'000'000;
  bool verify_measure = true;
};

struct GbResult {
  Basis basis;
  GbTrace trace;
  GbStats stats;
};

PairQueue pairs(std::size_t n);
PairQueue update(const PairQueue& queue, std::size_t n);
Basis app(const Basis& basis, const Element& h);

Element cpd(const Element& b, const Element& bbar, std::size_t i, std::size_t j,
            const Basis& basis, const RingDescriptor& ring);
CpdRecord cpd_detailed(const Element& b, const Element& bbar, std::size_t i, std::size_t j,
                       const Basis& basis, const RingDescriptor& ring);

Basis gbaux(GbState state, const RingDescriptor& ring, GbTrace& trace,
            const GbOptions& options = {}, GbStats* stats = nullptr);

GbResult gb(const Basis& basis, const RingDescriptor& ring, const GbOptions& options = {});

// `basis` must already be a Gröbner basis.
bool is_member(const Element& f, const Basis& basis, const RingDescriptor& ring);

bool ideals_equal(const Basis& c1, const Basis& c2, const RingDescriptor& ring,
                  const GbOptions& options = {});

}  // namespace rrgb
