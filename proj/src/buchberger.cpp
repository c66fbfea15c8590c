#include "rrgb/buchberger.hpp"

#include "rrgb/domains.hpp"

namespace rrgb {

const char* trace_action_name(TraceAction action) noexcept {
  switch (action) {
    case TraceAction::Base: return "base";
    case TraceAction::LoadPair: return "load-pair";
    case TraceAction::HZero: return "h-zero";
    case TraceAction::HAdded: return "h-added";
  }
  return "unknown";
}

bool measure_decreases(const Measure& before, const Measure& after) {
  if (after.basis_size != before.basis_size) return after.basis_size > before.basis_size;
  if (after.queue_size != before.queue_size) return after.queue_size < before.queue_size;
  return after.crit_size < before.crit_size;
}

PairQueue pairs(std::size_t n) {
  PairQueue out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = k; l <= n; ++l) out.push_back(IndexPair{k, l});
  }
  return out;
}

PairQueue update(const PairQueue& queue, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::StateCorruption, "update with index 0");
  for (const auto& p : queue) {
    if (p.l >= n || p.k > p.l) {
      throw Error(ErrorCode::StateCorruption,
                  "pair queue already refers to index " + std::to_string(p.l) +
                      " while appending index " + std::to_string(n));
    }
  }
  PairQueue out = queue;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(IndexPair{k, n});
  return out;
}

Basis app(const Basis& basis, const Element& h) {
  if (is_zero(h)) throw Error(ErrorCode::ContractViolation, "app with a zero element");
  Basis out = basis;
  out.push_back(h);
  return out;
}

CpdRecord cpd_detailed(const Element& b, const Element& bbar, std::size_t i, std::size_t j,
                       const Basis& basis, const RingDescriptor& ring) {
  (void)i;
  (void)j;
  CpdRecord rec{b, bbar, {}, {}, {}, {}};
  // Both sides go to normal form separately; their difference is never
  // reduced.
  rec.reduced_inputs.push_back(b);
  rec.g = normal_form(b, basis, ring);
  rec.reduced_inputs.push_back(bbar);
  rec.gbar = normal_form(bbar, basis, ring);
  rec.h = sub(rec.g.value, rec.gbar.value, ring);
  return rec;
}

Element cpd(const Element& b, const Element& bbar, std::size_t i, std::size_t j,
            const Basis& basis, const RingDescriptor& ring) {
  return cpd_detailed(b, bbar, i, j, basis, ring).h;
}

namespace {

void check_state(const GbState& s) {
  const std::size_t n = s.basis.size();
  for (const auto& e : s.basis.elements()) {
    if (is_zero(e)) throw Error(ErrorCode::StateCorruption, "basis contains zero");
  }
  for (const auto& p : s.queue) {
    if (p.k == 0 || p.k > p.l || p.l > n) {
      throw Error(ErrorCode::StateCorruption, "pair queue entry out of range");
    }
  }
  if (!s.crit.empty() && (s.i == 0 || s.j == 0 || s.i > n || s.j > n)) {
    throw Error(ErrorCode::StateCorruption, "current pair indices out of range");
  }
}

Measure measure_of(const GbState& s) {
  return Measure{s.basis.size(), s.queue.size(), s.crit.size()};
}

}  // namespace

Basis gbaux(GbState state, const RingDescriptor& ring, GbTrace& trace,
            const GbOptions& options, GbStats* stats) {
  for (const auto& e : state.basis.elements()) require_member(e, ring);
  check_state(state);
  GbStats local;
  GbStats& st = stats != nullptr ? *stats : local;

  // Each iteration is one call of the tail-recursive GBAux.
  std::uint64_t calls = 0;
  while (true) {
    if (++calls > options.step_limit) {
      throw Error(ErrorCode::StepLimit,
                  "step limit of " + std::to_string(options.step_limit) + " exceeded");
    }
    TraceRecord rec;
    rec.measure = measure_of(state);
    rec.i = state.i;
    rec.j = state.j;
    ++st.recursion_steps;

    if (state.crit.empty() && state.queue.empty()) {
      rec.action = TraceAction::Base;
      trace.steps.push_back(std::move(rec));
      return state.basis;
    }

    if (state.crit.empty()) {
      const IndexPair kl = state.queue.front();
      state.queue.pop_front();
      auto pairs_kl = cp(state.basis.at(kl.k), state.basis.at(kl.l), ring, kl);
      state.i = kl.k;
      state.j = kl.l;
      state.crit.assign(std::make_move_iterator(pairs_kl.begin()),
                        std::make_move_iterator(pairs_kl.end()));
      rec.action = TraceAction::LoadPair;
      rec.loaded = kl;
      rec.critical_pairs_loaded = state.crit.size();
      ++st.pairs_processed;
      st.critical_pairs += state.crit.size();
    } else {
      CriticalPair pair = std::move(state.crit.front());
      state.crit.pop_front();
      CpdRecord c = cpd_detailed(pair.first, pair.second, state.i, state.j, state.basis, ring);
      st.reductions += c.g.chain.size() + c.gbar.chain.size();
      if (is_zero(c.h)) {
        rec.action = TraceAction::HZero;
        ++st.h_zero;
      } else {
        const std::size_t n = state.basis.size() + 1;
        Basis next = app(state.basis, c.h);
        if (options.verify_measure) {
          // g and gbar are irreducible modulo the old basis; the larger of
          // the two must become reducible once h is present.
          Basis single;
          single.push_back(c.h);
          if (is_reducible(c.g.value, single, ring)) {
            rec.red_witness = c.g.value;
          } else if (is_reducible(c.gbar.value, single, ring)) {
            rec.red_witness = c.gbar.value;
          } else {
            throw Error(ErrorCode::Internal, "appended element does not enlarge the reducible set");
          }
        }
        state.queue = update(state.queue, n);
        state.basis = std::move(next);
        rec.action = TraceAction::HAdded;
        rec.added = c.h;
        ++st.elements_added;
      }
      rec.cpd = std::move(c);
    }

    if (options.verify_measure && !measure_decreases(rec.measure, measure_of(state))) {
      throw Error(ErrorCode::Internal, "termination measure did not decrease");
    }
    trace.steps.push_back(std::move(rec));
  }
}

GbResult gb(const Basis& basis, const RingDescriptor& ring, const GbOptions& options) {
  for (const auto& e : basis.elements()) require_member(e, ring);
  GbResult result;
  Basis c = strip_zeros(basis);
  GbState state{c, pairs(c.size()), 1, 1, {}};
  result.basis = gbaux(std::move(state), ring, result.trace, options, &result.stats);
  return result;
}

bool is_member(const Element& f, const Basis& basis, const RingDescriptor& ring) {
  return is_zero(normal_form(f, basis, ring).value);
}

bool ideals_equal(const Basis& c1, const Basis& c2, const RingDescriptor& ring,
                  const GbOptions& options) {
  const Basis g1 = gb(c1, ring, options).basis;
  const Basis g2 = gb(c2, ring, options).basis;
  for (const auto& e : c1.elements()) {
    if (!is_member(e, g2, ring)) return false;
  }
  for (const auto& e : c2.elements()) {
    if (!is_member(e, g1, ring)) return false;
  }
  return true;
}

}  // namespace rrgb
