#include "rrgb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rrgb/domains.hpp"

namespace rrgb {

Universe Universe::of(const RingDescriptor& ring, std::optional<mpz_class> bound) {
  switch (ring.kind()) {
    case RingKind::IntegerQuotient: {
      Universe u(ring, 0);
      for (mpz_class r = 0; r < ring.modulus(); ++r) u.elements_.push_back(Element(Residue{r}));
      return u;
    }
    case RingKind::Integers: {
      if (!bound || *bound < 0) {
        throw Error(ErrorCode::InvalidArgument, "integer universe needs a nonnegative bound");
      }
      Universe u(ring, *bound);
      for (mpz_class x = -*bound; x <= *bound; ++x) u.elements_.push_back(Element(Integer{x}));
      return u;
    }
    default:
      throw Error(ErrorCode::Unsupported, "exhaustive checks need Z/n or bounded Z");
  }
}

bool Universe::contains(const Element& e) const {
  if (ring_.kind() == RingKind::IntegerQuotient) return is_canonical(e, ring_);
  const auto* v = e.get_if<Integer>();
  return v != nullptr && abs(v->value) <= bound_;
}

std::size_t Universe::index_of(const Element& e) const {
  if (!contains(e)) throw Error(ErrorCode::Range, "element lies outside the checked universe");
  if (ring_.kind() == RingKind::IntegerQuotient) return e.get_if<Residue>()->value.get_ui();
  return mpz_class(e.get_if<Integer>()->value + bound_).get_ui();
}

mpz_class default_integer_bound(const Basis& basis) {
  mpz_class top = 1;
  for (const auto& e : basis.elements()) {
    if (const auto* v = e.get_if<Integer>()) top = std::max(top, mpz_class(abs(v->value)));
  }
  return 8 * top;
}

ReductionGraph::ReductionGraph(const Basis& basis, const Universe& universe)
    : universe_(&universe), out_(universe.size()), undirected_(universe.size()) {
  const auto& ring = universe.ring();
  const auto& nodes = universe.elements();
  for (std::size_t k = 1; k <= basis.size(); ++k) {
    const Element& c = basis.at(k);
    if (is_zero(c)) throw Error(ErrorCode::ZeroReducer, "reduction by zero");
    std::vector<Element> multipliers;
    if (ring.kind() == RingKind::IntegerQuotient) {
      multipliers = nodes;
    }
    for (std::size_t from = 0; from < nodes.size(); ++from) {
      const Element& a = nodes[from];
      if (ring.kind() == RingKind::Integers) {
        // Every m with |a - m*c| <= bound.
        const mpz_class& cv = c.get_if<Integer>()->value;
        const mpz_class span =
            (abs(a.get_if<Integer>()->value) + (nodes.size() - 1) / 2) / abs(cv) + 1;
        multipliers.clear();
        for (mpz_class m = -span; m <= span; ++m) multipliers.push_back(Element(Integer{m}));
      }
      std::set<std::size_t> targets;
      for (const auto& m : multipliers) {
        Element b = sub(a, mul(m, c, ring), ring);
        if (!universe.contains(b)) continue;
        if (compare(b, a, ring) != Ordering::Less) continue;
        targets.insert(universe.index_of(b));
      }
      for (auto to : targets) {
        out_[from].push_back(GraphEdge{to, k});
        undirected_[from].push_back(to);
        undirected_[to].push_back(from);
      }
    }
  }
}

bool ReductionGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(out_[from].begin(), out_[from].end(),
                     [&](const GraphEdge& e) { return e.target == to; });
}

std::vector<std::vector<std::size_t>> ReductionGraph::terminal_descendants() const {
  const std::size_t n = out_.size();
  std::vector<std::vector<std::size_t>> terminals(n);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < out_[node].size()) {
        const std::size_t to = out_[node][next++].target;
        if (state[to] == 1) {
          throw Error(ErrorCode::DomainOrderViolation, "reduction graph has a cycle");
        }
        if (state[to] == 0) {
          state[to] = 1;
          stack.emplace_back(to, 0);
        }
        continue;
      }
      std::vector<std::size_t> acc;
      if (out_[node].empty()) {
        acc.push_back(node);
      } else {
        for (const auto& e : out_[node]) {
          acc.insert(acc.end(), terminals[e.target].begin(), terminals[e.target].end());
        }
        std::sort(acc.begin(), acc.end());
        acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
      }
      terminals[node] = std::move(acc);
      state[node] = 2;
      stack.pop_back();
    }
  }
  return terminals;
}

std::vector<int> ReductionGraph::components_below(const Element& a) const {
  const auto& ring = universe_->ring();
  const auto& nodes = universe_->elements();
  std::vector<int> comp(nodes.size(), -1);
  std::vector<bool> below(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    below[i] = compare(nodes[i], a, ring) == Ordering::Less;
  }
  int next = 0;
  for (std::size_t start = 0; start < nodes.size(); ++start) {
    if (!below[start] || comp[start] >= 0) continue;
    std::deque<std::size_t> queue{start};
    comp[start] = next;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto w : undirected_[v]) {
        if (below[w] && comp[w] < 0) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool ReductionGraph::connectible_below(const Element& b, const Element& bbar,
                                       const Element& a) const {
  const auto& ring = universe_->ring();
  if (compare(b, a, ring) != Ordering::Less || compare(bbar, a, ring) != Ordering::Less) {
    return false;
  }
  if (b == bbar) return true;
  const auto comp = components_below(a);
  return comp[universe_->index_of(b)] == comp[universe_->index_of(bbar)];
}

std::vector<Element> red_set(const Basis& basis, const Universe& universe) {
  ReductionGraph graph(basis, universe);
  std::vector<Element> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!graph.out(i).empty()) out.push_back(universe.elements()[i]);
  }
  return out;
}

bool is_confluent(const Basis& basis, const Universe& universe) {
  ReductionGraph graph(basis, universe);
  const auto terminals = graph.terminal_descendants();
  return std::all_of(terminals.begin(), terminals.end(),
                     [](const auto& t) { return t.size() == 1; });
}

bool connectible_below(const Element& b, const Element& bbar, const Element& a,
                       const Basis& basis, const Universe& universe) {
  return ReductionGraph(basis, universe).connectible_below(b, bbar, a);
}

bool main_theorem_criterion(const Basis& basis, const Universe& universe) {
  const auto& ring = universe.ring();
  ReductionGraph graph(basis, universe);
  for (std::size_t k = 1; k <= basis.size(); ++k) {
    for (std::size_t l = k; l <= basis.size(); ++l) {
      for (const auto& a : mntcr(basis.at(k), basis.at(l), ring)) {
        const std::size_t ai = universe.index_of(a);
        std::vector<std::size_t> by_k;
        std::vector<std::size_t> by_l;
        for (const auto& e : graph.out(ai)) {
          if (e.reducer == k) by_k.push_back(e.target);
          if (e.reducer == l) by_l.push_back(e.target);
        }
        if (by_k.empty() || by_l.empty()) return false;
        const auto comp = graph.components_below(a);
        bool resolved = false;
        for (auto b : by_k) {
          for (auto bb : by_l) {
            if (comp[b] >= 0 && comp[b] == comp[bb]) {
              resolved = true;
              break;
            }
          }
          if (resolved) break;
        }
        if (!resolved) return false;
      }
    }
  }
  return true;
}

std::vector<Element> ideal_enumerate(const Basis& basis, const RingDescriptor& ring) {
  const Universe universe = Universe::of(ring);
  std::vector<bool> in(universe.size(), false);
  in[universe.index_of(zero(ring))] = true;
  for (const auto& c : basis.elements()) in[universe.index_of(c)] = true;
  for (std::size_t round = 0; round < universe.size(); ++round) {
    bool changed = false;
    std::vector<Element> current;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (in[i]) current.push_back(universe.elements()[i]);
    }
    for (const auto& x : current) {
      for (const auto& y : current) {
        const auto idx = universe.index_of(add(x, y, ring));
        if (!in[idx]) in[idx] = changed = true;
      }
      for (const auto& r : universe.elements()) {
        const auto idx = universe.index_of(mul(r, x, ring));
        if (!in[idx]) in[idx] = changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<Element> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (in[i]) out.push_back(universe.elements()[i]);
  }
  return out;
}

namespace {

void require_rational_polynomials(const RingDescriptor& ring) {
  if (!ring.is_polynomial() || ring.coefficient().kind() != RingKind::Rationals) {
    throw Error(ErrorCode::Unsupported, "classical Buchberger needs polynomials over Q");
  }
}

Element leading_term(const Element& p, const RingDescriptor& ring) {
  const auto lm = leading_monomial(p, ring);
  return make_monomial(lm.coefficient, lm.exponents, ring);
}

Element term_quotient(const LeadingMonomial& num, const LeadingMonomial& den,
                      const RingDescriptor& ring) {
  const mpq_class q = std::get<Rational>(num.coefficient).value /
                      std::get<Rational>(den.coefficient).value;
  return make_monomial(Rational{q}, monomial_quotient(num.exponents, den.exponents), ring);
}

}  // namespace

Element classical_reduce(const Element& f, const Basis& divisors, const RingDescriptor& ring) {
  require_rational_polynomials(ring);
  Element p = f;
  Element r = zero(ring);
  while (!is_zero(p)) {
    const auto lp = leading_monomial(p, ring);
    bool divided = false;
    for (const auto& g : divisors.elements()) {
      if (is_zero(g)) continue;
      const auto lg = leading_monomial(g, ring);
      if (monomial_divides(lg.exponents, lp.exponents)) {
        p = sub(p, mul(term_quotient(lp, lg, ring), g, ring), ring);
        divided = true;
        break;
      }
    }
    if (!divided) {
      const Element lt = leading_term(p, ring);
      r = add(r, lt, ring);
      p = sub(p, lt, ring);
    }
  }
  return r;
}

Element s_polynomial(const Element& f, const Element& g, const RingDescriptor& ring) {
  require_rational_polynomials(ring);
  const auto lf = leading_monomial(f, ring);
  const auto lg = leading_monomial(g, ring);
  const LeadingMonomial l{Rational{mpq_class(1)}, monomial_lcm(lf.exponents, lg.exponents)};
  return sub(mul(term_quotient(l, lf, ring), f, ring), mul(term_quotient(l, lg, ring), g, ring),
             ring);
}

Basis classical_buchberger(const Basis& generators, const RingDescriptor& ring) {
  require_rational_polynomials(ring);
  Basis g = strip_zeros(generators);
  std::deque<IndexPair> todo;
  for (std::size_t i = 1; i <= g.size(); ++i) {
    for (std::size_t j = i + 1; j <= g.size(); ++j) todo.push_back({i, j});
  }
  while (!todo.empty()) {
    const auto [i, j] = todo.front();
    todo.pop_front();
    Element r = classical_reduce(s_polynomial(g.at(i), g.at(j), ring), g, ring);
    if (is_zero(r)) continue;
    g.push_back(std::move(r));
    for (std::size_t k = 1; k < g.size(); ++k) todo.push_back({k, g.size()});
  }
  return g;
}

}  // namespace rrgb
