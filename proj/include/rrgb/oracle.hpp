#pragma once

// Brute-force verification machinery, independent of the completion
// algorithm: exhaustive reduction graphs over finite universes, confluence,
// connectibility below an element, the main-theorem criterion, ideal
// enumeration, and a textbook Buchberger for polynomials over Q.

#include <optional>
#include <vector>

#include "rrgb/core.hpp"

namespace rrgb {

// All elements of Z/n, or the integers with |x| <= bound.
class Universe {
 public:
  static Universe of(const RingDescriptor& ring, std::optional<mpz_class> bound = std::nullopt);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Element& e) const;
  std::size_t index_of(const Element& e) const;

 private:
  Universe(RingDescriptor ring, mpz_class bound) : ring_(std::move(ring)), bound_(std::move(bound)) {}

  RingDescriptor ring_;
  mpz_class bound_;
  std::vector<Element> elements_;
};

// 8 * max |c| over the basis, at least 8.
mpz_class default_integer_bound(const Basis& basis);

struct GraphEdge {
  std::size_t target = 0;
  std::size_t reducer = 0;  // 1-based basis index
};

// Every one-step reduction a -> a - m*c inside the universe, for every
// multiplier m, not only the canonical one.
class ReductionGraph {
 public:
  ReductionGraph(const Basis& basis, const Universe& universe);

  const Universe& universe() const noexcept { return *universe_; }
  const std::vector<GraphEdge>& out(std::size_t node) const { return out_[node]; }
  bool has_edge(std::size_t from, std::size_t to) const;

  // Throws DomainOrderViolation on a cycle.
  std::vector<std::vector<std::size_t>> terminal_descendants() const;

  bool connectible_below(const Element& b, const Element& bbar, const Element& a) const;

  // Connected components of the undirected graph restricted to nodes
  // strictly below a; -1 for nodes not below a.
  std::vector<int> components_below(const Element& a) const;

 private:
  const Universe* universe_;
  std::vector<std::vector<GraphEdge>> out_;
  std::vector<std::vector<std::size_t>> undirected_;
};

std::vector<Element> red_set(const Basis& basis, const Universe& universe);

bool is_confluent(const Basis& basis, const Universe& universe);

bool connectible_below(const Element& b, const Element& bbar, const Element& a,
                       const Basis& basis, const Universe& universe);

bool main_theorem_criterion(const Basis& basis, const Universe& universe);

// Closure of the basis under addition and multiplication by ring elements.
std::vector<Element> ideal_enumerate(const Basis& basis, const RingDescriptor& ring);

// Textbook division remainder of f by the polynomials in `divisors`.
Element classical_reduce(const Element& f, const Basis& divisors, const RingDescriptor& ring);
Element s_polynomial(const Element& f, const Element& g, const RingDescriptor& ring);

// Classical S-polynomial completion over Q[X]: distinct pairs only, the
// S-polynomial itself reduced to a remainder.
Basis classical_buchberger(const Basis& generators, const RingDescriptor& ring);

}  // namespace rrgb
