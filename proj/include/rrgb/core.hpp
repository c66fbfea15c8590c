#pragma once

// The reduction-ring contract and the domain-generic reduction engine:
// single-step reduction, normal forms, minimal non-trivial common
// reducibles and critical pairs.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rrgb/ring.hpp"

namespace rrgb {

// Ordered tuple of ring elements. Indices are 1-based in every public API.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<Element> elements) : elements_(std::move(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  // 1-based.
  const Element& at(std::size_t k) const;

  std::span<const Element> elements() const noexcept { return elements_; }
  void push_back(Element e) { elements_.push_back(std::move(e)); }

  friend bool operator==(const Basis& a, const Basis& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Element> elements_;
};

struct IndexPair {
  std::size_t k = 0;
  std::size_t l = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct ReductionStep {
  Element reducer;
  Element multiplier;
  Element result;
};

struct CriticalPair {
  Element first;
  Element second;
  Element source;
  IndexPair reducers;
};

struct AppliedStep {
  std::size_t reducer_index = 0;  // 1-based
  ReductionStep step;
};

struct NormalForm {
  Element input;
  Element value;
  std::vector<AppliedStep> chain;
};

enum class Strategy { LowestIndexFirst, HighestIndexFirst };

bool order_below(const Element& x, const Element& y, const RingDescriptor& ring);

std::optional<ReductionStep> reduce_step(const Element& a, const Element& c,
                                         const RingDescriptor& ring);

bool is_reducible(const Element& a, const Basis& basis, const RingDescriptor& ring);

NormalForm normal_form(const Element& a, const Basis& basis, const RingDescriptor& ring,
                       Strategy strategy = Strategy::LowestIndexFirst);

std::vector<Element> mntcr(const Element& c1, const Element& c2, const RingDescriptor& ring);

std::vector<CriticalPair> cp(const Element& ck, const Element& cl, const RingDescriptor& ring,
                             IndexPair reducers = {});

// Drops zero elements; an all-zero basis becomes the empty basis.
Basis strip_zeros(const Basis& basis);

}  // namespace rrgb
