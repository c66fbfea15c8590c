#pragma once

// Oracle-backed property report for one basis, as run by `rrgb check`.

#include <optional>
#include <string>
#include <vector>

#include "rrgb/buchberger.hpp"

namespace rrgb {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  // Integer universe bound used for Z; zero otherwise.
  mpz_class bound;

  bool passed() const;
};

// Every consecutive pair of trace records decreases the termination measure.
bool trace_measure_decreases(const GbTrace& trace);

// Supported rings: Z/n (exhaustive), Z (universe |x| <= bound, default
// 8 * max |c|), and polynomials over Q (classical cross-check).
CheckReport run_checks(const RingDescriptor& ring, const Basis& basis,
                       std::optional<mpz_class> bound = std::nullopt,
                       const GbOptions& options = {});

}  // namespace rrgb
