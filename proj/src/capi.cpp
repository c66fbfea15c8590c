// extern "C" surface over the C++ core.

#include "rrgb/rrgb.h"

#include <string>
#include <vector>

#include "rrgb/buchberger.hpp"
#include "rrgb/check.hpp"
#include "rrgb/domains.hpp"
#include "rrgb/parse.hpp"

struct rrgb_ring {
  rrgb::RingDescriptor ring;
  std::string text;
};

struct rrgb_element {
  rrgb::Element value;
  std::string text;
};

struct rrgb_basis {
  rrgb::Basis basis;
  std::vector<std::string> texts;
};

struct rrgb_gb_result {
  rrgb_basis basis;
  rrgb::GbResult result;
  std::vector<std::string> added;
};

struct rrgb_check_report {
  rrgb::CheckReport report;
};

namespace {

thread_local std::string last_error;

rrgb_status status_of(rrgb::ErrorCode code) {
  using rrgb::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return RRGB_ERR_PARSE;
    case ErrorCode::Range:
    case ErrorCode::ExponentOverflow: return RRGB_ERR_RANGE;
    case ErrorCode::Unsupported: return RRGB_ERR_UNSUPPORTED;
    case ErrorCode::DescriptorMismatch:
    case ErrorCode::LengthMismatch:
    case ErrorCode::NoLeadingMonomial: return RRGB_ERR_DESCRIPTOR_MISMATCH;
    case ErrorCode::ZeroReducer: return RRGB_ERR_ZERO_REDUCER;
    case ErrorCode::StateCorruption:
    case ErrorCode::ContractViolation: return RRGB_ERR_STATE;
    case ErrorCode::StepLimit: return RRGB_ERR_STEP_LIMIT;
    case ErrorCode::DomainOrderViolation: return RRGB_ERR_DOMAIN_ORDER;
    case ErrorCode::InvalidArgument: return RRGB_ERR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return RRGB_ERR_INTERNAL;
  }
  return RRGB_ERR_INTERNAL;
}

template <typename F>
rrgb_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return RRGB_OK;
  } catch (const rrgb::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return RRGB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return RRGB_ERR_INTERNAL;
  }
}

rrgb_status null_argument() {
  last_error = "null argument";
  return RRGB_ERR_INVALID_ARGUMENT;
}

rrgb_basis make_basis(rrgb::Basis basis, const rrgb::RingDescriptor& ring) {
  rrgb_basis out{std::move(basis), {}};
  for (const auto& e : out.basis.elements()) out.texts.push_back(rrgb::render_element(e, ring));
  return out;
}

rrgb::GbOptions options_for(uint64_t step_limit) {
  rrgb::GbOptions o;
  o.step_limit = step_limit == 0 ? RRGB_DEFAULT_STEP_LIMIT : step_limit;
  return o;
}

}  // namespace

extern "C" {

const char* rrgb_last_error(void) { return last_error.c_str(); }

const char* rrgb_status_name(rrgb_status status) {
  switch (status) {
    case RRGB_OK: return "ok";
    case RRGB_ERR_PARSE: return "parse error";
    case RRGB_ERR_RANGE: return "range error";
    case RRGB_ERR_UNSUPPORTED: return "unsupported";
    case RRGB_ERR_DESCRIPTOR_MISMATCH: return "descriptor mismatch";
    case RRGB_ERR_ZERO_REDUCER: return "zero reducer";
    case RRGB_ERR_STATE: return "state corruption";
    case RRGB_ERR_STEP_LIMIT: return "step limit exceeded";
    case RRGB_ERR_DOMAIN_ORDER: return "domain order violation";
    case RRGB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RRGB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

rrgb_status rrgb_ring_parse(const char* text, rrgb_ring** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto ring = rrgb::parse_ring(text);
    auto rendered = rrgb::render_ring(ring);
    *out = new rrgb_ring{std::move(ring), std::move(rendered)};
  });
}

void rrgb_ring_free(rrgb_ring* ring) { delete ring; }

const char* rrgb_ring_text(const rrgb_ring* ring) { return ring ? ring->text.c_str() : nullptr; }

int rrgb_ring_is_finite(const rrgb_ring* ring) { return ring && ring->ring.is_finite() ? 1 : 0; }

rrgb_status rrgb_element_parse(const rrgb_ring* ring, const char* text, rrgb_element** out) {
  if (ring == nullptr || text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto e = rrgb::parse_element(text, ring->ring);
    auto rendered = rrgb::render_element(e, ring->ring);
    *out = new rrgb_element{std::move(e), std::move(rendered)};
  });
}

void rrgb_element_free(rrgb_element* element) { delete element; }

const char* rrgb_element_text(const rrgb_element* element) {
  return element ? element->text.c_str() : nullptr;
}

int rrgb_element_is_zero(const rrgb_element* element) {
  return element && rrgb::is_zero(element->value) ? 1 : 0;
}

rrgb_status rrgb_basis_parse(const rrgb_ring* ring, const char* const* texts, size_t count,
                             rrgb_basis** out) {
  if (ring == nullptr || out == nullptr || (texts == nullptr && count > 0)) return null_argument();
  return guarded([&] {
    rrgb::Basis basis;
    for (size_t i = 0; i < count; ++i) {
      if (texts[i] == nullptr) throw rrgb::Error(rrgb::ErrorCode::InvalidArgument, "null element");
      basis.push_back(rrgb::parse_element(texts[i], ring->ring));
    }
    *out = new rrgb_basis(make_basis(std::move(basis), ring->ring));
  });
}

void rrgb_basis_free(rrgb_basis* basis) { delete basis; }

size_t rrgb_basis_size(const rrgb_basis* basis) { return basis ? basis->basis.size() : 0; }

const char* rrgb_basis_element_text(const rrgb_basis* basis, size_t k) {
  if (basis == nullptr || k == 0 || k > basis->texts.size()) return nullptr;
  return basis->texts[k - 1].c_str();
}

rrgb_status rrgb_gb(const rrgb_ring* ring, const rrgb_basis* basis, uint64_t step_limit,
                    rrgb_gb_result** out) {
  if (ring == nullptr || basis == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto result = rrgb::gb(basis->basis, ring->ring, options_for(step_limit));
    auto* r = new rrgb_gb_result{make_basis(result.basis, ring->ring), std::move(result), {}};
    for (const auto& step : r->result.trace.steps) {
      r->added.push_back(step.added ? rrgb::render_element(*step.added, ring->ring) : "");
    }
    *out = r;
  });
}

void rrgb_gb_result_free(rrgb_gb_result* result) { delete result; }

const rrgb_basis* rrgb_gb_result_basis(const rrgb_gb_result* result) {
  return result ? &result->basis : nullptr;
}

void rrgb_gb_result_stats(const rrgb_gb_result* result, rrgb_gb_stats* stats) {
  if (result == nullptr || stats == nullptr) return;
  const auto& s = result->result.stats;
  *stats = rrgb_gb_stats{s.recursion_steps, s.pairs_processed, s.critical_pairs,
                         s.elements_added,  s.h_zero,          s.reductions};
}

size_t rrgb_gb_result_trace_size(const rrgb_gb_result* result) {
  return result ? result->result.trace.steps.size() : 0;
}

rrgb_status rrgb_gb_result_trace_record(const rrgb_gb_result* result, size_t index,
                                        rrgb_trace_record* record) {
  if (result == nullptr || record == nullptr) return null_argument();
  if (index >= result->result.trace.steps.size()) {
    last_error = "trace index out of range";
    return RRGB_ERR_RANGE;
  }
  const auto& s = result->result.trace.steps[index];
  *record = rrgb_trace_record{static_cast<rrgb_trace_action>(s.action),
                              s.measure.basis_size,
                              s.measure.queue_size,
                              s.measure.crit_size,
                              s.i,
                              s.j,
                              s.loaded ? s.loaded->k : 0,
                              s.loaded ? s.loaded->l : 0,
                              s.critical_pairs_loaded};
  return RRGB_OK;
}

const char* rrgb_gb_result_trace_added(const rrgb_gb_result* result, size_t index) {
  if (result == nullptr || index >= result->added.size()) return nullptr;
  if (!result->result.trace.steps[index].added) return nullptr;
  return result->added[index].c_str();
}

rrgb_status rrgb_normal_form(const rrgb_ring* ring, const rrgb_element* element,
                             const rrgb_basis* basis, rrgb_element** out) {
  if (ring == nullptr || element == nullptr || basis == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto nf = rrgb::normal_form(element->value, rrgb::strip_zeros(basis->basis), ring->ring);
    auto text = rrgb::render_element(nf.value, ring->ring);
    *out = new rrgb_element{std::move(nf.value), std::move(text)};
  });
}

rrgb_status rrgb_is_member(const rrgb_ring* ring, const rrgb_element* element,
                           const rrgb_basis* generators, uint64_t step_limit, int* result) {
  if (ring == nullptr || element == nullptr || generators == nullptr || result == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    const auto g = rrgb::gb(generators->basis, ring->ring, options_for(step_limit));
    *result = rrgb::is_member(element->value, g.basis, ring->ring) ? 1 : 0;
  });
}

rrgb_status rrgb_ideals_equal(const rrgb_ring* ring, const rrgb_basis* first,
                              const rrgb_basis* second, uint64_t step_limit, int* result) {
  if (ring == nullptr || first == nullptr || second == nullptr || result == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *result = rrgb::ideals_equal(first->basis, second->basis, ring->ring, options_for(step_limit))
                  ? 1
                  : 0;
  });
}

rrgb_status rrgb_check(const rrgb_ring* ring, const rrgb_basis* basis, uint64_t bound,
                       uint64_t step_limit, rrgb_check_report** out) {
  if (ring == nullptr || basis == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    std::optional<mpz_class> b;
    if (bound > 0) b = mpz_class(static_cast<unsigned long>(bound));
    *out = new rrgb_check_report{
        rrgb::run_checks(ring->ring, basis->basis, b, options_for(step_limit))};
  });
}

void rrgb_check_report_free(rrgb_check_report* report) { delete report; }

size_t rrgb_check_report_size(const rrgb_check_report* report) {
  return report ? report->report.items.size() : 0;
}

rrgb_status rrgb_check_report_item(const rrgb_check_report* report, size_t index,
                                   const char** name, int* passed, const char** detail) {
  if (report == nullptr) return null_argument();
  if (index >= report->report.items.size()) {
    last_error = "report index out of range";
    return RRGB_ERR_RANGE;
  }
  const auto& item = report->report.items[index];
  if (name) *name = item.name.c_str();
  if (passed) *passed = item.passed ? 1 : 0;
  if (detail) *detail = item.detail.c_str();
  return RRGB_OK;
}

int rrgb_check_report_passed(const rrgb_check_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

uint64_t rrgb_check_report_bound(const rrgb_check_report* report) {
  return report ? report->report.bound.get_ui() : 0;
}

}  // extern "C"
