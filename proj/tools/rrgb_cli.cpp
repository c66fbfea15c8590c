// rrgb command-line front end. Uses only the C interface.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrgb/rrgb.h"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kDomainError = 1, kCheckFailed = 2, kStepLimit = 3 };

struct Failure {
  rrgb_status status;
  std::string message;
};

void ensure(rrgb_status s) {
  if (s != RRGB_OK) throw Failure{s, rrgb_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) {
  throw Failure{RRGB_ERR_INVALID_ARGUMENT, message};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Ring = std::unique_ptr<rrgb_ring, Deleter<rrgb_ring, rrgb_ring_free>>;
using Element = std::unique_ptr<rrgb_element, Deleter<rrgb_element, rrgb_element_free>>;
using Basis = std::unique_ptr<rrgb_basis, Deleter<rrgb_basis, rrgb_basis_free>>;
using GbResult = std::unique_ptr<rrgb_gb_result, Deleter<rrgb_gb_result, rrgb_gb_result_free>>;
using Report =
    std::unique_ptr<rrgb_check_report, Deleter<rrgb_check_report, rrgb_check_report_free>>;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

struct Options {
  std::string ring;
  std::optional<std::string> gens;
  std::optional<std::string> input;
  std::optional<std::string> of;
  std::optional<std::string> element;
  std::optional<std::string> ideal;
  std::optional<std::string> basis;
  std::optional<std::string> bound;
  bool trace = false;
  std::string format = "text";
  std::uint64_t step_limit = RRGB_DEFAULT_STEP_LIMIT;
};

class Session {
 public:
  explicit Session(Options opts) : opts_(std::move(opts)) { load_input(); }

  const Options& options() const { return opts_; }

  rrgb_ring* ring() {
    if (!ring_) {
      if (opts_.ring.empty()) usage_error("--ring or --input is required");
      rrgb_ring* r = nullptr;
      ensure(rrgb_ring_parse(opts_.ring.c_str(), &r));
      ring_.reset(r);
    }
    return ring_.get();
  }

  Basis parse_basis(const std::vector<std::string>& texts, const char* what) {
    if (texts.empty()) usage_error(std::string(what) + " must list at least one element");
    std::vector<const char*> ptrs;
    for (const auto& t : texts) ptrs.push_back(t.c_str());
    rrgb_basis* b = nullptr;
    ensure(rrgb_basis_parse(ring(), ptrs.data(), ptrs.size(), &b));
    return Basis(b);
  }

  Basis parse_list(const std::optional<std::string>& text, const char* what) {
    if (!text) usage_error(std::string(what) + " is required");
    return parse_basis(split_list(*text), what);
  }

  // Generators from --gens or the input file.
  Basis generators() {
    if (opts_.gens) return parse_list(opts_.gens, "--gens");
    if (file_generators_) return parse_basis(*file_generators_, "generators");
    usage_error("--gens or --input is required");
  }

  bool has_generators() const { return opts_.gens.has_value() || file_generators_.has_value(); }

  Element parse_element(const std::optional<std::string>& text, const char* what) {
    if (!text) usage_error(std::string(what) + " is required");
    rrgb_element* e = nullptr;
    ensure(rrgb_element_parse(ring(), text->c_str(), &e));
    return Element(e);
  }

 private:
  void load_input() {
    if (!opts_.input) return;
    if (opts_.gens) usage_error("--gens and --input are mutually exclusive");
    std::ifstream in(*opts_.input);
    if (!in) usage_error("cannot open input file " + *opts_.input);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Failure{RRGB_ERR_PARSE, std::string("input file: ") + e.what()};
    }
    if (!doc.is_object() || !doc.contains("ring") || !doc["ring"].is_string() ||
        !doc.contains("generators") || !doc["generators"].is_array()) {
      throw Failure{RRGB_ERR_PARSE,
                    "input file must be an object with string \"ring\" and array \"generators\""};
    }
    const auto file_ring = doc["ring"].get<std::string>();
    if (!opts_.ring.empty() && opts_.ring != file_ring) {
      usage_error("--ring disagrees with the ring in the input file");
    }
    opts_.ring = file_ring;
    std::vector<std::string> gens;
    for (const auto& g : doc["generators"]) {
      if (!g.is_string()) throw Failure{RRGB_ERR_PARSE, "generators must be strings"};
      gens.push_back(g.get<std::string>());
    }
    file_generators_ = std::move(gens);
  }

  Options opts_;
  Ring ring_;
  std::optional<std::vector<std::string>> file_generators_;
};

Json basis_json(const rrgb_basis* basis) {
  Json out = Json::array();
  for (std::size_t k = 1; k <= rrgb_basis_size(basis); ++k) {
    out.push_back(rrgb_basis_element_text(basis, k));
  }
  return out;
}

Json stats_json(const rrgb_gb_result* result) {
  rrgb_gb_stats s{};
  rrgb_gb_result_stats(result, &s);
  Json out;
  out["recursion_steps"] = s.recursion_steps;
  out["pairs_processed"] = s.pairs_processed;
  out["critical_pairs"] = s.critical_pairs;
  out["elements_added"] = s.elements_added;
  out["h_zero"] = s.h_zero;
  out["reductions"] = s.reductions;
  return out;
}

const char* action_name(rrgb_trace_action a) {
  switch (a) {
    case RRGB_TRACE_BASE: return "base";
    case RRGB_TRACE_LOAD_PAIR: return "load-pair";
    case RRGB_TRACE_H_ZERO: return "h-zero";
    case RRGB_TRACE_H_ADDED: return "h-added";
  }
  return "unknown";
}

Json trace_json(const rrgb_gb_result* result) {
  Json out = Json::array();
  for (std::size_t s = 0; s < rrgb_gb_result_trace_size(result); ++s) {
    rrgb_trace_record r{};
    ensure(rrgb_gb_result_trace_record(result, s, &r));
    Json rec;
    rec["action"] = action_name(r.action);
    rec["measure"] = {r.basis_size, r.queue_size, r.crit_size};
    rec["i"] = r.i;
    rec["j"] = r.j;
    if (r.action == RRGB_TRACE_LOAD_PAIR) {
      rec["pair"] = {r.loaded_k, r.loaded_l};
      rec["critical_pairs"] = r.critical_pairs_loaded;
    }
    if (const char* added = rrgb_gb_result_trace_added(result, s)) rec["added"] = added;
    out.push_back(std::move(rec));
  }
  return out;
}

struct Output {
  Json result;
  Json stats = Json::object();
  Json trace = Json::array();
  int exit_code = kOk;
};

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

void print_text(std::ostream& os, const std::string& command, const std::string& ring,
                const Output& out) {
  os << "ring: " << ring << "\n";
  if (command == "gb") {
    os << "basis:\n";
    std::size_t k = 1;
    for (const auto& e : out.result) os << "  [" << k++ << "] " << e.get<std::string>() << "\n";
  } else if (command == "check") {
    for (const auto& item : out.result["items"]) {
      os << (item["passed"].get<bool>() ? "PASS " : "FAIL ") << item["name"].get<std::string>()
         << ": " << item["detail"].get<std::string>() << "\n";
    }
    if (!out.result["bound"].is_null()) os << "bound: " << out.result["bound"] << "\n";
    os << "result: " << (out.result["passed"].get<bool>() ? "pass" : "fail") << "\n";
  } else {
    os << "result: " << text_value(out.result) << "\n";
  }
  if (!out.stats.empty()) {
    os << "stats:";
    for (const auto& [key, value] : out.stats.items()) os << " " << key << "=" << value;
    os << "\n";
  }
  if (!out.trace.empty()) {
    os << "trace:\n";
    std::size_t s = 0;
    for (const auto& rec : out.trace) {
      os << "  " << s++ << " " << rec["action"].get<std::string>() << " measure=("
         << rec["measure"][0] << "," << rec["measure"][1] << "," << rec["measure"][2]
         << ") i=" << rec["i"] << " j=" << rec["j"];
      if (rec.contains("pair")) {
        os << " pair=(" << rec["pair"][0] << "," << rec["pair"][1]
           << ") critical_pairs=" << rec["critical_pairs"];
      }
      if (rec.contains("added")) os << " added=" << rec["added"].get<std::string>();
      os << "\n";
    }
  }
}

GbResult complete(Session& session, const rrgb_basis* basis) {
  rrgb_gb_result* r = nullptr;
  ensure(rrgb_gb(session.ring(), basis, session.options().step_limit, &r));
  return GbResult(r);
}

Output run_gb(Session& session) {
  Basis gens = session.generators();
  GbResult result = complete(session, gens.get());
  Output out;
  out.result = basis_json(rrgb_gb_result_basis(result.get()));
  out.stats = stats_json(result.get());
  if (session.options().trace) out.trace = trace_json(result.get());
  return out;
}

// With --basis the element is reduced modulo that basis as given;
// otherwise the generators are completed first.
Output run_nf(Session& session) {
  Element element = session.parse_element(session.options().of, "--of");
  Output out;
  rrgb_element* nf = nullptr;
  if (session.options().basis) {
    if (session.has_generators()) usage_error("nf takes either --basis or generators, not both");
    Basis basis = session.parse_list(session.options().basis, "--basis");
    ensure(rrgb_normal_form(session.ring(), element.get(), basis.get(), &nf));
  } else {
    Basis gens = session.generators();
    GbResult result = complete(session, gens.get());
    ensure(rrgb_normal_form(session.ring(), element.get(), rrgb_gb_result_basis(result.get()),
                            &nf));
    out.stats = stats_json(result.get());
    if (session.options().trace) out.trace = trace_json(result.get());
  }
  Element value(nf);
  out.result = rrgb_element_text(value.get());
  return out;
}

Output run_member(Session& session) {
  Element element = session.parse_element(session.options().element, "--element");
  Basis ideal = session.options().ideal ? session.parse_list(session.options().ideal, "--ideal")
                                        : session.generators();
  int member = 0;
  ensure(rrgb_is_member(session.ring(), element.get(), ideal.get(), session.options().step_limit,
                        &member));
  Output out;
  out.result = member != 0;
  return out;
}

Output run_equal(Session& session) {
  Basis first = session.generators();
  Basis second = session.parse_list(session.options().ideal, "--ideal");
  int equal = 0;
  ensure(rrgb_ideals_equal(session.ring(), first.get(), second.get(),
                           session.options().step_limit, &equal));
  Output out;
  out.result = equal != 0;
  return out;
}

Output run_check(Session& session) {
  std::uint64_t bound = 0;
  if (const auto& b = session.options().bound; b && *b != "full") {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(*b, &used);
      if (used != b->size() || v <= 0) throw std::invalid_argument(*b);
      bound = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw Failure{RRGB_ERR_RANGE, "--bound must be 'full' or a positive integer"};
    }
  }
  Basis basis = session.options().basis ? session.parse_list(session.options().basis, "--basis")
                                        : session.generators();
  rrgb_check_report* raw = nullptr;
  ensure(rrgb_check(session.ring(), basis.get(), bound, session.options().step_limit, &raw));
  Report report(raw);

  Output out;
  Json items = Json::array();
  for (std::size_t i = 0; i < rrgb_check_report_size(report.get()); ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    ensure(rrgb_check_report_item(report.get(), i, &name, &passed, &detail));
    items.push_back(Json{{"name", name}, {"passed", passed != 0}, {"detail", detail}});
  }
  const bool passed = rrgb_check_report_passed(report.get()) != 0;
  out.result["passed"] = passed;
  const std::uint64_t used = rrgb_check_report_bound(report.get());
  out.result["bound"] = used > 0 ? Json(used) : Json(nullptr);
  out.result["items"] = std::move(items);
  out.exit_code = passed ? kOk : kCheckFailed;
  return out;
}

int exit_code_for(rrgb_status s) { return s == RRGB_ERR_STEP_LIMIT ? kStepLimit : kDomainError; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gröbner bases in reduction rings"};
  app.require_subcommand(1, 1);
  Options opts;

  const char* env_format = std::getenv("RRGB_FORMAT");
  if (env_format != nullptr && *env_format != '\0') opts.format = env_format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", opts.ring, "Ring descriptor, e.g. Z, Q, Z/8, poly(Q; x,y; lex)");
    sub->add_option("--input", opts.input, "JSON file with \"ring\" and \"generators\"");
    sub->add_option("--format", opts.format, "Output format (default from RRGB_FORMAT)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--step-limit", opts.step_limit, "Maximum completion steps")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--trace", opts.trace, "Include the completion trace");
  };

  auto* gb = app.add_subcommand("gb", "Compute a Gröbner basis");
  add_common(gb);
  gb->add_option("--gens", opts.gens, "Comma-separated generators");

  auto* nf = app.add_subcommand("nf", "Normal form of an element");
  add_common(nf);
  nf->add_option("--of", opts.of, "Element to reduce")->required();
  nf->add_option("--gens", opts.gens, "Generators, completed before reducing");
  nf->add_option("--basis", opts.basis, "Basis used as given");

  auto* member = app.add_subcommand("member", "Ideal membership");
  add_common(member);
  member->add_option("--element", opts.element, "Candidate element")->required();
  member->add_option("--ideal", opts.ideal, "Comma-separated ideal generators");
  member->add_option("--gens", opts.gens, "Alias for --ideal");

  auto* equal = app.add_subcommand("equal", "Ideal equality");
  add_common(equal);
  equal->add_option("--gens", opts.gens, "Generators of the first ideal");
  equal->add_option("--ideal", opts.ideal, "Generators of the second ideal")->required();

  auto* check = app.add_subcommand("check", "Oracle property report");
  add_common(check);
  check->add_option("--basis", opts.basis, "Comma-separated input basis");
  check->add_option("--gens", opts.gens, "Alias for --basis");
  check->add_option("--bound", opts.bound, "Integer universe bound: full or N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomainError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (opts.format != "text" && opts.format != "json") {
      usage_error("format must be text or json");
    }
    if (command == "member" && opts.ideal && opts.gens) {
      usage_error("--ideal and --gens are aliases; give one");
    }
    if (command == "check" && opts.basis && opts.gens) {
      usage_error("--basis and --gens are aliases; give one");
    }
    Session session(opts);
    Output out;
    if (command == "gb") {
      out = run_gb(session);
    } else if (command == "nf") {
      out = run_nf(session);
    } else if (command == "member") {
      out = run_member(session);
    } else if (command == "equal") {
      out = run_equal(session);
    } else {
      out = run_check(session);
    }
    const std::string ring_text = rrgb_ring_text(session.ring());
    if (opts.format == "json") {
      Json doc;
      doc["ring"] = ring_text;
      doc["result"] = out.result;
      doc["stats"] = out.stats;
      doc["trace"] = out.trace;
      std::cout << doc.dump(2) << "\n";
    } else {
      print_text(std::cout, command, ring_text, out);
    }
    return out.exit_code;
  } catch (const Failure& f) {
    std::cerr << "error: " << rrgb_status_name(f.status) << ": " << f.message << "\n";
    return exit_code_for(f.status);
  }
}
