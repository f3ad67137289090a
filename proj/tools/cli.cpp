#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "starlab/hasse.hpp"
#include "starlab/report_json.hpp"

namespace starlab {

namespace {

/// Invalid input: reported on one line and mapped to exit code 2.
struct InputError {
  std::string category;
  std::string message;
};

std::size_t order_cap_from_env() {
  const char* raw = std::getenv("STARLAB_ORDER_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOrderCap;
  std::string_view text(raw);
  std::size_t cap = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || end != text.data() + text.size() || cap == 0)
    throw InputError{"config", "STARLAB_ORDER_CAP must be a positive integer, got '" + std::string(text) + "'"};
  return cap;
}

RingSpec load_spec(const std::string& source) {
  std::string text;
  if (!source.empty() && source.front() == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw InputError{"io", "cannot read spec file '" + source + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError{"invalid-json", e.what()};
  }
  return ring_spec_from_json(json);
}

std::string single_line(std::string text) {
  std::ranges::replace(text, '\n', ' ');
  return text;
}

struct Options {
  std::string spec;
  bool pretty = false;
  std::int64_t top = -1;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t max_order = 16;
  std::size_t budget = 1000;
  std::string families = "modular,product,matrix,random-table";
  std::string out_path;
};

std::vector<Family> parse_families(const std::string& list) {
  std::vector<Family> families;
  std::stringstream stream(list);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (name.empty()) continue;
    auto family = family_from_string(name);
    if (!family) throw InputError{"usage", "unknown family '" + name + "'"};
    if (std::ranges::find(families, *family) == families.end()) families.push_back(*family);
  }
  if (families.empty()) throw InputError{"usage", "no families selected"};
  return families;
}

class Runner {
 public:
  Runner(const Options& options, std::ostream& out) : options_(options), out_(out) {}

  int classify() {
    const auto ring = materialize(load_spec(options_.spec), build_options());
    emit(to_json(starlab::classify(ring), cover_table(ring)));
    return 0;
  }

  int covers() {
    const auto ring = materialize(load_spec(options_.spec), build_options());
    emit(to_json(cover_table(ring)));
    return 0;
  }

  int order() {
    const auto ring = materialize(load_spec(options_.spec), build_options());
    const auto structure = build_order(ring);
    emit(to_json(structure));
    return structure.diagnostics.partial_order() ? 0 : 1;
  }

  int segment() {
    const auto ring = materialize(load_spec(options_.spec), build_options());
    if (options_.top < 0 || static_cast<std::size_t>(options_.top) >= ring.order())
      throw InputError{"usage", "--top must name an element of " + ring.label()};
    const ConradOrder order(ring);
    if (!order.structure().diagnostics.partial_order()) {
      emit(to_json(order.structure()));
      return 1;
    }
    const auto seg = initial_segment(order, ElementId{static_cast<std::uint32_t>(options_.top)});
    emit(to_json(seg));
    return seg.holds() ? 0 : 1;
  }

  int verify() {
    const auto spec = load_spec(options_.spec);
    std::vector<TheoremVerdict> verdicts;
    if (options_.suite.empty()) {
      const auto ring = materialize(spec, build_options());
      verdicts = run_suite(ring);
    } else {
      if (std::ranges::find(theorem_ids(), options_.suite) == theorem_ids().end())
        throw InputError{"usage", "unknown theorem id '" + options_.suite + "'"};
      verdicts.push_back(replay(spec, options_.suite, build_options()));
    }
    emit(to_json(verdicts));
    const bool failed = std::ranges::any_of(
        verdicts, [](const TheoremVerdict& v) { return v.status == VerdictStatus::fail; });
    return failed ? 1 : 0;
  }

  int fuzz() {
    FuzzConfig config;
    config.max_order = options_.max_order;
    config.budget = options_.budget;
    config.seed = options_.seed;
    config.families = parse_families(options_.families);
    config.order_cap = order_cap_from_env();
    if (config.max_order < 1 || config.max_order > config.order_cap)
      throw InputError{"usage", "--max-order must lie in [1, " + std::to_string(config.order_cap) + "]"};
    if (config.budget < 1) throw InputError{"usage", "--budget must be at least 1"};
    const auto report = starlab::fuzz(config);
    emit(to_json(report));
    return report.red_alerts == 0 ? 0 : 1;
  }

  int hasse() {
    const auto ring = materialize(load_spec(options_.spec), build_options());
    const auto structure = build_order(ring);
    if (!structure.diagnostics.partial_order()) {
      emit(to_json(structure));
      return 1;
    }
    const auto dot = hasse_dot(ring, structure);
    if (options_.out_path.empty()) {
      out_ << dot;
    } else {
      std::ofstream file(options_.out_path, std::ios::binary);
      file << dot;
      if (!file) throw InputError{"io", "cannot write '" + options_.out_path + "'"};
    }
    return 0;
  }

 private:
  BuildOptions build_options() const { return {order_cap_from_env()}; }

  void emit(const Json& json) { out_ << (options_.pretty ? json.dump(2) : json.dump()) << '\n'; }

  const Options& options_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Finite *-ring analysis: classification, Conrad order, theorem checks"};
  app.name("starlab");
  app.require_subcommand(1);
  app.add_flag("--pretty", options.pretty, "Indent JSON output");

  auto with_spec = [&](CLI::App* sub) {
    sub->add_option("spec", options.spec, "Ring spec: inline JSON or a file path")->required();
    sub->add_flag("--pretty", options.pretty, "Indent JSON output");
    return sub;
  };
  auto* classify = with_spec(app.add_subcommand("classify", "Classification flags and covers"));
  auto* covers = with_spec(app.add_subcommand("covers", "Central cover table"));
  auto* order = with_spec(app.add_subcommand("order", "Conrad relation and its diagnostics"));
  auto* segment = with_spec(app.add_subcommand("segment", "Initial segment [0, top]"));
  segment->add_option("--top", options.top, "Top element index")->required();
  auto* verify = with_spec(app.add_subcommand("verify", "Run the theorem suite"));
  verify->add_option("--suite", options.suite, "Run a single theorem id");
  auto* fuzz = app.add_subcommand("fuzz", "Search generated rings for counterexamples");
  fuzz->add_option("--seed", options.seed, "Random seed");
  fuzz->add_option("--max-order", options.max_order, "Largest ring order");
  fuzz->add_option("--families", options.families, "Comma-separated family list");
  fuzz->add_option("--budget", options.budget, "Rings per family");
  fuzz->add_flag("--pretty", options.pretty, "Indent JSON output");
  auto* hasse = with_spec(app.add_subcommand("hasse", "Hasse diagram in DOT"));
  hasse->add_option("--out", options.out_path, "Output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << single_line(e.what()) << '\n';
    return 2;
  }

  Runner runner(options, out);
  try {
    if (classify->parsed()) return runner.classify();
    if (covers->parsed()) return runner.covers();
    if (order->parsed()) return runner.order();
    if (segment->parsed()) return runner.segment();
    if (verify->parsed()) return runner.verify();
    if (fuzz->parsed()) return runner.fuzz();
    if (hasse->parsed()) return runner.hasse();
  } catch (const InputError& e) {
    err << "error: " << e.category << ": " << single_line(e.message) << '\n';
    return 2;
  } catch (const RingError& e) {
    err << "error: " << single_line(e.what()) << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << single_line(e.what()) << '\n';
    return 2;
  }
  return 2;
}

}  // namespace starlab
