// magmakit: constructions and exhaustive checks for finite unitary magmas,
// their actions, semidirect products, and split extensions.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "magmakit/verify.hpp"

namespace {

using namespace magmakit;

int default_workers() {
  if (const char* env = std::getenv("MAGMAKIT_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

json read_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) fail("MalformedInput", {}, "cannot open input file: " + path);
  return json::parse(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail("MalformedInput", {}, "cannot open output file: " + path);
  out << text;
}

struct BudgetFlags {
  SearchBudget budget;
  std::int64_t max_candidates = -1;

  void attach(CLI::App* cmd, bool with_workers = true) {
    cmd->add_option("--max-order", budget.max_order, "Component order bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-candidates", max_candidates, "Stop after this many candidates");
    cmd->add_option("--seed", budget.seed, "Seed for sampled modes");
    if (with_workers)
      cmd->add_option("--workers", budget.workers, "Worker thread count")
          ->check(CLI::PositiveNumber);
  }

  SearchBudget resolve() const {
    SearchBudget b = budget;
    if (max_candidates >= 0) b.max_candidates = static_cast<std::uint64_t>(max_candidates);
    return b;
  }
};

int run_validate(const std::string& input) {
  json j = read_json(input);
  switch (detect_kind(j)) {
    case JsonKind::Magma:
      magma_from_json(j);
      std::cout << "valid magma\n";
      break;
    case JsonKind::Map: {
      ZeroMap m = zero_map_from_json(j);
      std::cout << (is_hom(m) ? "valid map (homomorphism)\n"
                              : "valid map (zero-preserving, not additive)\n");
      break;
    }
    case JsonKind::Action:
      action_from_json(j);
      std::cout << "valid action\n";
      break;
    case JsonKind::SplitExtension:
      split_extension_from_json(j);
      std::cout << "valid split extension\n";
      break;
    case JsonKind::Morphism:
      morphism_from_json(j);
      std::cout << "valid split extension morphism\n";
      break;
  }
  return 0;
}

int run_semidirect(const std::string& input, const std::string& output) {
  Action a = action_from_json(read_json(input));
  write_output(output, dump_canonical(to_json(semidirect_extension(a))));
  return 0;
}

int run_extract_action(const std::string& input, const std::string& output) {
  SplitExtension e = split_extension_from_json(read_json(input));
  write_output(output, dump_canonical(to_json(associated_action(e))));
  return 0;
}

int run_compose(const std::string& outer_path, const std::string& inner_path,
                const std::string& output) {
  SplitExtension outer = split_extension_from_json(read_json(outer_path));
  SplitExtension inner = split_extension_from_json(read_json(inner_path));
  ComposabilityReport r = is_composable(outer, inner);
  json report{{"composable", r.composable}};
  if (r.composable) {
    report["composite"] = to_json(compose(outer, inner));
  } else {
    report["witness"] = json::array({(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
  }
  write_output(output, dump_canonical(report));
  if (!r.composable)
    std::cerr << "not composable: witness (y,d,x) = (" << (*r.witness)[0] << ","
              << (*r.witness)[1] << "," << (*r.witness)[2] << ")\n";
  return r.composable ? 0 : 1;
}

int run_classify(const std::string& input, const std::string& output) {
  json j = read_json(input);
  for (const char* key : {"A", "B", "alpha"})
    if (!j.is_object() || !j.contains(key))
      fail("MalformedInput", {}, std::string("classify JSON needs \"") + key + "\"");
  Magma a = magma_from_json(j.at("A"));
  Magma b = magma_from_json(j.at("B"));
  Hom alpha = make_hom(a, b, j.at("alpha").get<std::vector<int>>());
  Classification c;
  if (j.contains("beta")) {
    Hom beta = make_hom(b, a, j.at("beta").get<std::vector<int>>());
    c = classify_split_epi(a, b, alpha, beta);
  } else {
    c = classify_split_epi_search(a, b, alpha);  // best class over all splittings
  }
  json report{{"class", to_string(c.cls)}};
  if (c.witness) report["witness"] = to_json(*c.witness);
  write_output(output, dump_canonical(report));
  std::cout << to_string(c.cls) << "\n";
  return 0;
}

int run_pullback(const std::string& input, const std::string& output) {
  json j = read_json(input);
  if (!j.is_object() || !j.contains("ext") || !j.contains("f"))
    fail("MalformedInput", {}, "pullback JSON needs \"ext\" and \"f\"");
  SplitExtension e = split_extension_from_json(j.at("ext"));
  Hom f = hom_from_json(j.at("f"));
  PullbackResult r = pullback(e, f);
  write_output(output, dump_canonical(to_json(r.ext)));
  return 0;
}

int run_enumerate(const std::string& kind, int order, bool up_to_iso, bool associative,
                  const std::string& output, const std::string& checkpoint) {
  if (kind != "magma")
    fail("MalformedInput", {}, "unsupported enumeration kind: " + kind);
  if (up_to_iso) {
    auto classes = iso_classes(all_magmas(order, associative));
    if (!output.empty()) {
      std::ostringstream lines;
      for (const auto& c : classes) {
        json j = to_json(c.representative);
        j["class_size"] = c.size;
        lines << j.dump() << "\n";
      }
      write_output(output, lines.str());
    }
    std::cout << classes.size() << "\n";
    return 0;
  }
  std::uint64_t start = 0, total = magma_count(order);
  if (!checkpoint.empty()) {
    std::ifstream in(checkpoint);
    if (in) in >> start;
    if (start > total) start = total;
  }
  std::uint64_t count = 0;
  std::ofstream dump;
  if (!output.empty()) {
    dump.open(output, start > 0 ? std::ios::app : std::ios::out);
    if (!dump) fail("MalformedInput", {}, "cannot open output file: " + output);
  }
  // count over the whole range; dump (and advance the cursor) from `start`
  for (std::uint64_t i = 0; i < total; ++i) {
    Magma m = magma_at(order, i);
    if (associative && !is_associative(m)) continue;
    ++count;
    if (i < start) continue;
    if (dump.is_open()) dump << to_json(m).dump() << "\n";
    if (!checkpoint.empty() && (i + 1) % 4096 == 0) {
      std::ofstream cp(checkpoint, std::ios::trunc);
      cp << (i + 1) << "\n";
    }
  }
  if (!checkpoint.empty()) {
    std::ofstream cp(checkpoint, std::ios::trunc);
    cp << total << "\n";
  }
  std::cout << count << "\n";
  return 0;
}

int run_search(const std::string& target, const SearchBudget& budget, bool require_found,
               const std::string& output) {
  bool found = false;
  json report;
  if (target == "noncomposable") {
    auto w = search_noncomposable_pair(budget);
    found = w.has_value();
    report["found"] = found;
    if (w) {
      report["outer"] = to_json(w->outer);
      report["inner"] = to_json(w->inner);
      report["witness"] =
          json::array({w->action_witness[0], w->action_witness[1], w->action_witness[2]});
      std::cout << "non-composable pair found, witness (y,d,x) = (" << w->action_witness[0]
                << "," << w->action_witness[1] << "," << w->action_witness[2] << ")\n";
    } else {
      std::cout << "no non-composable pair within budget\n";
    }
  } else if (target == "sfl-c") {
    auto w = search_sfl_c_counterexample(budget);
    found = w.has_value();
    report["found"] = found;
    if (w) {
      report["X"] = to_json(w->x);
      report["B"] = to_json(w->b);
      report["s"] = w->s.values;
      report["collision"] = json::array({(*w->report.collision)[0], (*w->report.collision)[1]});
      std::cout << "non-injective middle map found (commutative monoid of order "
                << w->x.order << ")\n";
    } else {
      std::cout << "no counterexample within budget\n";
    }
  } else if (target == "e-prime-not-epp") {
    auto w = search_firm_not_distributive(budget);
    found = w.has_value();
    report["found"] = found;
    if (w) {
      report["action"] = to_json(*w);
      std::cout << "firm but non-distributive action found (|B| = " << w->actor.order
                << ", |X| = " << w->space.order << ")\n";
    } else {
      std::cout << "no firm non-distributive action within budget\n";
    }
  } else {
    fail("MalformedInput", {}, "unknown search target: " + target);
  }
  if (!output.empty()) write_output(output, dump_canonical(report));
  return (require_found && !found) ? 1 : 0;
}

int run_verify(const SearchBudget& budget, bool as_json, const std::string& output) {
  VerificationReport r = run_verification_suite(budget);
  std::string json_text = dump_canonical(to_json(r));
  if (!output.empty()) write_output(output, json_text);
  std::cout << (as_json ? json_text : report_table(r));
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite unitary magmas: actions, semidirect products, split extensions"};
  app.require_subcommand(1);

  std::string input, output, outer_path, inner_path;
  std::string kind = "magma", target, checkpoint;
  int order = 2;
  bool up_to_iso = false, associative = false, require_found = false, as_json = false;
  BudgetFlags flags;
  flags.budget.workers = default_workers();

  auto* validate = app.add_subcommand("validate", "Validate a JSON input (kind autodetected)");
  validate->add_option("input", input, "Input file or -")->required();

  auto* semidirect = app.add_subcommand("semidirect", "Action JSON -> split extension JSON");
  semidirect->add_option("input", input, "Action JSON")->required();
  semidirect->add_option("--output,-o", output, "Output path");

  auto* extract = app.add_subcommand("extract-action", "Split extension JSON -> action JSON");
  extract->add_option("input", input, "Split extension JSON")->required();
  extract->add_option("--output,-o", output, "Output path");

  auto* compose_cmd = app.add_subcommand("compose", "Compose outer and inner split extensions");
  compose_cmd->add_option("--outer", outer_path, "Outer extension JSON")->required();
  compose_cmd->add_option("--inner", inner_path, "Inner extension JSON")->required();
  compose_cmd->add_option("--output,-o", output, "Output path");

  auto* classify = app.add_subcommand("classify", "Classify a split epimorphism");
  classify->add_option("input", input, "JSON with A, B, alpha and optional beta")->required();
  classify->add_option("--output,-o", output, "Output path");

  auto* pullback_cmd = app.add_subcommand("pullback", "Pull back an extension along f");
  pullback_cmd->add_option("input", input, "JSON with ext and f")->required();
  pullback_cmd->add_option("--output,-o", output, "Output path");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures of a given order");
  enumerate->add_option("--kind", kind, "Structure kind (magma)");
  enumerate->add_option("--order", order, "Carrier order")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--up-to-iso", up_to_iso, "Reduce to isomorphism classes");
  enumerate->add_flag("--associative", associative, "Monoids only");
  enumerate->add_option("--output,-o", output, "JSON-lines dump path");
  enumerate->add_option("--checkpoint", checkpoint, "Resumable cursor file for long dumps");

  auto* search = app.add_subcommand("search", "Search for counterexample witnesses");
  search->add_option("--target", target, "noncomposable | sfl-c | e-prime-not-epp")->required();
  search->add_flag("--require-found", require_found, "Exit 1 when nothing is found");
  search->add_option("--output,-o", output, "Output path");
  flags.attach(search, /*with_workers=*/false);

  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_flag("--json", as_json, "Print the machine-readable report");
  verify->add_option("--output,-o", output, "Report output path");
  flags.attach(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(input);
    if (semidirect->parsed()) return run_semidirect(input, output);
    if (extract->parsed()) return run_extract_action(input, output);
    if (compose_cmd->parsed()) return run_compose(outer_path, inner_path, output);
    if (classify->parsed()) return run_classify(input, output);
    if (pullback_cmd->parsed()) return run_pullback(input, output);
    if (enumerate->parsed())
      return run_enumerate(kind, order, up_to_iso, associative, output, checkpoint);
    if (search->parsed()) return run_search(target, flags.resolve(), require_found, output);
    if (verify->parsed()) return run_verify(flags.resolve(), as_json, output);
  } catch (const magmakit::json::parse_error& ex) {
    std::cerr << "malformed input: " << ex.what() << "\n";
    return 2;
  } catch (const magmakit::validation_error& ex) {
    if (ex.code == "MalformedInput" || ex.code == "UnknownName") {
      std::cerr << "malformed input: " << ex.what() << "\n";
      return 2;
    }
    std::cerr << "validation failed: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 3;
  }
  return 0;
}
