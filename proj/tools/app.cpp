#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "registry.hpp"
#include "serialize.hpp"
#include "splitorder/splitorder.hpp"

namespace splitorder::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  unsigned alphabet = 2;
  unsigned max_len = 0;
  int stages = 1;
  int order = 1;
  std::string route = "bch";
  std::string scheme;
  int dim = 4;
  std::uint64_t seed = 1;
  int grid_from = 4;
  int grid_to = 10;
};

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_route(CLI::App* cmd, Options& opt) {
  cmd->add_option("--route", opt.route, "Generation route")->check(CLI::IsMember({"taylor", "bch"}));
}

struct ResolvedScheme {
  ConcreteScheme scheme;
  std::optional<int> declared_order;
};

// Registry name first, then a scheme file path.
ResolvedScheme resolve_scheme(const std::string& ref) {
  if (auto entry = find_scheme(ref)) return {entry->scheme, entry->declared_order};
  ConcreteScheme scheme = load_scheme_file(ref);
  if (scheme.name.empty()) scheme.name = ref;
  return {std::move(scheme), std::nullopt};
}

int cmd_lyndon(const Options& opt, std::ostream& out) {
  auto words = generate_lyndon(opt.alphabet, opt.max_len);
  std::stable_sort(words.begin(), words.end(),
                   [](const LyndonWord& l, const LyndonWord& r) { return l.degree() < r.degree(); });
  if (opt.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& w : words) doc.push_back({{"word", w.to_string()}, {"bracket", bracketing(w).to_string()}});
    out << doc.dump(2) << "\n";
    return kSuccess;
  }
  for (const auto& w : words) {
    out << w.to_string();
    if (w.degree() > 1) out << " = " << bracketing(w).to_string();
    out << "\n";
  }
  return kSuccess;
}

int cmd_conditions(const Options& opt, std::ostream& out) {
  const ConditionSystem system = generate_conditions(SchemeShape(opt.stages), opt.order, parse_route(opt.route));
  out << (opt.format == "json" ? conditions_to_json(system) : conditions_to_text(system));
  return kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const ResolvedScheme resolved = resolve_scheme(opt.scheme);
  const Route route = parse_route(opt.route);
  const VerificationResult result = verify_scheme(resolved.scheme, opt.order, route);
  if (opt.format == "json") {
    ordered_json doc;
    doc["scheme"] = resolved.scheme.name;
    doc["stages"] = resolved.scheme.shape.stages;
    doc["order"] = opt.order;
    doc["route"] = to_string(route);
    if (resolved.declared_order) doc["declared_order"] = *resolved.declared_order;
    doc["satisfied"] = result.satisfied;
    doc["residuals"] = ordered_json::array();
    for (const auto& r : result.residuals) {
      if (r.value.is_zero()) continue;
      doc["residuals"].push_back({{"order", r.degree}, {"lyndon", r.lyndon.to_string()}, {"value", r.value.to_string()}});
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "scheme " << resolved.scheme.name << " (s=" << resolved.scheme.shape.stages << ")";
    if (resolved.declared_order) out << " declared order " << *resolved.declared_order;
    out << "\n";
    out << "order " << opt.order << " via " << to_string(route) << ": "
        << (result.satisfied ? "satisfied" : "NOT satisfied") << "\n";
    for (const auto& r : result.residuals) {
      if (r.value.is_zero()) continue;
      out << "  residual " << r.degree << " " << r.lyndon.to_string() << " = " << r.value << "\n";
    }
  }
  return result.satisfied ? kSuccess : kVerificationFailed;
}

int cmd_converge(const Options& opt, std::ostream& out) {
  if (opt.grid_from > opt.grid_to) throw InvalidArgument("--grid-from must not exceed --grid-to");
  const ResolvedScheme resolved = resolve_scheme(opt.scheme);
  std::vector<double> grid;
  for (int k = opt.grid_from; k <= opt.grid_to; ++k) grid.push_back(std::ldexp(1.0, -k));
  const ConvergenceReport report = empirical_order(resolved.scheme, opt.dim, opt.seed, grid);
  out << (opt.format == "json" ? report_to_json(report) : report_to_text(report));
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Order conditions for exponential splitting schemes", "splitorder"};
  app.require_subcommand(1);

  auto* lyndon = app.add_subcommand("lyndon", "List Lyndon words with their standard bracketing");
  lyndon->add_option("--alphabet", opt.alphabet, "Alphabet size")->check(CLI::Range(1u, 26u));
  lyndon->add_option("--max-len", opt.max_len, "Maximum word length")->required()->check(CLI::Range(1u, 16u));
  add_format(lyndon, opt);

  auto* conditions = app.add_subcommand("conditions", "Generate the order-condition system");
  conditions->add_option("-s,--stages", opt.stages, "Number of stages s")->required()->check(CLI::Range(1, 8));
  conditions->add_option("-p,--order", opt.order, "Target order p")->required()->check(CLI::Range(1, 8));
  add_route(conditions, opt);
  add_format(conditions, opt);

  auto* verify = app.add_subcommand("verify", "Check a scheme against the order-p conditions");
  verify->add_option("scheme", opt.scheme, "Registry name or scheme JSON file")->required();
  verify->add_option("-p,--order", opt.order, "Target order p")->required()->check(CLI::Range(1, 8));
  add_route(verify, opt);
  add_format(verify, opt);

  auto* converge = app.add_subcommand("converge", "Measure the local-error slope on random matrices");
  converge->add_option("scheme", opt.scheme, "Registry name or scheme JSON file")->required();
  converge->add_option("--dim", opt.dim, "Matrix dimension")->check(CLI::Range(1, kMaxMatrixDimension));
  converge->add_option("--seed", opt.seed, "Random seed");
  converge->add_option("--grid-from", opt.grid_from, "Largest step is 2^-k")->check(CLI::Range(3, 14));
  converge->add_option("--grid-to", opt.grid_to, "Smallest step is 2^-k")->check(CLI::Range(3, 14));
  add_format(converge, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (lyndon->parsed()) return cmd_lyndon(opt, out);
    if (conditions->parsed()) return cmd_conditions(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (converge->parsed()) return cmd_converge(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace splitorder::cli
