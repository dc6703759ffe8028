#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ngraph/ngraph.hpp"

namespace ngraph::cli {
namespace {

using nlohmann::json;

constexpr const char* kFooter = R"(Output schemas (--format json|csv):
  check-set  json {system, predicate, result}            csv predicate,result
  graph      json {system, n_form, graph, durfee, hooks:[{index,x,y,row_terminal,
                  column_terminal,hook_number}], h_N}
  count      json {system, n, p_A}                         csv n,p_A
  enumerate  json {system, kind, n, partitions}            csv n,parts[,vs,classes,e_prime]
             A entries: {parts, u}; H entries: {parts, vs, classes, e_prime}
  verify     json {system, mode, all_pass, rows:[{n, p_A, rhs, pass[, candidates]}]}
             csv n,lhs,rhs,pass
  fiber      json {target, reconstructed, brute_force, agree}
  search     json [[s1,...],...]                            csv set
Lists inside csv cells are space separated. Exit status: 0 success, 1 identity
violated or fiber mismatch, 2 usage or validation error.)";

// Validation error attributed to one flag.
struct UsageError {
  std::string flag;
  std::string message;
};

enum class Format { Text, Json, Csv };

struct Common {
  std::string format = "text";
  std::string output;
  bool verbose = false;
  unsigned threads = 0;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
};

ModularSystem system_flag(const std::string& text) {
  try {
    return parse_system(text);
  } catch (const InvalidSystem& e) {
    throw UsageError{"--set", e.what()};
  }
}

std::vector<Int> list_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError{flag, e.what()};
  }
}

std::string joined(const std::vector<Int>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

std::string labels(const HCandidate& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + class_label(c[i].cls);
  return out;
}

std::string describe(const HCandidate& c) {
  std::string classes;
  for (std::size_t i = 0; i < c.size(); ++i) classes += (i ? "," : "") + class_label(c[i].cls);
  return "(" + joined(c.values(), ",") + ") v=(" + joined(c.vs(), ",") + ") classes=(" + classes +
         ") e'=" + std::to_string(c.e_prime());
}

int check_set(const Common& opt, const std::string& set, const std::string& predicate,
              std::ostream& out) {
  const auto sys = system_flag(set);
  SetPredicate p;
  try {
    p = parse_predicate(predicate);
  } catch (const std::invalid_argument& e) {
    throw UsageError{"--predicate", e.what()};
  }
  if (sys.modulus() < 2) throw UsageError{"--set", "modular predicates need m >= 2"};
  const bool result = satisfies(p, sys.elements(), sys.modulus());
  switch (opt.fmt()) {
    case Format::Json:
      out << json{{"system", to_string(sys)}, {"predicate", predicate}, {"result", result}}.dump()
          << '\n';
      break;
    case Format::Csv: out << "predicate,result\n" << predicate << ',' << result << '\n'; break;
    case Format::Text:
      out << predicate << " (" << to_string(sys) << "): " << (result ? "true" : "false") << '\n';
  }
  return kOk;
}

int graph(const Common& opt, const std::string& set, const std::string& parts_text,
          std::ostream& out) {
  const auto sys = system_flag(set);
  const auto parts = list_flag("--parts", parts_text);
  NFormPartition pi;
  try {
    pi = standard_n_form(parts, sys);
  } catch (const NotInA& e) {
    throw UsageError{"--parts", e.what()};
  }
  const auto g = build_n_graph(pi, sys);
  const auto hooks = hook_decomposition(g);
  const auto h = hook_numbers(g);
  if (opt.fmt() == Format::Json) {
    json hook_list = json::array();
    for (const auto& hook : hooks) hook_list.push_back(to_json(hook));
    out << json{{"system", to_string(sys)},
                {"n_form", pi.parts()},
                {"graph", to_json(g)},
                {"durfee", durfee_size(g)},
                {"hooks", hook_list},
                {"h_N", std::vector<Int>(h.hooks().begin(), h.hooks().end())}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "N-form: " << to_string(pi) << '\n' << render_text(g) << "d_N = " << durfee_size(g) << '\n';
  if (opt.verbose)
    for (const auto& hook : hooks)
      out << "hook " << hook.index << ": x=" << hook.x << " y=" << hook.y
          << " hook_number=" << hook.hook_number << '\n';
  out << "h_N = " << to_string(h) << '\n';
  return kOk;
}

int count(const Common& opt, const std::string& set, Int n, std::ostream& out) {
  const auto sys = system_flag(set);
  if (n < 0) throw UsageError{"--n", "must be nonnegative"};
  const Count c = count_A(n, sys);
  switch (opt.fmt()) {
    case Format::Json: out << json{{"system", to_string(sys)}, {"n", n}, {"p_A", c}}.dump() << '\n'; break;
    case Format::Csv: out << "n,p_A\n" << n << ',' << c << '\n'; break;
    case Format::Text: out << "p_A(" << n << ") = " << c << '\n';
  }
  return kOk;
}

int enumerate(const Common& opt, const std::string& kind, const std::string& set, Int n,
              std::ostream& out) {
  const auto sys = system_flag(set);
  if (n < 0) throw UsageError{"--n", "must be nonnegative"};
  if (kind == "A") {
    const auto all = enumerate_A(n, sys);
    json list = json::array();
    if (opt.fmt() == Format::Csv) out << "n,parts\n";
    for (const auto& pi : all) {
      std::vector<Int> us;
      for (const auto& e : pi.entries()) us.push_back(e.u);
      switch (opt.fmt()) {
        case Format::Json: list.push_back({{"parts", pi.parts()}, {"u", us}}); break;
        case Format::Csv: out << n << ',' << joined(pi.parts(), " ") << '\n'; break;
        case Format::Text: out << to_string(pi) << '\n';
      }
    }
    if (opt.fmt() == Format::Json)
      out << json{{"system", to_string(sys)}, {"kind", "A"}, {"n", n}, {"partitions", list}}.dump()
          << '\n';
    return kOk;
  }
  std::vector<HCandidate> all;
  try {
    all = enumerate_H(n, sys);
  } catch (const PreconditionViolated& e) {
    throw UsageError{"--set", e.what()};
  }
  json list = json::array();
  if (opt.fmt() == Format::Csv) out << "n,parts,vs,classes,e_prime\n";
  for (const auto& c : all) {
    switch (opt.fmt()) {
      case Format::Json: list.push_back(to_json(c)); break;
      case Format::Csv:
        out << n << ',' << joined(c.values(), " ") << ',' << joined(c.vs(), " ") << ',' << labels(c)
            << ',' << c.e_prime() << '\n';
        break;
      case Format::Text: out << describe(c) << '\n';
    }
  }
  if (opt.fmt() == Format::Json)
    out << json{{"system", to_string(sys)}, {"kind", "H"}, {"n", n}, {"partitions", list}}.dump()
        << '\n';
  return kOk;
}

int verify(const Common& opt, const std::string& set, const std::string& mode_name, Int n_max,
           std::ostream& out) {
  const auto sys = system_flag(set);
  IdentityMode mode;
  try {
    mode = parse_mode(mode_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError{"--mode", e.what()};
  }
  if (n_max < 0) n_max = default_n_max(mode);
  std::optional<VerificationReport> found;
  try {
    found = verify_identity(n_max, sys, mode, {opt.verbose && opt.fmt() == Format::Json, opt.threads});
  } catch (const PreconditionViolated& e) {
    throw UsageError{"--mode", e.what()};
  }
  const VerificationReport& report = *found;
  switch (opt.fmt()) {
    case Format::Json: out << to_json(report, opt.verbose).dump() << '\n'; break;
    case Format::Csv: out << to_csv(report); break;
    case Format::Text:
      for (const auto& row : report.rows)
        if (opt.verbose || !row.pass)
          out << "n=" << row.n << " lhs=" << row.lhs << " rhs=" << row.rhs
              << (row.pass ? " ok" : " FAIL") << '\n';
      out << "verified " << to_string(mode) << " identity for " << to_string(sys) << ", n = 0.."
          << n_max << ": all_pass=" << (report.all_pass ? "true" : "false") << '\n';
  }
  return report.all_pass ? kOk : kMathFailure;
}

int fiber(const Common& opt, const std::string& set, const std::string& target_text,
          std::ostream& out, std::ostream& err) {
  const auto sys = system_flag(set);
  const auto parts = list_flag("--target", target_text);
  std::optional<HCandidate> target;
  try {
    target = make_h_candidate(parts, sys);
  } catch (const PreconditionViolated& e) {
    throw UsageError{"--set", e.what()};
  }
  if (!target) throw UsageError{"--target", "(" + joined(parts, ",") + ") is not in H(n)"};

  Fiber rebuilt;
  try {
    rebuilt = reconstruct_fiber(*target, sys);
  } catch (const PreconditionViolated& e) {
    throw UsageError{"--set", e.what()};
  } catch (const ReconstructionFailed& e) {
    err << "reconstruction failed: " << e.what() << '\n';
    return kMathFailure;
  }
  const Fiber brute = brute_fiber(*target, sys);
  const bool agree = rebuilt.members == brute.members;
  if (opt.fmt() == Format::Json) {
    out << json{{"target", to_json(*target)},
                {"reconstructed", to_json(rebuilt)["members"]},
                {"brute_force", to_json(brute)["members"]},
                {"agree", agree}}
               .dump()
        << '\n';
  } else {
    out << "target: " << describe(*target) << '\n';
    out << "reconstructed (" << rebuilt.members.size() << "):";
    for (const auto& pi : rebuilt.members) out << ' ' << to_string(pi);
    out << "\nbrute-force (" << brute.members.size() << "):";
    for (const auto& pi : brute.members) out << ' ' << to_string(pi);
    out << "\nagree=" << (agree ? "true" : "false") << '\n';
  }
  return agree ? kOk : kMathFailure;
}

int search(const Common& opt, Int m, Int len, Int bound, const std::string& predicate,
           std::ostream& out) {
  SetPredicate p;
  try {
    p = parse_predicate(predicate);
  } catch (const std::invalid_argument& e) {
    throw UsageError{"--predicate", e.what()};
  }
  if (m < 2) throw UsageError{"--m", "must be at least 2"};
  if (len < 1) throw UsageError{"--len", "must be at least 1"};
  if (bound < len) throw UsageError{"--bound", "must be at least --len"};
  const auto sets = search_sets(m, static_cast<std::size_t>(len), bound, p);
  switch (opt.fmt()) {
    case Format::Json: out << json(sets).dump() << '\n'; break;
    case Format::Csv:
      out << "set\n";
      for (const auto& s : sets) out << joined(s, " ") << '\n';
      break;
    case Format::Text:
      for (const auto& s : sets) out << '{' << joined(s, ",") << "}\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular partition graphs, hook-number partitions and partition identity checks",
               "ngraph"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  Common opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", opt.output, "Write output to this file instead of stdout");
  app.add_flag("-v,--verbose", opt.verbose, "More detail (candidates in verify json)");

  std::string set, predicate, parts, kind, mode, target;
  Int n = 0, n_max = -1, m = 0, len = 0, bound = 0;

  auto* check_cmd = app.add_subcommand("check-set", "Evaluate a set predicate modulo m");
  check_cmd->add_option("--set", set, "System, e.g. m=15;S=1,6,19")->required();
  check_cmd->add_option("--predicate", predicate,
                        "sum-free | sidon | sum-free-sidon | congruence-equality")
      ->required();

  auto* graph_cmd = app.add_subcommand("graph", "Print the N-graph, Durfee size and hook numbers");
  graph_cmd->add_option("--set", set, "System")->required();
  graph_cmd->add_option("--parts", parts, "Comma-separated parts")->required();

  auto* count_cmd = app.add_subcommand("count", "p_A(n) from the truncated product");
  count_cmd->add_option("--set", set, "System")->required();
  count_cmd->add_option("--n", n, "Weight")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List A(n) or H(n)");
  enum_cmd->add_option("kind", kind, "A or H")->required()->check(CLI::IsMember({"A", "H"}));
  enum_cmd->add_option("--set", set, "System")->required();
  enum_cmd->add_option("--n", n, "Weight")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity for n = 0..n-max");
  verify_cmd->add_option("--set", set, "System")->required();
  verify_cmd->add_option("--mode", mode, "sidon | single | sumfree")->required();
  verify_cmd->add_option("--n-max", n_max, "Largest n (defaults: sidon 300, single 200, sumfree 150)");
  verify_cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");

  auto* fiber_cmd = app.add_subcommand("fiber", "Reconstruct a fiber and compare to brute force");
  fiber_cmd->add_option("--set", set, "System")->required();
  fiber_cmd->add_option("--target", target, "Hook numbers h1,h2,... in diagonal order")->required();

  auto* search_cmd = app.add_subcommand("search", "List sets in [1, bound] satisfying a predicate");
  search_cmd->add_option("--m", m, "Modulus")->required();
  search_cmd->add_option("--len", len, "Set size")->required();
  search_cmd->add_option("--bound", bound, "Largest element")->required();
  search_cmd->add_option("--predicate", predicate, "Predicate name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) {
      err << "error: --output: cannot open " << opt.output << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = opt.output.empty() ? out : file;

  try {
    if (check_cmd->parsed()) return check_set(opt, set, predicate, sink);
    if (graph_cmd->parsed()) return graph(opt, set, parts, sink);
    if (count_cmd->parsed()) return count(opt, set, n, sink);
    if (enum_cmd->parsed()) return enumerate(opt, kind, set, n, sink);
    if (verify_cmd->parsed()) return verify(opt, set, mode, n_max, sink);
    if (fiber_cmd->parsed()) return fiber(opt, set, target, sink, err);
    if (search_cmd->parsed()) return search(opt, m, len, bound, predicate, sink);
  } catch (const UsageError& e) {
    err << "error: " << e.flag << ": " << e.message << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalInvariantViolated& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kMathFailure;
  }
  return kUsage;
}

}  // namespace ngraph::cli
