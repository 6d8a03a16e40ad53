#include "wittkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wittkit/endo.hpp"
#include "wittkit/parse.hpp"
#include "wittkit/suites.hpp"

namespace wittkit {

namespace {

using Json = nlohmann::ordered_json;

struct Invocation {
  std::string group;
  std::string op;
  std::string ring_text = "Z";
  RingSpec ring;
  std::size_t precision = 8;
  std::int64_t index = 1;   // -n / -l
  std::int64_t scalar = 1;  // -m
  std::vector<std::string> operands;
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> cutoff;
  std::size_t max_degree = 64;
  bool json = false;
  bool timing = false;
  bool serial = false;
  std::string out_path;
};

/// Result text plus anything worth warning about.
struct Result {
  std::string text;
  std::vector<std::string> warnings;
};

std::size_t max_dim() {
  if (const char* env = std::getenv("WITTKIT_MAX_DIM")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw Error(std::string("WITTKIT_MAX_DIM is not a number: ") + env);
    }
  }
  return 4096;
}

void check_dim(std::size_t rows, const std::string& what) {
  if (rows > max_dim())
    throw Error(what + " would have " + std::to_string(rows) + " rows, above WITTKIT_MAX_DIM=" +
                std::to_string(max_dim()));
}

std::size_t positive_index(std::int64_t v, const char* flag) {
  if (v < 1) throw InvalidIndex(std::string(flag) + " must be at least 1, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

void warn_degree(const RationalWitt& x, const Invocation& inv, Result& r) {
  if (x.num().degree() > inv.max_degree)
    r.warnings.push_back("numerator degree " + std::to_string(x.num().degree()) + " exceeds " +
                         std::to_string(inv.max_degree));
  if (x.den().degree() > inv.max_degree)
    r.warnings.push_back("denominator degree " + std::to_string(x.den().degree()) + " exceeds " +
                         std::to_string(inv.max_degree));
}

Result witt_command(const Invocation& inv) {
  const RingSpec& ring = inv.ring;
  const std::size_t n = inv.precision;
  auto arg = [&](std::size_t i) { return WittVector(parse_series(inv.operands.at(i), ring, n)); };
  const std::string& op = inv.op;
  if (op == "add") return {(arg(0) + arg(1)).to_string(), {}};
  if (op == "mul") return {witt_mul(arg(0), arg(1)).to_string(), {}};
  if (op == "neg") return {(-arg(0)).to_string(), {}};
  if (op == "scalar") return {int_scalar(inv.scalar, arg(0)).to_string(), {}};
  if (op == "frob") return {frobenius(positive_index(inv.index, "-n"), arg(0)).to_string(), {}};
  if (op == "versch") return {verschiebung(positive_index(inv.index, "-n"), arg(0)).to_string(), {}};
  if (op == "teich") return {teichmuller(parse_element(inv.operands.at(0), ring), n).to_string(), {}};
  if (op == "ghost") return {format_element_list(ghost(arg(0))), {}};
  if (op == "decompose") return {format_element_list(decompose(arg(0)).coords), {}};
  if (op == "reconstruct") return {reconstruct({ring, parse_element_list(inv.operands.at(0), ring)}).to_string(), {}};
  if (op == "filtration") {
    const auto d = filtration_degree(arg(0));
    return {d ? std::to_string(*d) : "zero", {}};
  }
  if (op == "invert-int") return {witt_inverse_of_integer(inv.index, n, ring).to_string(), {}};
  throw Error("unknown witt operation " + op);
}

Result rw_command(const Invocation& inv) {
  const RingSpec& ring = inv.ring;
  auto arg = [&](std::size_t i) { return parse_rational_witt(inv.operands.at(i), ring); };
  auto done = [&](const RationalWitt& x) {
    Result r{x.to_string(), {}};
    warn_degree(x, inv, r);
    return r;
  };
  const std::string& op = inv.op;
  if (op == "add") return done(arg(0) + arg(1));
  if (op == "neg") return done(-arg(0));
  if (op == "scalar") return done(int_scalar(inv.scalar, arg(0)));
  if (op == "mul") {
    const auto x = arg(0), y = arg(1);
    check_dim(std::max(x.num().degree(), x.den().degree()) * std::max(y.num().degree(), y.den().degree()),
              "Kronecker realization");
    return done(rw_mul(x, y));
  }
  if (op == "frob") return done(rw_frobenius(positive_index(inv.index, "-n"), arg(0)));
  if (op == "versch") return done(rw_verschiebung(positive_index(inv.index, "-n"), arg(0)));
  if (op == "expand") return {rw_expand(arg(0), inv.precision).to_string(), {}};
  if (op == "eq") return {rw_eq(arg(0), arg(1)) ? "true" : "false", {}};
  throw Error("unknown rw operation " + op);
}

Result endo_command(const Invocation& inv) {
  const RingSpec& ring = inv.ring;
  auto arg = [&](std::size_t i) { return parse_matrix(inv.operands.at(i), ring); };
  const std::string& op = inv.op;
  if (op == "char") return {char_series(arg(0)).to_string(), {}};
  if (op == "frob") return {endo_frobenius(positive_index(inv.index, "-l"), arg(0)).to_string(), {}};
  if (op == "versch") {
    const auto phi = arg(0);
    const std::size_t l = positive_index(inv.index, "-l");
    check_dim(l * phi.size(), "Verschiebung");
    return {endo_verschiebung(l, phi).to_string(), {}};
  }
  if (op == "tensor") {
    const auto phi = arg(0), psi = arg(1);
    check_dim(phi.size() * psi.size(), "tensor product");
    return {endo_tensor(phi, psi).to_string(), {}};
  }
  if (op == "dsum") return {endo_direct_sum(arg(0), arg(1)).to_string(), {}};
  if (op == "nilindex") {
    const auto phi = arg(0);
    const auto idx = inv.cutoff ? nilpotency_index(phi, *inv.cutoff) : nilpotency_index(phi);
    return {idx ? std::to_string(*idx) : "not nilpotent within cutoff", {}};
  }
  if (op == "k0") return {k0_class(arg(0)).to_string(), {}};
  throw Error("unknown endo operation " + op);
}

Json report_json(const SuiteReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["ring"] = r.options.ring.to_string();
  j["precision"] = r.options.precision;
  j["trials"] = r.options.trials;
  j["seed"] = r.options.seed;
  j["ok"] = r.ok();
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json e;
    e["name"] = p.name;
    e["passed"] = p.passed;
    e["failed"] = p.failed;
    e["counterexample"] = p.counterexample ? Json(*p.counterexample) : Json(nullptr);
    props.push_back(std::move(e));
  }
  j["properties"] = std::move(props);
  Json skipped = Json::array();
  for (const auto& [name, why] : r.skipped) skipped.push_back({{"suite", name}, {"reason", why}});
  j["skipped"] = std::move(skipped);
  if (timing) j["seconds"] = r.seconds;
  return j;
}

std::string report_text(const SuiteReport& r, bool timing) {
  std::ostringstream os;
  os << "suite " << r.suite << " ring " << r.options.ring << " precision " << r.options.precision << " trials "
     << r.options.trials << " seed " << r.options.seed << "\n";
  for (const auto& p : r.properties) {
    os << (p.failed ? "FAIL " : "PASS ") << p.name << " " << p.passed << "/" << (p.passed + p.failed) << "\n";
    if (p.counterexample) os << "  counterexample: " << *p.counterexample << "\n";
  }
  for (const auto& [name, why] : r.skipped) os << "SKIP " << name << ": " << why << "\n";
  if (timing) os << "time " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  os << (r.ok() ? "OK" : "FAILED") << " (" << r.properties.size() << " properties)";
  return os.str();
}

int verify_command(const Invocation& inv, std::ostream& out) {
  SuiteOptions opts;
  opts.ring = inv.ring;
  opts.precision = inv.precision;
  opts.trials = inv.trials;
  opts.seed = inv.seed;
  opts.execution = inv.serial ? Execution::Serial : Execution::Parallel;
  const SuiteReport report = run_suite(inv.suite, opts);

  Json wrapped;
  wrapped["op"] = "verify " + inv.suite;
  wrapped["ring"] = inv.ring.to_string();
  wrapped["result"] = report_json(report, inv.timing);
  if (inv.json)
    out << wrapped.dump(2) << "\n";
  else
    out << report_text(report, inv.timing) << "\n";
  if (!inv.out_path.empty()) {
    std::ofstream file(inv.out_path);
    if (!file) throw Error("cannot write " + inv.out_path);
    file << wrapped.dump(2) << "\n";
  }
  return report.ok() ? 0 : 1;
}

void add_common(CLI::App* cmd, Invocation& inv) {
  cmd->add_option("--ring", inv.ring_text, "Coefficient ring: Z, Q, Zmod:<m>, Fp:<p>")->capture_default_str();
  cmd->add_option("--prec", inv.precision, "Truncation precision N")->capture_default_str();
  cmd->add_flag("--json", inv.json, "Emit JSON");
  cmd->add_option("--out", inv.out_path, "Also write the JSON result to this file");
}

CLI::App* add_leaf(CLI::App* group, Invocation& inv, const std::string& name, const std::string& desc,
                   std::size_t operands) {
  CLI::App* cmd = group->add_subcommand(name, desc);
  add_common(cmd, inv);
  if (operands > 0)
    cmd->add_option("operands", inv.operands, "Inputs in the text grammar")
        ->expected(static_cast<int>(operands))
        ->allow_extra_args(false)  // keep "[[1,2],[3,4]]" as one token
        ->required();
  cmd->callback([&inv, group, name] {
    inv.group = group->get_name();
    inv.op = name;
  });
  return cmd;
}

void build_app(CLI::App& app, Invocation& inv) {
  app.require_subcommand(1);

  CLI::App* witt = app.add_subcommand("witt", "Truncated big Witt vectors W_N(R)");
  witt->require_subcommand(1);
  add_leaf(witt, inv, "add", "Witt sum (series product)", 2);
  add_leaf(witt, inv, "mul", "Witt product", 2);
  add_leaf(witt, inv, "neg", "Witt negation (series inverse)", 1);
  add_leaf(witt, inv, "scalar", "Integer multiple m*x", 1)->add_option("-m", inv.scalar, "Multiplier")->required();
  add_leaf(witt, inv, "frob", "Frobenius F_n", 1)->add_option("-n", inv.index, "Index n")->required();
  add_leaf(witt, inv, "versch", "Verschiebung V_n", 1)->add_option("-n", inv.index, "Index n")->required();
  add_leaf(witt, inv, "teich", "Teichmueller lift [a] = 1 - a t", 1);
  add_leaf(witt, inv, "ghost", "Ghost components", 1);
  add_leaf(witt, inv, "decompose", "Coordinates a_i with x = prod (1 - a_i t^i)", 1);
  add_leaf(witt, inv, "reconstruct", "Inverse of decompose", 1);
  add_leaf(witt, inv, "filtration", "Least index of a nonzero coordinate", 1);
  add_leaf(witt, inv, "invert-int", "The inverse of the integer l in W_N(R)", 0)
      ->add_option("-l", inv.index, "Integer l")
      ->required();

  CLI::App* rw = app.add_subcommand("rw", "Rational Witt vectors W_0(R)");
  rw->require_subcommand(1);
  for (auto* cmd : {add_leaf(rw, inv, "add", "Witt sum", 2), add_leaf(rw, inv, "mul", "Witt product", 2),
                    add_leaf(rw, inv, "neg", "Witt negation", 1),
                    add_leaf(rw, inv, "frob", "Frobenius F_n", 1), add_leaf(rw, inv, "versch", "Verschiebung V_n", 1),
                    add_leaf(rw, inv, "scalar", "Integer multiple", 1), add_leaf(rw, inv, "expand", "Expand into W_N(R)", 1),
                    add_leaf(rw, inv, "eq", "Equality in W_0(R)", 2)}) {
    cmd->add_option("--max-degree", inv.max_degree, "Warn above this numerator/denominator degree")
        ->capture_default_str();
    if (cmd->get_name() == "frob" || cmd->get_name() == "versch")
      cmd->add_option("-n", inv.index, "Index n")->required();
    if (cmd->get_name() == "scalar") cmd->add_option("-m", inv.scalar, "Multiplier")->required();
  }

  CLI::App* endo = app.add_subcommand("endo", "Matrix endomorphisms and their K_0 classes");
  endo->require_subcommand(1);
  add_leaf(endo, inv, "char", "Characteristic series det(1 - t phi)", 1);
  add_leaf(endo, inv, "frob", "Categorical Frobenius phi^l", 1)->add_option("-l", inv.index, "Index l")->required();
  add_leaf(endo, inv, "versch", "Categorical Verschiebung", 1)->add_option("-l", inv.index, "Index l")->required();
  add_leaf(endo, inv, "tensor", "Kronecker product", 2);
  add_leaf(endo, inv, "dsum", "Direct sum", 2);
  add_leaf(endo, inv, "nilindex", "Nilpotency index", 1)->add_option("--cutoff", inv.cutoff, "Search bound");
  add_leaf(endo, inv, "k0", "Class (rank, char series) in Z + W_0(R)", 1);

  CLI::App* verify = app.add_subcommand("verify", "Run a randomized verification suite");
  add_common(verify, inv);
  std::string names;
  for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
  verify->add_option("suite", inv.suite, "One of: " + names)->required();
  verify->add_option("--trials", inv.trials, "Trials per property")->capture_default_str();
  verify->add_option("--seed", inv.seed, "Random seed")->capture_default_str();
  verify->add_flag("--timing", inv.timing, "Report wall-clock time");
  verify->add_flag("--serial", inv.serial, "Run trials on one thread");
  verify->callback([&inv] {
    inv.group = "verify";
    inv.op = inv.suite;
  });
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact big Witt vector, rational Witt vector and endomorphism arithmetic", "wittkit"};
  Invocation inv;
  build_app(app, inv);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << first_line(e.what()) << "\n";
    return 2;
  }

  try {
    inv.ring = RingSpec::parse(inv.ring_text);
    if (inv.group == "verify") return verify_command(inv, out);

    Result r;
    if (inv.group == "witt") {
      if (inv.precision < 1) throw Error("--prec must be at least 1 for Witt operations");
      r = witt_command(inv);
    } else if (inv.group == "rw") {
      r = rw_command(inv);
    } else {
      r = endo_command(inv);
    }
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";

    Json j;
    j["op"] = inv.group + " " + inv.op;
    j["ring"] = inv.ring.to_string();
    j["result"] = r.text;
    if (inv.json)
      out << j.dump() << "\n";
    else
      out << r.text << "\n";
    if (!inv.out_path.empty()) {
      std::ofstream file(inv.out_path);
      if (!file) throw Error("cannot write " + inv.out_path);
      file << j.dump() << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << first_line(e.what()) << " (offending token '" << e.token() << "')\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << first_line(e.what()) << "\n";
    return 2;
  }
}

}  // namespace wittkit
