#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperlap/bounds.hpp"
#include "hyperlap/cheeger.hpp"
#include "hyperlap/document.hpp"
#include "hyperlap/error.hpp"
#include "hyperlap/generators.hpp"
#include "hyperlap/spectra.hpp"
#include "hyperlap/verify.hpp"

namespace hyperlap::cli {

namespace {

using nlohmann::json;

constexpr double kSpectralTolerance = 1e-9;

struct GlobalOptions {
  std::string output;  // empty: per-command default
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  std::size_t exact_limit = 16;
  bool exact_limit_given = false;
  std::string builtin;
  std::string out_path;
};

struct GeneratorFlags {
  std::string family = "figure1";
  std::string n = "0";
  std::size_t m = 0;
  std::size_t c = 0;
  std::size_t part1 = 0;
  std::size_t part2 = 0;
  double p_member = 0.5;
  double p_input = 0.5;
  double p_catalyst = 0.0;
  std::size_t seeds = 1;
};

struct Input {
  Hypergraph graph;
  std::vector<std::string> names;
};

// Failure that maps straight onto an exit code.
struct CommandError {
  int code;
  std::string message;
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(text);
      return {v, v};
    }
    const std::size_t lo = std::stoul(text.substr(0, dots));
    const std::size_t hi = std::stoul(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw CommandError{kInputError, "--n: expected an integer or a range a..b, got '" + text + "'"};
  }
}

Hypergraph builtin_graph(const std::string& name) {
  if (name == "figure1") return figure1();
  if (name == "edge") return complete_graph(2);
  if (name.size() > 1 && name[0] == 'k') {
    const bool minus = name.size() > 2 && name.ends_with("-e");
    const std::string digits = name.substr(1, name.size() - 1 - (minus ? 2 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      const std::size_t n = std::stoul(digits);
      return minus ? complete_minus_edge(n) : complete_graph(n);
    }
  }
  throw CommandError{kInputError, "unknown builtin '" + name +
                                      "' (expected figure1, edge, k<N> or k<N>-e)"};
}

Input load_input(const std::string& path, const GlobalOptions& g) {
  Input in;
  if (!g.builtin.empty()) {
    if (!path.empty()) throw CommandError{kInputError, "give either an input file or --builtin"};
    in.graph = builtin_graph(g.builtin);
    in.names = to_document(in.graph).vertices;
  } else {
    if (path.empty()) throw CommandError{kInputError, "no input: pass a document path or --builtin"};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw CommandError{kInputError, "cannot open '" + path + "'"};
    std::stringstream buf;
    buf << file.rdbuf();
    const HypergraphDocument doc = parse_document(buf.str());
    in.graph = to_hypergraph(doc);
    in.names = doc.vertices.empty() ? to_document(in.graph).vertices : doc.vertices;
  }
  if (in.graph.vertex_count() > kMaxSize || in.graph.edge_count() > kMaxSize)
    throw CommandError{kInputError, "input too large: N = " +
                                        std::to_string(in.graph.vertex_count()) +
                                        ", M = " + std::to_string(in.graph.edge_count()) +
                                        " (limit " + std::to_string(kMaxSize) + " each)"};
  in.graph = validate(std::move(in.graph));
  return in;
}

std::string format_of(const GlobalOptions& g, const char* fallback) {
  const std::string f = g.output.empty() ? fallback : g.output;
  if (f != "json" && f != "csv" && f != "text")
    throw CommandError{kInputError, "--output must be json, csv or text"};
  return f;
}

void emit(const std::string& text, const GlobalOptions& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw CommandError{kInputError, "cannot write '" + g.out_path + "'"};
  file << text;
}

json check_json(const std::string& name, bool pass, double residual) {
  return json{{"name", name}, {"pass", pass}, {"residual", residual}};
}

json names_of(const std::vector<VertexId>& ids, const std::vector<std::string>& names) {
  json arr = json::array();
  for (VertexId v : ids) arr.push_back(names.at(v));
  return arr;
}

json input_summary(const Input& in) {
  return json{{"n", in.graph.vertex_count()},
              {"m", in.graph.edge_count()},
              {"connected", is_connected(strip_catalysts(in.graph))},
              {"bipartite", find_bipartition(in.graph).has_value()},
              {"max_cardinality", max_cardinality(in.graph)},
              {"vertices", in.names}};
}

std::string text_of_checks(const json& checks) {
  std::string s;
  for (const json& c : checks)
    s += "check " + c["name"].get<std::string>() + ": " + (c["pass"].get<bool>() ? "pass" : "FAIL") +
         " (residual " + fmt17(c["residual"].get<double>()) + ")\n";
  return s;
}

int cmd_spectrum(const std::string& path, const GlobalOptions& g, std::ostream& out) {
  const Input in = load_input(path, g);
  const std::string format = format_of(g, "json");
  const Spectrum s = spectrum(in.graph);
  double trace = 0.0;
  for (double x : s.values) trace += x;
  const double neg = std::max(0.0, -s.min());
  const double trace_res = std::abs(trace - static_cast<double>(in.graph.vertex_count()));
  json checks = json::array({check_json("nonnegativity", neg <= kSpectralTolerance, neg),
                             check_json("trace_identity", trace_res <= kSpectralTolerance, trace_res)});

  std::string text;
  if (format == "json") {
    json report{{"input", input_summary(in)},
                {"spectrum", {{"eigenvalues", s.values}, {"lambda_max", s.max()}}},
                {"checks", checks}};
    text = report.dump(2) + "\n";
  } else if (format == "csv") {
    text = "index,eigenvalue\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
      text += std::to_string(i + 1) + "," + fmt17(s.values[i]) + "\n";
  } else {
    text = "lambda_max: " + fmt17(s.max()) + "\neigenvalues:";
    for (double x : s.values) text += " " + fmt17(x);
    text += "\n" + text_of_checks(checks);
  }
  emit(text, g, out);
  return kOk;
}

int cmd_bounds(const std::string& path, const GlobalOptions& g, std::size_t restarts,
               unsigned threads, std::ostream& out) {
  const Input in = load_input(path, g);
  const std::string format = format_of(g, "json");
  if (!is_connected(strip_catalysts(in.graph)))
    throw CommandError{kInputError, "input hypergraph is disconnected; bounds need a connected input"};

  BoundsOptions opts;
  opts.n_limit = g.exact_limit;
  opts.restarts = restarts;
  opts.seed = g.seed;
  opts.tolerance = g.tolerance;
  opts.threads = threads;
  const BoundsReport r = bounds_report(in.graph, opts);

  const double sandwich = std::max({0.0, -r.lower_gap, -r.upper_gap});
  const bool agree = r.upper_equality.is_equality == r.spectral_equality;
  const double gap = std::abs(r.upper_gap);
  json checks = json::array(
      {check_json("sandwich", sandwich <= g.tolerance, sandwich),
       check_json("equality_characterization", agree,
                  r.upper_equality.is_equality || !agree ? gap : 0.0)});

  std::vector<HyperedgeId> edge_ids;
  for (const SubEdge& e : r.lower.sub.edges) edge_ids.push_back(e.source);

  std::string text;
  if (format == "json") {
    json bounds{
        {"lambda_max", r.lambda_max},
        {"upper", r.upper},
        {"upper_equality",
         {{"is_equality", r.upper_equality.is_equality},
          {"bipartite", r.upper_equality.bipartite},
          {"constant_cardinality", r.upper_equality.constant_cardinality},
          {"spectral", r.spectral_equality}}},
        {"eta_star", r.lower.eta.value},
        {"eta_numerator", r.lower.eta.numerator},
        {"eta_denominator", r.lower.eta.denominator},
        {"witness",
         {{"vertices", names_of(r.lower.sub.vertices, in.names)},
          {"side1", names_of(r.lower.partition.part(1), in.names)},
          {"side2", names_of(r.lower.partition.part(2), in.names)},
          {"hyperedges", edge_ids}}},
        {"lower_is_exact", r.lower_is_exact},
        {"upper_gap", r.upper_gap},
        {"lower_gap", r.lower_gap}};
    json report{{"input", input_summary(in)}, {"bounds", bounds}, {"checks", checks}};
    text = report.dump(2) + "\n";
  } else if (format == "csv") {
    text = "lambda_max,upper,is_equality,bipartite,constant_cardinality,eta_star,lower_is_exact,"
           "upper_gap,lower_gap\n";
    text += fmt17(r.lambda_max) + "," + std::to_string(r.upper) + "," +
            (r.upper_equality.is_equality ? "true" : "false") + "," +
            (r.upper_equality.bipartite ? "true" : "false") + "," +
            (r.upper_equality.constant_cardinality ? "true" : "false") + "," +
            fmt17(r.lower.eta.value) + "," + (r.lower_is_exact ? "true" : "false") + "," +
            fmt17(r.upper_gap) + "," + fmt17(r.lower_gap) + "\n";
  } else {
    text = "lambda_max: " + fmt17(r.lambda_max) + "\nupper (max|h|): " + std::to_string(r.upper) +
           "\nequality: " + (r.upper_equality.is_equality ? "yes" : "no") +
           " (bipartite: " + (r.upper_equality.bipartite ? "yes" : "no") +
           ", constant cardinality: " + (r.upper_equality.constant_cardinality ? "yes" : "no") +
           ")\neta*: " + fmt17(r.lower.eta.value) + (r.lower_is_exact ? " (exact)" : " (greedy)") +
           "\nwitness:";
    for (VertexId v : r.lower.sub.vertices)
      text += " " + in.names.at(v) + "/" + std::to_string(r.lower.partition.side[v]);
    text += "\n" + text_of_checks(checks);
  }
  emit(text, g, out);
  return kOk;
}

int cmd_cheeger(const std::string& path, const GlobalOptions& g, std::size_t samples,
                std::ostream& out) {
  const Input in = load_input(path, g);
  const std::string format = format_of(g, "json");
  const QValue q = q_constant(in.graph);
  const QCharacterization qc = verify_q_characterization(in.graph, samples, g.seed);
  json checks = json::array(
      {check_json("q_le_lambda", qc.below_lambda, std::max(0.0, qc.q - qc.lambda_max)),
       check_json("indicator_attains_q", qc.indicator_attains, std::abs(qc.indicator_value - qc.q)),
       check_json("samples_dominated", qc.dominated,
                  samples == 0 ? 0.0 : std::max(0.0, qc.worst_quotient - qc.q))});

  std::string text;
  if (format == "json") {
    json cheeger{{"q", q.value},
                 {"argmax_hyperedge", q.argmax},
                 {"per_edge", q.per_edge},
                 {"lambda_max", qc.lambda_max},
                 {"indicator_value", qc.indicator_value},
                 {"samples", samples},
                 {"worst_sampled_quotient", samples == 0 ? 0.0 : qc.worst_quotient}};
    json report{{"input", input_summary(in)}, {"cheeger", cheeger}, {"checks", checks}};
    text = report.dump(2) + "\n";
  } else if (format == "csv") {
    text = "q,argmax_hyperedge,lambda_max,q_le_lambda\n" + fmt17(q.value) + "," +
           std::to_string(q.argmax) + "," + fmt17(qc.lambda_max) + "," +
           (qc.below_lambda ? "true" : "false") + "\n";
  } else {
    text = "Q: " + fmt17(q.value) + " (hyperedge " + std::to_string(q.argmax) +
           ")\nlambda_max: " + fmt17(qc.lambda_max) + "\n" + text_of_checks(checks);
  }
  emit(text, g, out);
  if (!qc.pass) return kBoundViolation;
  return kOk;
}

GeneratorSpec base_spec(const GeneratorFlags& f) {
  GeneratorSpec s;
  try {
    s.family = parse_family(f.family);
  } catch (const Error& e) {
    throw CommandError{kInputError, e.what()};
  }
  s.m = f.m;
  s.c = f.c;
  s.part1 = f.part1;
  s.part2 = f.part2;
  s.p_member = f.p_member;
  s.p_input = f.p_input;
  s.p_catalyst = f.p_catalyst;
  return s;
}

std::vector<GeneratorSpec> ensemble(const GeneratorFlags& f, std::uint64_t seed) {
  const GeneratorSpec base = base_spec(f);
  std::vector<GeneratorSpec> specs;
  if (base.family == Family::figure1) return {base};
  if (base.family == Family::bipartite_constant) {
    for (std::size_t k = 0; k < f.seeds; ++k) {
      GeneratorSpec s = base;
      s.seed = seed + k;
      specs.push_back(s);
    }
    return specs;
  }
  const auto [lo, hi] = parse_range(f.n);
  const bool seeded = base.family == Family::random_oriented || base.family == Family::random_chemical;
  for (std::size_t n = lo; n <= hi; ++n)
    for (std::size_t k = 0; k < (seeded ? f.seeds : 1); ++k) {
      GeneratorSpec s = base;
      s.n = n;
      s.seed = seeded ? seed + k : 0;
      specs.push_back(s);
    }
  return specs;
}

const char* kVerifyColumns =
    "family,n,m,seed,lambda_max,upper,eta_star,eta_exact,q,bipartite,constant_cardinality,"
    "nonnegativity,trace_identity,sandwich,greedy_le_exact,equality_characterization,"
    "isospectral_stripping,orientation_invariance,vertex_hyperedge_duality,indicator_rayleigh,"
    "q_characterization,max_residual,pass";

int cmd_verify(const GeneratorFlags& f, const GlobalOptions& g, std::size_t samples,
               std::size_t flips, unsigned jobs, std::ostream& out, std::ostream& err) {
  const std::string format = format_of(g, "csv");
  const auto specs = ensemble(f, g.seed);
  VerifyOptions opts;
  opts.tolerance = g.tolerance;
  if (g.exact_limit_given) opts.exact_limit = g.exact_limit;
  opts.q_samples = samples;
  opts.flips = flips;
  const auto results = verify_ensemble(specs, opts, jobs);

  bool all_pass = true;
  for (const InstanceResult& r : results) {
    for (const Check& c : r.checks)
      if (!c.pass)
        err << "instance " << r.family << " n=" << r.n << " seed=" << r.seed << ": check "
            << c.name << " failed (residual " << fmt17(c.residual) << ")\n";
    all_pass = all_pass && r.pass();
  }

  std::string text;
  if (format == "csv") {
    text = std::string(kVerifyColumns) + "\n";
    for (const InstanceResult& r : results) {
      double max_res = 0.0;
      for (const Check& c : r.checks) max_res = std::max(max_res, c.residual);
      text += r.family + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
              std::to_string(r.seed) + "," + fmt17(r.lambda_max) + "," + std::to_string(r.upper) +
              "," + fmt17(r.eta_star) + "," + (r.eta_exact ? "true" : "false") + "," +
              fmt17(r.q) + "," + (r.bipartite ? "true" : "false") + "," +
              (r.constant_cardinality ? "true" : "false");
      for (const Check& c : r.checks) text += c.skipped ? ",skip" : (c.pass ? ",pass" : ",fail");
      text += "," + fmt17(max_res) + "," + (r.pass() ? "true" : "false") + "\n";
    }
  } else if (format == "json") {
    json instances = json::array();
    for (const InstanceResult& r : results) {
      json checks = json::array();
      for (const Check& c : r.checks) {
        json cj = check_json(c.name, c.pass, c.residual);
        cj["skipped"] = c.skipped;
        checks.push_back(cj);
      }
      instances.push_back(json{{"family", r.family},
                               {"n", r.n},
                               {"m", r.m},
                               {"seed", r.seed},
                               {"lambda_max", r.lambda_max},
                               {"upper", r.upper},
                               {"eta_star", r.eta_star},
                               {"eta_exact", r.eta_exact},
                               {"q", r.q},
                               {"bipartite", r.bipartite},
                               {"constant_cardinality", r.constant_cardinality},
                               {"checks", checks},
                               {"pass", r.pass()}});
    }
    text = json{{"instances", instances}, {"pass", all_pass}}.dump(2) + "\n";
  } else {
    std::size_t passed = 0;
    for (const InstanceResult& r : results) passed += r.pass();
    text = std::to_string(passed) + "/" + std::to_string(results.size()) +
           " instances passed every check\n";
  }
  emit(text, g, out);
  return all_pass ? kOk : kVerificationFailure;
}

int cmd_generate(const GeneratorFlags& f, const GlobalOptions& g, std::ostream& out) {
  GeneratorSpec spec = base_spec(f);
  const auto [lo, hi] = parse_range(f.n);
  if (lo != hi) throw CommandError{kInputError, "generate takes a single --n"};
  spec.n = lo;
  spec.seed = g.seed;
  HypergraphDocument doc = to_document(generate(spec));
  doc.generator = spec;
  emit(write_document(doc), g, out);
  return kOk;
}

void add_generator_flags(CLI::App* cmd, GeneratorFlags& f) {
  cmd->add_option("--family", f.family,
                  "complete, complete-minus-edge, bipartite-constant, random-oriented, "
                  "random-chemical or figure1")
      ->capture_default_str();
  cmd->add_option("--n", f.n, "vertex count, or a range a..b for verify")->capture_default_str();
  cmd->add_option("--m", f.m, "hyperedge count");
  cmd->add_option("--c", f.c, "cardinality (bipartite-constant)");
  cmd->add_option("--part1", f.part1, "input-side part size (bipartite-constant)");
  cmd->add_option("--part2", f.part2, "output-side part size (bipartite-constant)");
  cmd->add_option("--p-member", f.p_member, "membership probability")->capture_default_str();
  cmd->add_option("--p-input", f.p_input, "probability a member is an input")->capture_default_str();
  cmd->add_option("--p-catalyst", f.p_catalyst, "probability a member is a catalyst")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized Laplacian spectra of chemical hypergraphs and bounds on the largest "
               "eigenvalue",
               "hyperlap"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--output", g.output, "report format: json, csv or text");
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "tolerance for bound checks")->capture_default_str();
  auto* exact_limit = app.add_option("--exact-limit", g.exact_limit,
                                     "largest N for the exhaustive lower-bound search "
                                     "(verify defaults to 12)")
                           ->capture_default_str();
  app.add_option("--builtin", g.builtin, "built-in fixture: figure1, edge, k<N>, k<N>-e");
  app.add_option("--out", g.out_path, "write the report to this path instead of stdout");

  std::string path;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the normalized Laplacian");
  spectrum_cmd->add_option("input", path, "hypergraph document (JSON)");

  std::size_t restarts = 8;
  unsigned threads = 1;
  auto* bounds_cmd = app.add_subcommand("bounds", "upper and lower bounds on the largest eigenvalue");
  bounds_cmd->add_option("input", path, "hypergraph document (JSON)");
  bounds_cmd->add_option("--restarts", restarts, "random restarts of the greedy search")
      ->capture_default_str();
  bounds_cmd->add_option("--threads", threads, "threads for the exhaustive search")
      ->capture_default_str();

  std::size_t samples = 1000;
  auto* cheeger_cmd = app.add_subcommand("cheeger", "Cheeger-like constant Q and its checks");
  cheeger_cmd->add_option("input", path, "hypergraph document (JSON)");
  cheeger_cmd->add_option("--samples", samples, "random hyperedge functions to test")
      ->capture_default_str();

  GeneratorFlags gen;
  std::size_t flips = 10;
  unsigned jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run every invariant check over an ensemble");
  add_generator_flags(verify_cmd, gen);
  verify_cmd->add_option("--seeds", gen.seeds, "instances per n (seeded families)")
      ->capture_default_str();
  verify_cmd->add_option("--samples", samples, "random hyperedge functions per instance")
      ->capture_default_str();
  verify_cmd->add_option("--flips", flips, "random orientation flips per instance")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "instances verified concurrently")->capture_default_str();
  verify_cmd->footer(std::string("CSV columns: ") + kVerifyColumns +
                     "\nCheck cells are pass, fail or skip.");

  auto* generate_cmd = app.add_subcommand("generate", "write a generated hypergraph document");
  add_generator_flags(generate_cmd, gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  g.exact_limit_given = exact_limit->count() > 0;

  try {
    if (*spectrum_cmd) return cmd_spectrum(path, g, out);
    if (*bounds_cmd) return cmd_bounds(path, g, restarts, threads, out);
    if (*cheeger_cmd) return cmd_cheeger(path, g, samples, out);
    if (*verify_cmd) return cmd_verify(gen, g, samples, flips, jobs, out, err);
    if (*generate_cmd) return cmd_generate(gen, g, out);
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::not_symmetric:
      case ErrorKind::no_convergence: return kNumericalFailure;
      case ErrorKind::bound_violation: return kBoundViolation;
      default: return kInputError;
    }
  }
  return kInputError;
}

}  // namespace hyperlap::cli
