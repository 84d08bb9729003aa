#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dnull/ack_expr.hpp"
#include "dnull/bounds.hpp"
#include "dnull/dickson.hpp"
#include "dnull/errors.hpp"
#include "dnull/nullstellensatz.hpp"
#include "dnull/problem.hpp"

namespace dnull::cli {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> strings(const std::vector<DiffPoly>& S) {
  std::vector<std::string> out;
  for (const DiffPoly& p : S) out.push_back(p.to_string());
  return out;
}

json system_json(const DiffSystem& sys) {
  return json{{"m", sys.ring->m()},
              {"indeterminates", sys.ring->indet_names()},
              {"field", sys.ring->field() == FieldKind::Qx ? "Q(x)" : "Q"},
              {"F", strings(sys.F)},
              {"f", sys.target().to_string()}};
}

GrowthFn growth_from_json(const json& j) {
  if (j.contains("table")) return GrowthFn::table(j.at("table").get<std::vector<std::uint64_t>>());
  if (j.contains("affine"))
    return GrowthFn::affine(j.at("affine").at("a").get<std::uint64_t>(),
                            j.at("affine").at("b").get<std::int64_t>());
  throw UsageError("growth function needs \"table\" or \"affine\"");
}

json growth_to_json(const GrowthFn& f) {
  if (f.is_table()) return json{{"table", f.values()}};
  return json{{"affine", {{"a", f.slope()}, {"b", f.intercept()}}}};
}

// Shared report plumbing: the JSON report, where it goes, and timing.
struct Reporter {
  std::string json_path;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(std::ostream& out, json report) const {
    if (timing)
      report["timing"] = {{"seconds", std::chrono::duration<double>(
                                          std::chrono::steady_clock::now() - start)
                                          .count()}};
    if (json_path.empty()) return;
    std::string text = report.dump(2) + "\n";
    if (json_path == "-") {
      out << text;
      return;
    }
    std::ofstream f(json_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + json_path);
    f << text;
  }
};

json report_head(const std::string& command, json inputs) {
  return json{{"schema", "dnull-report/1"}, {"command", command}, {"inputs", std::move(inputs)}};
}

}  // namespace

std::string trace_json(const DecompositionResult& res, const DiffSystem& sys) {
  json j;
  j["schema"] = "dnull-trace/1";
  j["system"] = system_json(sys);
  json items = json::array();
  for (const WorkItem& w : res.items)
    items.push_back({{"id", w.id},
                     {"parent", w.parent ? json(*w.parent) : json(nullptr)},
                     {"kind", to_string(w.kind)},
                     {"tau", w.tau},
                     {"F", strings(w.F)},
                     {"C", strings(w.C)}});
  j["items"] = std::move(items);
  json iters = json::array();
  for (const IterationRecord& r : res.trace)
    iters.push_back({{"item", r.item},
                     {"parent", r.parent ? json(*r.parent) : json(nullptr)},
                     {"kind", to_string(r.kind)},
                     {"tau", r.tau},
                     {"f_rank", r.f_rank},
                     {"b", r.b},
                     {"D_in", r.D_in},
                     {"H_in", r.H_in},
                     {"D_touched", r.D_touched},
                     {"H_touched", r.H_touched},
                     {"outcome", to_string(r.outcome)},
                     {"children", r.children}});
  j["iterations"] = std::move(iters);
  json comps = json::array();
  for (const Component& c : res.components) {
    json e{{"kind", to_string(c.kind)}, {"item", c.item}, {"set", strings(c.set)}};
    if (c.coherent) e["coherent"] = *c.coherent;
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  j["lineages"] = res.lineages();
  j["saw_unit"] = res.saw_unit;
  return j.dump(2) + "\n";
}

namespace {

int cmd_decompose(const std::string& file, const std::string& trace_path, bool verify, bool exact,
                  const RgboundCaps& caps, const Reporter& rep, std::ostream& out) {
  ProblemFile p = parse_problem(read_file(file));
  const DiffSystem& sys = p.system;
  json head = report_head("decompose", {{"file", file}, {"system", system_json(sys)}});
  head["caps"] = {{"max_iterations", caps.max_iterations},
                  {"max_seconds", caps.max_seconds},
                  {"max_terms", caps.max_terms}};
  DecompositionResult res;
  try {
    res = rgbound_decompose(sys, caps);
  } catch (const RgboundCapError& e) {
    if (!trace_path.empty()) std::ofstream(trace_path, std::ios::binary) << trace_json(e.partial(), sys);
    head["results"] = {{"status", "resource-cap"},
                       {"message", e.what()},
                       {"iterations", e.partial().trace.size()}};
    rep.emit(out, head);
    throw;
  }

  std::optional<TraceReport> tr;
  if (verify) tr = verify_trace(res, sys, exact);
  if (!trace_path.empty()) std::ofstream(trace_path, std::ios::binary) << trace_json(res, sys);

  out << "iterations: " << res.trace.size() << "\n";
  out << "components: " << res.components.size() << "\n";
  for (const Component& c : res.components) {
    out << "  " << to_string(c.kind) << " {";
    for (std::size_t i = 0; i < c.set.size(); ++i) out << (i ? ", " : "") << c.set[i].to_string();
    out << "}";
    if (c.coherent) out << (*c.coherent ? " coherent" : " not coherent");
    out << "\n";
  }
  if (res.saw_unit) out << "some lineages closed with a constant in F\n";
  json results{{"status", "ok"},
               {"iterations", res.trace.size()},
               {"saw_unit", res.saw_unit}};
  json comps = json::array();
  for (const Component& c : res.components) {
    json e{{"kind", to_string(c.kind)}, {"set", strings(c.set)}};
    if (c.coherent) e["coherent"] = *c.coherent;
    comps.push_back(std::move(e));
  }
  results["components"] = std::move(comps);
  if (tr) {
    out << "verify: " << (tr->ok() ? "ok" : "FAILED") << " (dicksonian "
        << (tr->dicksonian ? "yes" : "no") << ", degree bound " << (tr->degree_ok ? "yes" : "no")
        << ", iteration bound "
        << (tr->iteration_bound_symbolic ? "within symbolic bound"
                                         : (tr->iteration_bound_ok ? "yes" : "no"))
        << ")\n";
    for (const std::string& f : tr->failures) out << "  " << f << "\n";
    results["verify"] = {{"ok", tr->ok()},
                         {"dicksonian", tr->dicksonian},
                         {"degree_ok", tr->degree_ok},
                         {"iteration_bound_symbolic", tr->iteration_bound_symbolic},
                         {"max_lineage_length", tr->max_lineage_length},
                         {"candidates_reduce_F", tr->candidates_reduce_F},
                         {"failures", tr->failures}};
  }
  head["results"] = std::move(results);
  rep.emit(out, head);
  return ok;
}

int cmd_min_order(const std::string& file, unsigned h_max, const ResourceCaps& caps,
                  const Reporter& rep, std::ostream& out) {
  ProblemFile p = parse_problem(read_file(file));
  json head = report_head("min-order",
                          {{"file", file}, {"h_max", h_max}, {"system", system_json(p.system)}});
  head["caps"] = {{"max_basis_size", caps.max_basis_size},
                  {"max_terms", caps.max_terms},
                  {"max_seconds", caps.max_seconds}};
  MinimalT r;
  try {
    r = minimal_t(p.system, h_max, caps);
  } catch (const InconclusiveScan& e) {
    head["results"] = {{"status", "resource-cap"}, {"h", e.h()}, {"message", e.what()}};
    rep.emit(out, head);
    throw;
  }
  json verdicts = json::array();
  for (const MembershipVerdict& v : r.verdicts) {
    out << "h = " << v.h << ": " << to_string(v.status) << " (" << v.generators
        << " generators, " << v.variables << " derivatives)\n";
    verdicts.push_back({{"h", v.h},
                        {"status", to_string(v.status)},
                        {"generators", v.generators},
                        {"variables", v.variables}});
  }
  json results{{"verdicts", verdicts}};
  if (r.t) {
    out << "t = " << *r.t << "\n";
    results["status"] = "found";
    results["t"] = *r.t;
  } else {
    out << "not found by h = " << h_max << "\n";
    results["status"] = "not-found";
  }
  head["results"] = std::move(results);
  rep.emit(out, head);
  return r.t ? ok : not_found;
}

int cmd_bound(const std::string& file, std::size_t bit_cap, const Reporter& rep,
              std::ostream& out) {
  ProblemFile p = parse_problem(read_file(file));
  const DiffSystem& sys = p.system;
  const unsigned m = static_cast<unsigned>(sys.ring->m());
  const unsigned n = static_cast<unsigned>(sys.ring->n());
  OrderStats sF = order_stats(sys.F);
  std::vector<DiffPoly> Ff = sys.F;
  Ff.push_back(sys.target());
  OrderStats sFf = order_stats(Ff);

  BoundReport br = structural_bounds(sF, m, n, bit_cap);
  br.add("t_closed", "A(m+8, max(n, H(F u f), D(F u f)))", t_bound_closed(sFf, m, n));
  br.add("degree_step", "(4D)^(C(2H+m, m)+1)",
         degree_growth_step(Integer(static_cast<unsigned long>(sF.D)),
                            Integer(static_cast<unsigned long>(sF.H)), m, bit_cap));

  out << "H = " << sF.H << ", D = " << sF.D << ", m = " << m << ", n = " << n << "\n";
  json entries = json::array();
  for (const BoundEntry& e : br.entries) {
    out << e.name << " = " << e.expr.to_string() << "    [" << e.formula << "]\n";
    entries.push_back({{"name", e.name}, {"formula", e.formula}, {"expr", e.expr.to_string()}});
  }
  json head = report_head("bound", {{"file", file}, {"system", system_json(sys)}});
  head["caps"] = {{"bit_cap", bit_cap}};
  head["results"] = {{"H", sF.H}, {"D", sF.D}, {"bounds", entries}};
  rep.emit(out, head);
  return ok;
}

int cmd_dickson(const std::string& mode, const std::string& file, std::optional<std::size_t> d,
                std::uint64_t node_cap, const Reporter& rep, std::ostream& out) {
  json in;
  try {
    in = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  json results;
  if (mode == "check") {
    TupleSeq seq = in.at("seq").get<TupleSeq>();
    bool dick = is_dicksonian(seq);
    out << "dicksonian: " << (dick ? "yes" : "no") << "\n";
    results["dicksonian"] = dick;
    if (in.contains("f")) {
      bool bounded = growth_bounded(seq, growth_from_json(in.at("f")));
      out << "growth bounded: " << (bounded ? "yes" : "no") << "\n";
      results["growth_bounded"] = bounded;
    }
  } else if (mode == "pad") {
    TupleSeq seq = in.at("seq").get<TupleSeq>();
    GrowthFn f = growth_from_json(in.at("f"));
    std::size_t dd = d ? *d : in.at("d").get<std::size_t>();
    TupleSeq padded = pad_construction(seq, f, dd);
    bool dick = is_dicksonian(padded);
    out << "length: " << padded.size() << "\n";
    out << "dicksonian: " << (dick ? "yes" : "no") << "\n";
    results = {{"f", growth_to_json(f)},
               {"length", padded.size()},
               {"dicksonian", dick},
               {"seq", padded}};
  } else if (mode == "search") {
    GrowthFn f = growth_from_json(in.at("f"));
    std::size_t n = in.at("n").get<std::size_t>();
    std::uint64_t cap = in.value("coord_cap", std::uint64_t{64});
    bool exact = in.value("exact_growth", false);
    SearchResult r = search_max_length(n, f, cap, exact, node_cap);
    out << "max length: " << r.length << (r.conclusive ? "" : " (inconclusive)") << "\n";
    results = {{"f", growth_to_json(f)},
               {"length", r.length},
               {"conclusive", r.conclusive},
               {"nodes", r.nodes},
               {"witness", r.witness}};
  } else {
    throw UsageError("dickson: unknown mode " + mode);
  }
  json head = report_head("dickson " + mode, {{"file", file}, {"input", in}});
  head["caps"] = {{"node_cap", node_cap}};
  head["results"] = std::move(results);
  rep.emit(out, head);
  return ok;
}

int cmd_ackermann(unsigned m, const std::string& n_text, std::size_t bit_cap,
                  const Reporter& rep, std::ostream& out) {
  Integer n;
  if (n_text.empty() || n_text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("N must be a non-negative integer", 1, 1);
  n = Integer(n_text);
  AckExpr e = ackermann(m, n, bit_cap);
  out << e.to_string() << "\n";
  json head = report_head("ackermann", {{"m", m}, {"n", n_text}});
  head["caps"] = {{"bit_cap", bit_cap}};
  head["results"] = {{"exact", e.is_constant()}, {"value", e.to_string()}};
  rep.emit(out, head);
  return ok;
}

int cmd_example(const std::string& name, unsigned param, std::ostream& out) {
  static const std::map<std::string, ExampleKind> kinds = {
      {"ex1", ExampleKind::ex1}, {"ex2", ExampleKind::ex2},
      {"ex3", ExampleKind::ex3}, {"ex4", ExampleKind::ex4}};
  auto it = kinds.find(name);
  if (it == kinds.end()) throw UsageError("unknown example " + name);
  out << print_problem(problem_from_system(example_family({it->second, param})));
  return ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential Nullstellensatz order bounds", "dnull"};
  app.require_subcommand(1);
  Reporter rep;

  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--json", rep.json_path, "Write the JSON report here ('-' for stdout)");
    sub->add_flag("--timing", rep.timing, "Include wall-clock timing in the report");
  };

  std::string file, trace_path, mode, ex_name, ack_n;
  bool verify = false, exact = false;
  unsigned h_max = 0, ack_m = 0, ex_param = 1;
  std::size_t bit_cap = kDefaultBitCap;
  std::optional<std::size_t> pad_d;
  std::uint64_t node_cap = 50'000'000;
  RgboundCaps rcaps;
  ResourceCaps gcaps;

  auto* dec = app.add_subcommand("decompose", "Characteristic-set decomposition with trace");
  dec->add_option("file", file, "Problem file")->required();
  dec->add_option("--trace", trace_path, "Write the iteration trace as JSON");
  dec->add_flag("--verify", verify, "Check tuples, degree growth and components");
  dec->add_flag("--exact", exact, "With --verify, decide coherence and witnesses by Groebner bases");
  dec->add_option("--max-iterations", rcaps.max_iterations);
  dec->add_option("--max-seconds", rcaps.max_seconds);
  add_report(dec);

  auto* mo = app.add_subcommand("min-order", "Least h with f in sqrt((F^(<=h)))");
  mo->add_option("file", file, "Problem file")->required();
  mo->add_option("--h-max", h_max, "Largest order to try")->required();
  mo->add_option("--max-basis", gcaps.max_basis_size);
  mo->add_option("--max-seconds", gcaps.max_seconds);
  add_report(mo);

  auto* bd = app.add_subcommand("bound", "Symbolic order and degree bounds");
  bd->add_option("file", file, "Problem file")->required();
  bd->add_option("--bit-cap", bit_cap, "Evaluate subexpressions up to this many bits");
  add_report(bd);

  auto* dk = app.add_subcommand("dickson", "Dicksonian sequences");
  dk->add_option("mode", mode, "check | pad | search")
      ->required()
      ->check(CLI::IsMember({"check", "pad", "search"}));
  dk->add_option("input", file, "JSON input")->required();
  dk->add_option("--d", pad_d, "Padding width for pad");
  dk->add_option("--node-cap", node_cap, "Search node budget");
  add_report(dk);

  auto* ak = app.add_subcommand("ackermann", "A(M, N), exact or symbolic");
  ak->add_option("M", ack_m)->required();
  ak->add_option("N", ack_n)->required();
  ak->add_option("--bit-cap", bit_cap);
  add_report(ak);

  auto* ex = app.add_subcommand("example", "Print an example family as a problem file");
  ex->add_option("name", ex_name, "ex1 | ex2 | ex3 | ex4")->required();
  ex->add_option("param", ex_param, "Family parameter")->required();

  std::vector<std::string> argv_store{"dnull"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  }

  try {
    if (dec->parsed()) return cmd_decompose(file, trace_path, verify, exact, rcaps, rep, out);
    if (mo->parsed()) return cmd_min_order(file, h_max, gcaps, rep, out);
    if (bd->parsed()) return cmd_bound(file, bit_cap, rep, out);
    if (dk->parsed()) return cmd_dickson(mode, file, pad_d, node_cap, rep, out);
    if (ak->parsed()) return cmd_ackermann(ack_m, ack_n, bit_cap, rep, out);
    if (ex->parsed()) return cmd_example(ex_name, ex_param, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return resource_cap;
  } catch (const json::exception& e) {
    err << "bad JSON input: " << e.what() << "\n";
    return parse_error;
  } catch (const ConstructionInfeasible& e) {
    err << "construction infeasible: " << e.what() << "\n";
    return not_found;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  }
  return parse_error;
}

}  // namespace dnull::cli
