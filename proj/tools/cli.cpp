#include "cli.hpp"

#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "thuelab/bounds.hpp"
#include "thuelab/construct.hpp"
#include "thuelab/exact.hpp"
#include "thuelab/io.hpp"
#include "thuelab/randomized.hpp"
#include "thuelab/repetition.hpp"
#include "thuelab/subdiv.hpp"
#include "thuelab/words.hpp"

#ifdef THUELAB_HAVE_SELFTEST
#include "suite.hpp"
#endif

namespace thuelab {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;
constexpr std::uint64_t kVerifyBudget = 200'000'000ULL;

// Ends the command with the given exit code after a message on stderr.
struct Failure {
  int code;
  std::string message;
};

struct Context {
  std::ostringstream out;
  std::ostream* err = nullptr;
  bool as_json = false;
  bool verify = true;
  std::uint64_t seed = 0;
  CLI::Option* budget_opt = nullptr;
  std::uint64_t budget_flag = 0;
  json inputs = json::object();
  json outputs = json::object();
  json verdicts = json::array();

  std::uint64_t budget(std::uint64_t fallback) const {
    return budget_opt && budget_opt->count() ? budget_flag : budget_from_env(fallback);
  }

  std::string read_input(const std::string& path) {
    std::string text = read_text_file(path);
    inputs[path] = fnv1a_hex(text);
    return text;
  }

  void write_output(const std::string& path, const std::string& text) {
    write_text_file(path, text);
    outputs[path] = fnv1a_hex(text);
  }
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InputError(what + ": expected an integer, got '" + s + "'");
  }
  if (used != s.size() || v < -1'000'000'000LL || v > 1'000'000'000LL)
    throw InputError(what + ": expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> v;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) v.push_back(parse_int(item, what));
  return v;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string format_number(double x) {
  std::ostringstream ss;
  ss << std::setprecision(10) << x;
  return ss.str();
}

// Graph arguments: a file path, or a family name followed by its size.
const std::map<std::string, int> kFamilies = {{"path", 1},    {"paths", 1},   {"cycle", 1},     {"cycles", 1},
                                              {"complete", 1}, {"star", 1},   {"bipartite", 2}};

struct GraphArg {
  Graph graph;
  std::string label;
};

Graph family_graph(const std::string& name, const std::vector<int>& p) {
  for (int x : p)
    if (x < 0 || x > 100000) throw InputError("family size out of range");
  if (name == "path" || name == "paths") return path_graph(p[0]);
  if (name == "cycle" || name == "cycles") {
    if (p[0] < 3) throw InputError("cycles need at least 3 vertices");
    return cycle_graph(p[0]);
  }
  if (name == "complete") return complete_graph(p[0]);
  if (name == "star") return star_graph(p[0]);
  return complete_bipartite(p[0], p[1]);
}

std::string family_label(const std::string& name, const std::vector<int>& p) {
  std::string base = name.back() == 's' && name != "bipartite" ? name.substr(0, name.size() - 1) : name;
  return base + "(" + join(p, ",") + ")";
}

// Reads one graph argument starting at pos[i]; a size written "a..b" expands
// to one graph per value when sweep is set.
std::vector<GraphArg> take_graphs(Context& ctx, const std::vector<std::string>& pos, std::size_t& i, bool sweep) {
  if (i >= pos.size()) throw InputError("missing graph argument (file or family such as 'cycle 5')");
  const std::string& head = pos[i];
  auto fam = kFamilies.find(head);
  if (fam == kFamilies.end()) {
    ++i;
    std::istringstream in(ctx.read_input(head));
    return {{read_graph(in, head), head}};
  }
  if (i + fam->second >= pos.size())
    throw InputError("family '" + head + "' needs " + std::to_string(fam->second) + " size argument(s)");
  std::vector<std::string> args(pos.begin() + i + 1, pos.begin() + i + 1 + fam->second);
  i += 1 + fam->second;
  std::vector<GraphArg> out;
  auto dots = args[0].find("..");
  if (fam->second == 1 && dots != std::string::npos) {
    if (!sweep) throw InputError("size ranges are only accepted by solve");
    int lo = parse_int(args[0].substr(0, dots), head), hi = parse_int(args[0].substr(dots + 2), head);
    if (lo > hi) throw InputError("empty size range " + args[0]);
    for (int n = lo; n <= hi; ++n) out.push_back({family_graph(head, {n}), family_label(head, {n})});
    return out;
  }
  std::vector<int> p;
  for (const auto& a : args) p.push_back(parse_int(a, head));
  out.push_back({family_graph(head, p), family_label(head, p)});
  return out;
}

GraphArg take_graph(Context& ctx, const std::vector<std::string>& pos, std::size_t& i) {
  return take_graphs(ctx, pos, i, false).front();
}

std::vector<int> read_colouring_arg(Context& ctx, const std::string& path, int n) {
  std::istringstream in(ctx.read_input(path));
  return read_colouring(in, n, path);
}

void expect_done(const std::vector<std::string>& pos, std::size_t i) {
  if (i < pos.size()) throw InputError("unexpected argument '" + pos[i] + "'");
}

struct DetectorRun {
  std::optional<Witness> witness;
  bool complete = true;
};

DetectorRun run_detector(const Graph& g, const std::vector<int>& col, RepKind kind, std::uint64_t budget,
                         std::optional<int> max_half = std::nullopt, int lazy_cap = 0) {
  DetectorRun r;
  switch (kind) {
    case RepKind::path: {
      PathSearch s = find_repetitive_path_budgeted(g, col, max_half, budget);
      r.witness = s.witness;
      r.complete = s.complete || s.witness;
      break;
    }
    case RepKind::stroll: r.witness = find_repetitive_stroll(g, col); break;
    case RepKind::walk: r.witness = find_repetitive_walk_nonboring(g, col); break;
    case RepKind::lazy_walk:
    case RepKind::lazy_stroll:
    case RepKind::lazy_path: {
      LazyKind lk = kind == RepKind::lazy_walk ? LazyKind::walk_nonboring
                    : kind == RepKind::lazy_stroll ? LazyKind::stroll
                                                   : LazyKind::path;
      LazyResult lr = find_repetitive_lazy(g, col, lk, lazy_cap);
      r.witness = lr.witness;
      r.complete = !lr.inconclusive;
      break;
    }
    case RepKind::edge_path: r.witness = find_repetitive_edge_path(g, col); break;
    case RepKind::word_square: throw InputError("word-square checks take a word, not a graph");
  }
  return r;
}

void report_check(Context& ctx, const std::string& what, RepKind kind, const DetectorRun& r, json& record) {
  json v = verdict_json(kind, r.witness);
  if (!r.complete) v["status"] = "inconclusive";
  v["subject"] = what;
  ctx.verdicts.push_back(v);
  record["verification"] = v;
  if (!ctx.as_json) {
    if (r.witness) ctx.out << "verification: repetitive " << kind_name(kind) << ": " << join(r.witness->sequence) << "\n";
    else if (!r.complete) ctx.out << "verification: inconclusive (" << kind_name(kind) << ", budget exhausted)\n";
    else ctx.out << "verification: clean (" << kind_name(kind) << ")\n";
  }
}

// Exit code for a post-construction check: 0 clean, 1 witness, 2 inconclusive.
int check_code(const DetectorRun& r) { return r.witness ? 1 : r.complete ? 0 : 2; }

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << "\n"; }

// verify

struct VerifyArgs {
  std::string kind = "path";
  std::vector<std::string> pos;
  CLI::Option* max_half_opt = nullptr;
  int max_half = 0;
  int cap = 0;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  RepKind kind = parse_kind(a.kind);
  std::optional<int> max_half;
  if (a.max_half_opt->count()) max_half = a.max_half;
  json j;
  if (kind == RepKind::word_square) {
    if (a.pos.size() != 1) throw InputError("word-square takes exactly one word");
    Word w = parse_word(a.pos[0]);
    auto hit = find_square(w);
    std::optional<Witness> wit;
    if (hit) {
      wit = Witness{};
      wit->kind = kind;
      for (std::size_t i = hit->start; i < hit->start + 2 * hit->half; ++i) wit->sequence.push_back(static_cast<int>(i));
    }
    j = verdict_json(kind, wit);
    ctx.verdicts.push_back(j);
    if (ctx.as_json) emit(ctx, j);
    else if (hit) ctx.out << "repetitive word-square at " << hit->start << " half " << hit->half << "\n";
    else ctx.out << "clean (word-square)\n";
    return hit ? 1 : 0;
  }
  std::size_t i = 0;
  GraphArg g = take_graph(ctx, a.pos, i);
  if (i >= a.pos.size()) throw InputError("missing colouring file");
  int items = kind == RepKind::edge_path ? g.graph.m() : g.graph.n();
  std::vector<int> col = read_colouring_arg(ctx, a.pos[i++], items);
  expect_done(a.pos, i);
  DetectorRun r = run_detector(g.graph, col, kind, ctx.budget(kDefaultBudget), max_half, a.cap);
  j = verdict_json(kind, r.witness);
  if (!r.complete) j["status"] = "inconclusive";
  ctx.verdicts.push_back(j);
  if (ctx.as_json) {
    emit(ctx, j);
  } else if (r.witness) {
    std::vector<int> cs;
    for (int x : r.witness->sequence) cs.push_back(col[x]);
    ctx.out << "repetitive " << kind_name(kind) << ": " << join(r.witness->sequence) << "\n";
    if (!r.witness->vertices.empty()) ctx.out << "vertices: " << join(r.witness->vertices) << "\n";
    ctx.out << "colours: " << join(cs) << "\n";
  } else if (!r.complete) {
    ctx.out << "inconclusive: search budget exhausted\n";
  } else {
    ctx.out << "clean (" << kind_name(kind) << ")\n";
  }
  return check_code(r);
}

// solve

struct SolveArgs {
  std::string param;
  std::vector<std::string> pos;
  int threads = 1;
  double time_limit = 0;
  CLI::Option* upper_opt = nullptr;
  int upper = 0;
  std::string output;
};

bool witness_ok(const Graph& g, Parameter p, const std::vector<int>& w) {
  switch (p) {
    case Parameter::pi: return !find_repetitive_path_budgeted(g, w, std::nullopt, 0).witness;
    case Parameter::rho: return !find_repetitive_stroll(g, w);
    case Parameter::sigma: return !find_repetitive_walk_nonboring(g, w);
    case Parameter::pi_prime: return !find_repetitive_edge_path(g, w);
    case Parameter::star: return is_star_colouring(g, w);
  }
  return false;
}

int cmd_solve(Context& ctx, const SolveArgs& a) {
  Parameter p = parse_parameter(a.param);
  std::size_t i = 0;
  std::vector<GraphArg> graphs = take_graphs(ctx, a.pos, i, true);
  expect_done(a.pos, i);
  if (graphs.size() > 1 && !a.output.empty()) throw InputError("--output needs a single instance");
  SolveOptions opt;
  opt.node_budget = ctx.budget(kDefaultBudget);
  opt.time_limit_seconds = a.time_limit;
  opt.threads = graphs.size() > 1 ? 1 : std::max(1, a.threads);
  if (a.upper_opt->count()) opt.upper_hint = a.upper;
  std::vector<SolveResult> results(graphs.size());
  if (graphs.size() == 1) {
    results[0] = solve(graphs[0].graph, p, opt);
  } else {
    // Independent instances run concurrently; results are reported in input order.
    std::vector<std::future<SolveResult>> jobs;
    for (const auto& ga : graphs) jobs.push_back(std::async(std::launch::async, [&ga, p, opt] { return solve(ga.graph, p, opt); }));
    for (std::size_t k = 0; k < jobs.size(); ++k) results[k] = jobs[k].get();
  }
  bool all_exact = true;
  json records = json::array();
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const SolveResult& r = results[k];
    all_exact = all_exact && r.exact;
    if (ctx.verify && !witness_ok(graphs[k].graph, p, r.witness))
      throw std::logic_error("solver witness failed re-verification on " + graphs[k].label);
    json rec = {{"graph", graphs[k].label}, {"parameter", parameter_name(p)}, {"value", r.value},
                {"lower_bound", r.lower_bound}, {"exact", r.exact}, {"witness", r.witness}, {"nodes", r.nodes}};
    records.push_back(rec);
    ctx.verdicts.push_back({{"subject", graphs[k].label}, {"parameter", parameter_name(p)}, {"exact", r.exact}});
    if (!ctx.as_json) {
      if (r.exact) ctx.out << parameter_name(p) << "(" << graphs[k].label << ") = " << r.value << "\n";
      else
        ctx.out << parameter_name(p) << "(" << graphs[k].label << ") in [" << r.lower_bound << ", " << r.value
                << "] (budget exhausted)\n";
      if (graphs.size() == 1) ctx.out << "witness: " << join(r.witness) << "\n";
    }
  }
  if (ctx.as_json) emit(ctx, graphs.size() == 1 ? records[0] : records);
  if (!a.output.empty()) {
    std::ostringstream ss;
    write_colouring(ss, results[0].witness);
    ctx.write_output(a.output, ss.str());
  }
  return all_exact ? 0 : 2;
}

// count

struct CountArgs {
  std::string kind = "path";
  std::vector<std::string> pos;
  int colours = 0;
  std::string lists_file;
};

int cmd_count(Context& ctx, const CountArgs& a) {
  CountKind kind;
  if (a.kind == "path") kind = CountKind::path;
  else if (a.kind == "stroll") kind = CountKind::stroll;
  else throw InputError("count supports --kind path or stroll");
  std::size_t i = 0;
  GraphArg g = take_graph(ctx, a.pos, i);
  expect_done(a.pos, i);
  ListAssignment lists;
  if (!a.lists_file.empty()) {
    std::istringstream in(ctx.read_input(a.lists_file));
    lists = read_lists(in, g.graph.n(), a.lists_file);
  } else if (a.colours > 0) {
    lists = ListAssignment::uniform(g.graph.n(), a.colours);
  } else {
    throw InputError("count needs --colours or --lists-file");
  }
  BigInt c;
  try {
    c = count_colourings(g.graph, lists, kind, ctx.budget(kDefaultBudget));
  } catch (const BudgetExceeded& e) {
    throw Failure{2, std::string("budget exhausted: ") + e.what()};
  }
  std::string s = c.str();
  if (ctx.as_json) emit(ctx, {{"graph", g.label}, {"kind", a.kind}, {"count", s}});
  else ctx.out << s << "\n";
  return 0;
}

// bound

struct BoundArgs {
  std::string name;
  std::string cls;
  std::string param = "pi";
  std::map<std::string, CLI::Option*> opts;
  std::map<std::string, double> vals;
  bool subdivided = false;
};

int cmd_bound(Context& ctx, BoundArgs& a) {
  auto has = [&](const std::string& k) { return a.opts.at(k)->count() > 0; };
  auto need = [&](const std::string& k) {
    if (!has(k)) throw InputError("bound " + a.name + " needs --" + k);
    return a.vals.at(k);
  };
  auto need_int = [&](const std::string& k) {
    double v = need(k);
    if (v != static_cast<long long>(v)) throw InputError("--" + k + " must be an integer");
    return static_cast<long long>(v);
  };
  std::vector<BoundReport> reports;
  auto single = [&](std::string name, std::vector<std::pair<std::string, double>> in, double value, std::string basis,
                    std::optional<double> lower = std::nullopt) {
    reports.push_back({std::move(name), std::move(in), lower, value, std::move(basis)});
  };
  const std::string& n = a.name;
  if (n == "class") {
    if (a.cls.empty()) throw InputError("bound class needs --class");
    ClassSpec c = parse_class(a.cls);
    if (has("delta")) c.delta = static_cast<int>(need_int("delta"));
    reports.push_back(class_bound(c, parse_parameter(a.param)));
  } else if (n == "subdiv") {
    SubdivQuery q;
    if (has("n")) q.n = need_int("n");
    if (has("d")) q.d = static_cast<int>(need_int("d"));
    if (has("pi")) q.pi = need_int("pi");
    if (has("chi")) q.chi = need_int("chi");
    reports = subdiv_bounds(q);
    if (reports.empty()) throw InputError("bound subdiv needs some of --n, --d, --pi, --chi");
  } else if (n == "lll") {
    long long d = need_int("delta");
    single("lll", {{"delta", d}}, static_cast<double>(lll_colour_count(static_cast<int>(d))), "local lemma colour count");
  } else if (n == "rosenfeld") {
    long long d = need_int("delta");
    double r = has("r") ? need("r") : 1.0;
    RosenfeldCount rc = rosenfeld_colour_count(static_cast<int>(d), r, a.subdivided);
    single("rosenfeld", {{"delta", d}, {"r", r}, {"beta", rc.beta}}, static_cast<double>(rc.c),
           a.subdivided ? "counting argument, subdivided" : "counting argument");
  } else if (n == "multicolour") {
    double r = need("r");
    single("multicolour", {{"r", r}}, multicolour_rate(r), "growth rate of list colourings of paths");
  } else if (n == "extremal") {
    long long nn = need_int("n"), c = need_int("c");
    single("extremal", {{"n", nn}, {"c", c}},
           static_cast<double>(extremal_max_edges(static_cast<int>(nn), static_cast<int>(c))),
           "maximum edges with pi <= c");
  } else if (n == "naive") {
    long long nn = need_int("n"), al = need_int("alpha");
    single("naive", {{"n", nn}, {"alpha", al}},
           static_cast<double>(naive_upper_bound(static_cast<int>(nn), static_cast<int>(al))), "n - alpha + 1");
  } else if (n == "sigma") {
    long long r = need_int("rho"), d = need_int("delta");
    auto [lo, hi] = sigma_bounds(static_cast<int>(r), static_cast<int>(d));
    single("sigma", {{"rho", r}, {"delta", d}}, static_cast<double>(hi), "sigma from rho and degree",
           static_cast<double>(lo));
  } else if (n == "degenerate") {
    long long r = need_int("rho"), k = need_int("degeneracy"), d = need_int("delta");
    single("degenerate", {{"rho", r}, {"degeneracy", k}, {"delta", d}},
           static_cast<double>(sigma_degenerate_bound(static_cast<int>(r), static_cast<int>(k), static_cast<int>(d))),
           "sigma for degenerate graphs");
  } else if (n == "treewidth-degree") {
    long long k = need_int("k"), d = need_int("delta");
    single("treewidth-degree", {{"k", k}, {"delta", d}},
           treewidth_degree_rho_bound(static_cast<int>(k), static_cast<int>(d)), "rho for treewidth and degree");
  } else if (n == "delta-squared") {
    long long d = need_int("delta");
    single("delta-squared", {{"delta", d}}, delta_squared_bound(static_cast<int>(d)), "second-order degree bound");
  } else {
    throw InputError("unknown bound '" + n +
                     "' (class, subdiv, lll, rosenfeld, multicolour, extremal, naive, sigma, degenerate, "
                     "treewidth-degree, delta-squared)");
  }
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json in = json::object();
      for (const auto& [k, v] : r.inputs) in[k] = v;
      json rec = {{"name", r.name}, {"inputs", in}, {"value", r.value}, {"basis", r.basis}};
      rec["lower"] = r.lower ? json(*r.lower) : json(nullptr);
      arr.push_back(rec);
    }
    emit(ctx, arr);
    return 0;
  }
  std::vector<std::array<std::string, 5>> rows{{"name", "inputs", "lower", "value", "basis"}};
  for (const auto& r : reports) {
    std::string in;
    for (const auto& [k, v] : r.inputs) in += (in.empty() ? "" : " ") + k + "=" + format_number(v);
    rows.push_back({r.name, in, r.lower ? format_number(*r.lower) : "-", format_number(r.value), r.basis});
  }
  std::array<std::size_t, 5> w{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 5; ++c) w[c] = std::max(w[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 5; ++c) {
      line += row[c];
      if (c + 1 < 5) line += std::string(w[c] - row[c].size() + 2, ' ');
    }
    ctx.out << line << "\n";
  }
  return 0;
}

// construct

struct ConstructArgs {
  std::string name;
  std::vector<std::string> pos;
  std::string output, graph_out, td, pd, supergraph, cycle, alpha, beta, embedding, indep;
  std::string mode;
  int root = 0;
  int k = 0, n = 0, c = 0, ell = 0;
};

Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return build_graph(j.at("n").get<int>(), edges);
}

int cmd_construct(Context& ctx, const ConstructArgs& a) {
  std::size_t i = 0;
  Graph graph;
  std::vector<int> col;
  RepKind check = RepKind::stroll;
  bool new_graph = false;
  std::string label = a.name;
  json extra = json::object();
  auto need_file = [](const std::string& f, const char* flag) {
    if (f.empty()) throw InputError(std::string("construct needs ") + flag);
  };
  const std::string& nm = a.name;
  if (nm == "naive") {
    graph = take_graph(ctx, a.pos, i).graph;
    std::optional<std::vector<int>> x;
    if (!a.indep.empty()) x = parse_int_list(a.indep, "--indep");
    NaiveColouring nc = naive_colouring(graph, x);
    col = nc.colouring.colours;
    extra["independent_set"] = nc.independent_set;
    extra["exact_independent_set"] = nc.exact_independent_set;
  } else if (nm == "tree-rho4" || nm == "tree-sigma") {
    graph = take_graph(ctx, a.pos, i).graph;
    col = (nm == "tree-rho4" ? tree_rho4(graph, a.root) : tree_sigma(graph, a.root)).colours;
    check = nm == "tree-rho4" ? RepKind::stroll : RepKind::walk;
  } else if (nm == "treewidth") {
    graph = take_graph(ctx, a.pos, i).graph;
    need_file(a.td, "--td");
    std::istringstream in(ctx.read_input(a.td));
    col = treewidth_colour(graph, read_tree_decomposition(in, a.td)).colours;
  } else if (nm == "pathwidth") {
    graph = take_graph(ctx, a.pos, i).graph;
    need_file(a.pd, "--pd");
    std::istringstream in(ctx.read_input(a.pd));
    col = pathwidth_colour(graph, read_path_decomposition(in, a.pd)).colours;
  } else if (nm == "outerplanar") {
    graph = take_graph(ctx, a.pos, i).graph;
    need_file(a.supergraph, "--supergraph");
    if (a.cycle.empty()) throw InputError("construct outerplanar needs --cycle");
    std::istringstream in(ctx.read_input(a.supergraph));
    OuterplanarWitness w{read_graph(in, a.supergraph), parse_int_list(a.cycle, "--cycle")};
    ComposeMode mode = parse_mode(a.mode.empty() ? "pi" : a.mode);
    col = outerplanar_colour(graph, w, mode).colours;
    check = mode == ComposeMode::pi ? RepKind::path : RepKind::stroll;
  } else if (nm == "product") {
    Graph g = take_graph(ctx, a.pos, i).graph;
    Graph h = take_graph(ctx, a.pos, i).graph;
    need_file(a.alpha, "--alpha");
    need_file(a.beta, "--beta");
    ComposeMode mode = parse_mode(a.mode.empty() ? "rho" : a.mode);
    ProductColouring pc = product_colour(g, h, read_colouring_arg(ctx, a.alpha, g.n()),
                                         read_colouring_arg(ctx, a.beta, h.n()), mode);
    graph = pc.product.graph;
    col = pc.colouring.colours;
    new_graph = true;
    check = mode == ComposeMode::rho ? RepKind::stroll : RepKind::walk;
  } else if (nm == "product-structure") {
    graph = take_graph(ctx, a.pos, i).graph;
    need_file(a.embedding, "--embedding");
    need_file(a.td, "--td");
    json e = json::parse(ctx.read_input(a.embedding));
    ProductEmbedding emb;
    emb.host_H = graph_from_json(e.at("H"));
    emb.host_P = path_graph(e.at("P").get<int>());
    emb.ell = e.at("ell").get<int>();
    for (const auto& p : e.at("placement")) emb.placement.push_back({p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>()});
    std::istringstream in(ctx.read_input(a.td));
    col = product_structure_colour(graph, emb, read_tree_decomposition(in, a.td)).colours;
  } else if (nm == "hypercube") {
    EdgeColouring ec = edge_colour_hypercube_complete(a.k);
    graph = ec.graph;
    col = ec.colours;
    new_graph = true;
    check = RepKind::edge_path;
  } else if (nm == "extremal") {
    ColouredGraph cg = extremal_witness(a.n, a.c);
    graph = cg.graph;
    col = cg.colouring.colours;
    new_graph = true;
  } else if (nm == "sigma-extremal") {
    ColouredGraph cg = sigma_extremal_example(a.n, a.ell);
    graph = cg.graph;
    col = cg.colouring.colours;
    new_graph = true;
    check = RepKind::walk;
  } else if (nm == "path-sigma4") {
    if (a.n < 1) throw InputError("path-sigma4 needs --n");
    graph = path_graph(a.n);
    col = path_sigma4(a.n);
    new_graph = true;
    check = RepKind::walk;
  } else {
    throw InputError("unknown construction '" + nm +
                     "' (naive, tree-rho4, tree-sigma, treewidth, pathwidth, outerplanar, product, "
                     "product-structure, hypercube, extremal, sigma-extremal, path-sigma4)");
  }
  expect_done(a.pos, i);
  int palette = 0;
  for (int x : col) palette = std::max(palette, x + 1);
  json rec = {{"construction", nm}, {"vertices", graph.n()}, {"edges", graph.m()}, {"colours", palette}};
  rec.update(extra);
  if (!ctx.as_json)
    ctx.out << nm << ": " << graph.n() << " vertices, " << graph.m() << " edges, " << palette << " colours\n";
  int code = 0;
  if (ctx.verify) {
    DetectorRun r = run_detector(graph, col, check, ctx.budget(kVerifyBudget));
    report_check(ctx, label, check, r, rec);
    code = check_code(r);
  }
  if (!a.output.empty()) {
    std::ostringstream ss;
    write_colouring(ss, col);
    ctx.write_output(a.output, ss.str());
  }
  if (!a.graph_out.empty()) {
    std::ostringstream ss;
    write_graph(ss, graph);
    ctx.write_output(a.graph_out, ss.str());
  } else if (new_graph && !ctx.as_json && a.output.empty()) {
    write_graph(ctx.out, graph);
  }
  if (a.output.empty()) {
    if (ctx.as_json) rec["colouring"] = col;
    else write_colouring(ctx.out, col);
  }
  if (ctx.as_json) emit(ctx, rec);
  return code;
}

// subdivide

struct SubdivideArgs {
  std::string scheme;
  std::vector<std::string> pos;
  std::string phi, proper, order, counts, output, graph_out, map_out;
  int d = 0, t = 0, r = 0, n = 0, a = 0, b = 0, k_upper = 0;
};

int cmd_subdivide(Context& ctx, const SubdivideArgs& a) {
  std::size_t i = 0;
  const std::string& s = a.scheme;
  std::optional<Graph> g;
  if (s != "complete" && s != "complete-1") g = take_graph(ctx, a.pos, i).graph;
  expect_done(a.pos, i);
  // Base colouring phi: from a file, else an exact pi colouring.
  auto phi = [&] {
    if (!a.phi.empty()) return read_colouring_arg(ctx, a.phi, g->n());
    SolveOptions opt;
    opt.node_budget = ctx.budget(kDefaultBudget);
    SolveResult r = pi_exact(*g, opt);
    if (!r.exact) throw Failure{2, "budget exhausted while computing a base colouring; pass --phi"};
    return r.witness;
  };
  SubdivColouring sc;
  json rec = {{"scheme", s}};
  if (s == "plus") {
    std::vector<int> counts;
    if (!a.counts.empty()) {
      counts = parse_int_list(a.counts, "--counts");
      if (static_cast<int>(counts.size()) != g->m()) throw InputError("--counts needs one entry per edge");
    } else {
      counts.assign(g->m(), a.d);
    }
    sc = subdiv_plus(*g, phi(), subdivide(*g, counts));
  } else if (s == "lemma") {
    sc = subdiv_lemma_colour(*g, phi(), a.t, a.r);
  } else if (s == "five") {
    std::vector<int> p = phi();
    int k = std::max(a.k_upper, compact(p).used());
    FiveSubdiv f = five_subdiv(*g, p, k);
    sc = f.result;
    rec["d"] = f.d;
    rec["guarantee"] = f.guarantee;
  } else if (s == "odd-d") {
    sc = d_subdiv_colour(*g, phi(), a.d);
  } else if (s == "four") {
    sc = four_subdiv(*g, a.order.empty() ? std::vector<int>{} : parse_int_list(a.order, "--order"));
  } else if (s == "complete") {
    sc = complete_subdiv_colour(a.n, a.d, a.a, a.b);
  } else if (s == "complete-1") {
    sc = complete_subdiv1_colour(a.n);
  } else if (s == "subdiv-1" || s == "subdiv-2" || s == "subdiv-3") {
    std::vector<int> proper;
    if (!a.proper.empty()) proper = read_colouring_arg(ctx, a.proper, g->n());
    sc = subdiv123_colour(*g, s.back() - '0', phi(), proper);
  } else {
    throw InputError("unknown scheme '" + s +
                     "' (plus, lemma, five, odd-d, four, complete, complete-1, subdiv-1, subdiv-2, subdiv-3)");
  }
  const std::vector<int>& col = sc.colouring.colours;
  int used = sc.colouring.used();
  rec["vertices"] = sc.map.subdivided.n();
  rec["max_chain"] = sc.map.max_chain();
  rec["colours"] = used;
  if (!ctx.as_json)
    ctx.out << "scheme " << s << ": " << sc.map.subdivided.n() << " vertices, longest chain " << sc.map.max_chain()
            << ", " << used << " colours\n";
  int code = 0;
  if (ctx.verify) {
    ProjectionResult pr = verify_subdivision(sc.map, col, ctx.budget(kVerifyBudget));
    DetectorRun r{pr.witness, pr.complete};
    report_check(ctx, "subdivision", RepKind::path, r, rec);
    code = check_code(r);
  }
  auto emit_file = [&](const std::string& path, const std::string& text) {
    if (!path.empty()) ctx.write_output(path, text);
  };
  std::ostringstream cs, gs;
  write_colouring(cs, col);
  write_graph(gs, sc.map.subdivided);
  emit_file(a.output, cs.str());
  emit_file(a.graph_out, gs.str());
  emit_file(a.map_out, subdivision_json(sc.map).dump(2) + "\n");
  if (ctx.as_json) {
    if (a.output.empty()) rec["colouring"] = col;
    if (a.map_out.empty()) rec["map"] = subdivision_json(sc.map);
    emit(ctx, rec);
  } else if (a.output.empty()) {
    ctx.out << cs.str();
  }
  return code;
}

// random

struct RandomArgs {
  std::vector<std::string> pos;
  int colours = 0;
  std::string lists_file, order, output;
  std::uint64_t max_steps = 0;
  CLI::Option* cap_opt = nullptr;
  int half_cap = 0;
};

int cmd_random(Context& ctx, const RandomArgs& a) {
  std::size_t i = 0;
  GraphArg g = take_graph(ctx, a.pos, i);
  expect_done(a.pos, i);
  EntropyOptions opt;
  opt.seed = ctx.seed;
  opt.max_steps = a.max_steps;
  opt.final_verify = ctx.verify;
  opt.verify_budget = ctx.budget(kVerifyBudget);
  if (a.cap_opt->count()) opt.half_cap = a.half_cap;
  if (!a.order.empty()) opt.order = parse_int_list(a.order, "--order");
  EntropyResult r;
  if (!a.lists_file.empty()) {
    std::istringstream in(ctx.read_input(a.lists_file));
    r = entropy_colour(g.graph, read_lists(in, g.graph.n(), a.lists_file), opt);
  } else if (a.colours > 0) {
    r = entropy_colour(g.graph, a.colours, opt);
  } else {
    throw InputError("random needs --colours or --lists-file");
  }
  json rec = {{"graph", g.label},
              {"seed", ctx.seed},
              {"success", r.success},
              {"steps", r.record.steps},
              {"repetitions", r.record.repetitions},
              {"record_length", r.record.bits.size()},
              {"verification", r.verification},
              {"verified_clean", r.verified_clean},
              {"record", r.record.bit_string()}};
  ctx.verdicts.push_back({{"subject", g.label}, {"success", r.success}, {"verification", r.verification}});
  if (ctx.as_json) {
    if (a.output.empty()) rec["colouring"] = r.colouring.colours;
    emit(ctx, rec);
  } else {
    ctx.out << (r.success ? "success" : "failure") << ": " << r.record.steps << " colour steps, "
            << r.record.repetitions << " repetitions undone, verification " << r.verification << "\n";
    ctx.out << "record: " << r.record.bit_string() << "\n";
    if (a.output.empty()) write_colouring(ctx.out, r.colouring.colours);
  }
  if (!a.output.empty()) {
    std::ostringstream ss;
    write_colouring(ss, r.colouring.colours);
    ctx.write_output(a.output, ss.str());
  }
  return r.success ? 0 : 1;
}

// thue

struct ThueArgs {
  std::size_t length = 0;
  std::string method = "leech";
  bool separators = false;
};

int cmd_thue(Context& ctx, const ThueArgs& a) {
  ThueMethod m;
  if (a.method == "leech") m = ThueMethod::leech;
  else if (a.method == "tm-diff") m = ThueMethod::tm_diff;
  else throw InputError("unknown method '" + a.method + "' (leech, tm-diff)");
  Word w = thue_word(a.length, m);
  if (a.separators) w = insert_separators(w);
  json rec = {{"length", w.size()}, {"method", a.method}, {"word", word_string(w)}};
  int code = 0;
  if (ctx.verify) {
    auto hit = find_square(w);
    rec["square_free"] = !hit;
    ctx.verdicts.push_back({{"subject", "thue"}, {"square_free", !hit}});
    code = hit ? 1 : 0;
  }
  if (ctx.as_json) emit(ctx, rec);
  else ctx.out << word_string(w) << "\n";
  return code;
}

// selftest

int cmd_selftest([[maybe_unused]] Context& ctx, [[maybe_unused]] const std::string& only) {
#ifdef THUELAB_HAVE_SELFTEST
  std::vector<int> ids;
  if (!only.empty()) ids = parse_int_list(only, "--only");
  for (int id : ids)
    if (id < 1 || id > acceptance::kCriteria) throw InputError("criterion " + std::to_string(id) + " does not exist");
  auto results = acceptance::run(ids, ctx.out);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass;
    ctx.verdicts.push_back({{"criterion", r.id}, {"pass", r.pass}});
  }
  return ok ? 0 : 1;
#else
  throw Failure{2, "this build has no acceptance suite (configure with THUELAB_TESTS=ON)"};
#endif
}

// Splits off --manifest; returns the remaining arguments.
std::vector<std::string> strip_manifest(const std::vector<std::string>& args, std::string& manifest) {
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--manifest") {
      if (i + 1 >= args.size()) throw InputError("--manifest needs a path");
      manifest = args[++i];
    } else if (args[i].rfind("--manifest=", 0) == 0) {
      manifest = args[i].substr(11);
    } else {
      rest.push_back(args[i]);
    }
  }
  return rest;
}

int run_command(const std::vector<std::string>& args, Context& ctx, std::ostream& err, bool& handled_output);

int cmd_replay(Context& ctx, const std::string& path) {
  json m;
  try {
    m = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": not a manifest: " + e.what());
  }
  std::vector<std::string> args = m.at("command").get<std::vector<std::string>>();
  for (const auto& [file, hash] : m.at("inputs").items()) {
    std::string now = fnv1a_hex(read_text_file(file));
    if (now != hash.get<std::string>()) throw Failure{2, "input " + file + " changed since the manifest was written"};
  }
  Context inner;
  inner.err = ctx.err;
  std::ostringstream sink;
  bool handled = false;
  int code = run_command(args, inner, sink, handled);
  std::vector<std::string> diffs;
  if (code != m.at("exit_code").get<int>()) diffs.push_back("exit code " + std::to_string(code));
  if (fnv1a_hex(inner.out.str()) != m.at("stdout").get<std::string>()) diffs.push_back("stdout");
  for (const auto& [file, hash] : m.at("outputs").items())
    if (!inner.outputs.contains(file) || inner.outputs[file] != hash) diffs.push_back(file);
  if (diffs.empty()) {
    ctx.out << "replay identical: " << args.size() << " arguments, " << m.at("outputs").size() << " output files\n";
    return 0;
  }
  ctx.out << "replay differs:";
  for (const auto& d : diffs) ctx.out << " " << d;
  ctx.out << "\n";
  return 1;
}

int run_command(const std::vector<std::string>& args, Context& ctx, std::ostream& err, bool& handled_output) {
  CLI::App app{"Nonrepetitive colouring toolkit"};
  app.name("thuelab");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.as_json, "Structured JSON output");
  app.add_option("--seed", ctx.seed, "Random seed (default 0)");
  ctx.budget_opt = app.add_option("--budget", ctx.budget_flag, "Node budget (overrides THUELAB_BUDGET)");
  bool no_verify = false;
  app.add_flag("--no-verify", no_verify, "Skip re-verification of outputs");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a colouring for repetitions");
  verify->add_option("--kind", va.kind, "word-square, path, stroll, walk, lazy-walk, lazy-stroll, lazy-path, edge-path");
  va.max_half_opt = verify->add_option("--max-half", va.max_half, "Only paths with at most this half-length");
  verify->add_option("--cap", va.cap, "Vertex cap for lazy paths (default 2n)");
  verify->add_option("args", va.pos, "Graph (file or family) and colouring file, or a word")->required();

  SolveArgs sa;
  auto* solvec = app.add_subcommand("solve", "Exact pi, rho, sigma, pi-prime or star chromatic number");
  solvec->add_option("--param", sa.param, "pi, rho, sigma, pi-prime, star")->required();
  solvec->add_option("--threads", sa.threads, "Worker threads for a single instance");
  solvec->add_option("--time-limit", sa.time_limit, "Seconds (0 = none)");
  sa.upper_opt = solvec->add_option("--upper", sa.upper, "Known upper bound");
  solvec->add_option("-o,--output", sa.output, "Write the witness colouring");
  solvec->add_option("graph", sa.pos, "Graph file or family; family sizes may be ranges a..b")->required();

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count nonrepetitive list colourings");
  count->add_option("--kind", ca.kind, "path or stroll");
  count->add_option("--colours", ca.colours, "Uniform lists {0..k-1}");
  count->add_option("--lists-file", ca.lists_file, "Per-vertex lists");
  count->add_option("graph", ca.pos, "Graph file or family")->required();

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Evaluate a bound formula");
  bound->add_option("name", ba.name, "class, subdiv, lll, rosenfeld, multicolour, extremal, naive, sigma, degenerate, "
                                     "treewidth-degree, delta-squared")
      ->required();
  bound->add_option("--class", ba.cls, "Graph class, e.g. treewidth(2)");
  bound->add_option("--param", ba.param, "pi, rho or sigma");
  bound->add_flag("--subdivided", ba.subdivided, "Rosenfeld count for subdivided graphs");
  for (const char* key : {"delta", "n", "d", "pi", "chi", "r", "c", "alpha", "rho", "degeneracy", "k"})
    ba.opts[key] = bound->add_option(std::string("--") + key, ba.vals[key]);

  ConstructArgs co;
  auto* construct = app.add_subcommand("construct", "Run a colouring construction");
  construct->add_option("name", co.name, "Construction name")->required();
  construct->add_option("args", co.pos, "Graph arguments");
  construct->add_option("-o,--output", co.output, "Colouring file");
  construct->add_option("--graph-out", co.graph_out, "Write the coloured graph");
  construct->add_option("--td", co.td, "Tree decomposition file");
  construct->add_option("--pd", co.pd, "Path decomposition file");
  construct->add_option("--supergraph", co.supergraph, "Maximal outerplanar supergraph");
  construct->add_option("--cycle", co.cycle, "Outer cycle as a comma list");
  construct->add_option("--alpha", co.alpha, "Colouring of the first factor");
  construct->add_option("--beta", co.beta, "Colouring of the second factor");
  construct->add_option("--embedding", co.embedding, "Product embedding (JSON)");
  construct->add_option("--indep", co.indep, "Independent set as a comma list");
  construct->add_option("--mode", co.mode, "pi, rho or sigma");
  construct->add_option("--root", co.root, "Tree root");
  construct->add_option("--k", co.k, "Dimension");
  construct->add_option("--n", co.n, "Order");
  construct->add_option("--c", co.c, "Colours");
  construct->add_option("--ell", co.ell, "Clique size");

  SubdivideArgs sd;
  auto* subdivc = app.add_subcommand("subdivide", "Colour a subdivision");
  subdivc->add_option("--scheme", sd.scheme, "plus, lemma, five, odd-d, four, complete, complete-1, subdiv-1..3")
      ->required();
  subdivc->add_option("graph", sd.pos, "Graph file or family");
  subdivc->add_option("--phi", sd.phi, "Nonrepetitive colouring of the graph (default: exact)");
  subdivc->add_option("--proper", sd.proper, "Proper colouring for subdiv-1");
  subdivc->add_option("--order", sd.order, "Vertex order for four");
  subdivc->add_option("--counts", sd.counts, "Divisions per edge for plus");
  subdivc->add_option("-o,--output", sd.output, "Colouring file");
  subdivc->add_option("--graph-out", sd.graph_out, "Subdivided graph file");
  subdivc->add_option("--map-out", sd.map_out, "Chain map (JSON)");
  for (auto [flag, ptr] : std::initializer_list<std::pair<const char*, int*>>{
           {"--d", &sd.d}, {"--t", &sd.t}, {"--r", &sd.r}, {"--n", &sd.n}, {"--a", &sd.a}, {"--b", &sd.b},
           {"--k-upper", &sd.k_upper}})
    subdivc->add_option(flag, *ptr);

  RandomArgs ra;
  auto* random = app.add_subcommand("random", "Entropy-compression colouring");
  random->add_option("graph", ra.pos, "Graph file or family")->required();
  random->add_option("--colours", ra.colours, "Uniform lists {0..k-1}");
  random->add_option("--lists-file", ra.lists_file, "Per-vertex lists");
  random->add_option("--max-steps", ra.max_steps, "Colour steps (0 = 50n)");
  random->add_option("--order", ra.order, "Vertex order as a comma list");
  ra.cap_opt = random->add_option("--half-cap", ra.half_cap, "Half-length cap for the incremental check");
  random->add_option("-o,--output", ra.output, "Colouring file");

  ThueArgs ta;
  auto* thue = app.add_subcommand("thue", "Square-free ternary word");
  thue->add_option("--length", ta.length, "Word length")->required();
  thue->add_option("--method", ta.method, "leech or tm-diff");
  thue->add_flag("--separators", ta.separators, "Insert symbol 3 after every second symbol");

  std::string only;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance matrix");
  selftest->add_option("--only", only, "Comma list of criteria");

  std::string manifest_in;
  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare outputs");
  replay->add_option("manifest", manifest_in)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    handled_output = true;
    std::ostringstream o, er;
    int rc = app.exit(e, o, er);
    ctx.out << o.str();
    err << er.str();
    return rc == 0 ? 0 : 2;
  }
  ctx.verify = !no_verify;
  if (*verify) return cmd_verify(ctx, va);
  if (*solvec) return cmd_solve(ctx, sa);
  if (*count) return cmd_count(ctx, ca);
  if (*bound) return cmd_bound(ctx, ba);
  if (*construct) return cmd_construct(ctx, co);
  if (*subdivc) return cmd_subdivide(ctx, sd);
  if (*random) return cmd_random(ctx, ra);
  if (*thue) return cmd_thue(ctx, ta);
  if (*selftest) return cmd_selftest(ctx, only);
  if (*replay) return cmd_replay(ctx, manifest_in);
  return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.err = &err;
  int code = 2;
  std::string manifest;
  std::vector<std::string> args;
  try {
    args = strip_manifest(args_in, manifest);
    bool handled = false;
    code = run_command(args, ctx, err, handled);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    code = f.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    code = 2;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exhausted: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = 2;
  }
  out << ctx.out.str();
  if (!manifest.empty()) {
    json m = {{"command", args},          {"version", kVersion},        {"seed", ctx.seed},
              {"inputs", ctx.inputs},     {"outputs", ctx.outputs},     {"stdout", fnv1a_hex(ctx.out.str())},
              {"exit_code", code},        {"verdicts", ctx.verdicts}};
    try {
      write_text_file(manifest, m.dump(2) + "\n");
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return code;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace thuelab
