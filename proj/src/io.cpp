#include "thuelab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace thuelab {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-blank, non-comment line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      std::istringstream ss(line);
      tokens.clear();
      std::string t;
      while (ss >> t) tokens.push_back(t);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(source_ + ":" + std::to_string(line_) + ": " + msg);
  }

  long long integer(const std::string& s) const {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) fail("expected an integer, got '" + s + "'");
    return v;
  }

  int vertex(const std::string& s, int n, int base) const {
    long long v = integer(s) - base;
    if (v < 0 || v >= n) fail("vertex " + s + " out of range");
    return static_cast<int>(v);
  }

  int count(const std::string& s) const {
    long long v = integer(s);
    if (v < 0 || v > 100'000'000) fail("count " + s + " out of range");
    return static_cast<int>(v);
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_ = 0;
};

std::ifstream open_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot open file");
  return f;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> t;
  // DIMACS comment lines start with a lone "c".
  auto next = [&] {
    while (r.next(t))
      if (t[0] != "c") return true;
    return false;
  };
  if (!next()) r.fail("empty graph file");
  bool dimacs = t[0] == "p";
  int n = 0, m = 0;
  if (dimacs) {
    if (t.size() != 4 || t[1] != "edge") r.fail("expected 'p edge n m'");
    n = r.count(t[2]);
    m = r.count(t[3]);
  } else {
    if (t.size() != 2) r.fail("expected header 'n m'");
    n = r.count(t[0]);
    m = r.count(t[1]);
  }
  std::vector<Edge> edges;
  while (dimacs ? next() : r.next(t)) {
    if (dimacs) {
      if (t[0] != "e" || t.size() != 3) r.fail("expected 'e u v'");
      edges.emplace_back(r.vertex(t[1], n, 1), r.vertex(t[2], n, 1));
    } else {
      if (t.size() != 2) r.fail("expected edge 'u v'");
      edges.emplace_back(r.vertex(t[0], n, 0), r.vertex(t[1], n, 0));
    }
    auto [u, v] = edges.back();
    if (u == v) r.fail("self-loop at vertex " + std::to_string(u));
  }
  if (static_cast<int>(edges.size()) != m)
    r.fail("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  Graph g = build_graph(n, edges);
  if (g.m() != m) throw InputError(source + ": duplicate edges");
  return g;
}

Graph read_graph_file(const std::string& path) {
  auto f = open_file(path);
  return read_graph(f, path);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::vector<int> read_colouring(std::istream& in, int n, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> t;
  std::vector<int> col;
  std::vector<char> seen;
  const int limit = n < 0 ? 100'000'000 : n;
  while (r.next(t)) {
    if (t.size() != 2) r.fail("expected 'v c'");
    int v = r.vertex(t[0], limit, 0);
    long long c = r.integer(t[1]);
    if (c < 0 || c > 1'000'000'000) r.fail("colour " + t[1] + " out of range");
    if (v >= static_cast<int>(col.size())) {
      col.resize(v + 1, -1);
      seen.resize(v + 1, 0);
    }
    if (seen[v]) r.fail("vertex " + t[0] + " coloured twice");
    seen[v] = 1;
    col[v] = static_cast<int>(c);
  }
  if (n >= 0) col.resize(n, -1);
  for (std::size_t v = 0; v < col.size(); ++v)
    if (col[v] < 0) throw InputError(source + ": vertex " + std::to_string(v) + " has no colour");
  return col;
}

std::vector<int> read_colouring_file(const std::string& path, int n) {
  auto f = open_file(path);
  return read_colouring(f, n, path);
}

void write_colouring(std::ostream& out, const std::vector<int>& col) {
  for (std::size_t v = 0; v < col.size(); ++v) out << v << ' ' << col[v] << '\n';
}

ListAssignment read_lists(std::istream& in, int n, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> t;
  ListAssignment la;
  la.lists.assign(n, {});
  std::vector<char> seen(n, 0);
  while (r.next(t)) {
    if (t.size() < 2) r.fail("expected 'v c1 c2 ...'");
    int v = r.vertex(t[0], n, 0);
    if (seen[v]) r.fail("vertex " + t[0] + " listed twice");
    seen[v] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
      long long c = r.integer(t[i]);
      if (c < 0 || c > 1'000'000'000) r.fail("colour " + t[i] + " out of range");
      la.lists[v].push_back(static_cast<int>(c));
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw InputError(source + ": vertex " + std::to_string(v) + " has no list");
  return la;
}

ListAssignment read_lists_file(const std::string& path, int n) {
  auto f = open_file(path);
  return read_lists(f, n, path);
}

namespace {

std::vector<std::vector<int>> read_bags(LineReader& r, std::vector<std::string>& t) {
  if (!r.next(t)) r.fail("missing bag count");
  if (t.size() != 1) r.fail("expected the bag count");
  int b = r.count(t[0]);
  std::vector<std::vector<int>> bags;
  for (int i = 0; i < b; ++i) {
    if (!r.next(t)) r.fail("expected " + std::to_string(b) + " bags");
    int size = r.count(t[0]);
    if (static_cast<int>(t.size()) != size + 1) r.fail("bag size does not match its entries");
    std::vector<int> bag;
    for (int j = 1; j <= size; ++j) bag.push_back(r.vertex(t[j], 100'000'000, 0));
    bags.push_back(std::move(bag));
  }
  return bags;
}

}  // namespace

TreeDecomposition read_tree_decomposition(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> t;
  TreeDecomposition td;
  td.bags = read_bags(r, t);
  const int b = static_cast<int>(td.bags.size());
  std::vector<Edge> edges;
  while (r.next(t)) {
    if (t.size() != 2) r.fail("expected tree edge 'i j'");
    int i = r.vertex(t[0], b, 0), j = r.vertex(t[1], b, 0);
    if (i == j) r.fail("tree edge is a loop");
    edges.emplace_back(i, j);
  }
  td.tree = build_graph(b, edges);
  return td;
}

TreeDecomposition read_tree_decomposition_file(const std::string& path) {
  auto f = open_file(path);
  return read_tree_decomposition(f, path);
}

PathDecomposition read_path_decomposition(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> t;
  PathDecomposition pd;
  pd.bags = read_bags(r, t);
  if (r.next(t)) r.fail("unexpected content after the bags");
  return pd;
}

PathDecomposition read_path_decomposition_file(const std::string& path) {
  auto f = open_file(path);
  return read_path_decomposition(f, path);
}

std::string read_text_file(const std::string& path) {
  auto f = open_file(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(path + ": cannot write file");
  f << text;
}

nlohmann::json verdict_json(RepKind kind, const std::optional<Witness>& w) {
  nlohmann::json j;
  j["status"] = w ? "repetitive" : "clean";
  j["kind"] = kind_name(kind);
  j["witness"] = w ? w->sequence : std::vector<int>{};
  if (w && !w->vertices.empty()) j["vertices"] = w->vertices;
  return j;
}

nlohmann::json subdivision_json(const SubdivisionMap& map) {
  nlohmann::json chains = nlohmann::json::array();
  for (int e = 0; e < map.original.m(); ++e) {
    auto [u, v] = map.original.edges()[e];
    chains.push_back({{"edge", {u, v}}, {"chain", map.chains[e]}});
  }
  return {{"original_vertices", map.original.n()}, {"vertices", map.subdivided.n()}, {"chains", chains}};
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace thuelab
