#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "thuelab/colouring.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/repetition.hpp"

namespace thuelab {

// Text formats. Blank lines and lines starting with '#' are skipped. Parse
// errors throw InputError prefixed with "source:line:".

// "n m" then m lines "u v" (0-based), or DIMACS "p edge n m" with "e u v" (1-based).
Graph read_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// One line "v c" per vertex; n < 0 accepts any vertex count (max v + 1).
std::vector<int> read_colouring(std::istream& in, int n, const std::string& source = "<input>");
std::vector<int> read_colouring_file(const std::string& path, int n);
void write_colouring(std::ostream& out, const std::vector<int>& col);

// One line "v c1 c2 ..." per vertex.
ListAssignment read_lists(std::istream& in, int n, const std::string& source = "<input>");
ListAssignment read_lists_file(const std::string& path, int n);

// "b" then b lines "size v1 .. vsize" then tree edges "i j" between bags.
TreeDecomposition read_tree_decomposition(std::istream& in, const std::string& source = "<input>");
TreeDecomposition read_tree_decomposition_file(const std::string& path);
// "b" then b lines "size v1 .. vsize" in path order.
PathDecomposition read_path_decomposition(std::istream& in, const std::string& source = "<input>");
PathDecomposition read_path_decomposition_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// {status: "clean" | "repetitive", kind, witness[]}.
nlohmann::json verdict_json(RepKind kind, const std::optional<Witness>& w);
nlohmann::json subdivision_json(const SubdivisionMap& map);

// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace thuelab
