#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thuelab/colouring.hpp"
#include "thuelab/graph.hpp"

namespace thuelab {

using BigInt = boost::multiprecision::cpp_int;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Parameter { pi, rho, sigma, pi_prime, star };

std::string parameter_name(Parameter p);
Parameter parse_parameter(const std::string& s);

struct SolveOptions {
  std::uint64_t node_budget = 1'000'000'000ULL;
  double time_limit_seconds = 0.0;  // 0 disables the wall-clock limit
  // More than one thread splits the top-level colour branches across tasks;
  // the reported witness may then vary between runs.
  int threads = 1;
  std::optional<int> upper_hint;
};

struct SolveResult {
  Parameter parameter = Parameter::pi;
  int value = 0;
  int lower_bound = 0;        // every palette below this was exhausted
  std::vector<int> witness;   // vertex colouring, or edge colouring for pi_prime
  std::uint64_t nodes = 0;
  bool exact = false;
};

SolveResult pi_exact(const Graph& g, const SolveOptions& opt = {});
SolveResult rho_exact(const Graph& g, const SolveOptions& opt = {});
SolveResult sigma_exact(const Graph& g, const SolveOptions& opt = {});
SolveResult pi_prime_exact(const Graph& g, const SolveOptions& opt = {});
SolveResult star_chromatic_exact(const Graph& g, const SolveOptions& opt = {});
SolveResult solve(const Graph& g, Parameter p, const SolveOptions& opt = {});

// Node budget from THUELAB_BUDGET, else fallback.
std::uint64_t budget_from_env(std::uint64_t fallback);

enum class CountKind { path, stroll };

// Number of nonrepetitive L-colourings. Throws BudgetExceeded past node_budget.
BigInt count_colourings(const Graph& g, const ListAssignment& lists, CountKind kind,
                        std::uint64_t node_budget = 1'000'000'000ULL);

// True if col is a star colouring: proper with no bicoloured path on four vertices.
bool is_star_colouring(const Graph& g, const std::vector<int>& col);

}  // namespace thuelab
