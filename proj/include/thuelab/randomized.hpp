#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thuelab/colouring.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/repetition.hpp"

namespace thuelab {

// Counter-based generator: the i-th draw depends only on (seed, i).
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

struct EntropyRecord {
  std::vector<std::uint8_t> bits;  // 0 = colour step, 1 = uncolour step
  std::uint64_t steps = 0;         // colour steps taken
  std::uint64_t repetitions = 0;   // repetitions found and undone
  std::string bit_string() const;
};

struct EntropyOptions {
  std::uint64_t seed = 0;
  std::vector<int> order;           // empty: ascending index
  std::uint64_t max_steps = 0;      // 0: 50 n
  std::optional<int> half_cap;      // empty: none when max degree <= 2, else 10
  bool final_verify = true;
  std::uint64_t verify_budget = 200'000'000ULL;
};

struct EntropyResult {
  bool success = false;
  Colouring colouring;  // partial (negative entries) on failure
  EntropyRecord record;
  // "exact", "word" (path graphs), "capped:L" when the exact pass ran out of
  // budget after a capped pass, or "skipped".
  std::string verification = "skipped";
  bool verified_clean = false;
};

EntropyResult entropy_colour(const Graph& g, const ListAssignment& lists, const EntropyOptions& opt = {});
EntropyResult entropy_colour(const Graph& g, int colours, const EntropyOptions& opt = {});

struct RetryResult {
  bool success = false;
  Colouring colouring;
  std::uint64_t restarts = 0;
};

// Resamples a uniform colouring until it is clean under the given detector.
RetryResult random_colour_retry(const Graph& g, int colours, std::uint64_t seed, std::uint64_t max_restarts,
                                RepKind kind = RepKind::path);

}  // namespace thuelab
