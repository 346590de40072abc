#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "oddtree/bigint.hpp"
#include "oddtree/graph.hpp"

namespace oddtree {

/// Target degree parity per vertex: 1 = odd, 0 = even.
class ParityVector {
 public:
  ParityVector() = default;
  /// Throws InvalidParity on any entry outside {0,1}.
  explicit ParityVector(std::vector<int> bits);

  static ParityVector all_odd(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool odd(std::size_t v) const { return bits_[v] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::size_t popcount() const;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Comma-separated 0/1 list, e.g. "1,0,1,1".
ParityVector parse_parity_list(std::string_view text);

enum class Method { SignSum, ClosedForm, Oracle };

std::string_view to_string(Method m);

struct CountReport {
  BigInt count;
  Method method = Method::SignSum;
  std::size_t graph_order = 0;
  std::uint64_t assignments_evaluated = 0;
};

// Largest order accepted without an explicit override.
inline constexpr std::size_t kDefaultMaxOrder = 30;
// The assignment index has to fit in 64 bits.
inline constexpr std::size_t kHardMaxOrder = 64;

struct SignSumOptions {
  unsigned workers = 1;
  bool allow_large = false;
};

/// Number of spanning trees whose degree at every vertex is odd.
CountReport count_odd_spanning_trees(const Graph& g, const SignSumOptions& opts = {});

/// Number of spanning trees T with d_T(v_i) = r_i (mod 2) for every i.
CountReport count_parity_constrained(const Graph& g, const ParityVector& r,
                                     const SignSumOptions& opts = {});

/// count_odd_spanning_trees with the assignment range split across
/// `workers` threads.
CountReport count_odd_parallel(const Graph& g, unsigned workers,
                               const SignSumOptions& opts = {});

}  // namespace oddtree
