#include "oddtree/parity_sum.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>

#include "oddtree/error.hpp"
#include "oddtree/kirchhoff.hpp"
#include "oddtree/linalg.hpp"

namespace oddtree {

ParityVector::ParityVector(std::vector<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw Error(ErrorKind::InvalidParity,
                  "parity entries must be 0 or 1, got " + std::to_string(b));
    }
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

ParityVector ParityVector::all_odd(std::size_t n) { return ParityVector(std::vector<int>(n, 1)); }

std::size_t ParityVector::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

ParityVector parse_parity_list(std::string_view text) {
  std::vector<int> bits;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item == "0") {
      bits.push_back(0);
    } else if (item == "1") {
      bits.push_back(1);
    } else {
      throw Error(ErrorKind::InvalidParity,
                  "parity entries must be 0 or 1, got \"" + std::string(item) + "\"");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ParityVector(std::move(bits));
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::SignSum: return "sign-sum";
    case Method::ClosedForm: return "closed-form";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

namespace {

// Assignment index encoding: sigma_1 = +1 always; bit j of the index set
// means sigma_{j+2} = -1. The parity mask uses the same bit layout, so the
// character prod sigma_i^{r_i} is (-1)^popcount(index & mask).
struct HalfSumKernel {
  const Graph& graph;
  std::uint64_t parity_mask;

  BigInt accumulate(std::uint64_t begin, std::uint64_t end) const {
    const std::size_t n = graph.order();
    std::vector<std::int64_t> sigma(n, 1);
    IntMatrix work;
    BigInt partial = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (std::size_t j = 0; j + 1 < n; ++j) sigma[j + 1] = ((idx >> j) & 1U) ? -1 : 1;
      fill_reduced_laplacian(graph, sigma, work);
      BigInt p = det_bareiss_inplace(work);
      if (std::popcount(idx & parity_mask) % 2 == 0) {
        partial += p;
      } else {
        partial -= p;
      }
    }
    return partial;
  }
};

void check_preconditions(const Graph& g, std::size_t parity_len, const SignSumOptions& opts) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "graph has no vertices");
  if (parity_len != n) {
    throw Error(ErrorKind::DimensionMismatch, "parity vector has " + std::to_string(parity_len) +
                                                  " entries for a graph of order " +
                                                  std::to_string(n));
  }
  if (opts.workers == 0) throw Error(ErrorKind::InvalidSpec, "worker count must be positive");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
}

void check_size_guard(std::size_t n, const SignSumOptions& opts) {
  if (n > kHardMaxOrder) {
    throw Error(ErrorKind::SizeGuard, "order " + std::to_string(n) + " exceeds the hard limit " +
                                          std::to_string(kHardMaxOrder));
  }
  if (n > kDefaultMaxOrder && !opts.allow_large) {
    throw Error(ErrorKind::SizeGuard, "order " + std::to_string(n) +
                                          " needs 2^" + std::to_string(n - 1) +
                                          " determinants; pass the override to proceed");
  }
}

BigInt half_sum(const Graph& g, std::uint64_t parity_mask, std::uint64_t total, unsigned workers) {
  HalfSumKernel kernel{g, parity_mask};
  if (workers <= 1 || total < 2) return kernel.accumulate(0, total);

  const std::uint64_t chunks = std::min<std::uint64_t>(workers, total);
  const std::uint64_t base = total / chunks;
  const std::uint64_t extra = total % chunks;

  std::vector<BigInt> partials(chunks);
  std::vector<std::exception_ptr> failures(chunks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    std::uint64_t begin = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      std::uint64_t end = begin + base + (c < extra ? 1 : 0);
      pool.emplace_back([&, c, begin, end] {
        try {
          partials[c] = kernel.accumulate(begin, end);
        } catch (...) {
          failures[c] = std::current_exception();
        }
      });
      begin = end;
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  BigInt sum = 0;
  for (const BigInt& p : partials) sum += p;
  return sum;
}

}  // namespace

CountReport count_parity_constrained(const Graph& g, const ParityVector& r,
                                     const SignSumOptions& opts) {
  check_preconditions(g, r.size(), opts);
  const std::size_t n = g.order();
  CountReport report{0, Method::SignSum, n, 0};
  // Degrees of a tree sum to 2(n-1), so an odd number of odd-degree
  // targets is unsatisfiable.
  if (r.popcount() % 2 == 1) return report;
  check_size_guard(n, opts);

  std::uint64_t mask = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (r.odd(v)) mask |= std::uint64_t{1} << (v - 1);
  }
  // sigma and -sigma contribute equally when sum r_i is even, so only
  // sigma_1 = +1 is enumerated and the total doubled.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  BigInt sum = half_sum(g, mask, total, opts.workers);
  sum *= 2;

  BigInt rem;
  mpz_tdiv_r_2exp(rem.get_mpz_t(), sum.get_mpz_t(), n);
  if (sgn(rem) != 0) throw std::logic_error("sign-sum is not divisible by 2^n");
  mpz_tdiv_q_2exp(report.count.get_mpz_t(), sum.get_mpz_t(), n);
  if (sgn(report.count) < 0) throw std::logic_error("sign-sum produced a negative count");
  report.assignments_evaluated = total;
  return report;
}

CountReport count_odd_spanning_trees(const Graph& g, const SignSumOptions& opts) {
  return count_parity_constrained(g, ParityVector::all_odd(g.order()), opts);
}

CountReport count_odd_parallel(const Graph& g, unsigned workers, const SignSumOptions& opts) {
  SignSumOptions o = opts;
  o.workers = workers;
  return count_odd_spanning_trees(g, o);
}

}  // namespace oddtree
