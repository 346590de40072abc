#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <variant>
#include <vector>

#include "oddtree/bigint.hpp"
#include "oddtree/graph.hpp"
#include "oddtree/parity_sum.hpp"

namespace oddtree {

using DegreeSequence = std::vector<std::size_t>;
using SpanningTree = std::vector<Edge>;

namespace filter {
struct AllOdd {};
struct ParityMatch {
  ParityVector r;
};
struct NoDegreeTwo {};
struct All {};
struct Custom {
  std::function<bool(const DegreeSequence&)> accept;
};
}  // namespace filter

using DegreeFilter = std::variant<filter::AllOdd, filter::ParityMatch,
                                  filter::NoDegreeTwo, filter::All, filter::Custom>;

bool accepts(const DegreeFilter& f, const DegreeSequence& d);

/// Labeled degree sequence -> number of spanning trees with exactly that
/// sequence.
using DegreeHistogram = std::map<DegreeSequence, BigInt>;

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

struct OracleOptions {
  std::size_t cap = kDefaultEnumerationCap;
};

/// Calls `visit` once per spanning tree, in lexicographic order of the
/// sorted edge lists. Throws DisconnectedGraph, or EnumerationCapExceeded
/// when tau(G) exceeds the cap (checked before any tree is produced).
void for_each_spanning_tree(const Graph& g,
                            const std::function<void(std::span<const Edge>)>& visit,
                            const OracleOptions& opts = {});

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g,
                                                   const OracleOptions& opts = {});

DegreeSequence tree_degrees(std::size_t n, std::span<const Edge> tree);

BigInt count_filtered(const Graph& g, const DegreeFilter& f,
                      const OracleOptions& opts = {});

DegreeHistogram degree_histogram(const Graph& g, const OracleOptions& opts = {});

/// Homeomorphically irreducible spanning trees: no vertex of degree 2.
BigInt count_hists(const Graph& g, const OracleOptions& opts = {});

/// One line per tree, "u-v" pairs (1-based) separated by spaces.
void dump_trees(const Graph& g, std::ostream& out, const OracleOptions& opts = {});

}  // namespace oddtree
