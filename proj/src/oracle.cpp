#include "oddtree/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "oddtree/error.hpp"
#include "oddtree/kirchhoff.hpp"

namespace oddtree {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Union-find with undo; no path compression so unions can be reverted.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    bool bumped = rank_[a] == rank_[b];
    parent_[b] = a;
    if (bumped) ++rank_[a];
    history_.push_back({b, bumped});
    return true;
  }

  void undo() {
    auto [child, bumped] = history_.back();
    history_.pop_back();
    std::size_t root = parent_[child];
    parent_[child] = child;
    if (bumped) --rank_[root];
  }

 private:
  struct Step {
    std::size_t child;
    bool bumped;
  };
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::vector<Step> history_;
};

// Contraction/deletion over the sorted edge list. Taking an edge contracts
// it (allowed unless it closes a cycle); skipping it deletes it (allowed
// unless it is a bridge of what remains). Both prunes keep every branch
// productive, and trying "take" first yields lexicographic order.
class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, const std::function<void(std::span<const Edge>)>& visit)
      : g_(g), edges_(g.edges()), visit_(visit), forest_(g.order()) {
    chosen_.reserve(g.order());
  }

  void run() { recurse(0); }

 private:
  void recurse(std::size_t i) {
    if (chosen_.size() + 1 == g_.order()) {
      visit_(chosen_);
      return;
    }
    if (i == edges_.size()) return;
    const Edge e = edges_[i];
    if (forest_.unite(e.u, e.v)) {
      chosen_.push_back(e);
      recurse(i + 1);
      chosen_.pop_back();
      forest_.undo();
    }
    if (spans_without(i)) recurse(i + 1);
  }

  bool spans_without(std::size_t skipped) const {
    RollbackDsu dsu(g_.order());
    std::size_t components = g_.order();
    for (const Edge& e : chosen_) components -= dsu.unite(e.u, e.v) ? 1 : 0;
    for (std::size_t j = skipped + 1; j < edges_.size() && components > 1; ++j) {
      components -= dsu.unite(edges_[j].u, edges_[j].v) ? 1 : 0;
    }
    return components == 1;
  }

  const Graph& g_;
  std::span<const Edge> edges_;
  const std::function<void(std::span<const Edge>)>& visit_;
  RollbackDsu forest_;
  std::vector<Edge> chosen_;
};

}  // namespace

bool accepts(const DegreeFilter& f, const DegreeSequence& d) {
  return std::visit(
      overloaded{
          [&](const filter::AllOdd&) {
            return std::ranges::all_of(d, [](std::size_t x) { return x % 2 == 1; });
          },
          [&](const filter::ParityMatch& p) {
            if (p.r.size() != d.size()) {
              throw Error(ErrorKind::DimensionMismatch, "parity vector length differs from order");
            }
            for (std::size_t i = 0; i < d.size(); ++i) {
              if ((d[i] % 2 == 1) != p.r.odd(i)) return false;
            }
            return true;
          },
          [&](const filter::NoDegreeTwo&) {
            return std::ranges::none_of(d, [](std::size_t x) { return x == 2; });
          },
          [](const filter::All&) { return true; },
          [&](const filter::Custom& c) { return c.accept(d); },
      },
      f);
}

void for_each_spanning_tree(const Graph& g,
                            const std::function<void(std::span<const Edge>)>& visit,
                            const OracleOptions& opts) {
  if (g.order() == 0) throw Error(ErrorKind::DimensionMismatch, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
  BigInt tau = count_spanning_trees(g);
  if (tau > BigInt(static_cast<unsigned long>(opts.cap))) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                "graph has " + to_decimal(tau) + " spanning trees, above the enumeration cap " +
                    std::to_string(opts.cap));
  }
  TreeEnumerator(g, visit).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, const OracleOptions& opts) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(
      g, [&](std::span<const Edge> t) { out.emplace_back(t.begin(), t.end()); }, opts);
  return out;
}

DegreeSequence tree_degrees(std::size_t n, std::span<const Edge> tree) {
  DegreeSequence d(n, 0);
  for (const Edge& e : tree) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

BigInt count_filtered(const Graph& g, const DegreeFilter& f, const OracleOptions& opts) {
  std::uint64_t hits = 0;
  for_each_spanning_tree(
      g,
      [&](std::span<const Edge> t) {
        if (accepts(f, tree_degrees(g.order(), t))) ++hits;
      },
      opts);
  return BigInt(static_cast<unsigned long>(hits));
}

DegreeHistogram degree_histogram(const Graph& g, const OracleOptions& opts) {
  DegreeHistogram hist;
  for_each_spanning_tree(
      g, [&](std::span<const Edge> t) { hist[tree_degrees(g.order(), t)] += 1; }, opts);
  return hist;
}

BigInt count_hists(const Graph& g, const OracleOptions& opts) {
  return count_filtered(g, filter::NoDegreeTwo{}, opts);
}

void dump_trees(const Graph& g, std::ostream& out, const OracleOptions& opts) {
  for_each_spanning_tree(
      g,
      [&](std::span<const Edge> t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (i) out << ' ';
          out << t[i].u + 1 << '-' << t[i].v + 1;
        }
        out << '\n';
      },
      opts);
}

}  // namespace oddtree
