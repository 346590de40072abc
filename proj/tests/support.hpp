// Test-only helpers: random instance generators and reference routes that
// are deliberately independent of the library's fast paths.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oddtree/bigint.hpp"
#include "oddtree/family.hpp"
#include "oddtree/graph.hpp"
#include "oddtree/kirchhoff.hpp"
#include "oddtree/linalg.hpp"
#include "oddtree/parity_sum.hpp"

namespace oddtree::testing {

using Rng = std::mt19937_64;

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return new_graph(n, edges);
}

// Rejection-samples G(n,p) until connected.
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

inline Assignment random_assignment(std::size_t n, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  Assignment x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

inline Assignment random_signs(std::size_t n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  Assignment x(n);
  for (auto& v : x) v = coin(rng) ? 1 : -1;
  return x;
}

inline ParityVector random_parity(std::size_t n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> bits(n);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return ParityVector(bits);
}

inline IntMatrix random_matrix(std::size_t dim, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = d(rng);
  return m;
}

inline Partition random_partition(std::size_t max_parts, std::size_t max_part, Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(1, max_parts);
  std::uniform_int_distribution<std::size_t> val(1, max_part);
  Partition p(len(rng));
  for (auto& v : p) v = val(rng);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

// Every (n-1)-subset of the edges, kept when it is acyclic. Exponential and
// unrelated to the contraction/deletion enumerator it cross-checks.
template <class F>
void naive_spanning_trees(const Graph& g, F&& visit) {
  const std::size_t n = g.order();
  auto edges = g.edges();
  const std::size_t need = n - 1;
  if (edges.size() < need) return;
  std::vector<bool> pick(edges.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), true);
  do {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<Edge> tree;
    bool acyclic = true;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
      if (!pick[i]) continue;
      std::size_t a = find(edges[i].u), b = find(edges[i].v);
      if (a == b) acyclic = false;
      parent[a] = b;
      tree.push_back(edges[i]);
    }
    if (acyclic) visit(tree);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

inline std::vector<std::size_t> degrees_of(std::size_t n, const std::vector<Edge>& tree) {
  std::vector<std::size_t> d(n, 0);
  for (const Edge& e : tree) ++d[e.u], ++d[e.v];
  return d;
}

// sum_T prod_i x_i^{d_T(v_i)} by explicit enumeration.
inline BigInt naive_tree_polynomial(const Graph& g, const Assignment& x) {
  BigInt total = 0;
  naive_spanning_trees(g, [&](const std::vector<Edge>& t) {
    auto d = degrees_of(g.order(), t);
    BigInt term = 1;
    for (std::size_t i = 0; i < d.size(); ++i) term *= pow(BigInt(static_cast<long>(x[i])), d[i]);
    total += term;
  });
  return total;
}

inline std::vector<std::vector<std::size_t>> naive_degree_sequences(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  naive_spanning_trees(g, [&](const std::vector<Edge>& t) { out.push_back(degrees_of(g.order(), t)); });
  return out;
}

inline BigInt parity_count_from(const std::vector<std::vector<std::size_t>>& seqs,
                                const ParityVector& r) {
  unsigned long total = 0;
  for (const auto& d : seqs) {
    bool ok = true;
    for (std::size_t i = 0; i < d.size() && ok; ++i) ok = (d[i] % 2 == 1) == r.odd(i);
    total += ok ? 1 : 0;
  }
  return BigInt(total);
}

inline BigInt naive_parity_count(const Graph& g, const ParityVector& r) {
  return parity_count_from(naive_degree_sequences(g), r);
}

// The sign-sum over all 2^n assignments, without the sigma -> -sigma halving.
inline BigInt full_sign_sum(const Graph& g, const ParityVector& r) {
  const std::size_t n = g.order();
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment x(n);
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = ((mask >> i) & 1U) ? -1 : 1;
      if (r.odd(i) && x[i] < 0) sign = -sign;
    }
    BigInt p = eval_tree_polynomial(g, x);
    total += sign > 0 ? p : BigInt(-p);
  }
  return total;
}

// Product formulas for the Kirchhoff polynomial of each family, evaluated
// at an integer point. Vertex layout matches generate().
inline BigInt sum_of(const Assignment& x, std::size_t from, std::size_t to) {
  BigInt s = 0;
  for (std::size_t i = from; i < to; ++i) s += static_cast<long>(x[i]);
  return s;
}

inline BigInt product_of(const Assignment& x) {
  BigInt p = 1;
  for (auto v : x) p *= static_cast<long>(v);
  return p;
}

inline BigInt family_product_formula(const FamilySpec& spec, const Assignment& x) {
  const std::size_t n = x.size();
  const BigInt total = sum_of(x, 0, n);
  const BigInt prod = product_of(x);
  if (auto* s = std::get_if<family::Complete>(&spec)) {
    if (s->n == 1) return 1;
    return prod * pow(total, s->n - 2);
  }
  if (auto* s = std::get_if<family::Multipartite>(&spec)) {
    BigInt r = prod * pow(total, s->parts.size() - 2);
    std::size_t start = 0;
    for (std::size_t part : s->parts) {
      r *= pow(total - sum_of(x, start, start + part), part - 1);
      start += part;
    }
    return r;
  }
  if (auto* s = std::get_if<family::AlmostComplete>(&spec)) {
    if (s->n == 1) return 1;
    BigInt r = prod * pow(total, s->n - s->p - 2);
    for (std::size_t e = 0; e < s->p; ++e) {
      r *= total - static_cast<long>(x[2 * e]) - static_cast<long>(x[2 * e + 1]);
    }
    return r;
  }
  if (auto* s = std::get_if<family::CompleteSplit>(&spec)) {
    BigInt sx = sum_of(x, 0, s->m);
    return prod * pow(sx, s->n - 1) * pow(total, s->m - 1);
  }
  const auto& lambda = std::get<family::Ferrers>(spec).lambda;
  const std::size_t m = lambda.size();
  Partition dual = dual_partition(lambda);
  BigInt r = prod;
  for (std::size_t i = 1; i < m; ++i) r *= sum_of(x, m, m + lambda[i]);
  for (std::size_t j = 1; j < dual.size(); ++j) r *= sum_of(x, 0, dual[j]);
  return r;
}

// Every valid family instance with order in [lo, hi].
inline std::vector<FamilySpec> family_instances(std::size_t lo, std::size_t hi) {
  std::vector<FamilySpec> out;
  auto in_range = [&](std::size_t n) { return n >= lo && n <= hi; };
  for (std::size_t n = 1; n <= hi; ++n) {
    if (in_range(n)) out.push_back(family::Complete{n});
    for (std::size_t p = 1; 2 * p <= n; ++p) {
      if (n == 2 && p == 1) continue;
      if (in_range(n)) out.push_back(family::AlmostComplete{n, p});
    }
  }
  for (std::size_t m = 1; m <= hi; ++m)
    for (std::size_t k = 1; m + k <= hi; ++k)
      if (in_range(m + k)) out.push_back(family::CompleteSplit{m, k});
  // Multipartite: non-increasing part lists with at least two parts.
  std::vector<std::size_t> parts;
  auto rec_parts = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (parts.size() >= 2 && in_range(hi - remaining)) out.push_back(family::Multipartite{parts});
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec_parts(rec_parts, hi, hi);
  // Ferrers: partitions lambda with order m + lambda_1.
  Partition lam;
  auto rec_ferrers = [&](auto&& self, std::size_t max_part) -> void {
    if (!lam.empty()) {
      std::size_t order = lam.size() + lam.front();
      if (order > hi) return;
      if (in_range(order)) out.push_back(family::Ferrers{lam});
    }
    for (std::size_t p = 1; p <= max_part; ++p) {
      if (!lam.empty() && lam.size() + 1 + lam.front() > hi) break;
      if (lam.empty() && 1 + p > hi) break;
      lam.push_back(p);
      self(self, p);
      lam.pop_back();
    }
  };
  rec_ferrers(rec_ferrers, hi);
  return out;
}

}  // namespace oddtree::testing
