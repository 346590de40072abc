#include "oddtree/kirchhoff.hpp"

#include "oddtree/error.hpp"

namespace oddtree {

namespace {

void check_assignment(const Graph& g, std::size_t len) {
  if (len != g.order()) {
    throw Error(ErrorKind::DimensionMismatch, "assignment has " + std::to_string(len) +
                                                  " entries for a graph of order " +
                                                  std::to_string(g.order()));
  }
}

void require_vertices(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::DimensionMismatch, "graph has no vertices");
}

}  // namespace

IntMatrix weighted_laplacian(const Graph& g, const Assignment& x) {
  check_assignment(g, x.size());
  const std::size_t n = g.order();
  IntMatrix L(n);
  for (Vertex i = 0; i < n; ++i) {
    BigInt neighbor_sum = 0;
    for (Vertex k : g.neighbors(i)) neighbor_sum += static_cast<long>(x[k]);
    L(i, i) = neighbor_sum * static_cast<long>(x[i]);
  }
  for (const Edge& e : g.edges()) {
    BigInt w = BigInt(static_cast<long>(x[e.u])) * static_cast<long>(x[e.v]);
    L(e.u, e.v) = -w;
    L(e.v, e.u) = -w;
  }
  return L;
}

void fill_reduced_laplacian(const Graph& g, std::span<const std::int64_t> x, IntMatrix& work) {
  check_assignment(g, x.size());
  const std::size_t k = g.order() - 1;
  if (work.dim() != k) work = IntMatrix(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (BigInt& v : work.row(r)) v = 0;
  }
  for (Vertex i = 0; i < k; ++i) {
    BigInt& diag = work(i, i);
    for (Vertex nb : g.neighbors(i)) diag += static_cast<long>(x[nb]);
    diag *= static_cast<long>(x[i]);
  }
  for (const Edge& e : g.edges()) {
    if (e.v >= k) continue;  // row/column n-1 is dropped
    BigInt& a = work(e.u, e.v);
    a = static_cast<long>(x[e.u]);
    a *= static_cast<long>(-x[e.v]);
    work(e.v, e.u) = a;
  }
}

BigInt laplacian_cofactor(const Graph& g, const Assignment& x, std::size_t i, std::size_t j) {
  require_vertices(g);
  IntMatrix L = weighted_laplacian(g, x);
  if (i >= L.dim() || j >= L.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "cofactor index out of range");
  }
  IntMatrix sub = L.minor(i, j);
  BigInt d = det_bareiss_inplace(sub);
  return ((i + j) % 2 == 0) ? d : BigInt(-d);
}

BigInt eval_tree_polynomial(const Graph& g, const Assignment& x) {
  require_vertices(g);
  check_assignment(g, x.size());
  if (g.order() == 1) return 1;
  IntMatrix work;
  fill_reduced_laplacian(g, x, work);
  return det_bareiss_inplace(work);
}

BigInt count_spanning_trees(const Graph& g) {
  return eval_tree_polynomial(g, Assignment(g.order(), 1));
}

}  // namespace oddtree
