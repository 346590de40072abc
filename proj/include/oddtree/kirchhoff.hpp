#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oddtree/bigint.hpp"
#include "oddtree/graph.hpp"
#include "oddtree/linalg.hpp"

namespace oddtree {

/// Integer value per vertex; edge v_i v_j carries weight x_i * x_j.
using Assignment = std::vector<std::int64_t>;

/// Diagonal x_i * sum_{k in N(i)} x_k, off-diagonal -x_i x_j on edges.
IntMatrix weighted_laplacian(const Graph& g, const Assignment& x);

/// Writes the Laplacian with row and column n-1 removed into `work`,
/// resizing it only when its dimension differs. Lets hot loops reuse the
/// same big-integer storage across assignments.
void fill_reduced_laplacian(const Graph& g, std::span<const std::int64_t> x, IntMatrix& work);

/// (-1)^{i+j} det(L_G(i,j)) for 0-based i, j.
BigInt laplacian_cofactor(const Graph& g, const Assignment& x, std::size_t i,
                          std::size_t j);

/// P_G(x) = sum over spanning trees T of prod_i x_i^{d_T(v_i)}, evaluated as
/// the determinant of the Laplacian with its last row and column removed.
BigInt eval_tree_polynomial(const Graph& g, const Assignment& x);

/// tau(G).
BigInt count_spanning_trees(const Graph& g);

}  // namespace oddtree
