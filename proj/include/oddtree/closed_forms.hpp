#pragma once

#include <cstddef>
#include <vector>

#include "oddtree/bigint.hpp"
#include "oddtree/family.hpp"
#include "oddtree/parity_sum.hpp"

namespace oddtree {

// Exact odd-spanning-tree counts for the special families. Each formula
// accumulates 2^order times the answer and divides once at the end; the
// division is checked.

BigInt odd_count_complete(std::size_t n);
BigInt odd_count_multipartite(const std::vector<std::size_t>& parts);
BigInt odd_count_almost_complete(std::size_t n, std::size_t p);
BigInt odd_count_complete_split(std::size_t m, std::size_t n);
BigInt odd_count_ferrers(const Partition& lambda);

CountReport odd_count(const FamilySpec& spec);

}  // namespace oddtree
