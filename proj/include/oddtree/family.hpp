#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oddtree/graph.hpp"

namespace oddtree {

using Partition = std::vector<std::size_t>;

namespace family {

struct Complete {
  std::size_t n = 0;
};

// Vertices are grouped consecutively by part.
struct Multipartite {
  std::vector<std::size_t> parts;
};

// K_n minus the matching {(1,2),(3,4),...,(2p-1,2p)}.
struct AlmostComplete {
  std::size_t n = 0;
  std::size_t p = 0;
};

// Clique on labels 1..m joined to an independent set on m+1..m+n.
struct CompleteSplit {
  std::size_t m = 0;
  std::size_t n = 0;
};

// Rows r_1..r_m on labels 1..m, columns c_1..c_{lambda_1} after them.
struct Ferrers {
  Partition lambda;
};

}  // namespace family

using FamilySpec = std::variant<family::Complete, family::Multipartite,
                                family::AlmostComplete, family::CompleteSplit,
                                family::Ferrers>;

/// Throws Error(InvalidSpec) when the parameters do not describe a valid,
/// connected family member.
void validate(const FamilySpec& spec);

std::size_t order(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

/// Parses `complete:N`, `multipartite:N1,N2,...`, `almost:N,P`, `split:M,N`
/// or `ferrers:L1,L2,...`. The result is validated.
FamilySpec parse_family_spec(std::string_view text);

std::string to_string(const FamilySpec& spec);

/// lambda'_j = #{i : lambda_i >= j}.
Partition dual_partition(const Partition& lambda);

void validate_partition(const Partition& lambda);

}  // namespace oddtree
