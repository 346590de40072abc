#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddtree/error.hpp"
#include "oddtree/family.hpp"
#include "oddtree/kirchhoff.hpp"
#include "oddtree/parity_sum.hpp"
#include "support.hpp"

using namespace oddtree;
using oddtree::testing::Rng;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an oddtree::Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("ParityVector") {
  CHECK(ParityVector::all_odd(4).popcount() == 4);
  CHECK(parse_parity_list("1,0,1,1") == ParityVector({1, 0, 1, 1}));
  CHECK(kind_of([] { ParityVector({0, 2}); }) == ErrorKind::InvalidParity);
  CHECK(kind_of([] { parse_parity_list("1,,0"); }) == ErrorKind::InvalidParity);
  CHECK(kind_of([] { parse_parity_list("1,-1"); }) == ErrorKind::InvalidParity);
}

TEST_CASE("count_odd_spanning_trees examples") {
  CountReport k222 = count_odd_spanning_trees(generate(family::Multipartite{{2, 2, 2}}));
  CHECK(k222.count == 24);
  CHECK(k222.method == Method::SignSum);
  CHECK(k222.graph_order == 6);
  CHECK(k222.assignments_evaluated == 32);

  CountReport k5 = count_odd_spanning_trees(generate(family::Complete{5}));
  CHECK(k5.count == 0);
  CHECK(k5.assignments_evaluated == 0);

  CHECK(count_odd_spanning_trees(generate(family::Complete{4})).count == 4);
  CHECK(count_odd_spanning_trees(generate(family::Complete{2})).count == 1);
  CHECK(count_odd_spanning_trees(new_graph(1, {})).count == 0);
}

TEST_CASE("count_parity_constrained examples") {
  Graph star = new_graph(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(count_parity_constrained(star, ParityVector({1, 1, 1, 1})).count == 1);

  Graph k4 = generate(family::Complete{4});
  CHECK(count_parity_constrained(k4, ParityVector({0, 0, 1, 1})).count == 2);
  CountReport odd_sum = count_parity_constrained(k4, ParityVector({1, 0, 0, 0}));
  CHECK(odd_sum.count == 0);
  CHECK(odd_sum.assignments_evaluated == 0);

  // The single vertex has degree 0 in its only spanning tree.
  CHECK(count_parity_constrained(new_graph(1, {}), ParityVector({0})).count == 1);
}

TEST_CASE("count_odd_parallel examples") {
  Graph k222 = generate(family::Multipartite{{2, 2, 2}});
  CHECK(count_odd_parallel(k222, 4).count == 24);
  CHECK(count_odd_parallel(generate(family::CompleteSplit{3, 3}), 8).count == 30);

  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testing::random_connected_graph(2 * (1 + trial % 4), 0.6, rng);
    const BigInt serial = count_odd_spanning_trees(g).count;
    for (unsigned w : {1U, 2U, 3U, 5U, 8U, 64U, 1000U}) {
      CountReport r = count_odd_parallel(g, w);
      CHECK(r.count == serial);
      CHECK(r.assignments_evaluated == (std::uint64_t{1} << (g.order() - 1)));
    }
  }
}

TEST_CASE("errors") {
  Graph split = new_graph(4, {{1, 2}, {3, 4}});
  CHECK(kind_of([&] { count_odd_spanning_trees(split); }) == ErrorKind::DisconnectedGraph);
  CHECK(kind_of([&] { count_odd_parallel(split, 2); }) == ErrorKind::DisconnectedGraph);
  Graph k4 = generate(family::Complete{4});
  CHECK(kind_of([&] { count_parity_constrained(k4, ParityVector({1, 1})); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { count_odd_parallel(k4, 0); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { count_odd_spanning_trees(new_graph(0, {})); }) ==
        ErrorKind::DimensionMismatch);

  Graph big = generate(family::Complete{32});
  CHECK(kind_of([&] { count_odd_spanning_trees(big); }) == ErrorKind::SizeGuard);
  // Odd targets summing to an odd number are answered without the guard.
  CHECK(count_odd_spanning_trees(generate(family::Complete{31})).count == 0);
  Graph huge = generate(family::Complete{66});
  CHECK(kind_of([&] { count_odd_spanning_trees(huge, {1, true}); }) == ErrorKind::SizeGuard);
}

TEST_CASE("halved sum equals the full sign-sum") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 * (1 + trial % 4);
    Graph g = testing::random_connected_graph(n, 0.6, rng);
    ParityVector r = trial % 2 ? ParityVector::all_odd(n) : testing::random_parity(n, rng);
    if (r.popcount() % 2 == 1) continue;
    BigInt full = testing::full_sign_sum(g, r);
    BigInt scaled = count_parity_constrained(g, r).count;
    scaled <<= n;
    CHECK(full == scaled);
  }
}

TEST_CASE("agrees with explicit enumeration") {
  Rng rng(123);
  const double probs[] = {0.4, 0.7, 1.0};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 * (1 + trial % 4);
    Graph g = testing::random_connected_graph(n, probs[trial % 3], rng);
    const auto seqs = testing::naive_degree_sequences(g);
    CountReport odd = count_odd_spanning_trees(g);
    REQUIRE(odd.count == testing::parity_count_from(seqs, ParityVector::all_odd(n)));
    CHECK(odd.count >= 0);
    CHECK(odd.count <= count_spanning_trees(g));
    for (int k = 0; k < 5; ++k) {
      ParityVector r = testing::random_parity(n, rng);
      CHECK(count_parity_constrained(g, r).count == testing::parity_count_from(seqs, r));
    }
  }
}

TEST_CASE("odd order gives zero without evaluating") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_connected_graph(3 + 2 * (trial % 3), 0.6, rng);
    CountReport r = count_odd_spanning_trees(g);
    CHECK(r.count == 0);
    CHECK(r.assignments_evaluated == 0);
  }
}

TEST_CASE("parity classes partition the spanning trees") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = trial % 2 ? 4 : 5;
    Graph g = testing::random_connected_graph(n, 0.7, rng);
    BigInt total = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> bits(n);
      for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1U;
      total += count_parity_constrained(g, ParityVector(bits)).count;
    }
    CHECK(total == count_spanning_trees(g));
  }
}
