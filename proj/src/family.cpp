#include "oddtree/family.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "oddtree/error.hpp"

namespace oddtree {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidSpec, what);
}

std::vector<std::size_t> parse_list(std::string_view text, std::string_view spec) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      invalid("malformed number \"" + std::string(item) + "\" in family spec \"" +
              std::string(spec) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

void validate_partition(const Partition& lambda) {
  if (lambda.empty()) invalid("partition must have at least one part");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) invalid("partition parts must be positive");
    if (i > 0 && lambda[i] > lambda[i - 1]) invalid("partition must be weakly decreasing");
  }
}

Partition dual_partition(const Partition& lambda) {
  validate_partition(lambda);
  Partition dual(lambda.front(), 0);
  for (std::size_t part : lambda) {
    for (std::size_t j = 0; j < part; ++j) ++dual[j];
  }
  return dual;
}

void validate(const FamilySpec& spec) {
  std::visit(
      overloaded{
          [](const family::Complete& s) {
            if (s.n < 1) invalid("complete graph needs n >= 1");
          },
          [](const family::Multipartite& s) {
            if (s.parts.size() < 2) invalid("multipartite graph needs at least two parts");
            if (std::ranges::any_of(s.parts, [](std::size_t p) { return p == 0; })) {
              invalid("multipartite part sizes must be positive");
            }
          },
          [](const family::AlmostComplete& s) {
            if (s.n < 1) invalid("almost complete graph needs n >= 1");
            if (2 * s.p > s.n) invalid("matching size p must satisfy 2p <= n");
            // K_2 minus its only edge has no spanning tree.
            if (s.n == 2 && s.p == 1) invalid("K_2 minus a perfect matching is disconnected");
          },
          [](const family::CompleteSplit& s) {
            if (s.m < 1 || s.n < 1) invalid("complete split graph needs m >= 1 and n >= 1");
          },
          [](const family::Ferrers& s) { validate_partition(s.lambda); },
      },
      spec);
}

std::size_t order(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Complete& s) { return s.n; },
          [](const family::Multipartite& s) {
            return std::accumulate(s.parts.begin(), s.parts.end(), std::size_t{0});
          },
          [](const family::AlmostComplete& s) { return s.n; },
          [](const family::CompleteSplit& s) { return s.m + s.n; },
          [](const family::Ferrers& s) {
            return s.lambda.empty() ? std::size_t{0} : s.lambda.size() + s.lambda.front();
          },
      },
      spec);
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  std::vector<LabeledEdge> edges;
  using L = long long;

  std::visit(
      overloaded{
          [&](const family::Complete& s) {
            for (L i = 1; i <= L(s.n); ++i)
              for (L j = i + 1; j <= L(s.n); ++j) edges.emplace_back(i, j);
          },
          [&](const family::Multipartite& s) {
            std::vector<std::size_t> part_of;
            for (std::size_t k = 0; k < s.parts.size(); ++k) part_of.insert(part_of.end(), s.parts[k], k);
            for (std::size_t i = 0; i < part_of.size(); ++i)
              for (std::size_t j = i + 1; j < part_of.size(); ++j)
                if (part_of[i] != part_of[j]) edges.emplace_back(L(i + 1), L(j + 1));
          },
          [&](const family::AlmostComplete& s) {
            for (L i = 1; i <= L(s.n); ++i)
              for (L j = i + 1; j <= L(s.n); ++j) {
                bool matched = (i % 2 == 1) && j == i + 1 && i < 2 * L(s.p);
                if (!matched) edges.emplace_back(i, j);
              }
          },
          [&](const family::CompleteSplit& s) {
            const L m = L(s.m);
            for (L i = 1; i <= m; ++i) {
              for (L j = i + 1; j <= m; ++j) edges.emplace_back(i, j);
              for (L j = 1; j <= L(s.n); ++j) edges.emplace_back(i, m + j);
            }
          },
          [&](const family::Ferrers& s) {
            const L m = L(s.lambda.size());
            for (L i = 1; i <= m; ++i)
              for (L j = 1; j <= L(s.lambda[i - 1]); ++j) edges.emplace_back(i, m + j);
          },
      },
      spec);
  return new_graph(order(spec), edges);
}

FamilySpec parse_family_spec(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    invalid("family spec \"" + std::string(text) + "\" is missing ':'");
  }
  std::string_view kind = text.substr(0, colon);
  auto values = parse_list(text.substr(colon + 1), text);
  auto expect = [&](std::size_t count) {
    if (values.size() != count) {
      invalid("family \"" + std::string(kind) + "\" takes " + std::to_string(count) +
              " parameter(s)");
    }
  };

  FamilySpec spec;
  if (kind == "complete") {
    expect(1);
    spec = family::Complete{values[0]};
  } else if (kind == "multipartite") {
    spec = family::Multipartite{values};
  } else if (kind == "almost") {
    expect(2);
    spec = family::AlmostComplete{values[0], values[1]};
  } else if (kind == "split") {
    expect(2);
    spec = family::CompleteSplit{values[0], values[1]};
  } else if (kind == "ferrers") {
    spec = family::Ferrers{values};
  } else {
    invalid("unknown family \"" + std::string(kind) + "\"");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Complete& s) { return "complete:" + std::to_string(s.n); },
          [](const family::Multipartite& s) { return "multipartite:" + join(s.parts); },
          [](const family::AlmostComplete& s) {
            return "almost:" + std::to_string(s.n) + "," + std::to_string(s.p);
          },
          [](const family::CompleteSplit& s) {
            return "split:" + std::to_string(s.m) + "," + std::to_string(s.n);
          },
          [](const family::Ferrers& s) { return "ferrers:" + join(s.lambda); },
      },
      spec);
}

}  // namespace oddtree
