#include "oddtree/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

#include "oddtree/error.hpp"

namespace oddtree {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

BigInt exact_div_pow2(const BigInt& total, std::size_t exp) {
  BigInt rem;
  mpz_tdiv_r_2exp(rem.get_mpz_t(), total.get_mpz_t(), exp);
  if (sgn(rem) != 0) {
    throw std::logic_error("closed form: accumulated sum not divisible by 2^" +
                           std::to_string(exp));
  }
  BigInt q;
  mpz_tdiv_q_2exp(q.get_mpz_t(), total.get_mpz_t(), exp);
  return q;
}

// Visits every vector k with 0 <= k_i <= bounds[i].
template <class F>
void for_each_bounded(const std::vector<std::size_t>& bounds, F&& visit) {
  std::vector<std::size_t> k(bounds.size(), 0);
  while (true) {
    visit(k);
    std::size_t i = 0;
    while (i < k.size() && k[i] == bounds[i]) k[i++] = 0;
    if (i == k.size()) return;
    ++k[i];
  }
}

long as_long(std::size_t v) { return static_cast<long>(v); }

// sum over (k_1..k_m), 0 <= k_t <= p_t = lambda_t - lambda_{t+1}, of
// prod_t C(p_t, k_t) * prod_{i>=2} (2 * sum_{t>=i} k_t - lambda_i).
// For a Ferrers graph this is the sign-sum over the column signs (when
// applied to lambda) or over the row signs (when applied to lambda').
BigInt ferrers_side_sum(const Partition& lambda) {
  const std::size_t m = lambda.size();
  std::vector<std::size_t> gaps(m);
  for (std::size_t i = 0; i < m; ++i) gaps[i] = lambda[i] - (i + 1 < m ? lambda[i + 1] : 0);

  BigInt total = 0;
  for_each_bounded(gaps, [&](const std::vector<std::size_t>& k) {
    BigInt term = 1;
    for (std::size_t t = 0; t < m; ++t) term *= binomial(gaps[t], k[t]);
    long suffix = 0;
    for (std::size_t i = m; i-- > 1;) {
      suffix += as_long(k[i]);
      term *= 2 * suffix - as_long(lambda[i]);
      if (sgn(term) == 0) return;
    }
    total += term;
  });
  return total;
}

}  // namespace

BigInt odd_count_complete(std::size_t n) {
  validate(family::Complete{n});
  if (n % 2 == 1) return 0;
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += binomial(n, k) * pow(2 * as_long(k) - as_long(n), n - 2);
  }
  return exact_div_pow2(total, n);
}

BigInt odd_count_multipartite(const std::vector<std::size_t>& parts) {
  validate(family::Multipartite{parts});
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  if (n % 2 == 1) return 0;
  const std::size_t k = parts.size();

  BigInt total = 0;
  std::vector<long> m(k);
  for_each_bounded(parts, [&](const std::vector<std::size_t>& r) {
    long M = 0;
    for (std::size_t l = 0; l < k; ++l) {
      m[l] = 2 * as_long(r[l]) - as_long(parts[l]);
      M += m[l];
    }
    BigInt term = pow(M, k - 2);  // 0^0 = 1 when k = 2
    for (std::size_t l = 0; l < k && sgn(term) != 0; ++l) {
      term *= binomial(parts[l], r[l]);
      term *= pow(M - m[l], parts[l] - 1);
    }
    total += term;
  });
  return exact_div_pow2(total, n);
}

BigInt odd_count_almost_complete(std::size_t n, std::size_t p) {
  validate(family::AlmostComplete{n, p});
  if (n % 2 == 1) return 0;
  const std::size_t free_vertices = n - 2 * p;
  const BigInt p_fact = factorial(p);

  BigInt total = 0;
  for (std::size_t a = 0; a <= p; ++a) {
    for (std::size_t b = 0; a + b <= p; ++b) {
      const std::size_t c = p - a - b;
      BigInt multinomial = p_fact / (factorial(a) * factorial(b) * factorial(c));
      multinomial <<= b;  // 2^b choices of which endpoint gets +1
      for (std::size_t r = 0; r <= free_vertices; ++r) {
        const long S = 4 * as_long(a) + 2 * as_long(b) + 2 * as_long(r) - as_long(n);
        BigInt term = multinomial * binomial(free_vertices, r);
        term *= pow(S, n - p - 2);
        term *= pow(S - 2, a);
        term *= pow(S, b);
        term *= pow(S + 2, c);
        total += term;
      }
    }
  }
  return exact_div_pow2(total, n);
}

BigInt odd_count_complete_split(std::size_t m, std::size_t n) {
  validate(family::CompleteSplit{m, n});
  if ((m + n) % 2 == 1) return 0;
  BigInt total = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    const long clique_sum = 2 * as_long(k) - as_long(m);
    BigInt clique_part = binomial(m, k) * pow(clique_sum, n - 1);
    if (sgn(clique_part) == 0) continue;
    for (std::size_t l = 0; l <= n; ++l) {
      const long all_sum = clique_sum + 2 * as_long(l) - as_long(n);
      total += clique_part * binomial(n, l) * pow(all_sum, m - 1);
    }
  }
  return exact_div_pow2(total, m + n);
}

BigInt odd_count_ferrers(const Partition& lambda) {
  validate_partition(lambda);
  const std::size_t order = lambda.size() + lambda.front();
  if (order % 2 == 1) return 0;
  BigInt product = ferrers_side_sum(lambda) * ferrers_side_sum(dual_partition(lambda));
  return exact_div_pow2(product, order);
}

CountReport odd_count(const FamilySpec& spec) {
  validate(spec);
  BigInt count = std::visit(
      overloaded{
          [](const family::Complete& s) { return odd_count_complete(s.n); },
          [](const family::Multipartite& s) { return odd_count_multipartite(s.parts); },
          [](const family::AlmostComplete& s) { return odd_count_almost_complete(s.n, s.p); },
          [](const family::CompleteSplit& s) { return odd_count_complete_split(s.m, s.n); },
          [](const family::Ferrers& s) { return odd_count_ferrers(s.lambda); },
      },
      spec);
  return CountReport{std::move(count), Method::ClosedForm, order(spec), 0};
}

}  // namespace oddtree
