#include "oddtree/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "oddtree/error.hpp"

namespace oddtree {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()), entries_() {
  entries_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix must be square");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < dim_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

IntMatrix IntMatrix::minor(std::size_t skip_row, std::size_t skip_col) const {
  IntMatrix out(dim_ - 1);
  for (std::size_t r = 0, rr = 0; r < dim_; ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < dim_; ++c) {
      if (c == skip_col) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

BigInt det_bareiss_inplace(IntMatrix& a) {
  const std::size_t k = a.dim();
  if (k == 0) return 1;

  bool negate = false;
  BigInt prev = 1;
  BigInt tmp;
  BigInt rem;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    std::size_t pivot = p;
    while (pivot < k && sgn(a(pivot, p)) == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != p) {
      a.swap_rows(pivot, p);
      negate = !negate;
    }
    mpz_srcptr app = a(p, p).get_mpz_t();
    for (std::size_t i = p + 1; i < k; ++i) {
      mpz_srcptr aip = a(i, p).get_mpz_t();
      for (std::size_t j = p + 1; j < k; ++j) {
        mpz_ptr aij = a(i, j).get_mpz_t();
        mpz_mul(tmp.get_mpz_t(), aij, app);
        mpz_submul(tmp.get_mpz_t(), aip, a(p, j).get_mpz_t());
        // Sylvester's identity guarantees the quotient is integral.
        mpz_tdiv_qr(aij, rem.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        if (sgn(rem) != 0) throw std::logic_error("Bareiss elimination: inexact division");
      }
    }
    prev = a(p, p);
  }
  BigInt det = a(k - 1, k - 1);
  if (negate) det = -det;
  return det;
}

BigInt det_bareiss(const IntMatrix& m) {
  IntMatrix work = m;
  return det_bareiss_inplace(work);
}

namespace {

BigInt laplace(const IntMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.empty()) return 1;
  if (cols.size() == 1) return m(row, cols[0]);
  BigInt total = 0;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const BigInt& entry = m(row, cols[idx]);
    if (sgn(entry) == 0) continue;
    std::size_t col = cols[idx];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    BigInt sub = laplace(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), col);
    if (idx % 2 == 0) {
      total += entry * sub;
    } else {
      total -= entry * sub;
    }
  }
  return total;
}

}  // namespace

BigInt det_cofactor(const IntMatrix& m) {
  if (m.dim() > kMaxCofactorDim) {
    throw Error(ErrorKind::DimensionTooLarge,
                "cofactor expansion limited to dimension " + std::to_string(kMaxCofactorDim));
  }
  std::vector<std::size_t> cols(m.dim());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return laplace(m, 0, cols);
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t k = m.dim();
  if (k > kMaxCofactorDim) {
    throw Error(ErrorKind::DimensionTooLarge,
                "adjugate limited to dimension " + std::to_string(kMaxCofactorDim));
  }
  IntMatrix adj(k);
  if (k == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      BigInt c = det_cofactor(m.minor(j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? c : BigInt(-c);
    }
  }
  return adj;
}

BigInt det_rank_one_update(const IntMatrix& a_mat, std::span<const BigInt> a_vec,
                           std::span<const BigInt> b_vec) {
  const std::size_t k = a_mat.dim();
  if (a_vec.size() != k || b_vec.size() != k) {
    throw Error(ErrorKind::DimensionMismatch, "rank-one update vectors must match the matrix");
  }
  IntMatrix adj = adjugate(a_mat);
  BigInt result = det_cofactor(a_mat);
  for (std::size_t i = 0; i < k; ++i) {
    BigInt row_dot = 0;
    for (std::size_t j = 0; j < k; ++j) row_dot += adj(i, j) * a_vec[j];
    result += b_vec[i] * row_dot;
  }
  return result;
}

}  // namespace oddtree
