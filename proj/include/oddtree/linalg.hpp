#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "oddtree/bigint.hpp"

namespace oddtree {

/// Dense square matrix of arbitrary-precision integers, row-major.
/// A 0x0 matrix is valid and has determinant 1.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  std::span<BigInt> row(std::size_t r) { return {entries_.data() + r * dim_, dim_}; }
  std::span<const BigInt> row(std::size_t r) const {
    return {entries_.data() + r * dim_, dim_};
  }

  void swap_rows(std::size_t a, std::size_t b);

  /// Copy with row `skip_row` and column `skip_col` removed.
  IntMatrix minor(std::size_t skip_row, std::size_t skip_col) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

/// Fraction-free Gaussian elimination. Destroys `work`; used by the hot
/// loops that keep a reusable workspace.
BigInt det_bareiss_inplace(IntMatrix& work);

BigInt det_bareiss(const IntMatrix& m);

inline constexpr std::size_t kMaxCofactorDim = 10;

/// Laplace expansion along the first row. O(k!) so limited to
/// kMaxCofactorDim; throws DimensionTooLarge beyond that.
BigInt det_cofactor(const IntMatrix& m);

/// adj(A)_{ij} = (-1)^{i+j} det(A with row j and column i removed).
IntMatrix adjugate(const IntMatrix& m);

/// det(A + a b^T) via det(A) + b^T adj(A) a.
BigInt det_rank_one_update(const IntMatrix& a_mat, std::span<const BigInt> a_vec,
                           std::span<const BigInt> b_vec);

}  // namespace oddtree
