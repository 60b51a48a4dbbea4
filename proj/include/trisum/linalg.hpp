#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trisum/ratfunc.hpp"

namespace trisum {

inline bool field_is_zero(const Rational& a) { return a == 0; }
inline bool field_is_zero(const RatFunc& a) { return a.is_zero(); }
inline std::size_t field_size(const Rational& a) {
  return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
}
inline std::size_t field_size(const RatFunc& a) { return a.num().size() + a.den().size(); }

/// Dense matrix over an exact field (Rational or RatFunc).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void add_row(const std::vector<F>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      // Smallest nonzero entry as pivot keeps coefficient growth down.
      std::size_t best = rows_;
      for (std::size_t i = r; i < rows_; ++i)
        if (!field_is_zero((*this)(i, c)) &&
            (best == rows_ || field_size((*this)(i, c)) < field_size((*this)(best, c))))
          best = i;
      if (best == rows_) continue;
      swap_rows(r, best);
      F inv = F(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!field_is_zero((*this)(r, j))) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          if (!field_is_zero((*this)(r, j))) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }

  /// Basis of the right kernel {v : A v = 0}.
  std::vector<std::vector<F>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> out;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_piv[free]) continue;
      std::vector<F> v(cols_, F(0));
      v[free] = F(1);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, free);
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Some solution of A v = b, or nullopt.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    Matrix m(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      m(i, cols_) = b[i];
    }
    auto piv = m.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<F> v(cols_, F(0));
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = m(i, cols_);
    return v;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

}  // namespace trisum
