#pragma once

#include "quadnet/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace quadnet {

/// Dense row-major matrix over the rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& s) const;
  bool operator==(const RatMatrix& rhs) const = default;

  bool isSymmetric() const;
  bool isSquare() const { return rows_ == cols_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; pivot columns are returned in order.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rowEchelon(RatMatrix m);
std::size_t rank(const RatMatrix& m);
Rational determinant(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernelBasis(const RatMatrix& m);

/// Stack rows of several matrices with equal column count.
RatMatrix vstack(const std::vector<RatMatrix>& blocks);

/// Positive rescaling to integers with content 1 (signs are preserved).
std::vector<Integer> primitiveIntegerVector(const std::vector<Rational>& v);

/// Extend linearly independent columns to a basis of Q^n with unit vectors.
RatMatrix completeBasis(const std::vector<std::vector<Rational>>& columns, std::size_t n);

} // namespace quadnet
