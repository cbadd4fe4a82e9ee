#pragma once

// Dense exact linear algebra over an interned finite field.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "modlie/ffield.hpp"

namespace modlie::la {

using ff::Field;
using ff::FieldElement;
using Vec = std::vector<FieldElement>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero(std::span<const FieldElement> v);

class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Matrix whose j-th column is columns[j]; all columns need equal length.
  static Matrix from_columns(const Field& field, std::size_t rows, std::span<const Vec> columns);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec apply(std::span<const FieldElement> v) const;
  Matrix pow(std::uint64_t e) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(const Matrix& m);
/// Rank of the span of the given vectors.
std::size_t rank(const Field& f, std::span<const Vec> vectors);

/// Basis of the null space {v : m v = 0}.
std::vector<Vec> kernel(const Matrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Matrix& m, std::span<const FieldElement> b);

/// Membership of v in span(vectors). Throws Error on length mismatch.
bool in_span(const Field& f, std::span<const Vec> vectors, std::span<const FieldElement> v);

/// Basis of ker(m - lambda I); m must be square.
std::vector<Vec> eigenspace(const Matrix& m, const FieldElement& lambda);

std::optional<Matrix> inverse(const Matrix& m);

/// Independent subset of `vectors` spanning the same space, in input order.
std::vector<Vec> independent_subset(const Field& f, std::span<const Vec> vectors);

}  // namespace modlie::la
