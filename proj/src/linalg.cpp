#include "modlie/linalg.hpp"

#include <string>

namespace modlie::la {

namespace {

void require_dims(bool ok, const char* what) {
  if (!ok) throw Error(std::string("dimension mismatch in ") + what);
}

}  // namespace

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero(std::span<const FieldElement> v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, std::span<const Vec> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_dims(columns[c].size() == rows, "Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vec Matrix::apply(std::span<const FieldElement> v) const {
  require_dims(v.size() == cols_, "Matrix::apply");
  const Field& f = *field_;
  std::vector<std::uint32_t> acc(rows_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    const std::uint32_t x = v[c].code();
    if (x == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::uint32_t a = data_[r * cols_ + c].code();
      if (a != 0) acc[r] = f.add(acc[r], f.mul(a, x));
    }
  }
  Vec out;
  out.reserve(rows_);
  for (auto a : acc) out.emplace_back(f, a);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_dims(a.cols_ == b.rows_ && a.field_ == b.field_, "matrix product");
  const Field& f = *a.field_;
  Matrix out(f, a.rows_, b.cols_);
  std::vector<std::uint32_t> row(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(row.begin(), row.end(), 0u);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint32_t x = a(i, k).code();
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const std::uint32_t y = b(k, j).code();
        if (y != 0) row[j] = f.add(row[j], f.mul(x, y));
      }
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = FieldElement(f, row[j]);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
  Matrix out = a;
  for (auto& e : out.data_) e *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(std::uint64_t e) const {
  require_dims(rows_ == cols_, "Matrix::pow");
  Matrix result = identity(*field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const { return la::is_zero(data_); }

std::vector<std::size_t> row_reduce(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const std::uint32_t inv = f.inv(m(row, col).code());
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = FieldElement(f, f.mul(m(row, c).code(), inv));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const std::uint32_t factor = m(r, col).code();
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        const std::uint32_t t = m(row, c).code();
        if (t != 0) m(r, c) = FieldElement(f, f.sub(m(r, c).code(), f.mul(factor, t)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

std::size_t rank(const Field& f, std::span<const Vec> vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_columns(f, vectors.front().size(), vectors));
}

std::vector<Vec> kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, std::span<const FieldElement> b) {
  require_dims(b.size() == m.rows(), "solve");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

bool in_span(const Field& f, std::span<const Vec> vectors, std::span<const FieldElement> v) {
  for (const auto& w : vectors) require_dims(w.size() == v.size(), "in_span");
  if (vectors.empty()) return is_zero(v);
  return solve(Matrix::from_columns(f, v.size(), vectors), v).has_value();
}

std::vector<Vec> eigenspace(const Matrix& m, const FieldElement& lambda) {
  require_dims(m.rows() == m.cols(), "eigenspace");
  return kernel(m - lambda * Matrix::identity(m.field(), m.rows()));
}

std::optional<Matrix> inverse(const Matrix& m) {
  require_dims(m.rows() == m.cols(), "inverse");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = f.one();
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Vec> independent_subset(const Field& f, std::span<const Vec> vectors) {
  std::vector<Vec> kept;
  std::size_t current = 0;
  for (const auto& v : vectors) {
    kept.push_back(v);
    const std::size_t r = rank(f, kept);
    if (r == current) {
      kept.pop_back();
    } else {
      current = r;
    }
  }
  return kept;
}

}  // namespace modlie::la
