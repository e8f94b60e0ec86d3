#include "repgeo/linalg.hpp"

#include <sstream>

#include "repgeo/errors.hpp"
#include "repgeo/limits.hpp"

namespace repgeo {

Vector::Vector(PrimeField field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  for (auto& c : coords_) c %= field_.p();
}

Vector Vector::zero(PrimeField field, std::size_t dim) {
  return Vector(field, std::vector<Scalar>(dim, 0));
}

Vector Vector::unit(PrimeField field, std::size_t dim, std::size_t i) {
  std::vector<Scalar> c(dim, 0);
  c.at(i) = 1;
  return Vector(field, std::move(c));
}

bool Vector::is_zero() const noexcept {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Vector Vector::operator+(const Vector& other) const {
  if (other.size() != size() || !(other.field_ == field_)) {
    throw DimensionMismatch("vector addition of incompatible vectors");
  }
  Vector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] = field_.add(coords_[i], other.coords_[i]);
  return r;
}

Vector Vector::operator-(const Vector& other) const {
  if (other.size() != size() || !(other.field_ == field_)) {
    throw DimensionMismatch("vector subtraction of incompatible vectors");
  }
  Vector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] = field_.sub(coords_[i], other.coords_[i]);
  return r;
}

Vector Vector::scaled(Scalar lambda) const {
  Vector r = *this;
  for (auto& c : r.coords_) c = field_.mul(c, lambda % field_.p());
  return r;
}

std::uint64_t vector_space_size(const PrimeField& field, std::size_t dim) noexcept {
  return checked_pow(field.p(), dim);
}

std::uint64_t vector_index(const Vector& v) {
  std::uint64_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * v.field().p() + v[i];
  return index;
}

Vector vector_from_index(const PrimeField& field, std::size_t dim, std::uint64_t index) {
  std::vector<Scalar> coords(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    coords[i] = static_cast<Scalar>(index % field.p());
    index /= field.p();
  }
  return Vector(field, std::move(coords));
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionMismatch("matrix entry count mismatch");
  for (auto& e : entries_) e %= field_.p();
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, field.reduce(rows[r][c]));
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw DimensionMismatch("matrix product of incompatible shapes");
  }
  Matrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += std::uint64_t{at(i, k)} * rhs.at(k, j);
      out.set(i, j, static_cast<Scalar>(acc % p));
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const noexcept {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        Scalar tmp = m.at(row, c);
        m.set(row, c, m.at(pivot, c));
        m.set(pivot, c, tmp);
      }
    }
    Scalar scale = f.inv(m.at(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(row, c, f.mul(m.at(row, c), scale));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Scalar factor = m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(row, c))));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return rref(copy).size();
}

bool Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

std::vector<Vector> Matrix::nullspace() const {
  Matrix r = *this;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(r.at(i, free));
    basis.emplace_back(field_, std::move(v));
  }
  return basis;
}

Vector operator*(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows() || !(v.field() == m.field())) {
    throw DimensionMismatch("vector-matrix product of incompatible shapes");
  }
  const std::uint64_t p = m.field().p();
  std::vector<Scalar> out(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += std::uint64_t{v[i]} * m.at(i, j);
    out[j] = static_cast<Scalar>(acc % p);
  }
  return Vector(m.field(), std::move(out));
}

Matrix stack_rows(const PrimeField& field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("stacked vectors differ in length");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::string to_string(const Vector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string to_string(const Matrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m.at(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace repgeo
