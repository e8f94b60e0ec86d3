#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "repgeo/field.hpp"

namespace repgeo {

/// Row vector over GF(p). Coordinates are always reduced.
class Vector {
 public:
  Vector(PrimeField field, std::vector<Scalar> coords);

  static Vector zero(PrimeField field, std::size_t dim);
  static Vector unit(PrimeField field, std::size_t dim, std::size_t i);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  Scalar operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const noexcept;

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector scaled(Scalar lambda) const;

  bool operator==(const Vector&) const = default;

 private:
  PrimeField field_;
  std::vector<Scalar> coords_;
};

/// Number of vectors in GF(p)^dim, or 0 if it does not fit in 64 bits.
std::uint64_t vector_space_size(const PrimeField& field, std::size_t dim) noexcept;

// Vectors are enumerated with the first coordinate varying fastest:
// index = sum coords[i] * p^i. So (1,0) precedes (0,1).
std::uint64_t vector_index(const Vector& v);
Vector vector_from_index(const PrimeField& field, std::size_t dim, std::uint64_t index);

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(PrimeField field, std::size_t n);
  /// Entries are reduced mod p; every row must have the same length.
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Scalar at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar value) { entries_[r * cols_ + c] = value; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix transposed() const;

  bool is_identity() const noexcept;
  bool is_zero() const noexcept;
  std::size_t rank() const;
  bool is_invertible() const;

  /// Basis of the right null space {c : M c = 0}, in reduced echelon form.
  std::vector<Vector> nullspace() const;
  /// Basis of the left kernel {v : v M = 0}.
  std::vector<Vector> left_kernel() const { return transposed().nullspace(); }

  bool operator==(const Matrix&) const = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// v·M for a row vector v.
Vector operator*(const Vector& v, const Matrix& m);

/// Matrix with the given vectors as rows.
Matrix stack_rows(const PrimeField& field, std::size_t cols, std::span<const Vector> rows);

std::string to_string(const Vector& v);
std::string to_string(const Matrix& m);

}  // namespace repgeo
