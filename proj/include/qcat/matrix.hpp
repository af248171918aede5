#pragma once

#include "qcat/scalar.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace qcat {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;
  std::vector<Vector> row_list() const;

  void append_row(std::span<const Scalar> values);

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, const Vector& v);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Reduced row echelon form and the pivot column of each nonzero row.
/// `column_order`, when given, is the sequence in which columns are swept;
/// pivots then refer to original column indices.
struct Echelon {
  Matrix reduced;  // only the nonzero rows
  std::vector<std::size_t> pivots;
};
Echelon rref(const Matrix& m, std::span<const std::size_t> column_order = {});

/// Rank by plain rational pivoting.
std::size_t rank(const Matrix& m);
/// Rank by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing each row's denominators.
std::size_t rank_bareiss(const Matrix& m);

/// Basis of the right null space, as column vectors.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Rows of the reduced echelon form: a canonical basis of the row space.
Matrix row_basis(const Matrix& m);

bool same_row_space(const Matrix& a, const Matrix& b);
/// Row space of `inner` contained in the row space of `outer`.
bool row_space_contains(const Matrix& outer, const Matrix& inner);

Matrix inverse(const Matrix& m);

/// Basis (as rows) of {g : <g, f> = 0 for every row f of `span`}, where the
/// pairing of basis vector i with dual basis vector i is `pairing_signs[i]`
/// (all +1 when empty).  `dim` is the ambient dimension, needed when `span`
/// has no rows.
Matrix annihilator(const Matrix& span, std::size_t dim, std::span<const int> pairing_signs = {});

/// Projectors onto each subspace (given by spanning rows) along the sum of
/// the others.  Throws Error(NotComplementary) unless the subspaces form a
/// direct sum decomposition of the ambient space.
std::vector<Matrix> projectors(const std::vector<Matrix>& components, std::size_t dim);

}  // namespace qcat
