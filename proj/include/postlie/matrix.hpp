#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "postlie/field.hpp"

namespace postlie {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// Field of the entries; throws on mixed fields or an empty vector.
Field field_of(std::span<const Scalar> v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& c, const Vector& v);
/// v += c * w
void axpy(Vector& v, const Scalar& c, const Vector& w);

std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return {f, rows, cols}; }
  static Matrix identity(Field f, std::size_t n);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(Field f, std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(Field f, std::size_t cols, std::span<const Vector> rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return entries_; }

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  void require_compatible(const Matrix& o) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// A*B - B*A
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

/// Reduced row echelon form. Pivots are the first nonzero column of each row
/// and are normalized to 1.
RrefResult rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Basis of ker(A): one vector per free column, with a 1 in that column.
std::vector<Vector> nullspace(const Matrix& a);

struct SolveResult {
  /// Empty when A x = b is inconsistent. Free variables are set to zero.
  std::optional<Vector> particular;
  std::vector<Vector> nullspace;
  bool solvable() const { return particular.has_value(); }
};

SolveResult rref_solve(const Matrix& a, const Vector& b);

Scalar determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);

/// M^n == 0 for an n x n matrix (enough by Cayley-Hamilton).
bool is_nilpotent_matrix(const Matrix& m);

/// Flattened entries, row-major; used to treat matrices as vectors.
Vector flatten(const Matrix& m);
Matrix unflatten(Field f, std::size_t rows, std::size_t cols, std::span<const Scalar> v);

/// Coordinates of v in the span of `basis`, if v lies in it.
std::optional<Vector> coordinates(std::span<const Vector> basis, const Vector& v, Field f,
                                  std::size_t ambient);

} // namespace postlie
