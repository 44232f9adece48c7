#include "postlie/matrix.hpp"

#include <sstream>

namespace postlie {

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t i) {
  auto v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero())
      return false;
  return true;
}

Field field_of(std::span<const Scalar> v) {
  if (v.empty())
    throw Error("cannot infer the field of an empty vector");
  auto f = v.front().field();
  for (const auto& s : v)
    if (s.field() != f)
      throw Error("vector entries mix fields");
  return f;
}

namespace {
void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()));
}
} // namespace

Vector operator+(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r;
  r.reserve(a.size());
  for (const auto& s : a)
    r.push_back(-s);
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r;
  r.reserve(v.size());
  for (const auto& s : v)
    r.push_back(c * s);
  return r;
}

void axpy(Vector& v, const Scalar& c, const Vector& w) {
  require_same_length(v, w);
  if (c.is_zero())
    return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero())
      v[i] += c * w[i];
}

std::string to_string(std::span<const Scalar> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error("matrix entry count does not match its shape");
  for (const auto& s : entries_)
    if (s.field() != f)
      throw Error("matrix entry over " + s.field().to_string() + " in a matrix over " +
                  f.to_string());
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    throw Error("matrix-vector dimension mismatch");
  auto out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero())
        out[r] += a * v[c];
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square())
    throw Error("trace of a non-square matrix");
  auto t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return postlie::is_zero(entries_); }

void Matrix::require_compatible(const Matrix& o) const {
  if (field_ != o.field_)
    throw Error("matrix field mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix shape mismatch");
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= o.entries_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_)
    throw Error("matrix field mismatch");
  if (a.cols_ != b.rows_)
    throw Error("matrix product shape mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero())
          m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& e : m.entries_)
    e *= c;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult rref(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pr = row;
    while (pr < a.rows() && a(pr, col).is_zero())
      ++pr;
    if (pr == a.rows())
      continue;
    if (pr != row)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a(pr, c), a(row, c));
    auto inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero())
        continue;
      auto factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero())
          a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a) {
  auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free])
      continue;
    auto v = zero_vector(a.field(), a.cols());
    v[free] = Scalar::one(a.field());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult rref_solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw Error("right-hand side length does not match the row count");
  for (const auto& s : b)
    if (s.field() != a.field())
      throw Error("right-hand side field mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [red, pivots] = rref(std::move(aug));
  SolveResult out;
  out.nullspace = nullspace(a);
  if (!pivots.empty() && pivots.back() == a.cols())
    return out;
  auto x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = red(i, a.cols());
  out.particular = std::move(x);
  return out;
}

Scalar determinant(Matrix a) {
  if (!a.is_square())
    throw Error("determinant of a non-square matrix");
  auto det = Scalar::one(a.field());
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && a(pr, col).is_zero())
      ++pr;
    if (pr == n)
      return Scalar::zero(a.field());
    if (pr != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a(pr, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    auto inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero())
        continue;
      auto factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square())
    throw Error("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = a(r, c);
    aug(r, n + r) = Scalar::one(a.field());
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = red(r, n + c);
  return inv;
}

bool is_nilpotent_matrix(const Matrix& m) {
  if (!m.is_square())
    throw Error("nilpotency test needs a square matrix");
  if (m.rows() == 0)
    return true;
  auto power = m;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    if (power.is_zero())
      return true;
    power = power * m;
  }
  return power.is_zero();
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(Field f, std::size_t rows, std::size_t cols, std::span<const Scalar> v) {
  return Matrix(f, rows, cols, std::vector<Scalar>(v.begin(), v.end()));
}

std::optional<Vector> coordinates(std::span<const Vector> basis, const Vector& v, Field f,
                                  std::size_t ambient) {
  if (basis.empty())
    return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
  auto a = Matrix::from_columns(f, ambient, basis);
  auto sol = rref_solve(a, v);
  return sol.particular;
}

} // namespace postlie
