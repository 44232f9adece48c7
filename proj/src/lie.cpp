#include "postlie/lie.hpp"

#include <algorithm>
#include <sstream>

namespace postlie {

LieAlgebra::LieAlgebra(Field f, std::size_t dim, std::string name)
    : field_(f), dim_(dim), name_(std::move(name)),
      constants_(dim * (dim > 0 ? dim - 1 : 0) / 2, zero_vector(f, dim)) {
  if (dim == 0)
    throw Error("Lie algebra dimension must be positive");
}

std::size_t LieAlgebra::index(std::size_t i, std::size_t j) const {
  // row-major over pairs i < j
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Vector value) {
  if (i >= dim_ || j >= dim_)
    throw Error("bracket index out of range");
  if (value.size() != dim_)
    throw Error("bracket coefficient vector has length " + std::to_string(value.size()) +
                ", expected " + std::to_string(dim_));
  for (const auto& s : value)
    if (s.field() != field_)
      throw Error("bracket coefficient field mismatch");
  if (i == j) {
    if (!is_zero(value))
      throw Error("[e_i, e_i] must vanish");
    return;
  }
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  constants_[index(i, j)] = std::move(value);
  validated_ = false;
}

const Vector& LieAlgebra::stored(std::size_t i, std::size_t j) const {
  if (!(i < j && j < dim_))
    throw Error("stored bracket needs i < j < dim");
  return constants_[index(i, j)];
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    throw Error("bracket index out of range");
  if (i == j)
    return zero_vector(field_, dim_);
  if (i < j)
    return constants_[index(i, j)];
  return -constants_[index(j, i)];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error("bracket argument length mismatch");
  auto out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero())
        continue;
      auto c = x[i] * y[j];
      if (i < j)
        axpy(out, c, constants_[index(i, j)]);
      else
        axpy(out, -c, constants_[index(j, i)]);
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(constants_.begin(), constants_.end(),
                     [](const Vector& v) { return is_zero(v); });
}

LieAlgebra LieAlgebra::validated() const {
  auto report = check_lie_axioms(*this);
  if (!report.passed()) {
    const auto& w = report.items().front().witness;
    throw Error("Jacobi identity fails" + (name_.empty() ? std::string() : " for " + name_) +
                " at (" + std::to_string(w[0] + 1) + "," + std::to_string(w[1] + 1) + "," +
                std::to_string(w[2] + 1) + ")");
  }
  auto copy = *this;
  copy.validated_ = true;
  return copy;
}

void LieAlgebra::require_validated(const char* operation) const {
  if (!validated_)
    throw Error(std::string(operation) + " requires a validated Lie algebra");
}

LieAlgebra LieAlgebra::scaled(const Scalar& c) const {
  auto copy = *this;
  for (auto& v : copy.constants_)
    v = c * v;
  return copy;
}

CheckReport check_lie_axioms(const LieAlgebra& l) {
  IdentityTally jacobi("jacobi");
  const auto n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto ek = unit_vector(l.field(), n, k);
        auto ei = unit_vector(l.field(), n, i);
        auto ej = unit_vector(l.field(), n, j);
        auto sum = l.bracket(l.bracket(i, j), ek) + l.bracket(l.bracket(j, k), ei) +
                   l.bracket(l.bracket(k, i), ej);
        jacobi.record({i, j, k}, sum, zero_vector(l.field(), n));
      }
  CheckReport r;
  r.add(std::move(jacobi).finish());
  return r;
}

Matrix adjoint_matrix(const LieAlgebra& l, const Vector& x) {
  if (x.size() != l.dim())
    throw Error("adjoint_matrix: vector length mismatch");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < l.dim(); ++j)
    cols.push_back(l.bracket(x, unit_vector(l.field(), l.dim(), j)));
  return Matrix::from_columns(l.field(), l.dim(), cols);
}

Matrix adjoint_matrix(const LieAlgebra& l, std::size_t i) {
  return adjoint_matrix(l, unit_vector(l.field(), l.dim(), i));
}

Subspace::Subspace(Field f, std::size_t ambient, std::span<const Vector> spanning)
    : field_(f), ambient_(ambient) {
  if (spanning.empty())
    return;
  auto red = rref(Matrix::from_rows(f, ambient, spanning));
  for (std::size_t r = 0; r < red.pivots.size(); ++r)
    basis_.push_back(red.reduced.row(r));
}

Subspace Subspace::whole(Field f, std::size_t ambient) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient; ++i)
    units.push_back(unit_vector(f, ambient, i));
  return Subspace(f, ambient, units);
}

bool Subspace::contains(const Vector& v) const {
  if (is_zero(v))
    return true;
  auto rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(field_, ambient_, rows)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

Subspace center(const LieAlgebra& l) {
  l.require_validated("center");
  const auto n = l.dim();
  // x is central iff [e_j, x] = 0 for all j
  Matrix stacked(l.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto ad = adjoint_matrix(l, j);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        stacked(j * n + r, c) = ad(r, c);
  }
  auto kernel = nullspace(stacked);
  return Subspace(l.field(), n, kernel);
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& left, const Subspace& right) {
  std::vector<Vector> products;
  for (const auto& a : left.basis())
    for (const auto& b : right.basis())
      products.push_back(l.bracket(a, b));
  return Subspace(l.field(), l.dim(), products);
}

std::vector<Subspace> series(const LieAlgebra& l, SeriesKind kind) {
  l.require_validated("series");
  auto whole = Subspace::whole(l.field(), l.dim());
  std::vector<Subspace> terms{whole};
  while (true) {
    const auto& last = terms.back();
    auto next = kind == SeriesKind::Derived ? bracket_span(l, last, last)
                                            : bracket_span(l, whole, last);
    if (next.dim() == last.dim())
      break;
    terms.push_back(std::move(next));
    if (terms.back().dim() == 0)
      break;
  }
  return terms;
}

bool is_solvable(const LieAlgebra& l) { return series(l, SeriesKind::Derived).back().dim() == 0; }

bool is_nilpotent(const LieAlgebra& l) {
  return series(l, SeriesKind::LowerCentral).back().dim() == 0;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l) {
  auto s = series(l, SeriesKind::LowerCentral);
  if (s.back().dim() != 0)
    return std::nullopt;
  return s.size() - 1;
}

bool is_perfect(const LieAlgebra& l) {
  l.require_validated("is_perfect");
  auto whole = Subspace::whole(l.field(), l.dim());
  return bracket_span(l, whole, whole).dim() == l.dim();
}

KillingForm killing_is_semisimple(const LieAlgebra& l) {
  if (l.field().is_finite())
    throw Error("the Killing criterion is only valid in characteristic 0; field is " +
                l.field().to_string());
  const auto n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i)
    ads.push_back(adjoint_matrix(l, i));
  Matrix form(l.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto t = (ads[i] * ads[j]).trace();
      form(i, j) = t;
      form(j, i) = t;
    }
  bool nondeg = !determinant(form).is_zero();
  return {std::move(form), nondeg};
}

bool is_derivation(const LieAlgebra& l, const Matrix& d) {
  const auto n = l.dim();
  if (d.rows() != n || d.cols() != n || d.field() != l.field())
    return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto lhs = d.apply(l.bracket(i, j));
      auto rhs = l.bracket(d.column(i), unit_vector(l.field(), n, j)) +
                 l.bracket(unit_vector(l.field(), n, i), d.column(j));
      if (lhs != rhs)
        return false;
    }
  return true;
}

DerivationAlgebra::DerivationAlgebra(LieAlgebra base, std::vector<Matrix> basis)
    : base_(std::move(base)), basis_(std::move(basis)) {
  const auto n = base_.dim();
  for (const auto& d : basis_)
    if (!is_derivation(base_, d))
      throw Error("matrix is not a derivation of the base algebra");
  if (!basis_.empty()) {
    std::vector<Vector> flat;
    for (const auto& d : basis_)
      flat.push_back(flatten(d));
    if (rank(Matrix::from_rows(base_.field(), n * n, flat)) != basis_.size())
      throw Error("derivation matrices are linearly dependent");
  }
}

std::optional<Vector> DerivationAlgebra::coordinates(const Matrix& m) const {
  const auto n = base_.dim();
  std::vector<Vector> flat;
  for (const auto& d : basis_)
    flat.push_back(flatten(d));
  return postlie::coordinates(flat, flatten(m), base_.field(), n * n);
}

DerivationAlgebra derivation_algebra(const LieAlgebra& l) {
  l.require_validated("derivation_algebra");
  const auto n = l.dim();
  const auto f = l.field();
  // unknown D(a, b) sits at column a * n + b; D e_b = sum_a D(a, b) e_a
  std::size_t pairs = n * (n - 1) / 2;
  Matrix system(f, std::max<std::size_t>(1, pairs * n), n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& cij = l.stored(i, j);
      for (std::size_t k = 0; k < n; ++k, ++row) {
        // D[e_i, e_j]
        for (std::size_t m = 0; m < n; ++m)
          system(row, k * n + m) += cij[m];
        // - [D e_i, e_j] - [e_i, D e_j]
        for (std::size_t a = 0; a < n; ++a) {
          system(row, a * n + i) -= l.bracket(a, j)[k];
          system(row, a * n + j) -= l.bracket(i, a)[k];
        }
      }
    }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(system))
    basis.push_back(unflatten(f, n, n, v));
  return DerivationAlgebra(l, std::move(basis));
}

bool is_complete_lie(const LieAlgebra& l) {
  if (center(l).dim() != 0)
    return false;
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < l.dim(); ++i)
    ads.push_back(flatten(adjoint_matrix(l, i)));
  auto inner = rank(Matrix::from_rows(l.field(), l.dim() * l.dim(), ads));
  return derivation_algebra(l).dim() == inner;
}

LieAlgebra semidirect_with_derivations(const LieAlgebra& l, const DerivationAlgebra& d) {
  const auto n = l.dim();
  const auto m = d.dim();
  const auto f = l.field();
  const auto total = n + m;
  LieAlgebra out(f, total, l.name().empty() ? std::string() : l.name() + " x| Der");
  auto embed = [&](const Vector& x, std::size_t offset) {
    auto v = zero_vector(f, total);
    for (std::size_t i = 0; i < x.size(); ++i)
      v[offset + i] = x[i];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.set_bracket(i, j, embed(l.stored(i, j), 0));
  // [(e_i, 0), (0, D_b)] = (-D_b e_i, 0)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b)
      out.set_bracket(i, n + b, embed(-d.basis()[b].column(i), 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto c = d.coordinates(commutator(d.basis()[a], d.basis()[b]));
      if (!c)
        throw Error("derivation span is not closed under commutators");
      out.set_bracket(n + a, n + b, embed(*c, n));
    }
  return out.validated();
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field())
    throw Error("direct_sum: field mismatch");
  const auto na = a.dim(), nb = b.dim();
  LieAlgebra out(a.field(), na + nb,
                 a.name().empty() || b.name().empty() ? std::string()
                                                      : a.name() + "+" + b.name());
  auto place = [&](const Vector& x, std::size_t offset) {
    auto v = zero_vector(a.field(), na + nb);
    for (std::size_t i = 0; i < x.size(); ++i)
      v[offset + i] = x[i];
    return v;
  };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      out.set_bracket(i, j, place(a.stored(i, j), 0));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      out.set_bracket(na + i, na + j, place(b.stored(i, j), na));
  return out.validated();
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0)
    return std::nullopt;
  const auto& num = q.get_num();
  const auto& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

void add_ratio(std::vector<Scalar>& set, const Scalar& s) {
  if (std::find(set.begin(), set.end(), s) == set.end())
    set.push_back(s);
  std::sort(set.begin(), set.end());
}

} // namespace

LowDimClass classify_low_dim(const LieAlgebra& l) {
  l.require_validated("classify_low_dim");
  if (l.dim() > 3)
    throw Error("classify_low_dim supports dimension at most 3");
  if (l.field().is_finite())
    throw Error("classify_low_dim works over Q only");
  const auto f = l.field();
  LowDimClass c;
  c.dim = l.dim();
  auto whole = Subspace::whole(f, l.dim());
  auto derived = bracket_span(l, whole, whole);
  c.derived_dim = derived.dim();
  c.center_dim = center(l).dim();
  c.killing_rank = rank(killing_is_semisimple(l).form);
  c.solvable = is_solvable(l);
  c.nilpotency_class = nilpotency_class(l);

  if (c.derived_dim == 0) {
    c.name = "abelian";
  } else if (l.dim() == 2) {
    c.name = "r2";
  } else if (c.derived_dim == 3) {
    // perfect of dimension 3 in characteristic 0: simple
    c.name = "sl2";
  } else if (c.derived_dim == 1) {
    if (c.nilpotency_class) {
      c.name = "n3";
    } else {
      c.name = "r3_lambda";
      c.ratio_set = {Scalar::zero(f)};
    }
  } else {
    // dim [L,L] = 2, abelian ideal; ad(x) for x outside it acts invertibly
    std::size_t outside = 0;
    while (derived.contains(unit_vector(f, 3, outside)))
      ++outside;
    auto ad = adjoint_matrix(l, outside);
    const auto& b = derived.basis();
    Matrix restricted(f, 2, 2);
    for (std::size_t col = 0; col < 2; ++col) {
      auto image = ad.apply(b[col]);
      auto coords = coordinates(b, image, f, 3);
      if (!coords)
        throw Error("derived algebra is not ad-invariant");
      restricted(0, col) = (*coords)[0];
      restricted(1, col) = (*coords)[1];
    }
    auto tr = restricted.trace();
    auto det = determinant(restricted);
    if (tr.is_zero()) {
      c.name = "r3_lambda";
      c.ratio_set = {Scalar(f, -1)};
      if (!rational_sqrt(-det.rational()))
        c.char_poly = {det, -tr};
    } else {
      mpq_class disc = tr.rational() * tr.rational() - 4 * det.rational();
      if (auto root = rational_sqrt(disc)) {
        mpq_class mu1 = (tr.rational() + *root) / 2;
        mpq_class mu2 = (tr.rational() - *root) / 2;
        bool scalar_map = restricted(0, 1).is_zero() && restricted(1, 0).is_zero() &&
                          restricted(0, 0) == restricted(1, 1);
        if (disc == 0 && !scalar_map) {
          c.name = "r3";
        } else {
          c.name = "r3_lambda";
          add_ratio(c.ratio_set, Scalar(mpq_class(mu2 / mu1)));
          add_ratio(c.ratio_set, Scalar(mpq_class(mu1 / mu2)));
        }
      } else {
        c.char_poly = {det, -tr};
      }
    }
  }
  return c;
}

std::string LowDimClass::to_string() const {
  std::ostringstream os;
  os << (name.empty() ? "unnamed" : name) << " (dim " << dim << ", dim[L,L] " << derived_dim
     << ", dim Z " << center_dim << ", Killing rank " << killing_rank
     << (solvable ? ", solvable" : ", not solvable");
  if (nilpotency_class)
    os << ", nilpotent class " << *nilpotency_class;
  if (!ratio_set.empty())
    os << ", ratios " << postlie::to_string(ratio_set);
  if (!char_poly.empty())
    os << ", char poly t^2 + (" << char_poly[1] << ")t + (" << char_poly[0] << ")";
  os << ")";
  return os.str();
}

} // namespace postlie
