#include "postlie/postlie.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace postlie {

BilinearProduct::BilinearProduct(Field f, std::size_t dim)
    : field_(f), dim_(dim), table_(dim * dim, zero_vector(f, dim)) {
  if (dim == 0)
    throw Error("product dimension must be positive");
}

void BilinearProduct::set(std::size_t i, std::size_t j, Vector value) {
  if (i >= dim_ || j >= dim_)
    throw Error("product index out of range");
  if (value.size() != dim_)
    throw Error("product coefficient vector has the wrong length");
  for (const auto& s : value)
    if (s.field() != field_)
      throw Error("product coefficient field mismatch");
  table_[i * dim_ + j] = std::move(value);
}

Vector BilinearProduct::apply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error("product argument length mismatch");
  auto out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!y[j].is_zero())
        axpy(out, x[i] * y[j], table_[i * dim_ + j]);
  }
  return out;
}

Vector BilinearProduct::left(std::size_t i, const Vector& y) const {
  return apply(unit_vector(field_, dim_, i), y);
}

Vector BilinearProduct::right(const Vector& x, std::size_t j) const {
  return apply(x, unit_vector(field_, dim_, j));
}

bool BilinearProduct::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return postlie::is_zero(v); });
}

BilinearProduct BilinearProduct::scaled(const Scalar& c) const {
  auto copy = *this;
  for (auto& v : copy.table_)
    v = c * v;
  return copy;
}

PostLiePair::PostLiePair(LieAlgebra g, LieAlgebra n, BilinearProduct product)
    : g_(std::move(g)), n_(std::move(n)), product_(std::move(product)) {
  if (g_.dim() != product_.dim() || n_.dim() != product_.dim())
    throw Error("pair dimension mismatch");
  if (g_.field() != product_.field() || n_.field() != product_.field())
    throw Error("pair field mismatch");
}

PostLiePair PostLiePair::validated() const {
  auto copy = *this;
  if (!copy.g_.is_validated())
    copy.g_ = copy.g_.validated();
  if (!copy.n_.is_validated())
    copy.n_ = copy.n_.validated();
  auto report = check_structure(copy);
  if (!report.passed())
    throw Error("not a post-Lie algebra structure:\n" + report.to_text());
  copy.validated_ = true;
  return copy;
}

void PostLiePair::require_validated(const char* operation) const {
  if (!validated_)
    throw Error(std::string(operation) + " requires a validated post-Lie pair");
}

namespace {

/// Basis-level evaluation helpers shared by the identity checks.
struct Ops {
  const LieAlgebra* g;
  const LieAlgebra* n;
  const BilinearProduct& p;
  Field f;
  std::size_t dim;

  Vector e(std::size_t i) const { return unit_vector(f, dim, i); }
  Vector m(const Vector& x, const Vector& y) const { return p.apply(x, y); }
  Vector gb(const Vector& x, const Vector& y) const { return g->bracket(x, y); }
  Vector nb(const Vector& x, const Vector& y) const { return n->bracket(x, y); }
};

void require_same_shape(const LieAlgebra& a, const BilinearProduct& p) {
  if (a.dim() != p.dim())
    throw Error("dimension mismatch between algebra and product");
  if (a.field() != p.field())
    throw Error("field mismatch between algebra and product");
}

} // namespace

CheckReport check_structure(const LieAlgebra& g, const LieAlgebra& n,
                            const BilinearProduct& product) {
  require_same_shape(g, product);
  require_same_shape(n, product);
  Ops o{&g, &n, product, product.field(), product.dim()};
  const auto d = o.dim;
  IdentityTally post5("post5"), post6("post6"), post7("post7");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto x = o.e(i), y = o.e(j);
      post5.record({i, j}, o.m(x, y) - o.m(y, x), g.bracket(i, j) - n.bracket(i, j));
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto x = o.e(i), y = o.e(j), z = o.e(k);
        post6.record({i, j, k}, o.m(g.bracket(i, j), z),
                     o.m(x, o.m(y, z)) - o.m(y, o.m(x, z)));
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        auto x = o.e(i), y = o.e(j), z = o.e(k);
        post7.record({i, j, k}, o.m(x, n.bracket(j, k)),
                     o.nb(o.m(x, y), z) + o.nb(y, o.m(x, z)));
      }
  CheckReport r;
  r.add(std::move(post5).finish());
  r.add(std::move(post6).finish());
  r.add(std::move(post7).finish());
  return r;
}

CheckReport check_structure(const PostLiePair& pair) {
  return check_structure(pair.g(), pair.n(), pair.product());
}

CheckReport check_algebra(const BilinearProduct& product, const LieAlgebra& n) {
  require_same_shape(n, product);
  Ops o{nullptr, &n, product, product.field(), product.dim()};
  const auto d = o.dim;
  auto report = check_lie_axioms(n);
  IdentityTally post1("post1"), post2("post2");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto x = o.e(i), y = o.e(j), z = o.e(k);
        post1.record({i, j, k}, o.m(n.bracket(i, j), z),
                     o.m(o.m(y, x), z) - o.m(y, o.m(x, z)) - o.m(o.m(x, y), z) +
                         o.m(x, o.m(y, z)));
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        auto x = o.e(i), y = o.e(j), z = o.e(k);
        post2.record({i, j, k}, o.m(x, n.bracket(j, k)),
                     o.nb(o.m(x, y), z) + o.nb(y, o.m(x, z)));
      }
  report.add(std::move(post1).finish());
  report.add(std::move(post2).finish());
  return report;
}

LieAlgebra associated_bracket(const BilinearProduct& product, const LieAlgebra& n) {
  auto report = check_algebra(product, n);
  if (!report.passed())
    throw Error("associated_bracket: input is not a post-Lie algebra:\n" + report.to_text());
  LieAlgebra g(product.field(), product.dim());
  for (std::size_t i = 0; i < product.dim(); ++i)
    for (std::size_t j = i + 1; j < product.dim(); ++j)
      g.set_bracket(i, j, product(i, j) - product(j, i) + n.bracket(i, j));
  return g.validated();
}

CheckReport derived_identity_audit(const LieAlgebra& g, const LieAlgebra& n,
                                   const BilinearProduct& product) {
  require_same_shape(g, product);
  require_same_shape(n, product);
  Ops o{&g, &n, product, product.field(), product.dim()};
  const auto d = o.dim;
  IdentityTally post4("post4"), post8("post8"), post9("post9"), post10("post10"),
      post11("post11"), post12("post12");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const std::vector<std::size_t> t{i, j, k};
        auto x = o.e(i), y = o.e(j), z = o.e(k);
        auto xy = o.m(x, y), yx = o.m(y, x), xz = o.m(x, z), zx = o.m(z, x), yz = o.m(y, z),
             zy = o.m(z, y);
        auto gxy = o.gb(x, y), gyz = o.gb(y, z), gzx = o.gb(z, x);
        auto nxy = o.nb(x, y), nyz = o.nb(y, z), nzx = o.nb(z, x);

        post4.record(t, o.m(gxy, z), o.m(x, yz) - o.m(y, xz));
        post8.record(t, o.m(nxy, z), o.m(yx, z) - o.m(y, xz) - o.m(xy, z) + o.m(x, yz));
        post9.record(t, o.m(z, gxy), o.m(z, xy) - o.m(z, yx) + o.m(z, nxy));
        post10.record(t, o.gb(xy, z) + o.gb(y, xz) - o.m(x, gyz),
                      o.m(xy, z) - o.m(xz, y) + o.m(y, xz) - o.m(x, yz) + o.m(x, zy) -
                          o.m(z, xy));
        auto cyclic_n_of_g = o.nb(gxy, z) + o.nb(gyz, x) + o.nb(gzx, y);
        post11.record(t, o.m(x, nyz) + o.m(y, nzx) + o.m(z, nxy), cyclic_n_of_g);
        post12.record(t, o.m(nxy, z) + o.m(nyz, x) + o.m(nzx, y),
                      cyclic_n_of_g + o.gb(nxy, z) + o.gb(nyz, x) + o.gb(nzx, y));
      }
  CheckReport r;
  r.add(std::move(post4).finish());
  r.add(std::move(post8).finish());
  r.add(std::move(post9).finish());
  r.add(std::move(post10).finish());
  r.add(std::move(post11).finish());
  r.add(std::move(post12).finish());
  return r;
}

CheckReport derived_identity_audit(const PostLiePair& pair) {
  pair.require_validated("derived_identity_audit");
  return derived_identity_audit(pair.g(), pair.n(), pair.product());
}

Matrix left_mult_matrix(const PostLiePair& pair, const Vector& x) {
  if (x.size() != pair.dim())
    throw Error("left_mult_matrix: vector length mismatch");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < pair.dim(); ++j)
    cols.push_back(pair.product().right(x, j));
  return Matrix::from_columns(pair.field(), pair.dim(), cols);
}

Matrix left_mult_matrix(const PostLiePair& pair, std::size_t i) {
  return left_mult_matrix(pair, unit_vector(pair.field(), pair.dim(), i));
}

bool has_nilpotent_flag(std::span<const Matrix> operators) {
  if (operators.empty())
    return true;
  const auto f = operators.front().field();
  const auto n = operators.front().rows();
  std::vector<Vector> flag; // basis of the current V_k
  while (flag.size() < n) {
    // rows of `annihilator` cut out V_k
    std::vector<Vector> annihilator;
    if (flag.empty())
      for (std::size_t i = 0; i < n; ++i)
        annihilator.push_back(unit_vector(f, n, i));
    else
      annihilator = nullspace(Matrix::from_rows(f, n, flag));
    std::vector<Vector> conditions;
    for (const auto& a : operators)
      for (const auto& q : annihilator) {
        auto row = zero_vector(f, n);
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r)
            if (!q[r].is_zero() && !a(r, c).is_zero())
              row[c] += q[r] * a(r, c);
        conditions.push_back(std::move(row));
      }
    auto next = nullspace(Matrix::from_rows(f, n, conditions));
    if (next.size() == flag.size())
      return false;
    flag = std::move(next);
  }
  return true;
}

bool is_complete_structure(const PostLiePair& pair) {
  pair.require_validated("is_complete_structure");
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < pair.dim(); ++i)
    ops.push_back(left_mult_matrix(pair, i));
  return has_nilpotent_flag(ops);
}

Matrix right_mult_matrix(const PostLiePair& pair, std::size_t j) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < pair.dim(); ++i)
    cols.push_back(pair.product()(i, j));
  return Matrix::from_columns(pair.field(), pair.dim(), cols);
}

bool is_right_complete_structure(const PostLiePair& pair) {
  pair.require_validated("is_right_complete_structure");
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < pair.dim(); ++j)
    ops.push_back(right_mult_matrix(pair, j));
  return has_nilpotent_flag(ops);
}

std::string to_string(Tag t) {
  switch (t) {
  case Tag::Zero: return "ZERO";
  case Tag::PreLie: return "PRE_LIE";
  case Tag::LR: return "LR";
  case Tag::Commutative: return "COMMUTATIVE";
  case Tag::Lambda: return "LAMBDA";
  case Tag::LsaIdentity: return "LSA_IDENTITY";
  case Tag::LrIdentity: return "LR_IDENTITY";
  case Tag::Novikov: return "NOVIKOV";
  case Tag::NewIdentity: return "NEW_IDENTITY";
  }
  return "?";
}

std::string SpecialCases::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto t : tags) {
    os << (first ? "" : " ") << postlie::to_string(t);
    if (t == Tag::Lambda && lambda)
      os << '(' << *lambda << ')';
    first = false;
  }
  return os.str();
}

namespace {

template <class Pred> bool all_triples(std::size_t d, Pred pred) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!pred(i, j, k))
          return false;
  return true;
}

} // namespace

bool satisfies_lsa_identity(const BilinearProduct& p) {
  const auto f = p.field();
  const auto d = p.dim();
  return all_triples(d, [&](std::size_t i, std::size_t j, std::size_t k) {
    auto x = unit_vector(f, d, i), y = unit_vector(f, d, j), z = unit_vector(f, d, k);
    auto assoc_xy = p.apply(p.apply(x, y), z) - p.apply(x, p.apply(y, z));
    auto assoc_yx = p.apply(p.apply(y, x), z) - p.apply(y, p.apply(x, z));
    return assoc_xy == assoc_yx;
  });
}

bool satisfies_lr_identities(const BilinearProduct& p) {
  const auto f = p.field();
  const auto d = p.dim();
  return all_triples(d, [&](std::size_t i, std::size_t j, std::size_t k) {
    auto x = unit_vector(f, d, i), y = unit_vector(f, d, j), z = unit_vector(f, d, k);
    return p.apply(x, p.apply(y, z)) == p.apply(y, p.apply(x, z)) &&
           p.apply(p.apply(x, y), z) == p.apply(p.apply(x, z), y);
  });
}

bool satisfies_novikov_identities(const BilinearProduct& p) {
  const auto f = p.field();
  const auto d = p.dim();
  return satisfies_lsa_identity(p) &&
         all_triples(d, [&](std::size_t i, std::size_t j, std::size_t k) {
           auto x = unit_vector(f, d, i), y = unit_vector(f, d, j), z = unit_vector(f, d, k);
           return p.apply(p.apply(x, y), z) == p.apply(p.apply(x, z), y);
         });
}

bool satisfies_new_identity(const BilinearProduct& p) {
  const auto f = p.field();
  const auto d = p.dim();
  return all_triples(d, [&](std::size_t i, std::size_t j, std::size_t k) {
    auto x = unit_vector(f, d, i), y = unit_vector(f, d, j), z = unit_vector(f, d, k);
    auto lhs = p.apply(x, p.apply(y, z)) + p.apply(y, p.apply(x, z)) + p.apply(z, p.apply(x, y));
    auto rhs = p.apply(p.apply(y, z), x) + p.apply(p.apply(x, z), y) + p.apply(p.apply(x, y), z);
    return lhs == rhs;
  });
}

SpecialCases special_case_detect(const PostLiePair& pair) {
  pair.require_validated("special_case_detect");
  const auto& p = pair.product();
  const auto& g = pair.g();
  const auto d = pair.dim();
  SpecialCases out;
  if (p.is_zero())
    out.tags.insert(Tag::Zero);
  if (pair.n().is_abelian())
    out.tags.insert(Tag::PreLie);
  if (g.is_abelian())
    out.tags.insert(Tag::LR);

  bool commutative = true;
  for (std::size_t i = 0; i < d && commutative; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (p(i, j) != p(j, i)) {
        commutative = false;
        break;
      }
  if (commutative)
    out.tags.insert(Tag::Commutative);

  if (!g.is_abelian()) {
    std::optional<Scalar> lambda;
    for (std::size_t i = 0; i < d && !lambda; ++i)
      for (std::size_t j = i + 1; j < d && !lambda; ++j) {
        const auto& b = g.stored(i, j);
        for (std::size_t k = 0; k < d; ++k)
          if (!b[k].is_zero()) {
            lambda = p(i, j)[k] / b[k];
            break;
          }
      }
    bool matches = true;
    for (std::size_t i = 0; i < d && matches; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (p(i, j) != *lambda * g.bracket(i, j)) {
          matches = false;
          break;
        }
    if (matches) {
      out.tags.insert(Tag::Lambda);
      out.lambda = lambda;
    }
  }

  if (satisfies_lsa_identity(p))
    out.tags.insert(Tag::LsaIdentity);
  if (satisfies_lr_identities(p))
    out.tags.insert(Tag::LrIdentity);
  if (satisfies_novikov_identities(p))
    out.tags.insert(Tag::Novikov);
  if (satisfies_new_identity(p))
    out.tags.insert(Tag::NewIdentity);
  return out;
}

EndomorphismProduct product_from_endomorphism(const LieAlgebra& n, const Matrix& phi) {
  if (center(n).dim() != 0)
    throw Error("product_from_endomorphism needs an algebra with trivial center");
  const auto d = n.dim();
  const auto f = n.field();
  if (phi.rows() != d || phi.cols() != d || phi.field() != f)
    throw Error("endomorphism shape or field mismatch");
  BilinearProduct product(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      product.set(i, j, n.bracket(phi.column(i), unit_vector(f, d, j)));
  LieAlgebra g(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      g.set_bracket(i, j, product(i, j) - product(j, i) + n.bracket(i, j));

  IdentityTally sum("phi-sum"), hom("phi-hom");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto x = unit_vector(f, d, i), y = unit_vector(f, d, j);
      sum.record({i, j}, n.bracket(phi.column(i), y) + n.bracket(x, phi.column(j)),
                 g.bracket(i, j) - n.bracket(i, j));
      hom.record({i, j}, phi.apply(g.bracket(i, j)),
                 n.bracket(phi.column(i), phi.column(j)));
    }
  CheckReport report;
  report.add(std::move(sum).finish());
  report.add(std::move(hom).finish());
  if (report.passed())
    g = g.validated();
  return {std::move(product), std::move(g), std::move(report)};
}

SemidirectEmbedding embed_semidirect(const PostLiePair& pair) {
  pair.require_validated("embed_semidirect");
  const auto& n = pair.n();
  const auto d = pair.dim();
  const auto f = pair.field();
  auto der = derivation_algebra(n);
  auto semi = semidirect_with_derivations(n, der);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < d; ++i) {
    auto coords = der.coordinates(left_mult_matrix(pair, i));
    if (!coords)
      throw Error("left multiplication is not a derivation of n");
    auto img = zero_vector(f, semi.dim());
    img[i] = Scalar::one(f);
    for (std::size_t b = 0; b < coords->size(); ++b)
      img[d + b] = (*coords)[b];
    images.push_back(std::move(img));
  }
  auto image_of = [&](const Vector& x) {
    auto v = zero_vector(f, semi.dim());
    for (std::size_t i = 0; i < d; ++i)
      axpy(v, x[i], images[i]);
    return v;
  };
  IdentityTally hom("homomorphism");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      hom.record({i, j}, image_of(pair.g().bracket(i, j)), semi.bracket(images[i], images[j]));
  CheckReport report;
  report.add(std::move(hom).finish());
  return {std::move(semi), std::move(der), std::move(images), std::move(report)};
}

InducedStructure structure_from_graph_subalgebra(const LieAlgebra& n,
                                                 std::span<const GraphElement> h) {
  const auto d = n.dim();
  const auto f = n.field();
  if (h.size() != d)
    throw Error("graph subalgebra needs exactly dim(n) generators");
  std::vector<Vector> xs, flat;
  for (const auto& el : h) {
    if (el.x.size() != d || el.d.rows() != d || el.d.cols() != d)
      throw Error("graph element shape mismatch");
    if (!is_derivation(n, el.d))
      throw Error("graph element carries a non-derivation");
    xs.push_back(el.x);
    auto v = el.x;
    auto m = flatten(el.d);
    v.insert(v.end(), m.begin(), m.end());
    flat.push_back(std::move(v));
  }
  auto x_matrix = Matrix::from_columns(f, d, xs);
  auto x_inverse = inverse(x_matrix);
  if (!x_inverse)
    throw Error("projection onto the first factor is not bijective on h");

  Subspace span(f, d + d * d, flat);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      auto x = n.bracket(h[a].x, h[b].x) + h[a].d.apply(h[b].x) - h[b].d.apply(h[a].x);
      auto m = flatten(commutator(h[a].d, h[b].d));
      x.insert(x.end(), m.begin(), m.end());
      if (!span.contains(x))
        throw Error("h is not closed under the semidirect bracket");
    }

  // L(e_i) = sum_a c_a D_a where sum_a c_a x_a = e_i
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < d; ++i) {
    auto c = x_inverse->column(i);
    Matrix li(f, d, d);
    for (std::size_t a = 0; a < d; ++a)
      if (!c[a].is_zero())
        li += c[a] * h[a].d;
    left.push_back(std::move(li));
  }
  BilinearProduct product(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      product.set(i, j, left[i].column(j));
  LieAlgebra g(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      g.set_bracket(i, j, n.bracket(i, j) + left[i].column(j) - left[j].column(i));
  g = g.validated();
  auto report = check_structure(g, n, product);
  if (!report.passed())
    throw Error("induced product fails the structure axioms:\n" + report.to_text());
  return {std::move(g), std::move(product)};
}

SemisimpleSplit split_semisimple(const LieAlgebra& n, const PostLiePair& pair) {
  pair.require_validated("split_semisimple");
  if (!(n == pair.n()))
    throw Error("split_semisimple: n differs from the pair's second algebra");
  if (!killing_is_semisimple(n).nondegenerate)
    throw Error("split_semisimple needs a semisimple algebra");
  const auto d = n.dim();
  const auto f = n.field();
  std::vector<Vector> ad_columns;
  for (std::size_t k = 0; k < d; ++k)
    ad_columns.push_back(flatten(adjoint_matrix(n, k)));
  auto ad_map = Matrix::from_columns(f, d * d, ad_columns);

  auto sum = direct_sum(n, n);
  std::vector<Vector> preimages, h_prime;
  for (std::size_t i = 0; i < d; ++i) {
    auto sol = rref_solve(ad_map, flatten(left_mult_matrix(pair, i)));
    if (!sol.particular)
      throw Error("internal inconsistency: L(e_i) is not inner for semisimple n");
    const auto& v = *sol.particular;
    auto hp = zero_vector(f, 2 * d);
    for (std::size_t k = 0; k < d; ++k) {
      hp[k] = v[k];
      hp[d + k] = v[k];
    }
    hp[i] += Scalar::one(f);
    preimages.push_back(v);
    h_prime.push_back(std::move(hp));
  }

  auto difference = [&](const Vector& w) {
    Vector out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
    for (std::size_t k = 0; k < d; ++k)
      out[k] -= w[d + k];
    return out;
  };

  Subspace span(f, 2 * d, h_prime);
  IdentityTally closed("subalgebra"), matches("bracket-match");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto b = sum.bracket(h_prime[i], h_prime[j]);
      if (!span.contains(b))
        closed.record({i, j}, b, zero_vector(f, 2 * d));
      matches.record({i, j}, difference(b), pair.g().bracket(i, j));
    }
  std::vector<Vector> diffs;
  for (const auto& w : h_prime)
    diffs.push_back(difference(w));
  CheckItem bijective{"p1-p2-bijective", rank(Matrix::from_columns(f, d, diffs)) == d, {}, {}, 0};
  if (!bijective.passed) {
    bijective.witness = {0};
    bijective.discrepancy = zero_vector(f, d);
    bijective.failures = 1;
  }
  CheckReport report;
  report.add(std::move(closed).finish());
  report.add(std::move(bijective));
  report.add(std::move(matches).finish());
  return {std::move(sum), std::move(h_prime), std::move(preimages), std::move(report)};
}

PreLieReduction prelie_from_two_step(const PostLiePair& pair) {
  pair.require_validated("prelie_from_two_step");
  const auto f = pair.field();
  if (f.characteristic() == 2)
    throw Error("prelie_from_two_step needs 1/2, unavailable over Fp:2");
  auto cls = nilpotency_class(pair.n());
  if (!cls || *cls > 2)
    throw Error("prelie_from_two_step needs n nilpotent of class at most 2");
  const auto d = pair.dim();
  auto half = Scalar(f, 1, 2);
  BilinearProduct circ(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      circ.set(i, j, half * pair.n().bracket(i, j) + pair.product()(i, j));
  LieAlgebra abelian(f, d);
  auto full = check_structure(pair.g(), abelian.validated(), circ);
  CheckReport report;
  auto rename = [](CheckItem item, const char* name) {
    item.identity = name;
    return item;
  };
  report.add(rename(*full.find("post5"), "commutator"));
  report.add(rename(*full.find("post6"), "left-module"));
  return {std::move(circ), std::move(report)};
}

std::string to_string(AuditStatus s) {
  switch (s) {
  case AuditStatus::Consistent: return "CONSISTENT";
  case AuditStatus::Violation: return "VIOLATION";
  case AuditStatus::NotApplicable: return "NOT-APPLICABLE";
  }
  return "?";
}

bool TheoremAudit::consistent() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const AuditEntry& e) { return e.status == AuditStatus::Violation; });
}

std::string TheoremAudit::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.theorem << ": " << to_string(e.status);
    if (!e.detail.empty())
      os << " (" << e.detail << ")";
    os << '\n';
  }
  if (advisory)
    os << "advisory: characteristic-p evidence only; these implications are theorems in "
          "characteristic 0\n";
  return os.str();
}

namespace {

AuditEntry implication(std::string name, bool hypothesis, bool conclusion, std::string detail) {
  if (!hypothesis)
    return {std::move(name), AuditStatus::NotApplicable, "hypothesis does not hold"};
  return {std::move(name), conclusion ? AuditStatus::Consistent : AuditStatus::Violation,
          std::move(detail)};
}

bool is_sl2_q(const LieAlgebra& l) {
  return l.field().is_rational() && l.dim() == 3 && classify_low_dim(l).name == "sl2";
}

} // namespace

TheoremAudit theorem_audit(const PostLiePair& pair) {
  pair.require_validated("theorem_audit");
  const auto& g = pair.g();
  const auto& n = pair.n();
  const bool rational = pair.field().is_rational();
  TheoremAudit audit;
  audit.advisory = !rational;

  bool g_nilpotent = is_nilpotent(g);
  bool n_solvable = is_solvable(n);
  bool n_nilpotent = is_nilpotent(n);
  audit.entries.push_back(implication("g nilpotent => n solvable", g_nilpotent, n_solvable,
                                      n_solvable ? "n solvable" : "n not solvable"));
  bool g_perfect = is_perfect(g);
  audit.entries.push_back(implication("n solvable non-nilpotent => g not perfect",
                                      n_solvable && !n_nilpotent, !g_perfect,
                                      g_perfect ? "[g,g] = g" : "[g,g] != g"));

  auto n_class = nilpotency_class(n);
  bool two_step = n_class && *n_class <= 2;
  if (two_step && pair.field().characteristic() != 2) {
    auto reduction = prelie_from_two_step(pair);
    bool ok = reduction.report.passed();
    std::string detail = ok ? "pre-Lie product on g verified" : "pre-Lie axioms fail";
    if (rational) {
      bool semisimple = killing_is_semisimple(g).nondegenerate;
      ok = ok && !semisimple;
      if (semisimple)
        detail += "; g semisimple";
    }
    audit.entries.push_back(implication("n class <= 2 => g admits a pre-Lie structure", true,
                                        ok, detail));
  } else {
    audit.entries.push_back(implication("n class <= 2 => g admits a pre-Lie structure", false,
                                        true, ""));
  }

  if (rational && g.dim() <= 3) {
    bool g_sl2 = is_sl2_q(g);
    bool n_sl2 = is_sl2_q(n);
    audit.entries.push_back(implication("g = sl2 => n = sl2", g_sl2, n_sl2,
                                        n_sl2 ? "n is sl2" : "n is not sl2"));
    const auto& p = pair.product();
    bool zero_case = p.is_zero() && g == n;
    bool bracket_case = true;
    for (std::size_t i = 0; i < g.dim() && bracket_case; ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        if (p(i, j) != g.bracket(i, j) || g.bracket(i, j) != -n.bracket(i, j)) {
          bracket_case = false;
          break;
        }
    audit.entries.push_back(implication(
        "g, n simple => x.y = 0 or x.y = [x,y] = -{x,y}", g_sl2 && n_sl2,
        zero_case || bracket_case,
        zero_case ? "zero product" : (bracket_case ? "x.y = [x,y]" : "nontrivial product")));
    bool n_semisimple = killing_is_semisimple(n).nondegenerate;
    audit.entries.push_back(implication("g simple, n semisimple => n simple, product trivial",
                                        g_sl2 && n_semisimple,
                                        n_sl2 && (zero_case || bracket_case), ""));
  } else {
    for (const char* name : {"g = sl2 => n = sl2", "g, n simple => x.y = 0 or x.y = [x,y] = -{x,y}",
                             "g simple, n semisimple => n simple, product trivial"})
      audit.entries.push_back(
          {name, AuditStatus::NotApplicable,
           rational ? "simplicity test limited to dimension 3" : "needs characteristic 0"});
  }
  return audit;
}

namespace {

Matrix require_invertible(const Matrix& p) {
  auto inv = inverse(p);
  if (!inv)
    throw Error("change of basis matrix is singular");
  return *inv;
}

} // namespace

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p) {
  auto inv = require_invertible(p);
  const auto d = l.dim();
  LieAlgebra out(l.field(), d, l.name());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      out.set_bracket(i, j, inv.apply(l.bracket(p.column(i), p.column(j))));
  return l.is_validated() ? out.validated() : out;
}

BilinearProduct change_basis(const BilinearProduct& m, const Matrix& p) {
  auto inv = require_invertible(p);
  const auto d = m.dim();
  BilinearProduct out(m.field(), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      out.set(i, j, inv.apply(m.apply(p.column(i), p.column(j))));
  return out;
}

PostLiePair change_basis(const PostLiePair& pair, const Matrix& p) {
  PostLiePair out(change_basis(pair.g(), p), change_basis(pair.n(), p),
                  change_basis(pair.product(), p));
  return pair.is_validated() ? out.validated() : out;
}

bool sampled_left_nilpotency(const PostLiePair& pair, std::size_t samples, std::uint64_t seed) {
  pair.require_validated("sampled_left_nilpotency");
  const auto f = pair.field();
  const auto d = pair.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x;
    for (std::size_t i = 0; i < d; ++i)
      x.emplace_back(f, coeff(rng));
    if (!is_nilpotent_matrix(left_mult_matrix(pair, x)))
      return false;
  }
  return true;
}

} // namespace postlie
