#include "postlie/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace postlie {

namespace {

Vector vec(std::initializer_list<Scalar> values) { return Vector(values); }

Scalar s(Field f, long v) { return Scalar(f, v); }

} // namespace

LieAlgebra abelian_algebra(Field f, std::size_t dim) {
  return LieAlgebra(f, dim, "abelian(" + std::to_string(dim) + ")").validated();
}

LieAlgebra r2_algebra(Field f) {
  LieAlgebra l(f, 2, "r2");
  l.set_bracket(0, 1, vec({s(f, 1), s(f, 0)}));
  return l.validated();
}

LieAlgebra r3_algebra(Field f) {
  LieAlgebra l(f, 3, "r3");
  l.set_bracket(0, 1, vec({s(f, 0), s(f, 1), s(f, 0)}));
  l.set_bracket(0, 2, vec({s(f, 0), s(f, 1), s(f, 1)}));
  return l.validated();
}

LieAlgebra r3_lambda_algebra(const Scalar& lambda) {
  auto f = lambda.field();
  LieAlgebra l(f, 3, "r3_lambda(" + lambda.to_string() + ")");
  l.set_bracket(0, 1, vec({s(f, 0), s(f, 1), s(f, 0)}));
  l.set_bracket(0, 2, vec({s(f, 0), s(f, 0), lambda}));
  return l.validated();
}

LieAlgebra n3_algebra(Field f) {
  LieAlgebra l(f, 3, "n3");
  l.set_bracket(0, 1, vec({s(f, 0), s(f, 0), s(f, 1)}));
  return l.validated();
}

LieAlgebra sl2_algebra(Field f) {
  LieAlgebra l(f, 3, "sl2");
  l.set_bracket(0, 1, vec({s(f, 0), s(f, 0), s(f, 1)}));
  l.set_bracket(0, 2, vec({s(f, -2), s(f, 0), s(f, 0)}));
  l.set_bracket(1, 2, vec({s(f, 0), s(f, 2), s(f, 0)}));
  return l.validated();
}

LieAlgebra builtin_algebra(std::string_view spec, Field f, std::optional<std::size_t> dim) {
  std::string_view name = spec;
  std::string_view arg;
  if (auto open = spec.find('('); open != std::string_view::npos) {
    if (!spec.ends_with(')'))
      throw Error("malformed algebra name '" + std::string(spec) + "'");
    name = spec.substr(0, open);
    arg = spec.substr(open + 1, spec.size() - open - 2);
  }
  auto check_dim = [&](std::size_t d) {
    if (dim && *dim != d)
      throw Error(std::string(name) + " has dimension " + std::to_string(d) + ", requested " +
                  std::to_string(*dim));
  };
  if (name == "abelian") {
    std::size_t d = 0;
    if (!arg.empty()) {
      d = std::stoul(std::string(arg));
      check_dim(d);
    } else if (dim) {
      d = *dim;
    } else {
      throw Error("abelian needs a dimension");
    }
    if (d == 0)
      throw Error("abelian needs a positive dimension");
    return abelian_algebra(f, d);
  }
  if (name == "r3_lambda") {
    check_dim(3);
    if (arg.empty())
      throw Error("r3_lambda needs a parameter, e.g. r3_lambda(-1/2)");
    return r3_lambda_algebra(Scalar::parse(f, arg));
  }
  if (!arg.empty())
    throw Error(std::string(name) + " takes no parameter");
  if (name == "r2") {
    check_dim(2);
    return r2_algebra(f);
  }
  if (name == "r3") {
    check_dim(3);
    return r3_algebra(f);
  }
  if (name == "n3") {
    check_dim(3);
    return n3_algebra(f);
  }
  if (name == "sl2") {
    check_dim(3);
    return sl2_algebra(f);
  }
  throw Error("unknown algebra '" + std::string(spec) + "'");
}

namespace {

/// Sparse two-dimensional transcription helper: products and the two brackets
/// [e1,e2], {e1,e2} given as coefficient pairs.
struct Dim2 {
  Field f;
  BilinearProduct product{f, 2};
  Vector g_bracket = zero_vector(f, 2);
  Vector n_bracket = zero_vector(f, 2);

  Dim2& mul(std::size_t i, std::size_t j, Scalar a, Scalar b) {
    product.set(i - 1, j - 1, vec({std::move(a), std::move(b)}));
    return *this;
  }
  Dim2& g(Scalar a, Scalar b) {
    g_bracket = vec({std::move(a), std::move(b)});
    return *this;
  }
  Dim2& n(Scalar a, Scalar b) {
    n_bracket = vec({std::move(a), std::move(b)});
    return *this;
  }
  PostLiePair pair() const {
    LieAlgebra lg(f, 2), ln(f, 2);
    lg.set_bracket(0, 1, g_bracket);
    ln.set_bracket(0, 1, n_bracket);
    return PostLiePair(lg.validated(), ln.validated(), product);
  }
};

Scalar param(std::span<const Scalar> p, std::size_t i, Field f) {
  if (i >= p.size())
    throw Error("missing parameter");
  if (p[i].field() == f)
    return p[i];
  if (p[i].field().is_rational())
    return Scalar::from_rational(f, p[i].rational());
  throw Error("parameter field mismatch");
}

std::vector<Scalar> q_samples(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Scalar> out;
  for (auto [num, den] : values)
    out.emplace_back(Field::rationals(), num, den);
  return out;
}

bool any_params(std::span<const Scalar>) { return true; }

auto fixed(Expectations e) {
  return [e](std::span<const Scalar>) { return e; };
}

std::vector<CatalogEntry> build_classification() {
  using T = Tag;
  const auto one = [](Field f) { return Scalar::one(f); };
  const auto zero = [](Field f) { return Scalar::zero(f); };
  std::vector<CatalogEntry> v;

  auto case1 = [&](std::string id, std::function<void(Dim2&)> fill, bool complete) {
    Expectations e;
    e.present = {T::Commutative, T::PreLie, T::LR};
    e.g_class = "abelian";
    e.n_class = "abelian";
    e.complete = complete;
    e.associative = true;
    v.push_back({id, "Case 1: g and n abelian", {}, {{}}, any_params,
                 [fill](std::span<const Scalar>, Field f) {
                   Dim2 d{f};
                   fill(d);
                   return d.pair();
                 },
                 fixed(e)});
  };
  case1("V1", [](Dim2&) {}, true);
  case1("V2", [&](Dim2& d) { d.mul(1, 1, one(d.f), zero(d.f)); }, false);
  case1("V3", [&](Dim2& d) {
    d.mul(1, 1, one(d.f), zero(d.f)).mul(2, 2, zero(d.f), one(d.f));
  }, false);
  case1("V4", [&](Dim2& d) {
    d.mul(1, 2, one(d.f), zero(d.f)).mul(2, 1, one(d.f), zero(d.f)).mul(2, 2, zero(d.f), one(d.f));
  }, false);
  case1("V5", [&](Dim2& d) { d.mul(2, 2, one(d.f), zero(d.f)); }, true);
  // V1 is the zero product
  v[0].expected = [base = v[0].expected](std::span<const Scalar> p) {
    auto e = base(p);
    e.present.push_back(T::Zero);
    return e;
  };

  auto case2 = [&](std::string id, std::function<void(Dim2&)> fill, bool complete,
                   std::vector<Tag> extra) {
    Expectations e;
    e.present = {T::LR};
    e.present.insert(e.present.end(), extra.begin(), extra.end());
    e.g_class = "abelian";
    e.n_class = "r2";
    e.complete = complete;
    e.negated_lr = true;
    v.push_back({id, "Case 2: g abelian, n non-abelian", {}, {{}}, any_params,
                 [fill](std::span<const Scalar>, Field f) {
                   Dim2 d{f};
                   d.n(-Scalar::one(f), Scalar::zero(f));
                   fill(d);
                   return d.pair();
                 },
                 fixed(e)});
  };
  case2("V6", [&](Dim2& d) {
    d.mul(1, 1, one(d.f), zero(d.f)).mul(2, 1, -one(d.f), zero(d.f));
  }, false, {});
  case2("V7", [&](Dim2& d) { d.mul(1, 2, one(d.f), zero(d.f)); }, true, {});
  case2("V8", [&](Dim2& d) { d.mul(2, 1, -one(d.f), zero(d.f)); }, false, {T::LsaIdentity});

  auto case3_expect = [](bool complete) {
    Expectations e;
    e.present = {T::PreLie, T::LsaIdentity};
    e.g_class = "r2";
    e.n_class = "abelian";
    e.complete = complete;
    return e;
  };
  auto case3_pair = [](Field f, std::function<void(Dim2&)> fill) {
    Dim2 d{f};
    d.g(Scalar::one(f), Scalar::zero(f));
    fill(d);
    return d.pair();
  };
  v.push_back({"V9", "Case 3: V9(α)", {"alpha"}, {q_samples({{0, 1}}), q_samples({{1, 1}}), q_samples({{2, 1}})},
               any_params,
               [=](std::span<const Scalar> p, Field f) {
                 auto a = param(p, 0, f);
                 return case3_pair(f, [&](Dim2& d) {
                   d.mul(2, 1, -one(f), zero(f)).mul(2, 2, zero(f), a);
                 });
               },
               [=](std::span<const Scalar> p) {
                 // L(e2) e1 = -e1 for every α
                 auto e = case3_expect(false);
                 if (p[0].is_zero()) {
                   e.present.push_back(T::LrIdentity);
                   e.right_complete = true;
                 }
                 return e;
               }});
  v.push_back({"V10", "Case 3: V10(β), β ≠ 0", {"beta"}, {q_samples({{1, 1}}), q_samples({{2, 1}})},
               [](std::span<const Scalar> p) { return !p[0].is_zero(); },
               [=](std::span<const Scalar> p, Field f) {
                 auto b = param(p, 0, f);
                 return case3_pair(f, [&](Dim2& d) {
                   d.mul(1, 2, b, zero(f)).mul(2, 1, b - one(f), zero(f)).mul(2, 2, zero(f), b);
                 });
               },
               fixed(case3_expect(false))});
  v.push_back({"V11", "Case 3: V11", {}, {{}}, any_params,
               [=](std::span<const Scalar>, Field f) {
                 return case3_pair(f, [&](Dim2& d) {
                   d.mul(2, 1, -one(f), zero(f)).mul(2, 2, one(f), -one(f));
                 });
               },
               fixed(case3_expect(false))});
  v.push_back({"V12", "Case 3: V12", {}, {{}}, any_params,
               [=](std::span<const Scalar>, Field f) {
                 return case3_pair(f, [&](Dim2& d) {
                   d.mul(1, 1, zero(f), one(f))
                       .mul(2, 1, -one(f), zero(f))
                       .mul(2, 2, zero(f), Scalar(f, -2));
                 });
               },
               fixed(case3_expect(false))});
  v.push_back({"V13", "Case 3: V13", {}, {{}}, any_params,
               [=](std::span<const Scalar>, Field f) {
                 return case3_pair(f, [&](Dim2& d) {
                   d.mul(1, 2, one(f), zero(f)).mul(2, 2, one(f), one(f));
                 });
               },
               fixed(case3_expect(false))});

  auto case4_expect = [](bool lr_lsa) {
    Expectations e;
    e.g_class = "r2";
    e.n_class = "r2";
    if (lr_lsa) {
      e.present = {T::LsaIdentity, T::LrIdentity};
    } else {
      e.present = {T::NewIdentity};
      e.absent = {T::LsaIdentity, T::LrIdentity};
    }
    return e;
  };
  auto alpha1_samples = std::vector<std::vector<Scalar>>{
      q_samples({{1, 1}}), q_samples({{2, 1}}), q_samples({{-1, 1}})};
  auto nonzero = [](std::span<const Scalar> p) { return !p[0].is_zero(); };
  v.push_back({"V14", "Case 4: V14(α1), α1 ≠ 0", {"alpha1"}, alpha1_samples, nonzero,
               [=](std::span<const Scalar> p, Field f) {
                 auto a1 = param(p, 0, f);
                 Dim2 d{f};
                 d.g(a1, zero(f)).n(one(f), zero(f)).mul(2, 1, one(f) - a1, zero(f));
                 return d.pair();
               },
               fixed(case4_expect(true))});
  v.push_back({"V15", "Case 4: V15", {}, {{}}, any_params,
               [=](std::span<const Scalar>, Field f) {
                 Dim2 d{f};
                 d.g(one(f), zero(f)).n(one(f), zero(f)).mul(2, 2, one(f), zero(f));
                 return d.pair();
               },
               fixed(case4_expect(true))});
  v.push_back({"V16", "Case 4: V16(α1), α1 ≠ 0", {"alpha1"}, alpha1_samples, nonzero,
               [=](std::span<const Scalar> p, Field f) {
                 auto a1 = param(p, 0, f);
                 Dim2 d{f};
                 d.g(a1, zero(f)).n(one(f), zero(f)).mul(1, 2, -one(f), zero(f)).mul(2, 1, -a1, zero(f));
                 return d.pair();
               },
               fixed(case4_expect(false))});
  v.push_back({"V17", "Case 4: V17", {}, {{}}, any_params,
               [=](std::span<const Scalar>, Field f) {
                 Dim2 d{f};
                 d.g(-one(f), zero(f))
                     .n(one(f), zero(f))
                     .mul(1, 2, -one(f), zero(f))
                     .mul(2, 1, one(f), zero(f))
                     .mul(2, 2, one(f), zero(f));
                 return d.pair();
               },
               fixed(case4_expect(false))});
  return v;
}

std::vector<CatalogEntry> build_catalog() {
  auto v = build_classification();
  using T = Tag;

  Expectations case4;
  case4.g_class = "r2";
  case4.n_class = "r2";
  v.push_back({"case4_family1", "Case 4 raw family: e2·e1 = (1-α1)e1, e2·e2 = α e1",
               {"alpha1", "alpha"},
               {q_samples({{1, 1}, {0, 1}}), q_samples({{1, 1}, {3, 1}}), q_samples({{2, 1}, {1, 1}}),
                q_samples({{-1, 1}, {3, 1}})},
               [](std::span<const Scalar> p) { return !p[0].is_zero(); },
               [](std::span<const Scalar> p, Field f) {
                 auto a1 = param(p, 0, f), a = param(p, 1, f);
                 Dim2 d{f};
                 d.g(a1, Scalar::zero(f)).n(Scalar::one(f), Scalar::zero(f));
                 d.mul(2, 1, Scalar::one(f) - a1, Scalar::zero(f)).mul(2, 2, a, Scalar::zero(f));
                 return d.pair();
               },
               fixed(case4)});
  v.push_back({"case4_family2", "Case 4 raw family: e1·e2 = -e1, e2·e1 = -α1 e1, e2·e2 = β e1",
               {"alpha1", "beta"},
               {q_samples({{1, 1}, {0, 1}}), q_samples({{2, 1}, {1, 1}}), q_samples({{-1, 1}, {-2, 1}}),
                q_samples({{-1, 1}, {0, 1}})},
               [](std::span<const Scalar> p) { return !p[0].is_zero(); },
               [](std::span<const Scalar> p, Field f) {
                 auto a1 = param(p, 0, f), b = param(p, 1, f);
                 Dim2 d{f};
                 d.g(a1, Scalar::zero(f)).n(Scalar::one(f), Scalar::zero(f));
                 d.mul(1, 2, -Scalar::one(f), Scalar::zero(f))
                     .mul(2, 1, -a1, Scalar::zero(f))
                     .mul(2, 2, b, Scalar::zero(f));
                 return d.pair();
               },
               fixed(case4)});

  Expectations heis;
  heis.present = {T::Commutative};
  heis.g_class = "n3";
  heis.n_class = "n3";
  v.push_back({"heis_commutative", "commutative structures on (n3, n3), β ≠ 0",
               {"alpha", "beta", "gamma"},
               {q_samples({{0, 1}, {1, 1}, {0, 1}}), q_samples({{1, 1}, {2, 1}, {3, 1}}),
                q_samples({{-1, 1}, {1, 2}, {5, 1}})},
               [](std::span<const Scalar> p) { return !p[1].is_zero(); },
               [](std::span<const Scalar> p, Field f) {
                 return heis_commutative(param(p, 0, f), param(p, 1, f), param(p, 2, f));
               },
               fixed(heis)});

  v.push_back({"sl2_family", "structures on (r_{3,-α/β}, sl2), α ≠ β", {"alpha", "beta"},
               {q_samples({{2, 1}, {1, 1}}), q_samples({{1, 1}, {-1, 1}}), q_samples({{3, 1}, {0, 1}})},
               [](std::span<const Scalar> p) { return p[0] != p[1]; },
               [](std::span<const Scalar> p, Field f) {
                 return sl2_family(param(p, 0, f), param(p, 1, f));
               },
               [](std::span<const Scalar> p) {
                 Expectations e;
                 e.g_class = "r3_lambda";
                 e.n_class = "sl2";
                 // β = 0 gives r_{3,0} = r2 ⊕ k (ratio set {0})
                 e.g_ratio = p[1].is_zero() ? Scalar::zero(p[0].field()) : -(p[0] / p[1]);
                 return e;
               }});

  v.push_back({"lambda_product", "x·y = λ[x,y] on (n3, (1-2λ) n3)", {"lambda"},
               {q_samples({{2, 1}}), q_samples({{-1, 1}}), q_samples({{1, 3}}), q_samples({{1, 2}})},
               [](std::span<const Scalar> p) { return !p[0].is_zero() && !p[0].is_one(); },
               [](std::span<const Scalar> p, Field f) {
                 return lambda_product(n3_algebra(f), param(p, 0, f));
               },
               [](std::span<const Scalar> p) {
                 Expectations e;
                 e.present = {T::Lambda};
                 e.lambda = p[0];
                 e.g_class = "n3";
                 if (p[0] == Scalar(Field::rationals(), 1, 2)) {
                   e.present.push_back(T::PreLie);
                   e.present.push_back(T::Novikov);
                   e.n_class = "abelian";
                 } else {
                   e.n_class = "n3";
                 }
                 return e;
               }});
  return v;
}

} // namespace

PostLiePair CatalogEntry::instantiate(std::span<const Scalar> params, Field f) const {
  if (params.size() != parameters.size())
    throw Error(id + " takes " + std::to_string(parameters.size()) + " parameter(s)");
  std::vector<Scalar> local;
  for (std::size_t i = 0; i < params.size(); ++i)
    local.push_back(param(params, i, f));
  if (!admissible(local))
    throw Error("inadmissible parameters for " + id + ": " + format_params(local));
  return build(local, f);
}

const std::vector<CatalogEntry>& classification_dim2_entries() {
  static const auto entries = build_classification();
  return entries;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const auto entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(std::string_view id) {
  for (const auto& e : catalog_entries())
    if (e.id == id)
      return e;
  throw Error("unknown catalog id '" + std::string(id) + "'");
}

PostLiePair heis_commutative(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  auto f = beta.field();
  if (beta.is_zero())
    throw Error("heis_commutative needs beta != 0");
  auto one = Scalar::one(f);
  BilinearProduct p(f, 3);
  p.set(0, 0, vec({one, -beta.inverse(), alpha}));
  auto mixed = vec({beta, -one, (gamma + alpha * beta * beta) / (Scalar(f, 2) * beta)});
  p.set(0, 1, mixed);
  p.set(1, 0, mixed);
  p.set(1, 1, vec({beta * beta, -beta, gamma}));
  auto n3 = n3_algebra(f);
  return PostLiePair(n3, n3, p);
}

PostLiePair sl2_family(const Scalar& alpha, const Scalar& beta) {
  auto f = alpha.field();
  if (alpha == beta)
    throw Error("sl2_family needs alpha != beta");
  auto zero = Scalar::zero(f), one = Scalar::one(f), two = Scalar(f, 2);
  auto diff = alpha - beta;
  auto ratio = two * beta / diff; // 2β/(α-β)
  BilinearProduct p(f, 3);
  p.set(1, 0, vec({-alpha, zero, one}));
  p.set(1, 1, vec({zero, alpha, (alpha * alpha - beta * beta) / Scalar(f, 4)}));
  p.set(1, 2, vec({(beta * beta - alpha * alpha) / two, Scalar(f, -2), zero}));
  p.set(2, 0, vec({ratio, zero, zero}));
  p.set(2, 1, vec({zero, -ratio, -beta}));
  p.set(2, 2, vec({two * beta, zero, zero}));
  LieAlgebra g(f, 3);
  g.set_bracket(0, 1, vec({alpha, zero, zero}));
  g.set_bracket(0, 2, vec({-(two * alpha / diff), zero, zero}));
  g.set_bracket(1, 2, vec({(beta * beta - alpha * alpha) / two, ratio, beta}));
  return PostLiePair(g.validated(), sl2_algebra(f), p);
}

PostLiePair lambda_product(const LieAlgebra& l, const Scalar& lambda) {
  auto f = l.field();
  const auto d = l.dim();
  BilinearProduct p(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      p.set(i, j, lambda * l.bracket(i, j));
  auto n = l.scaled(Scalar::one(f) - Scalar(f, 2) * lambda);
  n.set_name({});
  return PostLiePair(l, n, p);
}

PostLiePair example_structure(std::string_view id, std::span<const Scalar> params,
                              std::string_view algebra) {
  if (id == "lambda_product" && algebra != "n3") {
    if (params.size() != 1)
      throw Error("lambda_product takes one parameter");
    if (params[0].is_zero() || params[0].is_one())
      throw Error("lambda_product needs lambda outside {0, 1}");
    return lambda_product(builtin_algebra(algebra, params[0].field()), params[0]);
  }
  const auto& entry = find_entry(id);
  auto f = params.empty() ? Field::rationals() : params[0].field();
  return entry.instantiate(params, f);
}

Case4Normalization normalize_case4(std::string_view family, std::span<const Scalar> params) {
  if (params.size() != 2)
    throw Error("Case 4 families take two parameters");
  const auto& a1 = params[0];
  const auto& c = params[1];
  auto f = a1.field();
  auto zero = Scalar::zero(f), one = Scalar::one(f);
  if (a1.is_zero())
    throw Error("Case 4 needs alpha1 != 0");
  auto basis = [&](const Scalar& a, const Scalar& t) {
    return Matrix(f, 2, 2, {a, t, zero, one});
  };
  if (family == "case4_family1") {
    // f2·f2 = (α + t(1-α1))/a f1
    auto shift = one - a1;
    if (!shift.is_zero())
      return {basis(one, -(c / shift)), "V14", {a1}};
    if (c.is_zero())
      return {basis(one, zero), "V14", {a1}};
    return {basis(c, zero), "V15", {}};
  }
  if (family == "case4_family2") {
    // f2·f2 = (β - t(α1+1))/a f1
    auto shift = a1 + one;
    if (!shift.is_zero())
      return {basis(one, c / shift), "V16", {a1}};
    if (c.is_zero())
      return {basis(one, zero), "V16", {a1}};
    return {basis(c, zero), "V17", {}};
  }
  throw Error("unknown Case 4 family '" + std::string(family) + "'");
}

std::string format_params(std::span<const Scalar> params) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < params.size(); ++i)
    os << (i ? "," : "") << params[i];
  os << ')';
  return os.str();
}

VerifyLine verify_structure(const std::string& id, const std::string& params,
                            const PostLiePair& raw, const Expectations& expected) {
  VerifyLine line{id, params, true, {}};
  auto fail = [&](std::string why) {
    line.passed = false;
    line.failures.push_back(std::move(why));
  };
  try {
    auto report = check_structure(raw);
    if (!report.passed()) {
      fail("structure axioms:\n" + report.to_text());
      return line;
    }
    auto pair = raw.validated();
    if (!(associated_bracket(pair.product(), pair.n()) == pair.g()))
      fail("associated bracket differs from the transcribed g");
    if (auto audit = derived_identity_audit(pair); !audit.passed())
      fail("derived identities:\n" + audit.to_text());
    auto embedding = embed_semidirect(pair);
    if (!embedding.report.passed())
      fail("semidirect embedding:\n" + embedding.report.to_text());
    std::vector<GraphElement> graph;
    for (std::size_t i = 0; i < pair.dim(); ++i)
      graph.push_back({unit_vector(pair.field(), pair.dim(), i), left_mult_matrix(pair, i)});
    auto induced = structure_from_graph_subalgebra(pair.n(), graph);
    if (!(induced.g == pair.g()) || !(induced.product == pair.product()))
      fail("graph subalgebra round trip changed the structure");
    auto theorems = theorem_audit(pair);
    if (!theorems.consistent())
      fail("theorem audit:\n" + theorems.to_text());

    auto tags = special_case_detect(pair);
    for (auto t : expected.present)
      if (!tags.has(t))
        fail("missing tag " + to_string(t) + " (have " + tags.to_string() + ")");
    for (auto t : expected.absent)
      if (tags.has(t))
        fail("unexpected tag " + to_string(t));
    if (expected.lambda && (!tags.lambda || *tags.lambda != *expected.lambda))
      fail("lambda tag value mismatch");
    if (pair.field().is_rational()) {
      if (expected.g_class || expected.g_ratio) {
        auto c = classify_low_dim(pair.g());
        if (expected.g_class && c.name != *expected.g_class)
          fail("g classifies as " + c.to_string() + ", expected " + *expected.g_class);
        if (expected.g_ratio &&
            std::find(c.ratio_set.begin(), c.ratio_set.end(), *expected.g_ratio) ==
                c.ratio_set.end())
          fail("g ratio set " + to_string(c.ratio_set) + " lacks " + expected.g_ratio->to_string());
      }
      if (expected.n_class) {
        auto c = classify_low_dim(pair.n());
        if (c.name != *expected.n_class)
          fail("n classifies as " + c.to_string() + ", expected " + *expected.n_class);
      }
    }
    if (expected.complete && is_complete_structure(pair) != *expected.complete)
      fail(std::string("completeness expected ") + (*expected.complete ? "true" : "false"));
    if (expected.right_complete && is_right_complete_structure(pair) != *expected.right_complete)
      fail("right completeness mismatch");
    if (expected.associative) {
      const auto& p = pair.product();
      bool assoc = true;
      const auto d = pair.dim();
      for (std::size_t i = 0; i < d && assoc; ++i)
        for (std::size_t j = 0; j < d && assoc; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            auto x = unit_vector(pair.field(), d, i), y = unit_vector(pair.field(), d, j),
                 z = unit_vector(pair.field(), d, k);
            if (p.apply(p.apply(x, y), z) != p.apply(x, p.apply(y, z))) {
              assoc = false;
              break;
            }
          }
      if (assoc != *expected.associative)
        fail("associativity mismatch");
    }
    if (expected.negated_lr &&
        satisfies_lr_identities(pair.product().scaled(-Scalar::one(pair.field()))) !=
            *expected.negated_lr)
      fail("negated product LR identities mismatch");
  } catch (const Error& e) {
    fail(std::string("error: ") + e.what());
  }
  return line;
}

std::vector<VerifyLine> catalog_verify() {
  std::vector<VerifyLine> out;
  for (const auto& entry : catalog_entries())
    for (const auto& sample : entry.samples) {
      try {
        auto raw = entry.instantiate(sample);
        out.push_back(verify_structure(entry.id, format_params(sample), raw, entry.expected(sample)));
      } catch (const Error& e) {
        out.push_back({entry.id, format_params(sample), false, {e.what()}});
      }
    }
  return out;
}

} // namespace postlie
