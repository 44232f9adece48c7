#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "postlie/matrix.hpp"
#include "postlie/report.hpp"

namespace postlie {

/// Lie algebra on e_0..e_{n-1} given by structure constants. Only [e_i,e_j]
/// with i < j is stored; the rest follows from antisymmetry.
///
/// Freshly built algebras are unvalidated. `validated()` runs the Jacobi check
/// once and returns a copy flagged as validated; analysis functions insist on
/// that flag.
class LieAlgebra {
public:
  LieAlgebra(Field f, std::size_t dim, std::string name = {});

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  bool is_validated() const { return validated_; }

  /// Sets [e_i, e_j]. For i > j the negated vector is stored under (j, i).
  /// Clears the validation flag.
  void set_bracket(std::size_t i, std::size_t j, Vector value);
  /// [e_i, e_j] for any i, j.
  Vector bracket(std::size_t i, std::size_t j) const;
  /// Stored constants of [e_i, e_j], i < j.
  const Vector& stored(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  bool is_abelian() const;

  /// Copy flagged as validated; throws Error with the failing triple otherwise.
  LieAlgebra validated() const;
  /// Throws unless the flag is set.
  void require_validated(const char* operation) const;

  /// Same constants, every coefficient multiplied by c (validation kept).
  LieAlgebra scaled(const Scalar& c) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

private:
  std::size_t index(std::size_t i, std::size_t j) const;

  Field field_;
  std::size_t dim_;
  std::string name_;
  std::vector<Vector> constants_;
  bool validated_ = false;
};

/// Jacobi identity on every basis triple i < j < k.
CheckReport check_lie_axioms(const LieAlgebra& l);

/// Matrix of y -> [x, y].
Matrix adjoint_matrix(const LieAlgebra& l, const Vector& x);
Matrix adjoint_matrix(const LieAlgebra& l, std::size_t i);

/// Linear subspace stored by a canonical (reduced echelon) basis, so equal
/// subspaces compare equal.
class Subspace {
public:
  Subspace(Field f, std::size_t ambient, std::span<const Vector> spanning);
  static Subspace whole(Field f, std::size_t ambient);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace center(const LieAlgebra& l);
/// Span of [a, b] for a in `left`, b in `right`.
Subspace bracket_span(const LieAlgebra& l, const Subspace& left, const Subspace& right);

enum class SeriesKind { Derived, LowerCentral };

/// Terms L = S_0 ⊋ S_1 ⊋ ... until the dimension stops dropping; the last
/// entry is the stable term.
std::vector<Subspace> series(const LieAlgebra& l, SeriesKind kind);

bool is_solvable(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
/// Length of the lower central series down to 0; nullopt if not nilpotent.
/// Abelian algebras have class 1.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& l);
bool is_perfect(const LieAlgebra& l);

struct KillingForm {
  Matrix form;
  bool nondegenerate;
};

/// Killing form trace(ad x ad y) on the basis. Only meaningful in
/// characteristic 0; throws over F_p.
KillingForm killing_is_semisimple(const LieAlgebra& l);

/// Derivations D of a Lie algebra, as n x n matrices acting on columns.
class DerivationAlgebra {
public:
  /// Wraps given matrices; throws if one is not a derivation or they are dependent.
  DerivationAlgebra(LieAlgebra base, std::vector<Matrix> basis);

  const LieAlgebra& base() const { return base_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Coordinates of m in the basis, if m lies in the span.
  std::optional<Vector> coordinates(const Matrix& m) const;
  bool contains(const Matrix& m) const { return coordinates(m).has_value(); }

private:
  LieAlgebra base_;
  std::vector<Matrix> basis_;
};

bool is_derivation(const LieAlgebra& l, const Matrix& d);
DerivationAlgebra derivation_algebra(const LieAlgebra& l);
bool is_complete_lie(const LieAlgebra& l);

/// L ⋊ D on basis (e_1..e_n, D_1..D_m) with
/// [(x,D),(x',D')] = ([x,x'] + D(x') - D'(x), [D,D']).
/// Throws when the span of D is not closed under commutators.
LieAlgebra semidirect_with_derivations(const LieAlgebra& l, const DerivationAlgebra& d);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Invariants of a Lie algebra of dimension at most 3 over Q.
struct LowDimClass {
  std::string name; ///< "abelian", "r2", "n3", "r3", "r3_lambda", "sl2", or "" when undecided
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  std::size_t killing_rank = 0;
  bool solvable = false;
  std::optional<std::size_t> nilpotency_class;
  /// For r3_lambda: {λ, 1/λ} (a single element when λ = ±1, {0} for r2 ⊕ k).
  std::vector<Scalar> ratio_set;
  /// When dim [L,L] = 2 and the eigenvalues are irrational: coefficients (c0, c1) of
  /// t^2 + c1 t + c0, the characteristic polynomial of ad(x) on [L,L].
  std::vector<Scalar> char_poly;

  std::string to_string() const;
};

LowDimClass classify_low_dim(const LieAlgebra& l);

} // namespace postlie
