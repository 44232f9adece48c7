#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postlie/lie.hpp"

namespace postlie {

/// Arbitrary bilinear product e_i · e_j = sum_k p^k_ij e_k; every pair stored.
class BilinearProduct {
public:
  BilinearProduct(Field f, std::size_t dim);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }

  void set(std::size_t i, std::size_t j, Vector value);
  const Vector& operator()(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector apply(const Vector& x, const Vector& y) const;
  /// e_i · y
  Vector left(std::size_t i, const Vector& y) const;
  Vector right(const Vector& x, std::size_t j) const;

  bool is_zero() const;
  BilinearProduct scaled(const Scalar& c) const;

  friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;

private:
  Field field_;
  std::size_t dim_;
  std::vector<Vector> table_;
};

/// (g, n, product) on one vector space. `validate()` checks the three
/// structure axioms; most operations below require a validated pair.
class PostLiePair {
public:
  PostLiePair(LieAlgebra g, LieAlgebra n, BilinearProduct product);

  const LieAlgebra& g() const { return g_; }
  const LieAlgebra& n() const { return n_; }
  const BilinearProduct& product() const { return product_; }
  std::size_t dim() const { return product_.dim(); }
  Field field() const { return product_.field(); }
  bool is_validated() const { return validated_; }

  /// Copy flagged validated; throws Error listing the failing identities otherwise.
  PostLiePair validated() const;
  void require_validated(const char* operation) const;

private:
  LieAlgebra g_;
  LieAlgebra n_;
  BilinearProduct product_;
  bool validated_ = false;
};

/// Axioms of a structure on (g, n):
///   post5  x·y − y·x = [x,y] − {x,y}
///   post6  [x,y]·z = x·(y·z) − y·(x·z)
///   post7  x·{y,z} = {x·y,z} + {y,x·z}
CheckReport check_structure(const LieAlgebra& g, const LieAlgebra& n,
                            const BilinearProduct& product);
CheckReport check_structure(const PostLiePair& pair);

/// Stand-alone post-Lie algebra (V, ·, {,}): Jacobi for {,} and
///   post1  {x,y}·z = (y·x)·z − y·(x·z) − (x·y)·z + x·(y·z)
///   post2  x·{y,z} = {x·y,z} + {y,x·z}
CheckReport check_algebra(const BilinearProduct& product, const LieAlgebra& n);

/// [x,y] = x·y − y·x + {x,y}. Throws if (product, n) fails check_algebra.
LieAlgebra associated_bracket(const BilinearProduct& product, const LieAlgebra& n);

/// Consequences of the axioms: post4 (left-module), post8 .. post12. Accepts
/// an arbitrary triple so that corrupted products can be audited as well.
CheckReport derived_identity_audit(const LieAlgebra& g, const LieAlgebra& n,
                                   const BilinearProduct& product);
CheckReport derived_identity_audit(const PostLiePair& pair);

/// L(x): y -> x·y.
Matrix left_mult_matrix(const PostLiePair& pair, const Vector& x);
Matrix left_mult_matrix(const PostLiePair& pair, std::size_t i);

/// True iff the span of the operators has a joint flag
/// 0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_n = V with A V_k ⊆ V_{k-1}, decided by iterated
/// joint preimages. For a Lie algebra of operators this is Engel's criterion
/// for all of them being nilpotent.
bool has_nilpotent_flag(std::span<const Matrix> operators);

/// All left multiplications nilpotent.
bool is_complete_structure(const PostLiePair& pair);

/// Joint nilpotent flag for the right multiplications R(y): x -> x·y, which
/// makes every R(y) nilpotent. This is the completeness notion for LR and
/// left-symmetric algebras.
bool is_right_complete_structure(const PostLiePair& pair);

Matrix right_mult_matrix(const PostLiePair& pair, std::size_t j);

/// Sampling cross-check for completeness: L(x) nilpotent for `samples`
/// pseudorandom x with coefficients in [-5, 5] (residues over F_p).
bool sampled_left_nilpotency(const PostLiePair& pair, std::size_t samples, std::uint64_t seed);

enum class Tag {
  Zero,
  PreLie,
  LR,
  Commutative,
  Lambda,
  LsaIdentity,
  LrIdentity,
  Novikov,
  NewIdentity,
};

std::string to_string(Tag t);

struct SpecialCases {
  std::set<Tag> tags;
  std::optional<Scalar> lambda; ///< set together with Tag::Lambda
  bool has(Tag t) const { return tags.contains(t); }
  std::string to_string() const;
};

/// Raw identity checks on basis triples for a bare product.
bool satisfies_lsa_identity(const BilinearProduct& p);
bool satisfies_lr_identities(const BilinearProduct& p);
bool satisfies_novikov_identities(const BilinearProduct& p);
bool satisfies_new_identity(const BilinearProduct& p);

SpecialCases special_case_detect(const PostLiePair& pair);

/// Result of building x·y = {φ(x), y} on a centerless n. The g bracket is the
/// induced one, x·y − y·x + {x,y}; `report` has the two conditions
/// phi-sum ({φx,y} + {x,φy} = [x,y] − {x,y}) and phi-hom (φ[x,y] = {φx,φy}).
struct EndomorphismProduct {
  BilinearProduct product;
  LieAlgebra g;
  CheckReport report;
};

EndomorphismProduct product_from_endomorphism(const LieAlgebra& n, const Matrix& phi);

/// φ: g -> n ⋊ Der(n), x -> (x, L(x)).
struct SemidirectEmbedding {
  LieAlgebra semidirect;         ///< n ⋊ Der(n), basis (e_1..e_n, D_1..D_m)
  DerivationAlgebra derivations; ///< Der(n)
  std::vector<Vector> images;    ///< image of each e_i in the semidirect basis
  CheckReport report;            ///< "homomorphism" over all pairs i < j
};

SemidirectEmbedding embed_semidirect(const PostLiePair& pair);

/// One element (x, D) of n ⋊ Der(n).
struct GraphElement {
  Vector x;
  Matrix d;
};

struct InducedStructure {
  LieAlgebra g;
  BilinearProduct product;
};

/// From a subalgebra h ⊆ n ⋊ Der(n) projecting bijectively to n, builds
/// x·y = L(x)y and [x,y] = p1([(x,L(x)),(y,L(y))]).
InducedStructure structure_from_graph_subalgebra(const LieAlgebra& n,
                                                 std::span<const GraphElement> h);

/// For semisimple n, h' = ψ(graph of L) ⊆ n ⊕ n with ψ(x,y) = (x+y, y).
struct SemisimpleSplit {
  LieAlgebra sum;                 ///< n ⊕ n
  std::vector<Vector> h_prime;    ///< images of e_1..e_n, length 2·dim
  std::vector<Vector> ad_preimage;///< v_i with L(e_i) = ad(v_i)
  CheckReport report;             ///< "subalgebra", "p1-p2-bijective", "bracket-match"
};

SemisimpleSplit split_semisimple(const LieAlgebra& n, const PostLiePair& pair);

/// x∘y = ½{x,y} + x·y on g, for n nilpotent of class at most 2; `report`
/// checks both pre-Lie axioms against g.
struct PreLieReduction {
  BilinearProduct product;
  CheckReport report;
};

PreLieReduction prelie_from_two_step(const PostLiePair& pair);

enum class AuditStatus { Consistent, Violation, NotApplicable };
std::string to_string(AuditStatus s);

struct AuditEntry {
  std::string theorem;
  AuditStatus status;
  std::string detail;
};

struct TheoremAudit {
  std::vector<AuditEntry> entries;
  bool advisory = false; ///< true over F_p, where the statements are not theorems
  bool consistent() const;
  std::string to_text() const;
};

/// Evaluates the structural implications whose hypotheses hold for the pair.
TheoremAudit theorem_audit(const PostLiePair& pair);

/// New structure constants after the change of basis f_i = sum_a P(a,i) e_a.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);
BilinearProduct change_basis(const BilinearProduct& m, const Matrix& p);
PostLiePair change_basis(const PostLiePair& pair, const Matrix& p);

} // namespace postlie
