#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "postlie/postlie.hpp"

namespace postlie {

/// Model algebras: "abelian" (needs a dimension), "abelian(n)", "r2", "r3",
/// "r3_lambda(λ)", "n3", "sl2". Brackets:
///   r2        [e1,e2] = e1
///   r3        [e1,e2] = e2, [e1,e3] = e2 + e3
///   r3_lambda [e1,e2] = e2, [e1,e3] = λ e3
///   n3        [e1,e2] = e3
///   sl2       [e1,e2] = e3, [e1,e3] = -2 e1, [e2,e3] = 2 e2
LieAlgebra builtin_algebra(std::string_view spec, Field f,
                           std::optional<std::size_t> dim = std::nullopt);

LieAlgebra abelian_algebra(Field f, std::size_t dim);
LieAlgebra r2_algebra(Field f);
LieAlgebra r3_algebra(Field f);
LieAlgebra r3_lambda_algebra(const Scalar& lambda);
LieAlgebra n3_algebra(Field f);
LieAlgebra sl2_algebra(Field f);

/// Properties a catalog structure is expected to have.
struct Expectations {
  std::vector<Tag> present;
  std::vector<Tag> absent;
  std::optional<std::string> g_class; ///< classify_low_dim name
  std::optional<std::string> n_class;
  std::optional<Scalar> g_ratio;      ///< must lie in g's eigenvalue-ratio set
  std::optional<Scalar> lambda;       ///< value carried by Tag::Lambda
  std::optional<bool> complete;
  std::optional<bool> right_complete;
  std::optional<bool> associative;
  std::optional<bool> negated_lr;     ///< -x·y satisfies the LR identities
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::vector<std::string> parameters;
  /// Fixed sample assignments used by catalog verification.
  std::vector<std::vector<Scalar>> samples;
  std::function<bool(std::span<const Scalar>)> admissible;
  /// Transcribed product and brackets; unvalidated.
  std::function<PostLiePair(std::span<const Scalar>, Field)> build;
  std::function<Expectations(std::span<const Scalar>)> expected;

  /// Builds after the admissibility check; throws Error on bad parameters.
  PostLiePair instantiate(std::span<const Scalar> params, Field f = Field::rationals()) const;
  PostLiePair instantiate(std::initializer_list<Scalar> params, Field f = Field::rationals()) const {
    return instantiate(std::span<const Scalar>(params.begin(), params.size()), f);
  }
};

/// V1 .. V17 of the two-dimensional classification.
const std::vector<CatalogEntry>& classification_dim2_entries();
/// Classification entries, the raw Case 4 families, and the parametrized examples.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& find_entry(std::string_view id);

/// Commutative structure on (n3, n3); β ≠ 0.
PostLiePair heis_commutative(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);
/// Structure on (g, sl2) with g ≅ r_{3,-α/β}; α ≠ β.
PostLiePair sl2_family(const Scalar& alpha, const Scalar& beta);
/// x·y = λ[x,y] on (L, (1-2λ)L). Not necessarily a valid structure.
PostLiePair lambda_product(const LieAlgebra& l, const Scalar& lambda);

/// Dispatcher over "heis_commutative", "sl2_family", "lambda_product"
/// (`algebra` names the base of lambda_product), and any catalog id.
PostLiePair example_structure(std::string_view id, std::span<const Scalar> params,
                              std::string_view algebra = "n3");

/// Normal form of a raw Case 4 family member under an automorphism of n
/// (φ21 = 0, φ22 = 1): the new basis is f1 = a e1, f2 = e2 + t e1.
struct Case4Normalization {
  Matrix basis_change;
  std::string target_id;
  std::vector<Scalar> target_params;
};

/// family is "case4_family1" (params α1, α) or "case4_family2" (params α1, β).
Case4Normalization normalize_case4(std::string_view family, std::span<const Scalar> params);

struct VerifyLine {
  std::string id;
  std::string params;
  bool passed = true;
  std::vector<std::string> failures;
};

/// Runs every entry over its samples: structure axioms, derived identities,
/// semidirect embedding, graph round trip, theorem audit, expectations.
std::vector<VerifyLine> catalog_verify();
/// Same checks for a single structure against an expectation set.
VerifyLine verify_structure(const std::string& id, const std::string& params,
                            const PostLiePair& raw, const Expectations& expected);

std::string format_params(std::span<const Scalar> params);

} // namespace postlie
