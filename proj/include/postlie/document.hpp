#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "postlie/postlie.hpp"

namespace postlie {

/// JSON file format, indices 1-based, coefficients as strings:
///
///   {"field": "Q", "dim": 2, "names": ["e1", "e2"],
///    "g": [{"i": 1, "j": 2, "coeffs": {"1": "1"}}],
///    "n": [{"i": 1, "j": 2, "coeffs": {"1": "1"}}],
///    "product": [{"i": 2, "j": 2, "coeffs": {"1": "1"}}]}
///
/// Bracket lists need i < j. A single algebra uses "bracket" in place of
/// "g", "n" and "product".
struct PairDocument {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::optional<LieAlgebra> g;
  std::optional<LieAlgebra> n;
  std::optional<BilinearProduct> product;
  std::optional<LieAlgebra> algebra; ///< "bracket" documents

  bool is_pair() const { return product.has_value(); }
  /// Unvalidated pair; throws Error for algebra documents.
  PostLiePair pair() const;
};

/// Throws Error whose message starts with the offending JSON path.
PairDocument parse_pair_document(std::string_view text);

/// Deterministic output: fixed key order, entries sorted by (i, j), zero
/// coefficients omitted.
std::string serialize_pair_document(const PairDocument& doc);

PairDocument make_document(const PostLiePair& pair, std::vector<std::string> names = {});
PairDocument make_document(const LieAlgebra& algebra, std::vector<std::string> names = {});

} // namespace postlie
