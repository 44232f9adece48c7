#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "postlie/postlie.hpp"

namespace postlie {

inline constexpr std::uint64_t default_search_guard = 10'000'000;

/// POSTLIE_GUARD if set to a positive integer, else the default.
std::uint64_t search_guard_from_env();

/// Parallel runs the packed-integer OpenMP kernel; Serial runs the reference
/// path built on the generic exact-arithmetic checks.
enum class Execution { Parallel, Serial };

enum class SearchMode {
  AllProducts,
  /// The antisymmetric part is forced by x·y − y·x = [x,y] − {x,y}; only the
  /// coefficients of e_i·e_j with i ≤ j are free.
  SymmetricPart,
};

struct SearchSpec {
  LieAlgebra g;
  LieAlgebra n;
  SearchMode mode = SearchMode::SymmetricPart;
  std::uint64_t guard = default_search_guard;

  std::size_t dim() const { return g.dim(); }
  unsigned prime() const { return g.field().characteristic(); }
};

/// Number of free coefficients and p^free; throws if it does not fit in 64 bits.
std::size_t free_coefficient_count(const SearchSpec& spec);
std::uint64_t search_space_size(const SearchSpec& spec);

/// All products passing check_structure(g, n, ·), ordered lexicographically by
/// free coefficient tuple. Throws when the space exceeds the guard.
std::vector<BilinearProduct> enumerate_products(const SearchSpec& spec,
                                                Execution exec = Execution::Parallel);

/// Candidate with the given index in enumeration order (for complement sampling).
BilinearProduct candidate_product(const SearchSpec& spec, std::uint64_t index);

struct Orbit {
  BilinearProduct representative; ///< lexicographically least member
  std::vector<std::size_t> members; ///< indices into the hit list
  std::size_t size() const { return members.size(); }
};

/// |GL_n(F_p)|.
std::uint64_t general_linear_order(std::size_t dim, unsigned p);

/// Partitions hits (all on the same g, n) into isomorphism classes under
/// simultaneous change of basis by GL_n(F_p). Orbits are ordered by their
/// first member.
std::vector<Orbit> orbit_reduce(const std::vector<BilinearProduct>& hits, const LieAlgebra& g,
                                const LieAlgebra& n, std::uint64_t guard = default_search_guard,
                                Execution exec = Execution::Parallel);

/// Whether two structures over the same F_p are related by a change of basis.
bool are_isomorphic_fp(const PostLiePair& a, const PostLiePair& b,
                       std::uint64_t guard = default_search_guard);

/// Basis-independent data of a Lie algebra used to recognise classes over F_p.
struct FpInvariants {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::size_t derived2_dim = 0;
  std::size_t center_dim = 0;
  bool nilpotent = false;
  /// For dim 3 with [g,g] two-dimensional and abelian: M = ad(x) on [g,g],
  /// x outside [g,g]. Whether M is scalar, and tr(M)^2 / det(M).
  std::optional<bool> scalar_action;
  std::optional<Scalar> trace_ratio;

  bool operator==(const FpInvariants&) const = default;
  std::string to_string() const;
};

FpInvariants fp_invariants(const LieAlgebra& l);

/// φ-ansatz sweep: indices of φ (row-major base-p digits, most significant
/// first) in [begin, end) for which x·y = {φx,y} is a structure on (g_φ, n).
std::vector<std::uint64_t> phi_sweep(const LieAlgebra& n, std::uint64_t begin, std::uint64_t end,
                                     Execution exec = Execution::Parallel);
Matrix phi_from_index(const LieAlgebra& n, std::uint64_t index);

struct ProbeHit {
  Matrix phi;
  FpInvariants invariants;
  bool matches = false;
};

struct ProbeReport {
  std::string target;
  std::string n_name;
  unsigned p = 0;
  std::uint64_t endomorphisms = 0;
  std::vector<ProbeHit> valid; ///< every φ giving a structure
  std::vector<const ProbeHit*> matching() const;
  std::string banner() const;
  std::string to_text() const;
};

/// Sweeps all p^9 endomorphisms φ of a three-dimensional n with trivial center
/// over F_p, p ∈ {5, 7}, and reports the structures whose induced g matches
/// `target`: "perfect", "any", or a built-in name ("sl2", "r3",
/// "r3_lambda(λ)", "n3", "abelian").
ProbeReport nonexistence_probe(std::string_view target, const LieAlgebra& n,
                               Execution exec = Execution::Parallel);

} // namespace postlie
