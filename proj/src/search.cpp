#include "postlie/search.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include <omp.h>

#include "postlie/catalog.hpp"

namespace postlie {

std::uint64_t search_guard_from_env() {
  const char* raw = std::getenv("POSTLIE_GUARD");
  if (!raw || !*raw)
    return default_search_guard;
  std::uint64_t value = 0;
  std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw Error("POSTLIE_GUARD must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

namespace {

constexpr std::size_t max_dim = 3;
using Table = std::array<std::uint32_t, max_dim * max_dim * max_dim>;

std::size_t at(std::size_t d, std::size_t i, std::size_t j, std::size_t k) {
  return (i * d + j) * d + k;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    out *= base;
  }
  return out;
}

Table pack(const LieAlgebra& l) {
  Table t{};
  const auto d = l.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto v = l.bracket(i, j);
      for (std::size_t k = 0; k < d; ++k)
        t[at(d, i, j, k)] = v[k].residue();
    }
  return t;
}

Table pack(const BilinearProduct& m) {
  Table t{};
  const auto d = m.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        t[at(d, i, j, k)] = m(i, j)[k].residue();
  return t;
}

BilinearProduct unpack(const Table& t, Field f, std::size_t d) {
  BilinearProduct m(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector v;
      for (std::size_t k = 0; k < d; ++k)
        v.emplace_back(f, static_cast<long>(t[at(d, i, j, k)]));
      m.set(i, j, std::move(v));
    }
  return m;
}

void require_prime_field(Field f, const char* what) {
  if (f.is_rational())
    throw Error(std::string(what) + " works over F_p only");
}

void validate_spec(const SearchSpec& spec) {
  require_prime_field(spec.g.field(), "search");
  if (spec.n.field() != spec.g.field())
    throw Error("g and n must share a field");
  if (spec.g.dim() != spec.n.dim())
    throw Error("g and n must share a dimension");
  if (spec.dim() == 0 || spec.dim() > max_dim)
    throw Error("search supports dimensions 1 to 3");
  spec.g.validated();
  spec.n.validated();
}

/// Free slots (i, j, k) in enumeration order, most significant digit first.
std::vector<std::size_t> free_slots(std::size_t d, SearchMode mode) {
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (mode == SearchMode::AllProducts || i <= j)
        for (std::size_t k = 0; k < d; ++k)
          slots.push_back(at(d, i, j, k));
  return slots;
}

/// Packed-integer view of a search: decodes candidate indices and checks the
/// three structure axioms on basis elements.
struct Kernel {
  std::size_t d;
  std::uint32_t p;
  SearchMode mode;
  Table g, n;
  std::vector<std::size_t> slots;
  /// e_i·e_j − e_j·e_i for i > j, forced in symmetric mode: −([e_j,e_i] − {e_j,e_i}).
  Table forced{};

  explicit Kernel(const SearchSpec& spec)
      : d(spec.dim()), p(spec.prime()), mode(spec.mode), g(pack(spec.g)), n(pack(spec.n)),
        slots(free_slots(d, spec.mode)) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          auto diff = (g[at(d, j, i, k)] + p - n[at(d, j, i, k)]) % p;
          forced[at(d, i, j, k)] = (p - diff) % p;
        }
  }

  void decode(std::uint64_t index, Table& c) const {
    for (auto s = slots.rbegin(); s != slots.rend(); ++s) {
      c[*s] = static_cast<std::uint32_t>(index % p);
      index /= p;
    }
    if (mode == SearchMode::SymmetricPart)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j)
          for (std::size_t k = 0; k < d; ++k)
            c[at(d, i, j, k)] = (c[at(d, j, i, k)] + forced[at(d, i, j, k)]) % p;
  }

  /// Σ_m a_m T[(m, b)] or T[(b, m)] contracted against a coefficient row.
  bool accepts(const Table& c) const {
    const std::uint64_t P = p;
    if (mode == SearchMode::AllProducts)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            auto lhs = (c[at(d, i, j, k)] + P - c[at(d, j, i, k)]) % P;
            auto rhs = (g[at(d, i, j, k)] + P - n[at(d, i, j, k)]) % P;
            if (lhs != rhs)
              return false;
          }
    // x·{y,z} = {x·y,z} + {y,x·z}
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k)
          for (std::size_t r = 0; r < d; ++r) {
            std::uint64_t lhs = 0, rhs = 0;
            for (std::size_t m = 0; m < d; ++m) {
              lhs += std::uint64_t(n[at(d, j, k, m)]) * c[at(d, i, m, r)];
              rhs += std::uint64_t(c[at(d, i, j, m)]) * n[at(d, m, k, r)];
              rhs += std::uint64_t(c[at(d, i, k, m)]) * n[at(d, j, m, r)];
            }
            if (lhs % P != rhs % P)
              return false;
          }
    // [x,y]·z = x·(y·z) − y·(x·z)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t r = 0; r < d; ++r) {
            std::uint64_t lhs = 0, plus = 0, minus = 0;
            for (std::size_t m = 0; m < d; ++m) {
              lhs += std::uint64_t(g[at(d, i, j, m)]) * c[at(d, m, k, r)];
              plus += std::uint64_t(c[at(d, j, k, m)]) * c[at(d, i, m, r)];
              minus += std::uint64_t(c[at(d, i, k, m)]) * c[at(d, j, m, r)];
            }
            if ((lhs + minus) % P != plus % P)
              return false;
          }
    return true;
  }
};

template <typename Accept>
std::vector<std::uint64_t> parallel_filter(std::uint64_t begin, std::uint64_t end, Accept accept) {
  std::vector<std::uint64_t> out;
  const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < count; ++t) {
      auto index = begin + static_cast<std::uint64_t>(t);
      if (accept(index))
        local.push_back(index);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::size_t free_coefficient_count(const SearchSpec& spec) {
  return free_slots(spec.dim(), spec.mode).size();
}

std::uint64_t search_space_size(const SearchSpec& spec) {
  auto size = checked_power(spec.prime(), free_coefficient_count(spec));
  if (!size)
    throw Error("search space does not fit in 64 bits");
  return *size;
}

BilinearProduct candidate_product(const SearchSpec& spec, std::uint64_t index) {
  validate_spec(spec);
  if (index >= search_space_size(spec))
    throw Error("candidate index out of range");
  Kernel kernel(spec);
  Table c{};
  kernel.decode(index, c);
  return unpack(c, spec.g.field(), spec.dim());
}

std::vector<BilinearProduct> enumerate_products(const SearchSpec& spec, Execution exec) {
  validate_spec(spec);
  const auto total = checked_power(spec.prime(), free_coefficient_count(spec));
  if (!total || *total > spec.guard)
    throw Error("search space p^" + std::to_string(free_coefficient_count(spec)) +
                (total ? " = " + std::to_string(*total) : std::string()) + " exceeds guard " +
                std::to_string(spec.guard));
  const auto f = spec.g.field();
  const auto d = spec.dim();
  Kernel kernel(spec);
  std::vector<BilinearProduct> out;
  if (exec == Execution::Serial) {
    auto g = spec.g.validated();
    auto n = spec.n.validated();
    for (std::uint64_t index = 0; index < *total; ++index) {
      Table c{};
      kernel.decode(index, c);
      auto product = unpack(c, f, d);
      if (check_structure(g, n, product).passed())
        out.push_back(std::move(product));
    }
    return out;
  }
  auto hits = parallel_filter(0, *total, [&](std::uint64_t index) {
    Table c{};
    kernel.decode(index, c);
    return kernel.accepts(c);
  });
  for (auto index : hits) {
    Table c{};
    kernel.decode(index, c);
    out.push_back(unpack(c, f, d));
  }
  return out;
}

std::uint64_t general_linear_order(std::size_t dim, unsigned p) {
  std::uint64_t order = 1;
  auto pn = checked_power(p, dim);
  if (!pn)
    throw Error("group order overflow");
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    order *= *pn - pi;
    pi *= p;
  }
  return order;
}

namespace {

using Square = std::array<std::uint32_t, max_dim * max_dim>;

std::uint32_t power_mod(std::uint64_t b, std::uint32_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Gauss–Jordan inverse mod p of a row-major d×d matrix.
std::optional<Square> inverse_mod(const Square& m, std::size_t d, std::uint32_t p) {
  std::array<std::uint64_t, max_dim * 2 * max_dim> a{};
  const auto w = 2 * d;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c)
      a[r * w + c] = m[r * d + c];
    a[r * w + d + r] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot * w + col] == 0)
      ++pivot;
    if (pivot == d)
      return std::nullopt;
    for (std::size_t c = 0; c < w; ++c)
      std::swap(a[col * w + c], a[pivot * w + c]);
    auto inv = power_mod(a[col * w + col], p - 2, p);
    for (std::size_t c = 0; c < w; ++c)
      a[col * w + c] = a[col * w + c] * inv % p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r * w + col] == 0)
        continue;
      auto factor = a[r * w + col];
      for (std::size_t c = 0; c < w; ++c)
        a[r * w + c] = (a[r * w + c] + (p - factor) * a[col * w + c]) % p;
    }
  }
  Square out{};
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      out[r * d + c] = static_cast<std::uint32_t>(a[r * w + d + c]);
  return out;
}

struct GroupElement {
  Square m;
  Square inv;
};

std::vector<GroupElement> general_linear_group(std::size_t d, std::uint32_t p,
                                               std::uint64_t guard) {
  auto total = checked_power(p, d * d);
  if (!total || *total > guard)
    throw Error("group enumeration p^" + std::to_string(d * d) + " exceeds guard " +
                std::to_string(guard));
  std::vector<GroupElement> group;
  for (std::uint64_t index = 0; index < *total; ++index) {
    Square m{};
    auto rest = index;
    for (std::size_t t = d * d; t-- > 0;) {
      m[t] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (auto inv = inverse_mod(m, d, p))
      group.push_back({m, *inv});
  }
  return group;
}

/// Structure constants in the basis f_i = Σ_a P(a,i) e_a.
Table transport(const Table& c, const GroupElement& h, std::size_t d, std::uint32_t p) {
  Table out{};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::array<std::uint64_t, max_dim> v{};
      for (std::size_t a = 0; a < d; ++a) {
        auto pa = h.m[a * d + i];
        if (!pa)
          continue;
        for (std::size_t b = 0; b < d; ++b) {
          auto coeff = std::uint64_t(pa) * h.m[b * d + j] % p;
          if (!coeff)
            continue;
          for (std::size_t k = 0; k < d; ++k)
            v[k] = (v[k] + coeff * c[at(d, a, b, k)]) % p;
        }
      }
      for (std::size_t r = 0; r < d; ++r) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < d; ++k)
          s += std::uint64_t(h.inv[r * d + k]) * v[k];
        out[at(d, i, j, r)] = static_cast<std::uint32_t>(s % p);
      }
    }
  return out;
}

using Key = std::vector<std::uint32_t>;

Key make_key(const Table& product, const Table& g, const Table& n, std::size_t d) {
  const auto cube = d * d * d;
  Key key;
  key.reserve(3 * cube);
  key.insert(key.end(), product.begin(), product.begin() + cube);
  key.insert(key.end(), g.begin(), g.begin() + cube);
  key.insert(key.end(), n.begin(), n.begin() + cube);
  return key;
}

Key canonical_key(const Table& product, const Table& g, const Table& n,
                  const std::vector<GroupElement>& group, std::size_t d, std::uint32_t p) {
  std::optional<Key> best;
  for (const auto& h : group) {
    auto key = make_key(transport(product, h, d, p), transport(g, h, d, p), transport(n, h, d, p), d);
    if (!best || key < *best)
      best = std::move(key);
  }
  return *best;
}

Matrix to_matrix(const GroupElement& h, Field f, std::size_t d) {
  std::vector<Scalar> entries;
  for (std::size_t t = 0; t < d * d; ++t)
    entries.emplace_back(f, static_cast<long>(h.m[t]));
  return Matrix(f, d, d, std::move(entries));
}

Key flat_residues(const PostLiePair& pair) {
  const auto d = pair.dim();
  return make_key(pack(pair.product()), pack(pair.g()), pack(pair.n()), d);
}

} // namespace

std::vector<Orbit> orbit_reduce(const std::vector<BilinearProduct>& hits, const LieAlgebra& g,
                                const LieAlgebra& n, std::uint64_t guard, Execution exec) {
  validate_spec({g, n});
  const auto d = g.dim();
  const auto p = g.field().characteristic();
  for (const auto& h : hits)
    if (h.dim() != d || h.field() != g.field())
      throw Error("hit shape or field mismatch");
  auto group = general_linear_group(d, p, guard);

  std::vector<Key> keys(hits.size());
  if (exec == Execution::Serial) {
    // Reference path: generic change of basis on exact scalars.
    for (std::size_t h = 0; h < hits.size(); ++h) {
      PostLiePair pair(g, n, hits[h]);
      std::optional<Key> best;
      for (const auto& element : group) {
        auto key = flat_residues(change_basis(pair, to_matrix(element, g.field(), d)));
        if (!best || key < *best)
          best = std::move(key);
      }
      keys[h] = std::move(*best);
    }
  } else {
    const auto tg = pack(g), tn = pack(n);
    std::vector<Table> packed;
    for (const auto& h : hits)
      packed.push_back(pack(h));
    const auto count = static_cast<std::int64_t>(hits.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t h = 0; h < count; ++h)
      keys[h] = canonical_key(packed[h], tg, tn, group, d, p);
  }

  std::vector<Orbit> orbits;
  std::map<Key, std::size_t> by_key;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    auto [it, inserted] = by_key.emplace(keys[h], orbits.size());
    if (inserted)
      orbits.push_back({hits[h], {}});
    auto& orbit = orbits[it->second];
    orbit.members.push_back(h);
    auto flat = [&](const BilinearProduct& m) {
      auto t = pack(m);
      return Key(t.begin(), t.begin() + d * d * d);
    };
    if (flat(hits[h]) < flat(orbit.representative))
      orbit.representative = hits[h];
  }
  return orbits;
}

bool are_isomorphic_fp(const PostLiePair& a, const PostLiePair& b, std::uint64_t guard) {
  require_prime_field(a.field(), "are_isomorphic_fp");
  if (a.field() != b.field() || a.dim() != b.dim())
    throw Error("structures must share field and dimension");
  if (a.dim() == 0 || a.dim() > max_dim)
    throw Error("isomorphism test supports dimensions 1 to 3");
  const auto d = a.dim();
  const auto p = a.field().characteristic();
  auto group = general_linear_group(d, p, guard);
  auto key_of = [&](const PostLiePair& s) {
    return canonical_key(pack(s.product()), pack(s.g()), pack(s.n()), group, d, p);
  };
  return key_of(a) == key_of(b);
}

std::string FpInvariants::to_string() const {
  std::ostringstream os;
  os << "dim=" << dim << " derived=" << derived_dim << " derived2=" << derived2_dim
     << " center=" << center_dim << " nilpotent=" << (nilpotent ? "yes" : "no");
  if (scalar_action)
    os << " action=" << (*scalar_action ? "scalar" : "non-scalar");
  if (trace_ratio)
    os << " tr^2/det=" << *trace_ratio;
  return os.str();
}

FpInvariants fp_invariants(const LieAlgebra& raw) {
  auto l = raw.validated();
  const auto f = l.field();
  const auto d = l.dim();
  FpInvariants inv;
  inv.dim = d;
  auto whole = Subspace::whole(f, d);
  auto derived = bracket_span(l, whole, whole);
  auto derived2 = bracket_span(l, derived, derived);
  inv.derived_dim = derived.dim();
  inv.derived2_dim = derived2.dim();
  inv.center_dim = center(l).dim();
  inv.nilpotent = is_nilpotent(l);
  if (d == 3 && derived.dim() == 2 && derived2.dim() == 0) {
    std::size_t outside = 0;
    while (derived.contains(unit_vector(f, d, outside)))
      ++outside;
    auto x = unit_vector(f, d, outside);
    const auto& basis = derived.basis();
    std::vector<Vector> columns;
    for (const auto& b : basis)
      columns.push_back(*coordinates(basis, l.bracket(x, b), f, d));
    auto m = Matrix::from_columns(f, 2, columns);
    inv.scalar_action = m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
    auto det = determinant(m);
    if (!det.is_zero())
      inv.trace_ratio = m.trace() * m.trace() / det;
  }
  return inv;
}

namespace {

struct PhiKernel {
  std::size_t d;
  std::uint32_t p;
  Table n;

  /// φ[e_i,e_j] = {φe_i, φe_j} for i < j, where [e_i,e_j] = {φe_i,e_j} +
  /// {e_i,φe_j} + {e_i,e_j} is the induced bracket. φ(r,c) = digit r*d + c.
  bool accepts(std::uint64_t index) const {
    Square phi{};
    for (std::size_t t = d * d; t-- > 0;) {
      phi[t] = static_cast<std::uint32_t>(index % p);
      index /= p;
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        std::array<std::uint64_t, max_dim> g{};
        for (std::size_t m = 0; m < d; ++m) {
          g[m] = n[at(d, i, j, m)];
          for (std::size_t a = 0; a < d; ++a)
            g[m] += std::uint64_t(phi[a * d + i]) * n[at(d, a, j, m)] +
                    std::uint64_t(phi[a * d + j]) * n[at(d, i, a, m)];
          g[m] %= p;
        }
        for (std::size_t r = 0; r < d; ++r) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m)
            lhs += std::uint64_t(phi[r * d + m]) * g[m];
          for (std::size_t a = 0; a < d; ++a) {
            auto pa = phi[a * d + i];
            if (!pa)
              continue;
            for (std::size_t b = 0; b < d; ++b)
              rhs += std::uint64_t(pa) * phi[b * d + j] % p * n[at(d, a, b, r)];
          }
          if (lhs % p != rhs % p)
            return false;
        }
      }
    return true;
  }
};

void require_phi_algebra(const LieAlgebra& n) {
  require_prime_field(n.field(), "phi sweep");
  if (n.dim() == 0 || n.dim() > max_dim)
    throw Error("phi sweep supports dimensions 1 to 3");
  if (center(n.validated()).dim() != 0)
    throw Error("phi sweep needs an algebra with trivial center");
}

} // namespace

Matrix phi_from_index(const LieAlgebra& n, std::uint64_t index) {
  const auto d = n.dim();
  const auto p = n.field().characteristic();
  std::vector<Scalar> entries(d * d, Scalar::zero(n.field()));
  for (std::size_t t = d * d; t-- > 0;) {
    entries[t] = Scalar(n.field(), static_cast<long>(index % p));
    index /= p;
  }
  return Matrix(n.field(), d, d, std::move(entries));
}

std::vector<std::uint64_t> phi_sweep(const LieAlgebra& n, std::uint64_t begin, std::uint64_t end,
                                     Execution exec) {
  require_phi_algebra(n);
  const auto d = n.dim();
  const auto p = n.field().characteristic();
  const auto total = *checked_power(p, d * d);
  if (begin > end || end > total)
    throw Error("phi sweep range out of bounds");
  if (exec == Execution::Serial) {
    std::vector<std::uint64_t> out;
    auto base = n.validated();
    for (auto index = begin; index < end; ++index)
      if (product_from_endomorphism(base, phi_from_index(n, index)).report.passed())
        out.push_back(index);
    return out;
  }
  PhiKernel kernel{d, p, pack(n)};
  return parallel_filter(begin, end, [&](std::uint64_t index) { return kernel.accepts(index); });
}

std::vector<const ProbeHit*> ProbeReport::matching() const {
  std::vector<const ProbeHit*> out;
  for (const auto& hit : valid)
    if (hit.matches)
      out.push_back(&hit);
  return out;
}

std::string ProbeReport::banner() const {
  return "characteristic-" + std::to_string(p) +
         " evidence: exhaustive over F_" + std::to_string(p) +
         " only; results are not proofs over C";
}

std::string ProbeReport::to_text() const {
  std::ostringstream os;
  os << banner() << "\n";
  os << "phi-ansatz sweep: n = " << n_name << ", target g = " << target << ", p = " << p << "\n";
  os << "endomorphisms: " << endomorphisms << "\n";
  os << "structures: " << valid.size() << "\n";
  auto hits = matching();
  os << "matching target: " << hits.size() << "\n";
  for (const auto* hit : hits) {
    os << "  phi = [";
    for (std::size_t r = 0; r < hit->phi.rows(); ++r) {
      os << (r ? "; " : "");
      for (std::size_t c = 0; c < hit->phi.cols(); ++c)
        os << (c ? " " : "") << hit->phi(r, c);
    }
    os << "]  g: " << hit->invariants.to_string() << "\n";
  }
  return os.str();
}

ProbeReport nonexistence_probe(std::string_view target, const LieAlgebra& n, Execution exec) {
  require_prime_field(n.field(), "nonexistence_probe");
  const auto p = n.field().characteristic();
  if (p != 5 && p != 7)
    throw Error("nonexistence_probe supports p = 5 or 7, got " + std::to_string(p));
  if (n.dim() != 3)
    throw Error("nonexistence_probe needs a three-dimensional n");
  auto base = n.validated();

  std::function<bool(const FpInvariants&)> matches;
  if (target == "perfect") {
    matches = [](const FpInvariants& inv) { return inv.derived_dim == inv.dim; };
  } else if (target == "any") {
    matches = [](const FpInvariants&) { return true; };
  } else {
    auto wanted = fp_invariants(builtin_algebra(target, n.field(), 3));
    matches = [wanted](const FpInvariants& inv) { return inv == wanted; };
  }

  ProbeReport report;
  report.target = std::string(target);
  report.n_name = n.name().empty() ? "n" : n.name();
  report.p = p;
  report.endomorphisms = *checked_power(p, 9);
  for (auto index : phi_sweep(base, 0, report.endomorphisms, exec)) {
    auto phi = phi_from_index(base, index);
    auto induced = product_from_endomorphism(base, phi);
    ProbeHit hit{phi, fp_invariants(induced.g), false};
    hit.matches = matches(hit.invariants);
    report.valid.push_back(std::move(hit));
  }
  return report;
}

} // namespace postlie
