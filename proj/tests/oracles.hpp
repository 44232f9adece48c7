#pragma once

// Brute-force oracles for two-dimensional algebras over F_p, written directly
// on integer tables and sharing no code with the library.

#include <array>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

/// c[(i*2 + j)*2 + k] is the e_k coefficient of e_i·e_j.
using Table2 = std::array<int, 8>;

inline int idx(int i, int j, int k) { return (i * 2 + j) * 2 + k; }

inline int mod(long v, int p) { return static_cast<int>(((v % p) + p) % p); }

/// (e_i·e_j)·e_k coefficient vector, or e_i·(e_j·e_k).
inline std::array<int, 2> left_assoc(const Table2& c, int i, int j, int k, int p) {
  std::array<int, 2> out{};
  for (int r = 0; r < 2; ++r) {
    long s = 0;
    for (int m = 0; m < 2; ++m)
      s += long(c[idx(i, j, m)]) * c[idx(m, k, r)];
    out[r] = mod(s, p);
  }
  return out;
}

inline std::array<int, 2> right_assoc(const Table2& c, int i, int j, int k, int p) {
  std::array<int, 2> out{};
  for (int r = 0; r < 2; ++r) {
    long s = 0;
    for (int m = 0; m < 2; ++m)
      s += long(c[idx(j, k, m)]) * c[idx(i, m, r)];
    out[r] = mod(s, p);
  }
  return out;
}

/// Every commutative associative product on F_p^2, in lexicographic order of
/// (c_11, c_12, c_22) coefficient pairs.
inline std::vector<Table2> commutative_associative(int p) {
  std::vector<Table2> out;
  int total = 1;
  for (int k = 0; k < 6; ++k)
    total *= p;
  for (int code = 0; code < total; ++code) {
    std::array<int, 6> digit{};
    int rest = code;
    for (int k = 5; k >= 0; --k) {
      digit[k] = rest % p;
      rest /= p;
    }
    Table2 c{};
    c[idx(0, 0, 0)] = digit[0];
    c[idx(0, 0, 1)] = digit[1];
    c[idx(0, 1, 0)] = c[idx(1, 0, 0)] = digit[2];
    c[idx(0, 1, 1)] = c[idx(1, 0, 1)] = digit[3];
    c[idx(1, 1, 0)] = digit[4];
    c[idx(1, 1, 1)] = digit[5];
    bool assoc = true;
    for (int i = 0; i < 2 && assoc; ++i)
      for (int j = 0; j < 2 && assoc; ++j)
        for (int k = 0; k < 2 && assoc; ++k)
          assoc = left_assoc(c, i, j, k, p) == right_assoc(c, i, j, k, p);
    if (assoc)
      out.push_back(c);
  }
  return out;
}

/// Product table in the basis f_i = sum_a P(a,i) e_a, P = [[a b] [c d]].
inline Table2 transform(const Table2& t, int a, int b, int c, int d, int p) {
  const int P[2][2] = {{a, b}, {c, d}};
  long det = mod(long(a) * d - long(b) * c, p);
  long det_inv = 1;
  for (int e = 0; e < p - 2; ++e)
    det_inv = det_inv * det % p;
  const long inv[2][2] = {{mod(d * det_inv, p), mod(-b * det_inv, p)},
                          {mod(-c * det_inv, p), mod(a * det_inv, p)}};
  Table2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      long v[2] = {0, 0};
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          for (int k = 0; k < 2; ++k)
            v[k] += long(P[x][i]) * P[y][j] * t[idx(x, y, k)];
      for (int r = 0; r < 2; ++r)
        out[idx(i, j, r)] = mod(inv[r][0] * mod(v[0], p) + inv[r][1] * mod(v[1], p), p);
    }
  return out;
}

/// Number of GL_2(F_p) classes among `hits` (a union of classes), by a double
/// loop over hits and group elements.
inline std::size_t isomorphism_classes(const std::vector<Table2>& hits, int p) {
  std::map<Table2, std::size_t> index;
  for (std::size_t h = 0; h < hits.size(); ++h)
    index[hits[h]] = h;
  std::vector<std::size_t> parent(hits.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t h = 0; h < hits.size(); ++h)
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          for (int d = 0; d < p; ++d) {
            if (mod(long(a) * d - long(b) * c, p) == 0)
              continue;
            auto it = index.find(transform(hits[h], a, b, c, d, p));
            if (it != index.end())
              parent[find(it->second)] = find(h);
          }
  std::size_t roots = 0;
  for (std::size_t h = 0; h < hits.size(); ++h)
    roots += find(h) == h;
  return roots;
}

} // namespace oracle
