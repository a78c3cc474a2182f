#pragma once

// Brute-force reference computations for the tests. They read only raw
// structure constants and use their own elimination, so they share no code
// with the quotient and solver routines they are compared against.

#include "coring/module.hpp"

#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;

inline std::size_t rank(std::vector<Row> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const coring::Matrix& m) {
  std::vector<Row> rows(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rank(std::move(rows));
}

/// dim of M (x)_A N, quotienting every pair (not only grade-matched ones).
inline std::size_t tensor_dim(const coring::Bimodule& m, const coring::Bimodule& n) {
  const std::size_t dm = m.dim(), dn = n.dim(), da = m.right_ring()->dim();
  if (dm * dn == 0) return 0;
  std::vector<Row> rel;
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t y = 0; y < dn; ++y) {
        Row r(dm * dn);
        for (const auto& [k, c] : m.right_act(x, a).entries) r[k * dn + y] += c;
        for (const auto& [k, c] : n.left_act(a, y).entries) r[x * dn + k] -= c;
        rel.push_back(std::move(r));
      }
  return dm * dn - rank(std::move(rel));
}

/// dim of the space of maps M -> N commuting with the requested actions.
inline std::size_t hom_dim(const coring::Bimodule& m, const coring::Bimodule& n, bool left, bool right) {
  const std::size_t dm = m.dim(), dn = n.dim();
  const std::size_t unknowns = dm * dn;
  if (unknowns == 0) return 0;
  std::vector<Row> eqs;
  auto f = [dm](std::size_t t, std::size_t k) { return t * dm + k; };
  if (right) {
    for (std::size_t x = 0; x < dm; ++x)
      for (std::size_t a = 0; a < m.right_ring()->dim(); ++a)
        for (std::size_t t = 0; t < dn; ++t) {
          Row r(unknowns);
          for (const auto& [k, c] : m.right_act(x, a).entries) r[f(t, k)] += c;
          for (std::size_t s = 0; s < dn; ++s)
            for (const auto& [k, c] : n.right_act(s, a).entries)
              if (k == t) r[f(s, x)] -= c;
          eqs.push_back(std::move(r));
        }
  }
  if (left) {
    for (std::size_t x = 0; x < dm; ++x)
      for (std::size_t b = 0; b < m.left_ring()->dim(); ++b)
        for (std::size_t t = 0; t < dn; ++t) {
          Row r(unknowns);
          for (const auto& [k, c] : m.left_act(b, x).entries) r[f(t, k)] += c;
          for (std::size_t s = 0; s < dn; ++s)
            for (const auto& [k, c] : n.left_act(b, s).entries)
              if (k == t) r[f(s, x)] -= c;
          eqs.push_back(std::move(r));
        }
  }
  return unknowns - rank(std::move(eqs));
}

/// dim of A (x)_B A for the ring morphism psi: B -> A.
inline std::size_t sweedler_dim(const coring::RingMorphism& psi) {
  const auto& a = *psi.target;
  const std::size_t n = a.dim();
  auto times = [&](std::size_t x, const coring::Vector& v, bool on_right) {
    Row out(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const auto& p = on_right ? a.product(x, j) : a.product(j, x);
      for (const auto& [k, c] : p.entries) out[k] += v[j] * c;
    }
    return out;
  };
  std::vector<Row> rel;
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& image : psi.images)
      for (std::size_t y = 0; y < n; ++y) {
        Row r(n * n);
        Row xb = times(x, image, true);
        Row by = times(y, image, false);
        for (std::size_t k = 0; k < n; ++k) {
          r[k * n + y] += xb[k];
          r[x * n + k] -= by[k];
        }
        rel.push_back(std::move(r));
      }
  return n * n - rank(std::move(rel));
}

/// E_ij E_kl = delta_jk E_il on labels "Eij"; empty when the product is zero.
inline std::string matrix_unit_product(const std::string& x, const std::string& y) {
  if (x[2] != y[1]) return {};
  return std::string("E") + x[1] + y[2];
}

}  // namespace oracle
