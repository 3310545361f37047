#pragma once

// Brute-force references for the tests. Nothing here calls the symmetric
// function layer: everything is built from monomials by enumeration.

#include <functional>
#include <random>
#include <vector>

#include "symloci/partition.hpp"
#include "symloci/poly.hpp"

namespace oracle {

using symloci::ContextPtr;
using symloci::Monomial;
using symloci::Partition;
using symloci::Poly;
using symloci::Scalar;
using symloci::Term;

inline Poly monomial(const ContextPtr& ctx, const std::vector<int>& slots, const std::vector<int>& exps,
                     const Scalar& c = Scalar(1)) {
  Monomial m;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (exps[i] != 0) m.set(slots[i], m[slots[i]] + exps[i]);
  }
  return Poly::from_terms(ctx, {Term{m, c}});
}

inline Poly var(const ContextPtr& ctx, int slot) { return Poly::variable(ctx, ctx->var(slot)); }

/// Every exponent vector of length n and total degree d.
inline void compositions(int n, int d, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      v[static_cast<std::size_t>(pos)] = left;
      visit(v);
      return;
    }
    for (int x = left; x >= 0; --x) {
      v[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, left - x);
    }
  };
  if (n == 0) {
    if (d == 0) visit(v);
    return;
  }
  rec(0, d);
}

/// h_d as the sum of all monomials of degree d.
inline Poly complete(const ContextPtr& ctx, const std::vector<int>& slots, int d) {
  Poly out(ctx);
  if (d < 0) return out;
  compositions(static_cast<int>(slots.size()), d, [&](const std::vector<int>& v) { out += monomial(ctx, slots, v); });
  return out;
}

/// e_d as the sum of squarefree monomials of degree d.
inline Poly elementary(const ContextPtr& ctx, const std::vector<int>& slots, int d) {
  Poly out(ctx);
  if (d < 0) return out;
  compositions(static_cast<int>(slots.size()), d, [&](const std::vector<int>& v) {
    for (int x : v) {
      if (x > 1) return;
    }
    out += monomial(ctx, slots, v);
  });
  return out;
}

/// Degree-d coefficient of prod(1 - b t) / prod(1 - a t).
inline Poly complete_difference(const ContextPtr& ctx, const std::vector<int>& a, const std::vector<int>& b, int d) {
  Poly out(ctx);
  for (int j = 0; j <= d; ++j) {
    Poly t = complete(ctx, a, d - j) * elementary(ctx, b, j);
    out += (j % 2 == 0) ? t : -t;
  }
  return out;
}

/// Q_d as sum over exponent vectors alpha of 2^{#nonzero parts} x^alpha.
inline Poly q_row(const ContextPtr& ctx, const std::vector<int>& slots, int d) {
  Poly out(ctx);
  if (d < 0) return out;
  compositions(static_cast<int>(slots.size()), d, [&](const std::vector<int>& v) {
    int nonzero = 0;
    for (int x : v) nonzero += x > 0;
    out += monomial(ctx, slots, v, Scalar(std::int64_t{1} << nonzero));
  });
  return out;
}

/// Skew Schur polynomial lambda/mu in the variables `slots` as a sum over
/// semistandard tableaux.
inline Poly ssyt(const ContextPtr& ctx, const std::vector<int>& slots, const Partition& lambda,
                 const Partition& mu = Partition()) {
  const int n = static_cast<int>(slots.size());
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.length(); ++r) {
    for (int c = mu[r]; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  std::vector<std::vector<int>> grid(lambda.length(), std::vector<int>(static_cast<std::size_t>(lambda.largest()), 0));
  Poly out(ctx);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out += monomial(ctx, slots, weight);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > mu[static_cast<std::size_t>(r)]) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && c >= mu[static_cast<std::size_t>(r - 1)]) {
      lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    }
    for (int v = lo; v <= n; ++v) {
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++weight[static_cast<std::size_t>(v - 1)];
      rec(k + 1);
      --weight[static_cast<std::size_t>(v - 1)];
    }
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  rec(0);
  return out;
}

/// Q_lambda (or P_lambda when `p_form`) for strict lambda as a sum over marked
/// shifted tableaux. Letters 1' < 1 < 2' < 2 < ... are coded 1, 2, 3, ...; odd
/// codes are primed. Primed letters repeat at most once per row, unprimed at
/// most once per column; P forbids primes on the diagonal.
inline Poly shifted(const ContextPtr& ctx, const std::vector<int>& slots, const Partition& lambda, bool p_form) {
  const int n = static_cast<int>(slots.size());
  const int rows = static_cast<int>(lambda.length());
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r) {
    for (int c = r; c < r + lambda[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  }
  const int width = rows == 0 ? 0 : lambda[0];
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(width + rows), 0));
  Poly out(ctx);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  auto at = [&](int r, int c) -> int& { return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out += monomial(ctx, slots, weight);
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= 2 * n; ++v) {
      const bool primed = v % 2 == 1;
      if (p_form && primed && r == c) continue;
      if (c > r) {
        int left = at(r, c - 1);
        if (v < left || (primed && v == left)) continue;
      }
      if (r > 0 && c >= r) {  // cell above exists when c >= r (shifted rows start at r-1)
        int up = at(r - 1, c);
        if (v < up || (!primed && v == up)) continue;
      }
      at(r, c) = v;
      ++weight[static_cast<std::size_t>((v - 1) / 2)];
      rec(k + 1);
      --weight[static_cast<std::size_t>((v - 1) / 2)];
      at(r, c) = 0;
    }
  };
  rec(0);
  return out;
}

/// prod over i < j (i <= j when `diagonal`) of (x_i + x_j).
inline Poly pair_sums(const ContextPtr& ctx, const std::vector<int>& slots, bool diagonal) {
  Poly out(ctx, Scalar(1));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (std::size_t j = diagonal ? i : i + 1; j < slots.size(); ++j) out *= var(ctx, slots[i]) + var(ctx, slots[j]);
  }
  return out;
}

/// prod over all pairs of (a + sign * b).
inline Poly cross(const ContextPtr& ctx, const std::vector<int>& a, const std::vector<int>& b, int sign = 1) {
  Poly out(ctx, Scalar(1));
  for (int x : a) {
    for (int y : b) out *= sign > 0 ? var(ctx, x) + var(ctx, y) : var(ctx, x) - var(ctx, y);
  }
  return out;
}

/// All weakly decreasing sequences of length `rows` with entries in [0, cols],
/// by filtering every tuple.
inline std::vector<Partition> rectangle_by_filter(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> v(static_cast<std::size_t>(rows), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rows) {
      for (int i = 1; i < rows; ++i) {
        if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(i - 1)]) return;
      }
      out.emplace_back(v);
      return;
    }
    for (int x = 0; x <= cols; ++x) {
      v[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

/// Random polynomial in `slots` with at most `terms` terms of degree <= max_degree.
inline Poly random_poly(std::mt19937& rng, const ContextPtr& ctx, const std::vector<int>& slots, int max_degree,
                        int terms, bool rational = false) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, slots.empty() ? 0 : slots.size() - 1);
  Poly out(ctx);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(slots.size(), 0);
    int d = deg(rng);
    for (int k = 0; k < d && !slots.empty(); ++k) ++e[pick(rng)];
    out += monomial(ctx, slots, e, rational ? Scalar(coeff(rng), den(rng)) : Scalar(coeff(rng)));
  }
  return out;
}

}  // namespace oracle
