#include "symloci/gysin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "symloci/schur.hpp"

namespace symloci {

namespace {

Poly var(const ContextPtr& ctx, int slot) { return Poly::variable(ctx, ctx->var(slot)); }

Poly vandermonde(const ContextPtr& ctx, const std::vector<int>& slots) {
  Poly out(ctx, Scalar(1));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (std::size_t j = i + 1; j < slots.size(); ++j) out *= var(ctx, slots[i]) - var(ctx, slots[j]);
  }
  return out;
}

// N / prod_{i<j}(a_i - a_j) for N antisymmetric in `slots`: every strictly
// decreasing exponent vector lambda + delta contributes its coefficient times
// s_lambda.
Poly divide_by_bialternant(const Poly& n, const std::vector<int>& slots) {
  const ContextPtr& ctx = n.context();
  const int e = static_cast<int>(slots.size());
  std::map<Partition, std::vector<Term>> groups;
  for (const auto& t : n.terms()) {
    std::vector<int> lambda;
    bool strict = true;
    int previous = -1;
    for (int i = 0; i < e && strict; ++i) {
      int a = t.mono[slots[static_cast<std::size_t>(i)]];
      if (i > 0 && a >= previous) strict = false;
      previous = a;
      lambda.push_back(a - (e - 1 - i));
    }
    if (!strict) continue;
    Monomial rest = t.mono;
    for (int s : slots) rest.set(s, 0);
    groups[Partition(lambda)].push_back(Term{rest, t.coeff});
  }
  Alphabet a = Alphabet::of_slots(ctx, slots);
  Poly out(ctx);
  for (auto& [lambda, terms] : groups) out += Poly::from_terms(ctx, std::move(terms)) * schur_s(lambda, a);
  return out;
}

}  // namespace

Poly grassmann_pushforward(const Poly& p, const std::vector<int>& slots, int q, PushMethod method) {
  const int e = static_cast<int>(slots.size());
  if (q < 0 || q > e) throw std::invalid_argument("quotient rank out of range");
  if (std::set<int>(slots.begin(), slots.end()).size() != slots.size()) throw std::invalid_argument("repeated root");
  const int r = e - q;
  if (q == 0 || r == 0 || p.is_zero()) return p;
  if (!p.context()) return Poly();  // a constant drops to negative degree
  const ContextPtr& ctx = p.context();
  std::vector<int> quot(slots.begin(), slots.begin() + q);
  std::vector<int> sub(slots.begin() + q, slots.end());
  if (!is_symmetric_in_groups(p, {quot, sub})) {
    throw NotSymmetric("push-forward input is not symmetric in the quotient and subbundle roots");
  }
  if (e > 24) throw std::invalid_argument("too many roots for the coset sum");

  // 1/prod_{t in T, u not in T}(a_t - a_u) = sign_T V_T V_{T^c} / V.
  Poly numerator(ctx);
  std::vector<int> images(static_cast<std::size_t>(ctx->size()));
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (__builtin_popcount(mask) != q) continue;
    std::vector<int> in, out;
    int inversions = 0;
    for (int i = 0; i < e; ++i) {
      if (mask & (1u << i)) {
        in.push_back(slots[static_cast<std::size_t>(i)]);
        inversions += static_cast<int>(out.size());
      } else {
        out.push_back(slots[static_cast<std::size_t>(i)]);
      }
    }
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < q; ++i) images[static_cast<std::size_t>(quot[static_cast<std::size_t>(i)])] = in[static_cast<std::size_t>(i)];
    for (int j = 0; j < r; ++j) images[static_cast<std::size_t>(sub[static_cast<std::size_t>(j)])] = out[static_cast<std::size_t>(j)];
    Poly term = permute_slots(p, images) * vandermonde(ctx, in) * vandermonde(ctx, out);
    if (inversions % 2 == 1) {
      numerator -= term;
    } else {
      numerator += term;
    }
  }
  if (method == PushMethod::bialternant) return divide_by_bialternant(numerator, slots);
  for (int i = 0; i < e; ++i) {
    for (int j = i + 1; j < e; ++j) {
      numerator = exact_div(numerator, var(ctx, slots[static_cast<std::size_t>(i)]) - var(ctx, slots[static_cast<std::size_t>(j)]));
    }
  }
  return numerator;
}

Scalar pushforward_coefficient(int e, int q, int k) {
  const int r = e - q;
  if (((q - k) * r) % 2 != 0) return Scalar(0);
  return binomial((e - k) / 2, (q - k) / 2);
}

PushforwardCheck verify_pushforward_coefficient(const Partition& shape, int e, int q, PushMethod method) {
  if (!shape.is_strict()) throw std::invalid_argument("strict partition required");
  const int k = static_cast<int>(shape.length());
  if (q < 0 || q > e) throw std::invalid_argument("quotient rank out of range");
  if (k > q) throw std::invalid_argument("partition longer than the quotient rank");
  ContextPtr ctx = VarContext::create({{"a", e, true}});
  Alphabet all = Alphabet::of_block(ctx, "a");
  Alphabet quot = Alphabet::of_range(ctx, "a", 1, q);
  Alphabet sub = Alphabet::of_range(ctx, "a", q + 1, e - q);
  Poly integrand(ctx, Scalar(1));
  for (int i = 0; i < quot.size(); ++i) {
    for (int j = 0; j < sub.size(); ++j) integrand *= quot.root(i) + sub.root(j);
  }
  integrand *= schur_p(shape, quot);
  PushforwardCheck out;
  out.computed = grassmann_pushforward(integrand, all.slots(), q, method);
  out.d = pushforward_coefficient(e, q, k);
  Poly target = schur_p(shape, all);
  out.expected = target.scaled(out.d);
  if (out.computed.is_zero()) {
    out.observed = Scalar(0);
  } else if (!target.is_zero() && out.computed.leading_term().mono == target.leading_term().mono) {
    Scalar c = out.computed.leading_term().coeff / target.leading_term().coeff;
    if (out.computed == target.scaled(c)) out.observed = c;
  }
  return out;
}

ModelContext flag_model(int f, int n) { return ModelContext::surjection(f, n, {{"u", f + n, true}}); }

Poly flag_pushforward(const ModelContext& model, int p, const FlagIntegrand& integrand, FlagRoute route,
                      PushMethod method) {
  if (model.mode() != ModelMode::surjection) throw std::invalid_argument("flag push-forward needs the surjection model");
  const int f = model.f();
  const int n = model.n();
  const int e = f + n;
  if (p < 0 || p > f) throw std::invalid_argument("p out of range");
  const ContextPtr& ctx = model.context();
  Alphabet s = Alphabet::of_range(ctx, "f", 1, f - p);
  Alphabet fs = Alphabet::of_range(ctx, "f", f - p + 1, p);  // roots of F/S

  std::vector<int> outer = fs.slots();
  for (int slot : s.slots()) outer.push_back(slot);

  Poly over_g;
  if (route == FlagRoute::tower) {
    // C = E/S has roots F/S + K; R/S is the rank-n subbundle, put on the K slots.
    Alphabet rs = Alphabet::of_block(ctx, "k");
    Poly integrand_poly = integrand(s, VirtualAlphabet(rs));
    std::vector<int> inner = fs.slots();
    for (int slot : rs.slots()) inner.push_back(slot);
    over_g = grassmann_pushforward(integrand_poly, inner, p, method);
  } else {
    if (!ctx->has_block("u") || ctx->block_size("u") != e) throw std::invalid_argument("embedded route needs flag_model");
    Alphabet u_quot = Alphabet::of_range(ctx, "u", 1, p);          // E/R'
    Alphabet r_prime = Alphabet::of_range(ctx, "u", p + 1, e - p);  // R'
    Poly integrand_poly = integrand(s, VirtualAlphabet(r_prime, s));
    // c_top(S'^* (x) E/R') = prod (u_j - x_i).
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < u_quot.size(); ++j) integrand_poly *= u_quot.root(j) - s.root(i);
    }
    Poly over_e = grassmann_pushforward(integrand_poly, Alphabet::of_block(ctx, "u").slots(), p, method);
    // Symmetric in u now: read u as the roots of E = F + K.
    Alphabet big_e = model.base('E');
    std::map<VarId, Poly> images;
    for (int slot = 0; slot < ctx->size(); ++slot) images.emplace(ctx->var(slot), var(ctx, slot));
    for (int i = 0; i < e; ++i) images[VarId{"u", i + 1}] = big_e.root(i);
    over_g = apply_substitution(over_e, images, ctx);
  }
  return grassmann_pushforward(over_g, outer, p, method);
}

}  // namespace symloci
