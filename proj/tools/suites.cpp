#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "symloci/chern.hpp"
#include "symloci/cli.hpp"
#include "symloci/gysin.hpp"
#include "symloci/locus.hpp"
#include "symloci/schur.hpp"

namespace symloci::cli {

namespace {

// A case returns an empty string on success, otherwise the reason.
struct Case {
  std::string name;
  std::string params;
  std::function<std::string()> run;
};

std::string kv(std::initializer_list<std::pair<const char*, int>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

std::string expect_eq(const Poly& got, const Poly& want, const std::string& what) {
  if (got == want) return {};
  return what + ": " + got.to_string() + " != " + want.to_string();
}

Poly one(const ContextPtr& ctx) { return Poly(ctx, Scalar(1)); }

// prod over i < j (i <= j when `diagonal`) of (a_i + a_j)
Poly pair_sums(const Alphabet& a, bool diagonal) {
  Poly out = one(a.context());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = diagonal ? i : i + 1; j < a.size(); ++j) out *= a.root(i) + a.root(j);
  }
  return out;
}

std::vector<Partition> strict_partitions(int max_weight) {
  std::vector<Partition> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& parts, int largest, int left) {
    out.emplace_back(parts);
    for (int v = std::min(largest, left); v >= 1; --v) {
      parts.push_back(v);
      rec(parts, v - 1, left - v);
      parts.pop_back();
    }
  };
  std::vector<int> parts;
  rec(parts, max_weight, max_weight);
  return out;
}

std::vector<Partition> small_partitions(int max_length, int max_weight) {
  std::vector<Partition> out;
  for (const auto& p : partitions_inside(rectangle(max_length, max_weight))) {
    if (p.weight() <= max_weight) out.push_back(p);
  }
  return out;
}

ContextPtr two_blocks(int n, int m) { return VarContext::create({{"a", n, true}, {"b", m, true}}); }

// ---- schur -------------------------------------------------------------------

void schur_cases(std::vector<Case>& out) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      out.push_back({"schur.resultant", kv({{"n", n}, {"m", m}}), [n, m] {
                       ContextPtr ctx = two_blocks(n, m);
                       Alphabet a = Alphabet::of_block(ctx, "a");
                       Alphabet b = Alphabet::of_block(ctx, "b");
                       Poly want = one(ctx);
                       for (int i = 0; i < n; ++i) {
                         for (int j = 0; j < m; ++j) want *= a.root(i) - b.root(j);
                       }
                       return expect_eq(schur_s(rectangle(n, m), VirtualAlphabet(a, b)), want, "resultant");
                     }});
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      out.push_back({"schur.factor-rectangle", kv({{"n", n}, {"m", m}}), [n, m]() -> std::string {
                       ContextPtr ctx = two_blocks(n, m);
                       Alphabet a = Alphabet::of_block(ctx, "a");
                       VirtualAlphabet ab(a, Alphabet::of_block(ctx, "b"));
                       Poly base = schur_s(rectangle(n, m), ab);
                       for (const auto& i : small_partitions(n, 4)) {
                         auto r = expect_eq(schur_s(add(rectangle(n, m), i), ab), base * schur_s(i, a), i.to_string());
                         if (!r.empty()) return r;
                       }
                       return {};
                     }});
    }
  }
  for (int n = 1; n <= 4; ++n) {
    out.push_back({"schur.factor-staircase", kv({{"n", n}}), [n]() -> std::string {
                     // Q_{rho_n + I} = Q_{rho_n} s_I and P_{rho_{n-1} + I} = P_{rho_{n-1}} s_I for l(I) <= n.
                     // With Q and rho_{n-1} the length grows when l(I) = n, costing a factor 2.
                     ContextPtr ctx = VarContext::create({{"a", n, true}});
                     Alphabet a = Alphabet::of_block(ctx, "a");
                     Poly q_full = schur_q(staircase(n), a);
                     Poly q_short = schur_q(staircase(n - 1), a);
                     Poly p_short = schur_p(staircase(n - 1), a);
                     for (const auto& i : small_partitions(n, 4)) {
                       Poly s = schur_s(i, a);
                       auto r = expect_eq(schur_q(add(staircase(n), i), a), q_full * s, "Q rho_n " + i.to_string());
                       if (r.empty()) r = expect_eq(schur_p(add(staircase(n - 1), i), a), p_short * s, "P " + i.to_string());
                       if (r.empty()) {
                         Poly want = (q_short * s).scaled(static_cast<int>(i.length()) == n ? 2 : 1);
                         r = expect_eq(schur_q(add(staircase(n - 1), i), a), want, "Q rho_{n-1} " + i.to_string());
                       }
                       if (!r.empty()) return r;
                     }
                     return {};
                   }});
    out.push_back({"schur.q-staircase", kv({{"n", n}}), [n]() -> std::string {
                     ContextPtr ctx = VarContext::create({{"a", n, true}});
                     Alphabet a = Alphabet::of_block(ctx, "a");
                     Poly q = schur_q(staircase(n), a);
                     auto r = expect_eq(q, pair_sums(a, true), "product");
                     if (!r.empty()) return r;
                     return expect_eq(q, schur_s(staircase(n), a).scaled(pow2(n)), "2^n s");
                   }});
  }
  for (int q = 1; q <= 4; ++q) {
    for (int size = 1; size <= 6; ++size) {
      out.push_back({"schur.p-staircase", kv({{"q", q}, {"size", size}}), [q, size] {
                       ContextPtr ctx = VarContext::create({{"a", size, true}});
                       Alphabet a = Alphabet::of_block(ctx, "a");
                       return expect_eq(schur_p(staircase(q), a), schur_s(staircase(q), a), "P = s");
                     }});
    }
  }
  for (int size = 1; size <= 4; ++size) {
    out.push_back({"schur.p-integral", kv({{"size", size}}), [size]() -> std::string {
                     ContextPtr ctx = VarContext::create({{"a", size, true}});
                     Alphabet a = Alphabet::of_block(ctx, "a");
                     for (const auto& i : strict_partitions(6)) {
                       Poly p = schur_q(i, a).scaled(pow2(-static_cast<int>(i.length())));
                       if (!p.has_integer_coefficients()) return "Q" + i.to_string() + " not divisible";
                     }
                     return {};
                   }});
    out.push_back({"schur.q-symmetric", kv({{"size", size}}), [size]() -> std::string {
                     ContextPtr ctx = VarContext::create({{"a", size, true}});
                     Alphabet a = Alphabet::of_block(ctx, "a");
                     for (int i = 0; i <= 6; ++i) {
                       if (!is_symmetric_in(q_sym(i, a), a.slots())) return "Q_" + std::to_string(i);
                     }
                     return {};
                   }});
  }
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      out.push_back({"schur.series-inverse", kv({{"a", n}, {"b", m}}), [n, m]() -> std::string {
                       ContextPtr ctx = two_blocks(n, m);
                       Alphabet a = Alphabet::of_block(ctx, "a");
                       Alphabet b = Alphabet::of_block(ctx, "b");
                       for (int d = 0; d <= 8; ++d) {
                         Poly sum(ctx);
                         for (int i = 0; i <= d; ++i) {
                           sum += complete_sym(i, VirtualAlphabet(a, b)) * complete_sym(d - i, VirtualAlphabet(b, a));
                         }
                         auto r = expect_eq(sum, Poly(ctx, Scalar(d == 0 ? 1 : 0)), "degree " + std::to_string(d));
                         if (!r.empty()) return r;
                       }
                       return {};
                     }});
    }
  }
  for (int f = 1; f <= 3; ++f) {
    for (int n = 0; n <= 2; ++n) {
      out.push_back({"schur.whitney", kv({{"f", f}, {"n", n}}), [f, n]() -> std::string {
                       ModelContext m = ModelContext::surjection(f, n);
                       for (int i = 0; i <= 6; ++i) {
                         Poly sum(m.context());
                         for (int j = 0; j <= i; ++j) {
                           sum += complete_sym(j, m.base('F')) * complete_sym(i - j, m.base('K'));
                         }
                         auto r = expect_eq(complete_sym(i, m.base('E')), sum, "degree " + std::to_string(i));
                         if (!r.empty()) return r;
                       }
                       return {};
                     }});
    }
  }
  for (int size = 1; size <= 3; ++size) {
    out.push_back({"schur.duality", kv({{"size", size}}), [size]() -> std::string {
                     ContextPtr ctx = VarContext::create({{"a", size, true}});
                     Alphabet a = Alphabet::of_block(ctx, "a");
                     std::map<VarId, Poly> negate;
                     for (int i = 0; i < size; ++i) negate.emplace(VarId{"a", i + 1}, -a.root(i));
                     for (int i = 0; i <= 6; ++i) {
                       Poly dual = complete_sym(i, a.dual());
                       Scalar sign(i % 2 == 0 ? 1 : -1);
                       auto r = expect_eq(dual, apply_substitution(complete_sym(i, a), negate, ctx), "substitution");
                       if (r.empty()) r = expect_eq(dual, complete_sym(i, a).scaled(sign), "sign");
                       if (r.empty()) {
                         r = expect_eq(complete_sym(i, VirtualAlphabet(Alphabet(), a)), elementary_sym(i, a).scaled(sign),
                                       "negative alphabet");
                       }
                       if (!r.empty()) return r;
                     }
                     return {};
                   }});
  }
  for (int seed = 1; seed <= 5; ++seed) {
    out.push_back({"schur.expansion-roundtrip", kv({{"seed", seed}}), [seed]() -> std::string {
                     std::mt19937 rng(static_cast<unsigned>(seed));
                     std::uniform_int_distribution<int> coeff(-5, 5);
                     ContextPtr ctx = VarContext::create({{"a", 3, true}});
                     Alphabet a = Alphabet::of_block(ctx, "a");
                     std::map<Partition, Scalar> want;
                     Poly p(ctx);
                     for (const auto& lambda : small_partitions(3, 5)) {
                       int c = coeff(rng);
                       if (c == 0) continue;
                       want.emplace(lambda, Scalar(c));
                       p += schur_s(lambda, a).scaled(Scalar(c));
                     }
                     return expand_schur_basis(p, "a").coefficients == want ? std::string() : "coefficient maps differ";
                   }});
  }
}

// ---- chern -------------------------------------------------------------------

void chern_cases(std::vector<Case>& out, const VerifyBounds& b) {
  const int max_f = b.max_f.value_or(4);
  const int max_n = b.max_n.value_or(3);
  for (int f = 1; f <= max_f; ++f) {
    for (int n = 0; n <= max_n; ++n) {
      for (Kernel kind : {Kernel::vee, Kernel::wedge}) {
        const bool vee = kind == Kernel::vee;
        out.push_back({vee ? "chern.vee" : "chern.wedge", kv({{"f", f}, {"n", n}}), [f, n, vee, kind]() -> std::string {
                         ModelContext m = ModelContext::surjection(f, n);
                         Poly qp = vee ? ctop_vee(m) : ctop_wedge(m);
                         Poly skew = vee ? ctop_vee_skew(m) : ctop_wedge_skew(m);
                         auto r = expect_eq(qp, ctop_product_oracle(m, kind), "product");
                         if (r.empty()) r = expect_eq(skew, qp, "skew-Schur form");
                         if (!r.empty()) return r;
                         const int degree = (vee ? f * (f + 1) / 2 : f * (f - 1) / 2) + n * f;
                         if (!qp.is_zero() && (!qp.is_homogeneous() || qp.total_degree() != degree)) return "degree";
                         return {};
                       }});
      }
      out.push_back({"chern.rank-zero-class", kv({{"f", f}, {"n", n}}), [f, n]() -> std::string {
                       ModelContext m = ModelContext::surjection(f, n);
                       LocusProblem sym{f + n, f, 0, Symmetry::symmetric};
                       auto r = expect_eq(expression_to_poly(class_of(sym), m), ctop_vee(m), "symmetric");
                       if (!r.empty()) return r;
                       LocusProblem skew{f + n, f, 0, Symmetry::skew};
                       return expect_eq(expression_to_poly(class_of(skew), m), ctop_wedge(m), "skew");
                     }});
    }
  }
  for (int e = 1; e <= 3; ++e) {
    for (int f = 1; f <= 3; ++f) {
      out.push_back({"chern.tensor", kv({{"e", e}, {"f", f}}), [e, f] {
                       ContextPtr ctx = two_blocks(e, f);
                       Alphabet a = Alphabet::of_block(ctx, "a");
                       Alphabet b = Alphabet::of_block(ctx, "b");
                       return expect_eq(ctop_tensor(a, b), product_of_sums(a, b), "tensor");
                     }});
    }
  }
}

// ---- gysin -------------------------------------------------------------------

Poly random_symmetric(std::mt19937& rng, const Alphabet& a, int max_weight) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Poly out(a.context());
  for (const auto& lambda : small_partitions(a.size(), max_weight)) out += schur_s(lambda, a).scaled(Scalar(coeff(rng)));
  return out;
}

void gysin_cases(std::vector<Case>& out, const VerifyBounds& b) {
  const int max_e = b.max_e.value_or(6);
  out.push_back({"gysin.small", "e=2 q=1", []() -> std::string {
                   ContextPtr ctx = VarContext::create({{"a", 2, true}});
                   Alphabet a = Alphabet::of_block(ctx, "a");
                   std::vector<int> slots = a.slots();
                   auto r = expect_eq(grassmann_pushforward(a.root(0), slots, 1), one(ctx), "a1");
                   if (r.empty()) r = expect_eq(grassmann_pushforward(a.root(0).pow(2), slots, 1), a.root(0) + a.root(1), "a1^2");
                   if (r.empty()) r = expect_eq(grassmann_pushforward(one(ctx), slots, 1), Poly(ctx), "1");
                   return r;
                 }});
  const auto shapes = strict_partitions(6);
  for (int e = 1; e <= max_e; ++e) {
    for (int q = 0; q <= e; ++q) {
      for (const auto& shape : shapes) {
        const int k = static_cast<int>(shape.length());
        if (k > q) continue;
        const bool top = k == q;
        if (!top && shape.weight() > 5) continue;
        std::string name = top ? "gysin.top-length" : k == q - 1 ? "gysin.length-one-less" : "gysin.coefficient";
        out.push_back({name, kv({{"e", e}, {"q", q}}) + " I=" + shape.to_string(), [=]() -> std::string {
                         PushforwardCheck c = verify_pushforward_coefficient(shape, e, q);
                         auto r = expect_eq(c.computed, c.expected, "d=" + c.d.to_string());
                         if (!r.empty()) return r;
                         if (top || k == q - 1) {
                           // Q form for full length; P_I(E) or zero one below it.
                           ContextPtr own = VarContext::create({{"a", e, true}});
                           Alphabet all = Alphabet::of_block(own, "a");
                           Poly want = top ? schur_q(shape, all).scaled(pow2(-k))
                                           : ((e - q) % 2 == 0 ? schur_p(shape, all) : Poly(own));
                           if (c.computed.to_string() != want.to_string()) return "special case";
                         }
                         if (e <= 5) {
                           PushforwardCheck alt = verify_pushforward_coefficient(shape, e, q, PushMethod::bialternant);
                           if (alt.computed.to_string() != c.computed.to_string()) r = "bialternant differs";
                         }
                         return r;
                       }});
      }
    }
  }
  for (int e = 2; e <= std::min(max_e, 4); ++e) {
    for (int q = 1; q < e; ++q) {
      out.push_back({"gysin.projection-formula", kv({{"e", e}, {"q", q}}), [e, q]() -> std::string {
                       std::mt19937 rng(static_cast<unsigned>(100 * e + q));
                       ContextPtr ctx = VarContext::create({{"a", e, true}});
                       Alphabet all = Alphabet::of_block(ctx, "a");
                       Alphabet quot = Alphabet::of_range(ctx, "a", 1, q);
                       Alphabet sub = Alphabet::of_range(ctx, "a", q + 1, e - q);
                       Poly p = random_symmetric(rng, quot, 4) * random_symmetric(rng, sub, 2);
                       Poly s = random_symmetric(rng, all, 2);
                       Poly lhs = grassmann_pushforward(p * s, all.slots(), q);
                       auto r = expect_eq(lhs, grassmann_pushforward(p, all.slots(), q) * s, "projection");
                       if (r.empty() && !is_symmetric_in(lhs, all.slots())) r = "result not symmetric";
                       if (r.empty()) r = expect_eq(grassmann_pushforward(p, all.slots(), q, PushMethod::bialternant),
                                                    grassmann_pushforward(p, all.slots(), q), "bialternant");
                       return r;
                     }});
    }
  }
  out.push_back({"gysin.flag-trivial", "f=2 p=0 n=1", []() -> std::string {
                   ModelContext m = flag_model(2, 1);
                   FlagIntegrand g = [](const Alphabet& s, const VirtualAlphabet& rs) {
                     return schur_s(Partition{2}, s) * complete_sym(1, rs);
                   };
                   Poly want = schur_s(Partition{2}, m.base('F')) * complete_sym(1, m.base('K'));
                   auto r = expect_eq(flag_pushforward(m, 0, g), want, "tower");
                   if (r.empty()) r = expect_eq(flag_pushforward(m, 0, g, FlagRoute::embedded), want, "embedded");
                   return r;
                 }});
  out.push_back({"gysin.flag-single", "f=3 p=1 n=0", []() -> std::string {
                   ModelContext m = flag_model(3, 0);
                   FlagIntegrand g = [](const Alphabet& s, const VirtualAlphabet&) { return schur_s(Partition{3, 1}, s); };
                   Alphabet f = m.base('F');
                   Poly p = schur_s(Partition{3, 1}, Alphabet::of_range(m.context(), "f", 1, 2));
                   Poly want = grassmann_pushforward(p, {f.slots()[2], f.slots()[0], f.slots()[1]}, 1);
                   auto r = expect_eq(flag_pushforward(m, 1, g), want, "tower");
                   if (r.empty()) r = expect_eq(flag_pushforward(m, 1, g, FlagRoute::embedded), want, "embedded");
                   return r;
                 }});
}

// ---- locus -------------------------------------------------------------------

std::vector<LocusProblem> valid_problems(int max_e) {
  std::vector<LocusProblem> out;
  for (int e = 1; e <= max_e; ++e) {
    for (int f = 1; f <= e; ++f) {
      for (int r = 0; r <= f; ++r) {
        for (Symmetry s : {Symmetry::symmetric, Symmetry::skew}) {
          LocusProblem p{e, f, r, s};
          try {
            p.validate();
          } catch (const std::invalid_argument&) {
            continue;
          }
          out.push_back(p);
        }
      }
    }
  }
  return out;
}

std::string problem_params(const LocusProblem& p) {
  return kv({{"e", p.e}, {"f", p.f}, {"r", p.r}}) + " symmetry=" + to_string(p.symmetry);
}

Scalar eval_product(const std::vector<std::vector<int>>& factors, const std::vector<int>& tw) {
  Scalar out(1);
  for (const auto& f : factors) {
    Scalar s(0);
    for (int i : f) s += Scalar(tw[static_cast<std::size_t>(i)]);
    out *= s;
  }
  return out;
}

void locus_cases(std::vector<Case>& out, const VerifyBounds& b) {
  const struct {
    LocusProblem p;
    const char* text;
  } table[] = {
      {{4, 3, 2, Symmetry::symmetric}, "Q[2](F) + Q[1](F)*s[1](E-F)"},
      {{5, 3, 2, Symmetry::symmetric}, "Q[3](F) + Q[2](F)*s[1](E-F) + Q[1](F)*s[1,1](E-F)"},
      {{4, 3, 2, Symmetry::skew}, "P[1](F) + s[1](E-F)"},
      {{5, 3, 2, Symmetry::skew}, "P[2](F) + P[1](F)*s[1](E-F) + s[1,1](E-F)"},
      {{5, 4, 2, Symmetry::skew}, "P[2,1](F) + P[2](F)*s[1](E-F) + P[1](F)*s[2](E-F)"},
      {{3, 2, 1, Symmetry::skew}, "P[1](F)"},
      {{5, 4, 3, Symmetry::skew}, "P[1](F)"},
      {{7, 6, 5, Symmetry::skew}, "P[1](F)"},
      {{4, 2, 1, Symmetry::skew}, "P[2](F) + P[1](F)*s[1](E-F)"},
  };
  for (const auto& row : table) {
    out.push_back({"locus.class-table", problem_params(row.p), [row]() -> std::string {
                     std::string got = class_of(row.p).to_string();
                     return got == row.text ? std::string() : got;
                   }});
  }
  for (const auto& p : valid_problems(8)) {
    out.push_back({"locus.closed-form", problem_params(p), [p]() -> std::string {
                     ClassExpression x = class_of(p);
                     const int c = expected_codim(p);
                     for (const auto& t : x.terms) {
                       if (t.k.weight() + t.l.weight() != c) return "term of wrong degree";
                       if (!t.coefficient.is_integer()) return "non-integral coefficient";
                     }
                     if (p.symmetry == Symmetry::skew && p.r % 2 == 1) return {};
                     return class_via_mnemonic(p) == x ? std::string() : "mnemonic differs";
                   }});
  }
  for (const auto& p : valid_problems(b.max_e.value_or(5))) {
    out.push_back({"locus.pushforward", problem_params(p), [p] {
                     ModelContext m = ModelContext::surjection(p.f, p.n());
                     return expect_eq(class_via_pushforward(p, m), expression_to_poly(class_of(p), m), "push-forward");
                   }});
  }
  for (int f = 1; f <= 5; ++f) {
    for (int r = 0; r <= f; ++r) {
      out.push_back({"locus.equal-ranks", kv({{"f", f}, {"r", r}}), [f, r]() -> std::string {
                       ModelContext m = ModelContext::surjection(f, 0);
                       Alphabet F = m.base('F');
                       const int q = f - r;
                       Poly sym = expression_to_poly(class_of({f, f, r, Symmetry::symmetric}), m);
                       auto res = expect_eq(sym, schur_s(staircase(q), F).scaled(pow2(q)), "symmetric");
                       if (!res.empty() || r % 2 == 1) return res;
                       Poly skew = expression_to_poly(class_of({f, f, r, Symmetry::skew}), m);
                       return expect_eq(skew, schur_p(staircase(std::max(q - 1, 0)), F), "skew");
                     }});
    }
  }
  for (int e = 1; e <= 6; ++e) {
    for (int f = 1; f <= e; ++f) {
      out.push_back({"locus.maximal-minors", kv({{"e", e}, {"f", f}}), [e, f] {
                       ModelContext m = ModelContext::surjection(f, e - f);
                       Poly got = expression_to_poly(class_of({e, f, f - 1, Symmetry::symmetric}), m);
                       return expect_eq(got, complete_sym(e - f + 1, m.bundle("F-E*")), "maximal minors");
                     }});
    }
  }
  for (auto [e, f, r] : {std::tuple{3, 2, 0}, std::tuple{5, 4, 2}}) {
    out.push_back({"locus.pfaffian", kv({{"e", e}, {"f", f}, {"r", r}}), [e = e, f = f, r = r] {
                     ModelContext m = ModelContext::surjection(f, e - f);
                     Poly got = expression_to_poly(class_of({e, f, r, Symmetry::skew}), m);
                     return expect_eq(got, schur_s(staircase(e - r - 1), m.base('E')), "pfaffian");
                   }});
  }
  out.push_back({"locus.maximal-minors-expanded", "f=3 n=1,2", []() -> std::string {
                   ModelContext m1 = ModelContext::surjection(3, 1);
                   Poly lhs1 = complete_sym(2, m1.bundle("F-E*"));
                   Poly rhs1 = (schur_s(Partition{1}, m1.base('E')) * schur_s(Partition{1}, m1.base('F'))).scaled(2);
                   auto r = expect_eq(lhs1, rhs1, "e=4");
                   if (!r.empty()) return r;
                   ModelContext m2 = ModelContext::surjection(3, 2);
                   Alphabet E = m2.base('E');
                   Alphabet F = m2.base('F');
                   Poly lhs2 = complete_sym(3, m2.bundle("F-E*"));
                   Poly a = (schur_s(Partition{3}, F) + schur_s(Partition{1, 1}, E) * schur_s(Partition{1}, F)).scaled(2);
                   Poly b = (schur_s(Partition{1}, E) * schur_s(Partition{2}, F) + schur_s(Partition{1, 1, 1}, E)).scaled(2);
                   r = expect_eq(lhs2, a, "e=5");
                   if (r.empty()) r = expect_eq(lhs2, b, "e=5 second form");
                   return r;
                 }});
  out.push_back({"locus.degree-table", "all-ones", []() -> std::string {
                   const struct {
                     std::vector<int> e, f;
                     int r;
                     std::int64_t want;
                   } rows[] = {{{1, 1, 1, 1}, {1, 1, 1}, 2, 4},
                               {{1, 1, 1, 1, 1}, {1, 1, 1}, 2, 16},
                               {{1, 1, 1, 1}, {1, 1}, 1, 8},
                               {{1, 1, 1}, {1, 1}, 1, 2}};
                   for (const auto& row : rows) {
                     Scalar d = projective_degree(row.e, row.f, row.r, Symmetry::skew);
                     if (!(d == Scalar(row.want))) return "got " + d.to_string() + " want " + std::to_string(row.want);
                   }
                   return {};
                 }});
  out.push_back({"locus.degree-symbolic", "seed=7", []() -> std::string {
                   std::mt19937 rng(7);
                   std::uniform_int_distribution<int> twist(1, 9);
                   auto draw = [&](int n) {
                     std::vector<int> v(static_cast<std::size_t>(n));
                     for (auto& x : v) x = twist(rng);
                     return v;
                   };
                   for (int trial = 0; trial < 3; ++trial) {
                     // (e, f, r, factors over the E twists)
                     const struct {
                       int e, f, r;
                       std::vector<std::vector<int>> factors;
                     } rows[] = {{4, 3, 2, {{0, 1, 2, 3}}},
                                 {5, 3, 2, {{0, 1, 2, 3}, {0, 1, 2, 4}}},
                                 {4, 2, 1, {{0, 1}, {0, 1, 2, 3}}},
                                 {3, 2, 1, {{0, 1}}},
                                 {5, 4, 3, {{0, 1, 2, 3}}}};
                     for (const auto& row : rows) {
                       std::vector<int> et = draw(row.e);
                       std::vector<int> ft(et.begin(), et.begin() + row.f);
                       Scalar got = projective_degree(et, ft, row.r, Symmetry::skew);
                       Scalar want = eval_product(row.factors, et);
                       if (!(got == want)) return "e=" + std::to_string(row.e) + " f=" + std::to_string(row.f);
                     }
                   }
                   return {};
                 }});
}

// ---- identities --------------------------------------------------------------

void identity_cases(std::vector<Case>& out, const VerifyBounds& b) {
  const int max_f = b.max_f.value_or(4);
  const int max_p = b.max_p.value_or(1);
  const int max_n = b.max_n.value_or(1);
  for (Symmetry s : {Symmetry::symmetric, Symmetry::skew}) {
    for (int f = 1; f <= max_f; ++f) {
      for (int p = 1; p <= max_p && 2 * p < f; ++p) {
        for (int n = 0; n <= max_n; ++n) {
          out.push_back({"identities." + to_string(s), kv({{"f", f}, {"p", p}, {"n", n}}), [=]() -> std::string {
                           IdentityReport rep = verify_flag_identity(s, f, p, n);
                           auto r = expect_eq(rep.lhs_embedded, rep.lhs_tower, "routes");
                           if (r.empty()) r = expect_eq(rep.middle, rep.lhs_tower, "middle");
                           if (r.empty()) r = expect_eq(rep.rhs, rep.lhs_tower, "closed form");
                           if (r.empty() && !rep.integral) r = "non-integral";
                           return r;
                         }});
        }
      }
    }
  }
}

std::vector<Case> build(const std::string& suite, const VerifyBounds& b) {
  std::vector<Case> cases;
  const bool all = suite == "all";
  if (all || suite == "schur") schur_cases(cases);
  if (all || suite == "chern") chern_cases(cases, b);
  if (all || suite == "gysin") gysin_cases(cases, b);
  if (all || suite == "locus") locus_cases(cases, b);
  if (all || suite == "identities") identity_cases(cases, b);
  return cases;
}

CaseResult execute(const Case& c) {
  CaseResult r{c.name, c.params, false, {}};
  try {
    r.detail = c.run();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"schur", "chern", "gysin", "locus", "identities"};
  return names;
}

std::vector<CaseResult> run_suite(const std::string& suite, const VerifyBounds& bounds) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite " + suite);
  }
  std::vector<Case> cases = build(suite, bounds);
  std::vector<CaseResult> results(cases.size());
  const int jobs = std::max(1, std::min<int>(bounds.jobs, static_cast<int>(cases.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) results[i] = execute(cases[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = execute(cases[i]);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace symloci::cli
