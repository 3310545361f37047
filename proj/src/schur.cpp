#include "symloci/schur.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

namespace symloci {

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return Poly(ContextPtr{}, Scalar(1));
  if (k == 1) return m[0][0];
  if (k > 20) throw std::invalid_argument("determinant too large");
  ContextPtr ctx;
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (x.context()) ctx = x.context();
    }
  }
  // dp[mask]: signed sum over injections of the first popcount(mask) rows onto
  // the columns in mask.
  std::vector<Poly> dp(std::size_t{1} << k, Poly(ctx));
  dp[0] = Poly(ctx, Scalar(1));
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const Poly& entry = m[row][c];
      if (entry.is_zero()) continue;
      Poly term = dp[mask] * entry;
      if (__builtin_popcountll(mask >> (c + 1)) % 2 == 1) {
        dp[mask | (std::size_t{1} << c)] -= term;
      } else {
        dp[mask | (std::size_t{1} << c)] += term;
      }
    }
    if (row > 0) dp[mask] = Poly(ctx);  // no longer needed
  }
  return dp.back();
}

namespace {

Poly memoized(const ContextPtr& ctx, const std::string& key, const auto& compute) {
  if (!ctx) return compute();
  if (auto hit = ctx->memo_find(key)) return Poly::from_sorted_terms(ctx, *hit);
  Poly p = compute();
  ctx->memo_store(key, std::make_shared<const std::vector<Term>>(p.terms().begin(), p.terms().end()));
  return p;
}

// Jacobi-Trudi in complete functions when the partition is shorter than its
// conjugate, the dual form in elementary functions otherwise.
Poly jacobi_trudi(const Partition& lambda, const Partition& mu, const VirtualAlphabet& v) {
  Partition lc = conjugate(lambda);
  Partition mc = conjugate(mu);
  const bool dual = lc.length() < lambda.length();
  const Partition& outer = dual ? lc : lambda;
  const Partition& inner = dual ? mc : mu;
  const int k = static_cast<int>(outer.length());
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      int idx = outer[static_cast<std::size_t>(p)] - inner[static_cast<std::size_t>(q)] - p + q;
      m[static_cast<std::size_t>(p)].push_back(dual ? elementary_sym(idx, v) : complete_sym(idx, v));
    }
  }
  Poly out = determinant(m);
  return out.context() ? out : Poly(v.context(), out.constant_term());
}

}  // namespace

Poly schur_s(const Partition& shape, const VirtualAlphabet& v) {
  ContextPtr ctx = v.context();
  if (shape.empty()) return Poly(ctx, Scalar(1));
  if (!ctx) return Poly();
  // Hook condition: s_I(A - B) vanishes once i_{|A|+1} exceeds |B|.
  if (shape[static_cast<std::size_t>(v.positive().size())] > v.negative().size()) return Poly(ctx);
  return memoized(ctx, "s|" + v.key() + "|" + shape.to_string(), [&] { return jacobi_trudi(shape, Partition{}, v); });
}

Poly schur_skew(const Partition& lambda, const Partition& mu, const VirtualAlphabet& v) {
  if (!lambda.contains(mu)) {
    throw std::invalid_argument("skew shape " + lambda.to_string() + "/" + mu.to_string() + " is not valid");
  }
  if (mu.empty()) return schur_s(lambda, v);
  ContextPtr ctx = v.context();
  if (lambda == mu) return Poly(ctx, Scalar(1));
  if (!ctx) return Poly();
  return memoized(ctx, "s|" + v.key() + "|" + lambda.to_string() + "/" + mu.to_string(),
                  [&] { return jacobi_trudi(lambda, mu, v); });
}

// ---- Q cache ------------------------------------------------------------------

namespace {

constexpr const char* kCacheStamp = "symloci-qcache 1";

std::filesystem::path& cache_dir_storage() {
  static std::filesystem::path dir;
  return dir;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::filesystem::path cache_file(int size, const Partition& shape) {
  std::string name = "Q-r" + std::to_string(size);
  for (int part : shape.parts()) name += "-" + std::to_string(part);
  return cache_dir_storage() / (name + ".txt");
}

// Cached tables are stored for the plain alphabet (a_1..a_r); a dualized root
// flips the sign of each monomial by the parity of its exponent.
bool load_cached(const Alphabet& a, const Partition& shape, Poly& out) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  std::ifstream in(cache_file(a.size(), shape));
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != kCacheStamp) return false;
  std::vector<Term> terms;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string coeff;
    ls >> coeff;
    Term t{Monomial{}, Scalar::parse(coeff)};
    int negated_degree = 0;
    for (int i = 0; i < a.size(); ++i) {
      int e = 0;
      if (!(ls >> e)) return false;
      const Root& r = a.roots()[static_cast<std::size_t>(i)];
      t.mono.set(r.slot, e);
      if (r.negated) negated_degree += e;
    }
    if (negated_degree % 2 == 1) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
  }
  out = Poly::from_terms(a.context(), std::move(terms));
  return true;
}

void store_cached(const Alphabet& a, const Partition& shape, const Poly& p) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  std::filesystem::create_directories(cache_dir_storage());
  auto path = cache_file(a.size(), shape);
  auto tmp = path;
  tmp += "." + std::to_string(std::random_device{}()) + ".tmp";  // several processes may share the directory
  {
    std::ofstream os(tmp);
    os << kCacheStamp << "\n";
    for (const auto& t : p.terms()) {
      int negated_degree = 0;
      std::string exps;
      for (const auto& r : a.roots()) {
        exps += " " + std::to_string(t.mono[r.slot]);
        if (r.negated) negated_degree += t.mono[r.slot];
      }
      os << (negated_degree % 2 == 1 ? -t.coeff : t.coeff).to_string() << exps << "\n";
    }
  }
  std::filesystem::rename(tmp, path);
}

Poly q_recursion(const Partition& shape, const VirtualAlphabet& a) {
  auto parts = shape.parts();
  const int k = static_cast<int>(parts.size());
  ContextPtr ctx = a.context();
  if (k == 1) return q_sym(parts[0], a);
  auto without = [&](std::initializer_list<int> drop) {
    std::vector<int> rest;
    for (int p = 0; p < k; ++p) {
      if (std::find(drop.begin(), drop.end(), p) == drop.end()) rest.push_back(parts[static_cast<std::size_t>(p)]);
    }
    return Partition(rest);
  };
  Poly out(ctx);
  if (k == 2) {
    const int i = parts[0];
    const int j = parts[1];
    out = q_sym(i, a) * q_sym(j, a);
    for (int p = 1; p <= j; ++p) {
      Poly t = (q_sym(i + p, a) * q_sym(j - p, a)).scaled(Scalar(2));
      if (p % 2 == 1) {
        out -= t;
      } else {
        out += t;
      }
    }
  } else if (k % 2 == 1) {
    for (int p = 0; p < k; ++p) {
      Poly t = q_sym(parts[static_cast<std::size_t>(p)], a) * schur_q(without({p}), a);
      if (p % 2 == 0) {
        out += t;
      } else {
        out -= t;
      }
    }
  } else {
    for (int p = 1; p < k; ++p) {
      Poly t = schur_q(Partition{parts[0], parts[static_cast<std::size_t>(p)]}, a) * schur_q(without({0, p}), a);
      if (p % 2 == 1) {
        out += t;
      } else {
        out -= t;
      }
    }
  }
  return out;
}

}  // namespace

void set_q_cache_dir(std::filesystem::path dir) { cache_dir_storage() = std::move(dir); }
const std::filesystem::path& q_cache_dir() { return cache_dir_storage(); }

Poly schur_q(const Partition& shape, const VirtualAlphabet& a) {
  if (!shape.is_strict()) throw std::invalid_argument("Q-polynomials need a strict partition, got " + shape.to_string());
  if (!a.is_plain()) throw std::invalid_argument("Q-polynomials of a virtual difference are not defined");
  ContextPtr ctx = a.context();
  if (shape.empty()) return Poly(ctx, Scalar(1));
  if (static_cast<int>(shape.length()) > a.positive().size()) return Poly(ctx);
  return memoized(ctx, "Q|" + a.key() + "|" + shape.to_string(), [&] {
    const bool disk = !cache_dir_storage().empty() && shape.length() > 1;
    Poly p;
    if (disk && load_cached(a.positive(), shape, p)) return p;
    p = q_recursion(shape, a);
    if (disk) store_cached(a.positive(), shape, p);
    return p;
  });
}

Poly schur_p(const Partition& shape, const VirtualAlphabet& a) {
  Poly q = schur_q(shape, a);
  Poly p = q.scaled(pow2(-static_cast<int>(shape.length())));
  if (!p.has_integer_coefficients()) throw std::logic_error("Q" + shape.to_string() + " is not divisible by 2^l");
  return p;
}

// ---- expansions ---------------------------------------------------------------

namespace {

using Dominant = std::map<Partition, Scalar>;

// Partition read off the exponents of `slots` when they are weakly decreasing.
bool dominant_shape(const Monomial& m, const std::vector<int>& slots, Partition& out) {
  std::vector<int> parts;
  parts.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    int e = m[slots[i]];
    if (i > 0 && e > parts.back()) return false;
    parts.push_back(e);
  }
  out = Partition(std::move(parts));
  return true;
}

void require_only(const Poly& p, const std::vector<int>& allowed) {
  for (const auto& t : p.terms()) {
    int deg = 0;
    for (int s : allowed) deg += t.mono[s];
    if (deg != t.mono.degree()) throw std::invalid_argument("polynomial involves variables outside the expansion blocks");
  }
}

class KostkaRows {
 public:
  KostkaRows(ContextPtr ctx, std::string_view block) : alphabet_(Alphabet::of_block(ctx, block)), slots_(alphabet_.slots()) {}

  const Dominant& row(const Partition& lambda) {
    auto it = rows_.find(lambda);
    if (it != rows_.end()) return it->second;
    Dominant d;
    Partition mu;
    Poly s = schur_s(lambda, alphabet_);
    for (const auto& t : s.terms()) {
      if (dominant_shape(t.mono, slots_, mu)) d.emplace(mu, t.coeff);
    }
    return rows_.emplace(lambda, std::move(d)).first->second;
  }

 private:
  Alphabet alphabet_;
  std::vector<int> slots_;
  std::map<Partition, Dominant> rows_;
};

std::string render_coeff(const Scalar& c) { return c.to_string(); }

}  // namespace

bool is_symmetric_in_groups(const Poly& p, const std::vector<std::vector<int>>& groups) {
  if (p.is_constant()) return true;
  struct Orbit {
    std::size_t count = 0;
    Scalar coeff;
    bool consistent = true;
  };
  absl::flat_hash_map<Monomial, Orbit, MonomialHash> orbits;
  for (const auto& t : p.terms()) {
    Monomial canon = t.mono;
    for (const auto& g : groups) {
      std::vector<int> e;
      for (int s : g) e.push_back(t.mono[s]);
      std::sort(e.begin(), e.end(), std::greater<>());
      for (std::size_t i = 0; i < g.size(); ++i) canon.set(g[i], e[i]);
    }
    Orbit& o = orbits[canon];
    if (o.count == 0) {
      o.coeff = t.coeff;
    } else if (!(o.coeff == t.coeff)) {
      o.consistent = false;
    }
    ++o.count;
  }
  for (const auto& [canon, o] : orbits) {
    if (!o.consistent) return false;
    unsigned __int128 size = 1;
    for (const auto& g : groups) {
      // multinomial |g|! / prod(multiplicity!)
      std::map<int, int> mult;
      for (int s : g) ++mult[canon[s]];
      unsigned __int128 num = 1;
      for (std::size_t i = 2; i <= g.size(); ++i) num *= i;
      for (const auto& [e, c] : mult) {
        for (int i = 2; i <= c; ++i) num /= static_cast<unsigned>(i);
      }
      size *= num;
    }
    if (static_cast<unsigned __int128>(o.count) != size) return false;
  }
  return true;
}

SchurExpansion expand_schur_basis(const Poly& p, std::string_view block) {
  SchurExpansion out;
  if (p.is_zero()) return out;
  if (p.is_constant()) {
    out.coefficients.emplace(Partition{}, p.constant_term());
    return out;
  }
  const ContextPtr& ctx = p.context();
  std::vector<int> slots = ctx->block_slots(block);
  require_only(p, slots);
  if (!is_symmetric_in_groups(p, {slots})) throw NotSymmetric("polynomial is not symmetric in block '" + std::string(block) + "'");
  Dominant work;
  Partition mu;
  for (const auto& t : p.terms()) {
    if (dominant_shape(t.mono, slots, mu)) work.emplace(mu, t.coeff);
  }
  KostkaRows kostka(ctx, block);
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Partition lambda = top->first;
    Scalar c = top->second;
    out.coefficients.emplace(lambda, c);
    for (const auto& [nu, k] : kostka.row(lambda)) {
      Scalar& slot = work[nu];
      slot -= c * k;
      if (slot.is_zero()) work.erase(nu);
    }
    if (work.count(lambda) != 0) throw std::logic_error("Schur expansion did not reduce the leading shape");
  }
  return out;
}

SchurPairExpansion expand_schur_pair(const Poly& p, std::string_view first, std::string_view second) {
  SchurPairExpansion out;
  if (p.is_zero()) return out;
  if (p.is_constant()) {
    out.coefficients.emplace(std::make_pair(Partition{}, Partition{}), p.constant_term());
    return out;
  }
  const ContextPtr& ctx = p.context();
  std::vector<int> s1 = ctx->block_slots(first);
  std::vector<int> s2 = ctx->block_slots(second);
  std::vector<int> all = s1;
  all.insert(all.end(), s2.begin(), s2.end());
  require_only(p, all);
  if (!is_symmetric_in_groups(p, {s1, s2})) {
    throw NotSymmetric("polynomial is not symmetric in blocks '" + std::string(first) + "' and '" + std::string(second) + "'");
  }
  using Key = std::pair<Partition, Partition>;
  std::map<Key, Scalar> work;
  Partition a, b;
  for (const auto& t : p.terms()) {
    if (dominant_shape(t.mono, s1, a) && dominant_shape(t.mono, s2, b)) work.emplace(Key{a, b}, t.coeff);
  }
  KostkaRows k1(ctx, first);
  KostkaRows k2(ctx, second);
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Key key = top->first;
    Scalar c = top->second;
    out.coefficients.emplace(key, c);
    const Dominant& r1 = k1.row(key.first);
    const Dominant& r2 = k2.row(key.second);
    for (const auto& [x, cx] : r1) {
      for (const auto& [y, cy] : r2) {
        Key nk{x, y};
        Scalar& slot = work[nk];
        slot -= c * cx * cy;
        if (slot.is_zero()) work.erase(nk);
      }
    }
    if (work.count(key) != 0) throw std::logic_error("Schur pair expansion did not reduce the leading shape");
  }
  return out;
}

std::string SchurExpansion::to_string(const std::string& label) const {
  std::vector<std::pair<Partition, Scalar>> rows(coefficients.begin(), coefficients.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first.weight() != y.first.weight()) return x.first.weight() > y.first.weight();
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [shape, c] : rows) out += render_coeff(c) + " * s" + shape.to_string() + "(" + label + ")\n";
  return out;
}

std::string SchurPairExpansion::to_string(const std::string& first_label, const std::string& second_label) const {
  std::vector<std::pair<std::pair<Partition, Partition>, Scalar>> rows(coefficients.begin(), coefficients.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    int wx = x.first.first.weight() + x.first.second.weight();
    int wy = y.first.first.weight() + y.first.second.weight();
    if (wx != wy) return wx > wy;
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [key, c] : rows) {
    out += render_coeff(c) + " * s" + key.first.to_string() + "(" + first_label + ") * s" + key.second.to_string() + "(" +
           second_label + ")\n";
  }
  return out;
}

}  // namespace symloci
