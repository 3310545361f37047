#include "symloci/poly.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace symloci {

// ---- Monomial ---------------------------------------------------------------

namespace {

struct Words {
  std::uint64_t w[4];
};

Words to_words(const Monomial& m) {
  Words out;
  std::memcpy(out.w, &m, sizeof(Monomial));
  return out;
}

Monomial from_words(const Words& w) {
  Monomial m;
  std::memcpy(&m, w.w, sizeof(Monomial));
  return m;
}

}  // namespace

void Monomial::set(int slot, int exponent) {
  if (slot < 0 || slot >= kMaxVars) throw std::out_of_range("monomial slot out of range");
  if (exponent < 0 || exponent > 255) throw std::overflow_error("exponent out of range");
  int deg = deg_ - e_[static_cast<std::size_t>(slot)] + exponent;
  if (deg > 255) throw std::overflow_error("monomial degree exceeds 255");
  e_[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(exponent);
  deg_ = static_cast<std::uint16_t>(deg);
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e_[static_cast<std::size_t>(i)] > other.e_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

// Every exponent is bounded by the degree, so once the degree sum is at most
// 255 no byte can carry and the words can be added directly.
Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.deg_ + b.deg_ > 255) throw std::overflow_error("monomial degree exceeds 255");
  Words x = to_words(a);
  Words y = to_words(b);
  for (int i = 0; i < 4; ++i) x.w[i] += y.w[i];
  return from_words(x);
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Words x = to_words(b);
  Words y = to_words(a);
  for (int i = 0; i < 4; ++i) x.w[i] -= y.w[i];
  return from_words(x);
}

std::size_t Monomial::hash() const {
  Words w = to_words(*this);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t v : w.w) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---- VarContext -------------------------------------------------------------

std::shared_ptr<const VarContext> VarContext::create(std::vector<BlockSpec> blocks) {
  static std::atomic<std::uint64_t> next_id{1};
  std::shared_ptr<VarContext> ctx(new VarContext());
  int total = 0;
  for (const auto& b : blocks) {
    if (b.size < 0) throw std::invalid_argument("negative block size for '" + b.name + "'");
    if (b.name.empty()) throw std::invalid_argument("empty block name");
    for (const auto& other : ctx->blocks_) {
      if (other.name == b.name) throw std::invalid_argument("duplicate block '" + b.name + "'");
    }
    ctx->blocks_.push_back(b);
    ctx->offsets_.push_back(total);
    total += b.size;
  }
  if (total > kMaxVars) {
    throw std::invalid_argument("context needs " + std::to_string(total) + " variables; at most " +
                                std::to_string(kMaxVars) + " are supported");
  }
  ctx->total_ = total;
  ctx->id_ = next_id.fetch_add(1);
  return ctx;
}

bool VarContext::has_block(std::string_view name) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const BlockSpec& b) { return b.name == name; });
}

const BlockSpec& VarContext::block(std::string_view name) const {
  for (const auto& b : blocks_) {
    if (b.name == name) return b;
  }
  throw std::invalid_argument("unknown block '" + std::string(name) + "'");
}

int VarContext::block_offset(std::string_view name) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].name == name) return offsets_[i];
  }
  throw std::invalid_argument("unknown block '" + std::string(name) + "'");
}

std::vector<int> VarContext::block_slots(std::string_view name) const {
  std::vector<int> out(static_cast<std::size_t>(block_size(name)));
  std::iota(out.begin(), out.end(), block_offset(name));
  return out;
}

int VarContext::slot(const VarId& v) const {
  const BlockSpec& b = block(v.block);
  if (v.index < 1 || v.index > b.size) {
    throw std::invalid_argument("variable " + v.block + std::to_string(v.index) + " out of range");
  }
  return block_offset(v.block) + v.index - 1;
}

VarId VarContext::var(int slot) const {
  for (std::size_t i = blocks_.size(); i-- > 0;) {
    if (slot >= offsets_[i] && slot < offsets_[i] + blocks_[i].size) return VarId{blocks_[i].name, slot - offsets_[i] + 1};
  }
  throw std::out_of_range("slot out of range");
}

std::string VarContext::var_name(int slot) const {
  VarId v = var(slot);
  const BlockSpec& b = block(v.block);
  if (!b.indexed && b.size == 1) return v.block;
  return v.block + std::to_string(v.index);
}

VarContext::TermsPtr VarContext::memo_find(const std::string& key) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto it = memo_.find(key);
  return it == memo_.end() ? nullptr : it->second;
}

void VarContext::memo_store(const std::string& key, TermsPtr terms) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(key, std::move(terms));
}

// ---- Poly -------------------------------------------------------------------

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); }

using Accumulator = absl::flat_hash_map<Monomial, Scalar, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

}  // namespace

Poly::Poly(ContextPtr ctx, const Scalar& constant) : ctx_(std::move(ctx)) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial{}, constant});
}

Poly Poly::variable(ContextPtr ctx, const VarId& v, int power) {
  if (!ctx) throw std::invalid_argument("variable requires a context");
  Monomial m;
  m.set(ctx->slot(v), power);
  Poly out(std::move(ctx));
  out.terms_.push_back(Term{m, Scalar(1)});
  return out;
}

Poly Poly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly out(std::move(ctx));
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Poly Poly::from_sorted_terms(ContextPtr ctx, std::vector<Term> terms) {
  Poly out(std::move(ctx));
  out.terms_ = std::move(terms);
  return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coeff;
  return Scalar(0);
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grevlex_greater(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Scalar(0);
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_integer(); });
}

ContextPtr Poly::merge_context(const Poly& a, const Poly& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) {
    // A constant polynomial may carry any context.
    if (a.is_constant()) return b.ctx_;
    if (b.is_constant()) return a.ctx_;
    throw std::invalid_argument("polynomials belong to different contexts");
  }
  return a.ctx_ ? a.ctx_ : b.ctx_;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  ctx_ = merge_context(*this, other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->mono == b->mono) {
      Scalar c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back(Term{a->mono, std::move(c)});
      ++a;
      ++b;
    } else if (grevlex_greater(a->mono, b->mono)) {
      out.push_back(std::move(*a++));
    } else {
      out.push_back(*b++);
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(Poly::merge_context(a, b));
  if (a.terms_.empty() || b.terms_.empty()) return out;
  // Multiplying by a single term keeps the monomial order.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Term& t = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const Poly& p = a.terms_.size() == 1 ? b : a;
    out.terms_.reserve(p.terms_.size());
    for (const auto& u : p.terms_) out.terms_.push_back(Term{u.mono * t.mono, u.coeff * t.coeff});
    return out;
  }
  const Poly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const Poly& small = a.terms_.size() >= b.terms_.size() ? b : a;
  Accumulator acc;
  acc.reserve(std::min<std::size_t>(big.terms_.size() * small.terms_.size(), big.terms_.size() * 8 + 64));
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      acc[s.mono * t.mono].add_product(s.coeff, t.coeff);
    }
  }
  out.terms_ = drain(acc);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  (void)Poly::merge_context(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(ctx_);
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Poly result(ctx_, Scalar(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar mag = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff.sign() < 0) os << "-";
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (int s = 0; s < kMaxVars; ++s) {
      int e = t.mono[s];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ctx_->var_name(s);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << mag.to_string();
    } else if (mag.is_one()) {
      os << vars;
    } else {
      os << mag.to_string() << "*" << vars;
    }
  }
  return os.str();
}

// ---- free functions ---------------------------------------------------------

namespace {

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

}  // namespace

Poly exact_div(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  ContextPtr ctx = p.context() ? p.context() : d.context();
  if (p.is_zero()) return Poly(ctx);
  const Term& lead = d.leading_term();
  if (d.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lead.mono.divides(t.mono)) throw NotDivisible("polynomial is not divisible by " + d.to_string());
      out.push_back(Term{quotient(t.mono, lead.mono), t.coeff / lead.coeff});
    }
    return Poly::from_sorted_terms(ctx, std::move(out));
  }
  std::map<Monomial, Scalar, GrevlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) throw NotDivisible("polynomial is not divisible by " + d.to_string());
    Monomial m = quotient(it->first, lead.mono);
    Scalar c = it->second / lead.coeff;
    rem.erase(it);
    for (std::size_t i = 1; i < d.size(); ++i) {
      const Term& t = d.terms()[i];
      Monomial key = t.mono * m;
      auto [pos, inserted] = rem.try_emplace(key, Scalar(0));
      pos->second -= t.coeff * c;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    q.push_back(Term{m, std::move(c)});
  }
  return Poly::from_sorted_terms(ctx, std::move(q));
}

Poly apply_substitution(const Poly& p, const std::map<VarId, Poly>& images, ContextPtr target) {
  if (!target) {
    for (const auto& [v, img] : images) {
      if (!img.context()) continue;
      if (target && target != img.context()) throw std::invalid_argument("substitution images use different contexts");
      target = img.context();
    }
  }
  if (p.is_constant()) return Poly(target, p.constant_term());
  const VarContext& src = *p.context();
  // powers[s][k] = image(slot s)^k, computed on demand.
  std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(src.size()));
  auto power = [&](int s, int k) -> const Poly& {
    auto& row = powers[static_cast<std::size_t>(s)];
    if (row.empty()) {
      auto it = images.find(src.var(s));
      if (it == images.end()) throw std::invalid_argument("no image for variable " + src.var_name(s));
      row.push_back(Poly(target, Scalar(1)));
      row.push_back(it->second);
    }
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * row[1]);
    return row[static_cast<std::size_t>(k)];
  };
  Accumulator acc;
  for (const auto& t : p.terms()) {
    Poly prod(target, t.coeff);
    for (int s = 0; s < src.size(); ++s) {
      if (t.mono[s] > 0) prod *= power(s, t.mono[s]);
    }
    for (const auto& u : prod.terms()) acc[u.mono] += u.coeff;
  }
  return Poly::from_sorted_terms(target, drain(acc));
}

Poly permute_slots(const Poly& p, std::span<const int> slot_images) {
  if (p.is_constant()) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int s = 0; s < static_cast<int>(slot_images.size()); ++s) {
      if (t.mono[s] > 0) m.set(slot_images[static_cast<std::size_t>(s)], t.mono[s]);
    }
    out.push_back(Term{m, t.coeff});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return Poly::from_sorted_terms(p.context(), std::move(out));
}

Poly apply_permutation(const Poly& p, std::string_view block, std::span<const int> images) {
  if (p.is_constant()) return p;
  const VarContext& ctx = *p.context();
  const int offset = ctx.block_offset(block);
  const int size = ctx.block_size(block);
  if (static_cast<int>(images.size()) != size) throw std::invalid_argument("permutation size does not match block");
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  std::vector<int> slots(static_cast<std::size_t>(ctx.size()));
  std::iota(slots.begin(), slots.end(), 0);
  for (int i = 0; i < size; ++i) {
    int img = images[static_cast<std::size_t>(i)];
    if (img < 1 || img > size || seen[static_cast<std::size_t>(img - 1)]) throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(img - 1)] = true;
    slots[static_cast<std::size_t>(offset + i)] = offset + img - 1;
  }
  return permute_slots(p, slots);
}

Poly coefficient_of(const Poly& p, const VarId& v, int k) {
  if (p.is_zero()) return Poly(p.context());
  if (!p.context()) return k == 0 ? p : Poly();
  const int s = p.context()->slot(v);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono[s] != k) continue;
    Monomial m = t.mono;
    m.set(s, 0);
    out.push_back(Term{m, t.coeff});
  }
  return Poly::from_sorted_terms(p.context(), std::move(out));
}

Poly total_degree_component(const Poly& p, int degree) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.degree() == degree) out.push_back(t);
  }
  return Poly::from_sorted_terms(p.context(), std::move(out));
}

bool is_symmetric_in(const Poly& p, std::span<const int> slots) {
  if (p.is_constant() || slots.size() < 2) return true;
  std::vector<int> images(static_cast<std::size_t>(p.context()->size()));
  for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
    std::iota(images.begin(), images.end(), 0);
    std::swap(images[static_cast<std::size_t>(slots[i])], images[static_cast<std::size_t>(slots[i + 1])]);
    if (!(permute_slots(p, images) == p)) return false;
  }
  return true;
}

}  // namespace symloci
