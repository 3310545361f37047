#include "symloci/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace symloci {

Alphabet Alphabet::of_block(ContextPtr ctx, std::string_view block) {
  return of_range(ctx, block, 1, ctx->block_size(block));
}

Alphabet Alphabet::of_range(ContextPtr ctx, std::string_view block, int first, int count) {
  if (first < 1 || count < 0 || first - 1 + count > ctx->block_size(block)) {
    throw std::invalid_argument("root range outside block '" + std::string(block) + "'");
  }
  std::vector<Root> roots;
  const int offset = ctx->block_offset(block);
  for (int i = 0; i < count; ++i) roots.push_back(Root{offset + first - 1 + i, false});
  return Alphabet(std::move(ctx), std::move(roots));
}

Alphabet Alphabet::of_slots(ContextPtr ctx, const std::vector<int>& slots) {
  std::vector<Root> roots;
  for (int s : slots) roots.push_back(Root{s, false});
  return Alphabet(std::move(ctx), std::move(roots));
}

Poly Alphabet::root(int i) const {
  const Root& r = roots_.at(static_cast<std::size_t>(i));
  Poly v = Poly::variable(ctx_, ctx_->var(r.slot));
  return r.negated ? -v : v;
}

std::vector<int> Alphabet::slots() const {
  std::vector<int> out;
  for (const auto& r : roots_) out.push_back(r.slot);
  return out;
}

Alphabet Alphabet::dual() const {
  Alphabet out = *this;
  for (auto& r : out.roots_) r.negated = !r.negated;
  return out;
}

Alphabet operator+(const Alphabet& a, const Alphabet& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw std::invalid_argument("alphabets belong to different contexts");
  Alphabet out(a.ctx_ ? a.ctx_ : b.ctx_, a.roots_);
  out.roots_.insert(out.roots_.end(), b.roots_.begin(), b.roots_.end());
  return out;
}

std::string Alphabet::key() const {
  std::string out;
  for (const auto& r : roots_) {
    if (!out.empty()) out += ',';
    if (r.negated) out += '-';
    out += std::to_string(r.slot);
  }
  return out;
}

VirtualAlphabet::VirtualAlphabet(Alphabet positive, Alphabet negative) {
  if (positive.context() && negative.context() && positive.context() != negative.context()) {
    throw std::invalid_argument("alphabets belong to different contexts");
  }
  ContextPtr ctx = positive.context() ? positive.context() : negative.context();
  std::vector<Root> pos = positive.roots();
  std::vector<Root> neg;
  for (const auto& r : negative.roots()) {
    auto it = std::find(pos.begin(), pos.end(), r);
    if (it != pos.end()) {
      pos.erase(it);
    } else {
      neg.push_back(r);
    }
  }
  pos_ = Alphabet(ctx, std::move(pos));
  neg_ = Alphabet(ctx, std::move(neg));
}

VirtualAlphabet operator-(const VirtualAlphabet& a, const VirtualAlphabet& b) {
  return VirtualAlphabet(a.pos_ + b.neg_, a.neg_ + b.pos_);
}

VirtualAlphabet operator+(const VirtualAlphabet& a, const VirtualAlphabet& b) {
  return VirtualAlphabet(a.pos_ + b.pos_, a.neg_ + b.neg_);
}

namespace {

enum class SeriesKind { complete, elementary, q };

// Coefficients 0..degree of the chosen generating series, built one root at a
// time: a factor 1/(1 - x t) is an ascending pass c_k += x c_{k-1}, a factor
// (1 + x t) a descending one.
std::vector<Poly> series(SeriesKind kind, const VirtualAlphabet& v, int degree) {
  ContextPtr ctx = v.context();
  std::vector<Poly> c(static_cast<std::size_t>(degree + 1), Poly(ctx));
  c[0] = Poly(ctx, Scalar(1));
  auto ascending = [&](const Poly& x, int sign) {
    for (int k = 1; k <= degree; ++k) {
      Poly step = x * c[static_cast<std::size_t>(k - 1)];
      if (sign > 0) {
        c[static_cast<std::size_t>(k)] += step;
      } else {
        c[static_cast<std::size_t>(k)] -= step;
      }
    }
  };
  auto descending = [&](const Poly& x, int sign) {
    for (int k = degree; k >= 1; --k) {
      Poly step = x * c[static_cast<std::size_t>(k - 1)];
      if (sign > 0) {
        c[static_cast<std::size_t>(k)] += step;
      } else {
        c[static_cast<std::size_t>(k)] -= step;
      }
    }
  };
  const Alphabet& pos = v.positive();
  const Alphabet& neg = v.negative();
  switch (kind) {
    case SeriesKind::complete:
      for (int i = 0; i < pos.size(); ++i) ascending(pos.root(i), +1);   // 1/(1 - a t)
      for (int i = 0; i < neg.size(); ++i) descending(neg.root(i), -1);  // (1 - b t)
      break;
    case SeriesKind::elementary:
      for (int i = 0; i < pos.size(); ++i) descending(pos.root(i), +1);  // (1 + a t)
      for (int i = 0; i < neg.size(); ++i) ascending(neg.root(i), -1);   // 1/(1 + b t)
      break;
    case SeriesKind::q:
      for (int i = 0; i < pos.size(); ++i) {
        Poly a = pos.root(i);
        ascending(a, +1);
        descending(a, +1);
      }
      break;
  }
  return c;
}

Poly series_coefficient(SeriesKind kind, int i, const VirtualAlphabet& v) {
  ContextPtr ctx = v.context();
  if (i < 0) return Poly(ctx);
  if (i == 0) return Poly(ctx, Scalar(1));
  if (!ctx) return Poly();
  if (kind == SeriesKind::elementary && v.is_plain() && i > v.positive().size()) return Poly(ctx);
  static const char* tags[] = {"h", "e", "q"};
  const std::string prefix = std::string(tags[static_cast<int>(kind)]) + "|" + v.key() + "|";
  if (auto hit = ctx->memo_find(prefix + std::to_string(i))) return Poly::from_sorted_terms(ctx, *hit);
  std::vector<Poly> c = series(kind, v, i);
  for (int k = 1; k <= i; ++k) {
    ctx->memo_store(prefix + std::to_string(k),
                    std::make_shared<const std::vector<Term>>(c[static_cast<std::size_t>(k)].terms().begin(),
                                                              c[static_cast<std::size_t>(k)].terms().end()));
  }
  return c[static_cast<std::size_t>(i)];
}

}  // namespace

Poly complete_sym(int i, const VirtualAlphabet& v) { return series_coefficient(SeriesKind::complete, i, v); }

Poly elementary_sym(int i, const VirtualAlphabet& v) { return series_coefficient(SeriesKind::elementary, i, v); }

Poly q_sym(int i, const VirtualAlphabet& v) {
  if (!v.is_plain()) throw std::invalid_argument("Q-polynomials of a virtual difference are not defined");
  return series_coefficient(SeriesKind::q, i, v);
}

ModelContext ModelContext::surjection(int f, int n, std::vector<BlockSpec> extra) {
  if (f < 0 || n < 0) throw std::invalid_argument("ranks must be nonnegative");
  std::vector<BlockSpec> blocks{{"f", f, true}, {"k", n, true}};
  blocks.insert(blocks.end(), extra.begin(), extra.end());
  ModelContext m;
  m.mode_ = ModelMode::surjection;
  m.ctx_ = VarContext::create(std::move(blocks));
  m.e_ = f + n;
  m.f_ = f;
  return m;
}

ModelContext ModelContext::independent(int e, int f, std::vector<BlockSpec> extra) {
  if (f < 0 || e < 0) throw std::invalid_argument("ranks must be nonnegative");
  std::vector<BlockSpec> blocks{{"e", e, true}, {"f", f, true}};
  blocks.insert(blocks.end(), extra.begin(), extra.end());
  ModelContext m;
  m.mode_ = ModelMode::independent;
  m.ctx_ = VarContext::create(std::move(blocks));
  m.e_ = e;
  m.f_ = f;
  return m;
}

Alphabet ModelContext::base(char name) const {
  switch (name) {
    case 'F':
      return Alphabet::of_block(ctx_, "f");
    case 'E':
      if (mode_ == ModelMode::surjection) return Alphabet::of_block(ctx_, "f") + Alphabet::of_block(ctx_, "k");
      return Alphabet::of_block(ctx_, "e");
    case 'K':
      if (mode_ != ModelMode::surjection) throw std::invalid_argument("K is only defined in the surjection model");
      return Alphabet::of_block(ctx_, "k");
    default:
      throw std::invalid_argument(std::string("unknown bundle '") + name + "'");
  }
}

VirtualAlphabet ModelContext::bundle(std::string_view expr) const {
  auto parse_term = [&](std::string_view t) {
    if (t.empty() || t.size() > 2 || (t.size() == 2 && t[1] != '*')) {
      throw std::invalid_argument("bad bundle expression '" + std::string(expr) + "'");
    }
    Alphabet a = base(t[0]);
    return t.size() == 2 ? a.dual() : a;
  };
  auto minus = expr.find('-');
  if (minus == std::string_view::npos) return VirtualAlphabet(parse_term(expr));
  return VirtualAlphabet(parse_term(expr.substr(0, minus)), parse_term(expr.substr(minus + 1)));
}

}  // namespace symloci
