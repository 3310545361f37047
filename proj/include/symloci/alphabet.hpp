#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symloci/poly.hpp"

namespace symloci {

/// One Chern root: a context slot, possibly with its sign flipped (dual bundle).
struct Root {
  int slot = 0;
  bool negated = false;

  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;
};

/// A finite sequence of Chern roots of one bundle.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(ContextPtr ctx, std::vector<Root> roots) : ctx_(std::move(ctx)), roots_(std::move(roots)) {}

  static Alphabet of_block(ContextPtr ctx, std::string_view block);
  /// Roots `first..first+count-1` (1-based) of a block.
  static Alphabet of_range(ContextPtr ctx, std::string_view block, int first, int count);
  static Alphabet of_slots(ContextPtr ctx, const std::vector<int>& slots);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Root>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  bool empty() const { return roots_.empty(); }

  /// Linear polynomial of root i (0-based), sign included.
  Poly root(int i) const;
  std::vector<int> slots() const;

  /// Every root negated.
  Alphabet dual() const;
  /// Concatenation; both sides must share a context.
  friend Alphabet operator+(const Alphabet& a, const Alphabet& b);

  std::string key() const;

 private:
  ContextPtr ctx_;
  std::vector<Root> roots_;
};

/// Formal difference positive - negative of two root multisets. Roots present
/// on both sides cancel.
class VirtualAlphabet {
 public:
  VirtualAlphabet() = default;
  VirtualAlphabet(Alphabet positive) : VirtualAlphabet(std::move(positive), Alphabet()) {}  // NOLINT
  VirtualAlphabet(Alphabet positive, Alphabet negative);

  const Alphabet& positive() const { return pos_; }
  const Alphabet& negative() const { return neg_; }
  ContextPtr context() const { return pos_.context() ? pos_.context() : neg_.context(); }
  int rank() const { return pos_.size() - neg_.size(); }
  bool is_plain() const { return neg_.empty(); }

  VirtualAlphabet dual() const { return VirtualAlphabet(pos_.dual(), neg_.dual()); }
  friend VirtualAlphabet operator-(const VirtualAlphabet& a, const VirtualAlphabet& b);
  friend VirtualAlphabet operator+(const VirtualAlphabet& a, const VirtualAlphabet& b);

  std::string key() const { return pos_.key() + "/" + neg_.key(); }

 private:
  Alphabet pos_;
  Alphabet neg_;
};

/// s_i(V): degree-i coefficient of prod(1 - b t) / prod(1 - a t).
Poly complete_sym(int i, const VirtualAlphabet& v);
/// e_i(V): degree-i coefficient of prod(1 + a t) / prod(1 + b t).
Poly elementary_sym(int i, const VirtualAlphabet& v);
/// Q_i(A): degree-i coefficient of prod(1 + a t) / (1 - a t). Rejects
/// alphabets with a negative part.
Poly q_sym(int i, const VirtualAlphabet& v);

enum class ModelMode { surjection, independent };

/// Binding of the bundles E, F (and K in the surjection model) to variable
/// blocks. Surjection: blocks `f` (rank f) and `k` (rank n), E = f + k.
/// Independent: blocks `e` and `f`, unrelated.
class ModelContext {
 public:
  static ModelContext surjection(int f, int n, std::vector<BlockSpec> extra = {});
  static ModelContext independent(int e, int f, std::vector<BlockSpec> extra = {});

  ModelMode mode() const { return mode_; }
  const ContextPtr& context() const { return ctx_; }
  int e() const { return e_; }
  int f() const { return f_; }
  int n() const { return e_ - f_; }

  /// Alphabet of E, F or K.
  Alphabet base(char name) const;
  /// Bundle expression: `E`, `F`, `K`, optionally dualized with `*`, or a
  /// difference of two such, e.g. `E-F`, `F-E*`, `E*-F*`.
  VirtualAlphabet bundle(std::string_view expr) const;

 private:
  ModelMode mode_ = ModelMode::surjection;
  ContextPtr ctx_;
  int e_ = 0;
  int f_ = 0;
};

}  // namespace symloci
