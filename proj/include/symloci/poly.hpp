#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symloci/scalar.hpp"

namespace symloci {

inline constexpr int kMaxVars = 30;

/// A variable: position `index` (1-based) inside a named block of Chern roots.
struct VarId {
  std::string block;
  int index = 1;

  friend auto operator<=>(const VarId&, const VarId&) = default;
  friend bool operator==(const VarId&, const VarId&) = default;
};

/// Exponent vector over the slots of a VarContext. Exponents are bytes and the
/// total degree is cached, so multiplication is four word additions.
class Monomial {
 public:
  Monomial() = default;

  int degree() const { return deg_; }
  int operator[](int slot) const { return e_[static_cast<std::size_t>(slot)]; }
  void set(int slot, int exponent);

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires a.divides(b) == true; computes b / a.
  friend Monomial quotient(const Monomial& b, const Monomial& a);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(&a, &b, sizeof(Monomial)) == 0;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
};
static_assert(sizeof(Monomial) == 32);

/// Graded reverse-lexicographic order: true when a is strictly greater.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

struct BlockSpec {
  std::string name;
  int size = 0;
  /// Blocks that are not indexed render their single variable by name (`h`).
  bool indexed = true;
};

/// Fixed ordering of all variables taking part in one computation: blocks in
/// declaration order, indices ascending. Also owns the memo tables of the
/// symmetric-function layer, which are keyed by strings and store raw terms.
class VarContext {
 public:
  static std::shared_ptr<const VarContext> create(std::vector<BlockSpec> blocks);

  std::span<const BlockSpec> blocks() const { return blocks_; }
  int size() const { return total_; }
  std::uint64_t id() const { return id_; }

  bool has_block(std::string_view name) const;
  const BlockSpec& block(std::string_view name) const;
  int block_offset(std::string_view name) const;
  int block_size(std::string_view name) const { return block(name).size; }
  std::vector<int> block_slots(std::string_view name) const;

  int slot(const VarId& v) const;
  VarId var(int slot) const;
  std::string var_name(int slot) const;

  using TermsPtr = std::shared_ptr<const std::vector<Term>>;
  TermsPtr memo_find(const std::string& key) const;
  void memo_store(const std::string& key, TermsPtr terms) const;

 private:
  VarContext() = default;

  std::vector<BlockSpec> blocks_;
  std::vector<int> offsets_;
  int total_ = 0;
  std::uint64_t id_ = 0;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, TermsPtr> memo_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing grevlex order with no zero
/// coefficients. A polynomial without a context is a constant and combines
/// with polynomials of any context.
class Poly {
 public:
  Poly() = default;
  explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(ContextPtr ctx, const Scalar& constant);

  static Poly variable(ContextPtr ctx, const VarId& v, int power = 1);
  static Poly from_terms(ContextPtr ctx, std::vector<Term> terms);
  /// Trusts that `terms` are already sorted, distinct and nonzero.
  static Poly from_sorted_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  const Term& leading_term() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  bool has_integer_coefficients() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const Scalar& c) const;
  Poly pow(int exponent) const;

  /// Terms in decreasing grevlex order, reduced fractions, variables as
  /// `<block><index>`; `0` for the zero polynomial.
  std::string to_string() const;

 private:
  static ContextPtr merge_context(const Poly& a, const Poly& b);

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Q with Q * D == P; throws NotDivisible when no such polynomial exists.
Poly exact_div(const Poly& p, const Poly& d);

/// Replaces every variable by its image; all images must share one context
/// (or `target` when given). Throws std::invalid_argument on unmapped variables.
Poly apply_substitution(const Poly& p, const std::map<VarId, Poly>& images, ContextPtr target = nullptr);

/// Permutation of one block: variable i of the block is sent to images[i-1].
Poly apply_permutation(const Poly& p, std::string_view block, std::span<const int> images);

/// Moves the exponent of slot s to slot slot_images[s]; slot_images must be a
/// permutation of 0..ctx.size()-1.
Poly permute_slots(const Poly& p, std::span<const int> slot_images);

/// Coefficient of v^k, as a polynomial in the remaining variables.
Poly coefficient_of(const Poly& p, const VarId& v, int k);
Poly total_degree_component(const Poly& p, int degree);

/// Invariance under every permutation of the given slots.
bool is_symmetric_in(const Poly& p, std::span<const int> slots);

}  // namespace symloci
