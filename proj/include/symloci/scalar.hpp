#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symloci {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline;
/// anything larger is promoted to a shared immutable GMP rational and demoted
/// again as soon as it fits.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& value);

  static Scalar parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  /// Value as int64; throws std::domain_error unless integral and in range.
  std::int64_t to_int64() const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// a*b accumulated into *this without materialising a temporary when both
  /// operands are small integers.
  void add_product(const Scalar& a, const Scalar& b);

 private:
  bool small_integer() const { return !big_ && den_ == 1; }
  void assign(mpq_class&& value);
  void assign_reduced(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Scalar pow2(int exponent);
Scalar binomial(int n, int k);

}  // namespace symloci
