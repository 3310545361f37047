#include "symloci/scalar.hpp"

#include <limits>
#include <stdexcept>

namespace symloci {

namespace {

using u128 = unsigned __int128;

u128 magnitude(__int128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  u128 mag = magnitude(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool mpz_fits_int64(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  assign_reduced(num, den);
}

Scalar::Scalar(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  assign(std::move(copy));
}

Scalar Scalar::parse(std::string_view text) {
  mpq_class value;
  if (value.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  if (value.get_den() == 0) throw std::domain_error("zero denominator");
  value.canonicalize();
  return Scalar(value);
}

void Scalar::assign(mpq_class&& value) {
  if (mpz_fits_int64(value.get_num()) && mpz_fits_int64(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(value));
  }
}

void Scalar::assign_reduced(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(magnitude(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits64(num) && fits64(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  assign(std::move(q));
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Scalar::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class out{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
  return out;
}

mpz_class Scalar::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
mpz_class Scalar::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

std::int64_t Scalar::to_int64() const {
  if (big_ || den_ != 1) throw std::domain_error("scalar " + to_string() + " is not a machine integer");
  return num_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (big_) {
    out.assign(mpq_class(-*big_));
  } else if (num_ == std::numeric_limits<std::int64_t>::min()) {
    out.assign_reduced(-static_cast<__int128>(num_), den_);
  } else {
    out.num_ = -num_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(num_, other.num_, &sum)) {
        num_ = sum;
        return *this;
      }
      assign_reduced(static_cast<__int128>(num_) + other.num_, 1);
      return *this;
    }
    __int128 n = static_cast<__int128>(num_) * other.den_ + static_cast<__int128>(other.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * other.den_;
    assign_reduced(n, d);
    return *this;
  }
  assign(to_mpq() + other.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t prod;
      if (!__builtin_mul_overflow(num_, other.num_, &prod)) {
        num_ = prod;
        return *this;
      }
      assign_reduced(static_cast<__int128>(num_) * other.num_, 1);
      return *this;
    }
    // Cross-reduce first so the 128-bit products stay exact.
    std::int64_t g1 = static_cast<std::int64_t>(gcd128(magnitude(num_), static_cast<u128>(other.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(gcd128(magnitude(other.num_), static_cast<u128>(den_)));
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    __int128 n = static_cast<__int128>(num_ / g1) * (other.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (other.den_ / g1);
    assign_reduced(n, d);
    return *this;
  }
  assign(to_mpq() * other.to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !other.big_) {
    Scalar inv;
    inv.assign_reduced(other.den_, other.num_);
    return *this *= inv;
  }
  assign(to_mpq() / other.to_mpq());
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // Values are canonical: a small one never equals a big one.
  return false;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (small_integer() && a.small_integer() && b.small_integer()) {
    std::int64_t prod, sum;
    if (!__builtin_mul_overflow(a.num_, b.num_, &prod) && !__builtin_add_overflow(num_, prod, &sum)) {
      num_ = sum;
      return;
    }
  }
  *this += a * b;
}

Scalar pow2(int exponent) {
  mpq_class v = 1;
  if (exponent >= 0) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
    v = z;
  } else {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(-exponent));
    v = mpq_class(1, z);
  }
  return Scalar(v);
}

Scalar binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(mpq_class(z));
}

}  // namespace symloci
