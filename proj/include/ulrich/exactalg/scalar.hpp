#pragma once

// Exact scalar domains: arbitrary-precision integers and rationals, and the
// prime field F_p. A "field" object is a small value type that knows how to
// manufacture constants; elements carry everything needed for arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulrich {

// Expression templates off: generic code below uses `auto` freely.
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Element of Z/pZ with 0 <= value < p. The modulus travels with the value so
/// that mixing elements of different fields is caught instead of silently
/// producing garbage.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool isZero() const { return v_ == 0; }

  /// Signed representative in (-p/2, p/2], the way Macaulay2 prints.
  std::int64_t symmetric() const {
    return v_ > p_ / 2 ? static_cast<std::int64_t>(v_) - p_ : v_;
  }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid on (v, p).
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return raw(static_cast<std::uint32_t>(
                   static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_),
               a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static void check(Fp a, Fp b) {
    if (a.p_ != b.p_) throw std::logic_error("mixed moduli in F_p arithmetic");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline Fp modInverse(Fp a) { return a.inverse(); }

struct PrimeField {
  using Element = Fp;

  explicit PrimeField(std::uint32_t prime = kDefaultPrime) : p(prime) {
    // Products of two residues must fit in 64 bits.
    if (prime < 3 || prime >= (1u << 31) || !isPrime(prime))
      throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                  std::to_string(prime));
  }

  std::uint32_t p;

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp operator()(std::int64_t v) const { return Fp(v, p); }
  Fp fromInteger(const Integer& v) const {
    Integer r = v % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::int64_t>(r), p);
  }
  /// Reduction of a rational; fails when p divides the denominator.
  Fp fromRational(const Rational& q) const {
    Fp den = fromInteger(boost::multiprecision::denominator(q));
    if (den.isZero())
      throw std::domain_error("denominator divisible by p=" + std::to_string(p));
    return fromInteger(boost::multiprecision::numerator(q)) / den;
  }
  static bool isZero(const Fp& x) { return x.isZero(); }
  static std::string toString(const Fp& x) { return std::to_string(x.symmetric()); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

struct RationalField {
  using Element = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational operator()(std::int64_t v) const { return Rational(v); }
  Rational fromInteger(const Integer& v) const { return Rational(v); }
  Rational fromRational(const Rational& q) const { return q; }
  static bool isZero(const Rational& x) { return x == 0; }
  static std::string toString(const Rational& x) { return x.str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Element& a,
                              const typename F::Element& b, std::int64_t n) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f(n) } -> std::same_as<typename F::Element>;
  { f.fromRational(Rational(n)) } -> std::same_as<typename F::Element>;
  { F::isZero(a) } -> std::same_as<bool>;
  { F::toString(a) } -> std::same_as<std::string>;
  { a + b } -> std::convertible_to<typename F::Element>;
  { a - b } -> std::convertible_to<typename F::Element>;
  { a * b } -> std::convertible_to<typename F::Element>;
  { a / b } -> std::convertible_to<typename F::Element>;
  { f == f } -> std::same_as<bool>;
};

}  // namespace ulrich
