#pragma once

// Exact scalar fields: arbitrary-precision rationals (GMP) and a prime field
// F_p with a session-wide modulus. Both plug into Eigen as custom scalars.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace taureg {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Element of the prime field F_p. The modulus is process-wide and must be
/// set (Fp::set_modulus) before any arithmetic; all Fp values in flight
/// belong to the same field.
class Fp {
 public:
  static constexpr std::uint64_t kDefaultModulus = 2147483647ULL;

  Fp() = default;
  Fp(long long v) : v_(reduce(v)) {}
  Fp(int v) : Fp(static_cast<long long>(v)) {}
  explicit Fp(const Rational& q);

  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus() { return modulus_; }

  std::uint64_t value() const { return v_; }

  Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % modulus_);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend Fp operator-(Fp a) { return Fp() -= a; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static std::uint64_t reduce(long long v) {
    long long m = static_cast<long long>(modulus_);
    long long r = v % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }

  std::uint64_t v_ = 0;
  static inline std::uint64_t modulus_ = kDefaultModulus;
};

/// Per-field conversions and formatting used by the generic algorithms.
template <typename Scalar>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool kCharacteristicZero = true;
  static Rational from_rational(const Rational& q) { return q; }
  static Rational from_int(long long v) { return Rational(v); }
  static std::string to_string(const Rational& q) { return q.str(); }
  static std::string name() { return "Q"; }
};

template <>
struct FieldTraits<Fp> {
  static constexpr bool kCharacteristicZero = false;
  static Fp from_rational(const Rational& q) { return Fp(q); }
  static Fp from_int(long long v) { return Fp(v); }
  static std::string to_string(const Fp& a) { return std::to_string(a.value()); }
  static std::string name() { return "F_" + std::to_string(Fp::modulus()); }
};

/// Parses "3", "-7", "2/5" into an exact rational; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Integer representative of an F_p value as a rational (used when relation
/// coefficients computed over F_p have to be written back as literals).
inline Rational to_rational(const Rational& q) { return q; }
inline Rational to_rational(const Fp& a) { return Rational(static_cast<long long>(a.value())); }

bool is_probable_prime(std::uint64_t n);

}  // namespace taureg

namespace Eigen {

template <>
struct NumTraits<taureg::Fp> : GenericNumTraits<taureg::Fp> {
  using Real = taureg::Fp;
  using NonInteger = taureg::Fp;
  using Nested = taureg::Fp;
  using Literal = taureg::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
