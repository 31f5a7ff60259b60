#include "taureg/scalar.hpp"

#include <cctype>

namespace taureg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_of(const Integer& z, std::uint64_t p) {
  Integer r = z % Integer(p);
  if (r < 0) r += Integer(p);
  return r.convert_to<std::uint64_t>();
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void Fp::set_modulus(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_probable_prime(p)) {
    throw std::invalid_argument("F_p modulus must be a prime below 2^62: " + std::to_string(p));
  }
  modulus_ = p;
}

Fp::Fp(const Rational& q) {
  const std::uint64_t num = mod_of(boost::multiprecision::numerator(q), modulus_);
  const std::uint64_t den = mod_of(boost::multiprecision::denominator(q), modulus_);
  if (den == 0) {
    throw std::domain_error("rational " + q.str() + " has no image in F_" + std::to_string(modulus_));
  }
  Fp n;
  n.v_ = num;
  Fp d;
  d.v_ = den;
  *this = n / d;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  Fp r;
  r.v_ = powmod(v_, modulus_ - 2, modulus_);
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("not a rational literal: '" + text + "'");
    return Rational(Integer(strip_plus(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(Integer(strip_plus(num)), d);
}

}  // namespace taureg
