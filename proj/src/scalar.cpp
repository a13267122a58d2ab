#include "duplicial/scalar.hpp"

#include <limits>
#include <sstream>

namespace duplicial {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 x) { return x <= kMax && x >= -kMax; }

BigInt to_bigint(i128 x) {
  bool neg = x < 0;
  u128 u = neg ? u128(-x) : u128(x);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  u128 g = gcd128(nn < 0 ? u128(-nn) : u128(nn), u128(dd));
  if (g > 1) {
    nn /= i128(g);
    dd /= i128(g);
  }
  if (fits(nn) && fits(dd)) {
    num_ = std::int64_t(nn);
    den_ = std::int64_t(dd);
  } else {
    assign_big(Big(to_bigint(nn), to_bigint(dd)));
  }
}

void Rational::assign_big(const Big& b) {
  const BigInt& n = boost::multiprecision::numerator(b);
  const BigInt& d = boost::multiprecision::denominator(b);
  if (n <= kMax && n >= -kMax && d <= kMax) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<Big>(b);
  }
}

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  return Big(BigInt(num_), BigInt(den_));
}

bool Rational::is_integer() const {
  if (big_) return boost::multiprecision::denominator(*big_) == 1;
  return den_ == 1;
}

int Rational::sign() const {
  if (big_) return boost::multiprecision::numerator(*big_).sign();
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::num_str() const {
  if (big_) return boost::multiprecision::numerator(*big_).str();
  return std::to_string(num_);
}

std::string Rational::den_str() const {
  if (big_) return boost::multiprecision::denominator(*big_).str();
  return std::to_string(den_);
}

std::string Rational::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

Rational Rational::parse(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
  };
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_int(ns);
  check_int(ds);
  if (!ns.empty() && ns[0] == '+') ns = ns.substr(1);
  if (!ds.empty() && ds[0] == '+') ds = ds.substr(1);
  BigInt n(ns), d(ds);
  if (d == 0) throw bad();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Rational r;
  r.assign_big(Big(n, d));
  return r;
}

Rational Rational::operator-() const {
  if (big_) return Rational(Big(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(a.to_big() + b.to_big());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
      Rational out;
      out.num_ = r;
      return out;
    }
  }
  std::int64_t g = gcd64(a.den_, b.den_);
  i128 n = i128(a.num_) * (b.den_ / g) + i128(b.num_) * (a.den_ / g);
  i128 d = i128(a.den_ / g) * b.den_;
  u128 h = gcd128(n < 0 ? u128(-n) : u128(n), u128(d));
  if (h > 1) {
    n /= i128(h);
    d /= i128(h);
  }
  if (fits(n) && fits(d)) {
    Rational out;
    out.num_ = std::int64_t(n);
    out.den_ = std::int64_t(d);
    return out;
  }
  return Rational(Rational::Big(to_bigint(n), to_bigint(d)));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.big_ || b.big_) return Rational(a.to_big() * b.to_big());
  std::int64_t g1 = gcd64(a.num_, b.den_);
  std::int64_t g2 = gcd64(b.num_, a.den_);
  i128 n = i128(a.num_ / g1) * (b.num_ / g2);
  i128 d = i128(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Rational out;
    out.num_ = std::int64_t(n);
    out.den_ = std::int64_t(d);
    return out;
  }
  return Rational(Rational::Big(to_bigint(n), to_bigint(d)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (big_) return Rational(Big(1) / *big_);
  Rational out;
  out.num_ = num_ < 0 ? -den_ : den_;
  out.den_ = num_ < 0 ? -num_ : num_;
  return out;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // values are canonical: a big value never fits inline
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  return a.to_big() < b.to_big();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------

namespace {

std::uint64_t common_modulus(std::uint64_t p, std::uint64_t q) {
  if (p == 0) return q;
  if (q == 0 || p == q) return p;
  throw std::domain_error("mixing F_" + std::to_string(p) + " and F_" + std::to_string(q));
}

std::int64_t reduce(i128 v, std::uint64_t p) {
  i128 r = v % i128(p);
  if (r < 0) r += p;
  return std::int64_t(r);
}

}  // namespace

ModP::ModP(std::int64_t v, std::uint64_t p) : v_(v), p_(p) {
  if (p_ > 0) v_ = reduce(v, p_);
}

ModP ModP::operator-() const {
  ModP r;
  r.p_ = p_;
  r.v_ = p_ == 0 ? -v_ : (v_ == 0 ? 0 : std::int64_t(p_) - v_);
  return r;
}

ModP operator+(const ModP& a, const ModP& b) {
  std::uint64_t p = common_modulus(a.p_, b.p_);
  ModP r;
  r.p_ = p;
  if (p == 0) {
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw std::overflow_error("F_p literal overflow");
  } else {
    r.v_ = reduce(i128(a.v_) + b.v_, p);
  }
  return r;
}

ModP operator*(const ModP& a, const ModP& b) {
  std::uint64_t p = common_modulus(a.p_, b.p_);
  ModP r;
  r.p_ = p;
  if (p == 0) {
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw std::overflow_error("F_p literal overflow");
  } else {
    r.v_ = reduce(i128(a.v_) * b.v_, p);
  }
  return r;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::domain_error("inverting an F_p literal of unknown modulus");
  }
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = std::int64_t(p_), nr = v_;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("non-invertible element mod " + std::to_string(p_));
  return ModP(t, p_);
}

bool operator==(const ModP& a, const ModP& b) {
  if (a.p_ == b.p_) return a.v_ == b.v_;
  if (a.p_ == 0) return reduce(a.v_, b.p_) == b.v_;
  if (b.p_ == 0) return reduce(b.v_, a.p_) == a.v_;
  return false;
}

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ModP Field<ModP>::parse(const std::string& s) const {
  Rational r = Rational::parse(s);
  auto to_mod = [&](const std::string& digits) {
    BigInt v(digits);
    BigInt m = v % BigInt(p);
    if (m < 0) m += p;
    return ModP(static_cast<std::int64_t>(m), p);
  };
  ModP den = to_mod(r.den_str());
  if (den.is_zero()) throw std::invalid_argument("denominator of '" + s + "' vanishes mod " + std::to_string(p));
  return to_mod(r.num_str()) / den;
}

}  // namespace duplicial
