#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace duplicial {

// Exact rational. Values fitting in int64/int64 stay inline; anything larger
// is promoted to a heap-allocated arbitrary-precision rational and demoted
// again as soon as it fits.
class Rational {
public:
  using Big = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int v) : num_(v) {}
  Rational(long v) : num_(v) {}
  Rational(long long v) : num_(v) {}
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const Big& b) { assign_big(b); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<Big>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }
  Big to_big() const;

  // Signed numerator and positive denominator as decimal strings.
  std::string num_str() const;
  std::string den_str() const;
  std::string str() const;  // "p/q" or "p"
  static Rational parse(const std::string& s);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  Rational inverse() const;
  int sign() const;

private:
  void assign_big(const Big& b);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Element of F_p. The modulus travels with the value; p == 0 marks a bare
// integer constant (zero, one, small literals) that adopts the modulus of
// whatever it is combined with.
class ModP {
public:
  ModP() = default;
  ModP(int v) : v_(v), p_(0) {}
  ModP(long v) : v_(v), p_(0) {}
  ModP(long long v) : v_(v), p_(0) {}
  ModP(std::int64_t v, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }  // in [0, p) when p > 0

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string str() const { return std::to_string(v_); }

  ModP operator-() const;
  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b) { return a + (-b); }
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }
  ModP& operator/=(const ModP& b) { return *this = *this / b; }
  friend bool operator==(const ModP& a, const ModP& b);
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  ModP inverse() const;

private:
  std::int64_t v_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ModP& x);

bool is_prime(std::uint64_t p);

// Runtime description of the ground field. For Q the modulus is 0.
template <class K>
struct Field;

template <>
struct Field<Rational> {
  std::uint64_t p = 0;
  Rational make(std::int64_t n, std::int64_t d = 1) const { return Rational(n, d); }
  Rational parse(const std::string& s) const { return Rational::parse(s); }
  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }
};

template <>
struct Field<ModP> {
  std::uint64_t p = 2;
  ModP make(std::int64_t n, std::int64_t d = 1) const { return ModP(n, p) / ModP(d, p); }
  ModP parse(const std::string& s) const;
  std::string name() const { return "Fp:" + std::to_string(p); }
  std::uint64_t characteristic() const { return p; }
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const ModP& x) { return x.str(); }

}  // namespace duplicial

namespace Eigen {

template <>
struct NumTraits<duplicial::Rational> : GenericNumTraits<duplicial::Rational> {
  typedef duplicial::Rational Real;
  typedef duplicial::Rational NonInteger;
  typedef duplicial::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<duplicial::ModP> : GenericNumTraits<duplicial::ModP> {
  typedef duplicial::ModP Real;
  typedef duplicial::ModP NonInteger;
  typedef duplicial::ModP Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
