// Arbitrary-precision signed integers and rationals.
//
// Small, self-contained implementation (sign + base-2^32 magnitude) that is
// enough for this workbench: every correctness-bearing computation is exact.
// Hot loops elsewhere use int64/__int128 with range guards and only cross
// into Int at module boundaries.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistscan {

class Int {
 public:
  Int() : sign_(0) {}
  Int(int v) : Int(static_cast<long long>(v)) {}
  Int(long v) : Int(static_cast<long long>(v)) {}
  Int(long long v);
  Int(unsigned long long v);
  explicit Int(std::string_view decimal);

  static Int from_i128(__int128 v);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_neg() const { return sign_ < 0; }
  bool is_odd() const { return sign_ != 0 && (d_[0] & 1u); }
  bool is_even() const { return !is_odd(); }

  Int operator-() const;
  Int abs() const;

  friend Int operator+(const Int& a, const Int& b);
  friend Int operator-(const Int& a, const Int& b);
  friend Int operator*(const Int& a, const Int& b);
  // Truncated division (C semantics: quotient rounds toward zero).
  friend Int operator/(const Int& a, const Int& b);
  friend Int operator%(const Int& a, const Int& b);
  static void divmod(const Int& a, const Int& b, Int& q, Int& r);

  Int& operator+=(const Int& b) { *this = *this + b; return *this; }
  Int& operator-=(const Int& b) { *this = *this - b; return *this; }
  Int& operator*=(const Int& b) { *this = *this * b; return *this; }
  Int& operator/=(const Int& b) { *this = *this / b; return *this; }
  Int& operator%=(const Int& b) { *this = *this % b; return *this; }

  Int operator<<(unsigned k) const;
  Int operator>>(unsigned k) const;

  friend bool operator==(const Int& a, const Int& b);
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b);
  friend bool operator>(const Int& a, const Int& b) { return b < a; }
  friend bool operator<=(const Int& a, const Int& b) { return !(b < a); }
  friend bool operator>=(const Int& a, const Int& b) { return !(a < b); }

  // Number of bits in the magnitude (0 for zero).
  size_t bit_length() const;

  bool fits_int64() const;
  int64_t to_int64() const;  // throws if out of range
  double to_double_approx() const;

  std::string to_string() const;

  // Helpers used across the workbench.
  static Int gcd(Int a, Int b);
  static Int pow(const Int& base, uint64_t e);
  // Floor square root of a non-negative value; second result: exact square?
  static std::pair<Int, bool> sqrt_floor(const Int& n);
  // Floor division (quotient rounds toward -infinity).
  static Int fdiv(const Int& a, const Int& b);
  // Non-negative residue in [0, |m|).
  static Int mod_nonneg(const Int& a, const Int& m);

  size_t hash() const;

 private:
  int sign_;
  std::vector<uint32_t> d_;  // little-endian limbs, no leading zeros

  void trim();
  static int cmp_mag(const Int& a, const Int& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a,
                         const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Exact rational numbers, always normalized (den > 0, gcd(num, den) = 1).
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(std::move(n)), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(Int n, Int d);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Int(1); }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;

  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_.is_neg() ? -*this : *this; }

  std::string to_string() const;  // "p/q" (or "p" when q = 1)
  // Fixed-point decimal with the given number of fractional digits,
  // rounded toward zero.
  std::string to_decimal(int digits) const;
  double to_double_approx() const;

 private:
  Int num_, den_;
  void normalize();
};

}  // namespace twistscan
