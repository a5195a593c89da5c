#include "twistscan/bigint.hpp"

#include <algorithm>
#include <cassert>

namespace twistscan {

Int::Int(long long v) {
  if (v == 0) { sign_ = 0; return; }
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v)
                               : static_cast<unsigned long long>(v);
  while (m) { d_.push_back(static_cast<uint32_t>(m)); m >>= 32; }
}

Int::Int(unsigned long long v) {
  if (v == 0) { sign_ = 0; return; }
  sign_ = 1;
  while (v) { d_.push_back(static_cast<uint32_t>(v)); v >>= 32; }
}

Int Int::from_i128(__int128 v) {
  if (v == 0) return Int();
  Int r;
  r.sign_ = v < 0 ? -1 : 1;
  unsigned __int128 m = v < 0 ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
  while (m) { r.d_.push_back(static_cast<uint32_t>(m)); m >>= 32; }
  return r;
}

Int::Int(std::string_view s) {
  sign_ = 0;
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
  if (i >= s.size()) throw std::invalid_argument("Int: empty string");
  Int acc;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Int: bad digit");
    acc = acc * Int(10) + Int(s[i] - '0');
  }
  *this = neg ? -acc : acc;
}

void Int::trim() {
  while (!d_.empty() && d_.back() == 0) d_.pop_back();
  if (d_.empty()) sign_ = 0;
}

int Int::cmp_mag(const Int& a, const Int& b) {
  if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size() ? -1 : 1;
  for (size_t i = a.d_.size(); i-- > 0;) {
    if (a.d_[i] != b.d_[i]) return a.d_[i] < b.d_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> Int::add_mag(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> Int::sub_mag(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow -
                (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (s < 0) { s += (1ll << 32); borrow = 1; } else borrow = 0;
    r[i] = static_cast<uint32_t>(s);
  }
  assert(borrow == 0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> Int::mul_mag(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = r[i + j] + ai * b[j] + carry;
      r[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D, base 2^32.
void Int::divmod_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b,
                     std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("Int: division by zero");
  q.clear();
  r.clear();
  if (a.size() < b.size()) { r = a; return; }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }
  // Normalize so the divisor's top limb has its high bit set.
  int shift = 0;
  uint32_t top = b.back();
  while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
  size_t n = b.size(), m = a.size() - n;
  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  for (size_t i = a.size(); i-- > 0;) {
    u[i] = (a[i] << shift);
    if (shift && i > 0) u[i] |= static_cast<uint32_t>(
        (static_cast<uint64_t>(a[i - 1]) >> (32 - shift)));
  }
  if (shift) u[a.size()] = static_cast<uint32_t>(
      static_cast<uint64_t>(a.back()) >> (32 - shift));
  for (size_t i = n; i-- > 0;) {
    v[i] = (b[i] << shift);
    if (shift && i > 0) v[i] |= static_cast<uint32_t>(
        (static_cast<uint64_t>(b[i - 1]) >> (32 - shift)));
  }
  q.assign(m + 1, 0);
  const uint64_t base = 1ull << 32;
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= base ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= base) break;
    }
    // Multiply-subtract.
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) -
                  static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) { t += base; borrow = 1; } else borrow = 0;
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) -
                static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      // qhat was one too large: add back.
      t += base;
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
      t &= static_cast<int64_t>(base - 1);
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  r.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    r[i] = u[i] >> shift;
    if (shift && i + 1 < u.size())
      r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1])
                                    << (32 - shift));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

Int Int::operator-() const {
  Int r = *this;
  r.sign_ = -r.sign_;
  return r;
}

Int Int::abs() const {
  Int r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

Int operator+(const Int& a, const Int& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  Int r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.d_ = Int::add_mag(a.d_, b.d_);
  } else {
    int c = Int::cmp_mag(a, b);
    if (c == 0) return Int();
    if (c > 0) { r.sign_ = a.sign_; r.d_ = Int::sub_mag(a.d_, b.d_); }
    else { r.sign_ = b.sign_; r.d_ = Int::sub_mag(b.d_, a.d_); }
  }
  r.trim();
  return r;
}

Int operator-(const Int& a, const Int& b) { return a + (-b); }

Int operator*(const Int& a, const Int& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return Int();
  Int r;
  r.sign_ = a.sign_ * b.sign_;
  r.d_ = Int::mul_mag(a.d_, b.d_);
  r.trim();
  return r;
}

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.d_, b.d_, qm, rm);
  q.d_ = std::move(qm);
  r.d_ = std::move(rm);
  q.sign_ = q.d_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.d_.empty() ? 0 : a.sign_;
  q.trim();
  r.trim();
}

Int operator/(const Int& a, const Int& b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return q;
}

Int operator%(const Int& a, const Int& b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return r;
}

Int Int::operator<<(unsigned k) const {
  if (sign_ == 0) return Int();
  Int r = *this;
  unsigned limbs = k / 32, bits = k % 32;
  if (bits) {
    uint32_t carry = 0;
    for (size_t i = 0; i < r.d_.size(); ++i) {
      uint64_t cur = (static_cast<uint64_t>(r.d_[i]) << bits) | carry;
      r.d_[i] = static_cast<uint32_t>(cur);
      carry = static_cast<uint32_t>(cur >> 32);
    }
    if (carry) r.d_.push_back(carry);
  }
  r.d_.insert(r.d_.begin(), limbs, 0u);
  return r;
}

Int Int::operator>>(unsigned k) const {
  if (sign_ == 0) return Int();
  unsigned limbs = k / 32, bits = k % 32;
  if (limbs >= d_.size()) return Int();
  Int r;
  r.sign_ = sign_;
  r.d_.assign(d_.begin() + limbs, d_.end());
  if (bits) {
    for (size_t i = 0; i < r.d_.size(); ++i) {
      uint64_t hi = (i + 1 < r.d_.size()) ? r.d_[i + 1] : 0;
      r.d_[i] = static_cast<uint32_t>((r.d_[i] >> bits) | (hi << (32 - bits)));
    }
  }
  r.trim();
  return r;
}

bool operator==(const Int& a, const Int& b) {
  return a.sign_ == b.sign_ && a.d_ == b.d_;
}

bool operator<(const Int& a, const Int& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = Int::cmp_mag(a, b);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

size_t Int::bit_length() const {
  if (d_.empty()) return 0;
  size_t bits = (d_.size() - 1) * 32;
  uint32_t top = d_.back();
  while (top) { ++bits; top >>= 1; }
  return bits;
}

bool Int::fits_int64() const {
  if (bit_length() < 64) return true;
  // INT64_MIN is the lone 64-bit edge case.
  return sign_ < 0 && bit_length() == 64 && d_[0] == 0 && d_[1] == 0x80000000u;
}

int64_t Int::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("Int: does not fit int64");
  uint64_t m = 0;
  for (size_t i = d_.size(); i-- > 0;) m = (m << 32) | d_[i];
  return sign_ < 0 ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
}

double Int::to_double_approx() const {
  double r = 0;
  for (size_t i = d_.size(); i-- > 0;) r = r * 4294967296.0 + d_[i];
  return sign_ < 0 ? -r : r;
}

std::string Int::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> m = d_;
  std::string out;
  while (!m.empty()) {
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    char buf[16];
    if (m.empty()) snprintf(buf, sizeof buf, "%llu", (unsigned long long)rem);
    else snprintf(buf, sizeof buf, "%09llu", (unsigned long long)rem);
    out.insert(0, buf);
  }
  if (sign_ < 0) out.insert(0, "-");
  return out;
}

Int Int::gcd(Int a, Int b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Int Int::pow(const Int& base, uint64_t e) {
  Int r(1), b = base;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::pair<Int, bool> Int::sqrt_floor(const Int& n) {
  if (n.is_neg()) throw std::domain_error("sqrt_floor: negative");
  if (n.is_zero()) return {Int(0), true};
  size_t bits = n.bit_length();
  Int x = Int(1) << static_cast<unsigned>(bits / 2 + 1);
  // Newton iteration; monotone decreasing once above the root.
  while (true) {
    Int y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) x = x - Int(1);
  while ((x + Int(1)) * (x + Int(1)) <= n) x = x + Int(1);
  return {x, x * x == n};
}

Int Int::fdiv(const Int& a, const Int& b) {
  Int q, r;
  divmod(a, b, q, r);
  if (!r.is_zero() && ((a.sign() < 0) != (b.sign() < 0))) q = q - Int(1);
  return q;
}

Int Int::mod_nonneg(const Int& a, const Int& m) {
  Int r = a % m;
  if (r.is_neg()) r = r + m.abs();
  return r;
}

size_t Int::hash() const {
  size_t h = static_cast<size_t>(sign_ + 1) * 1099511628211ull;
  for (uint32_t limb : d_) h = (h ^ limb) * 1099511628211ull;
  return h;
}

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_.is_neg()) { num_ = -num_; den_ = -den_; }
  if (num_.is_zero()) { den_ = Int(1); return; }
  Int g = Int::gcd(num_, den_);
  if (g != Int(1)) { num_ = num_ / g; den_ = den_ / g; }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("Rat: division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}
Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const Rat& a, const Rat& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}
bool operator<(const Rat& a, const Rat& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rat::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string Rat::to_decimal(int digits) const {
  Int p = Int::pow(Int(10), digits);
  Int scaled = (num_.abs() * p) / den_;
  Int ip = scaled / p, fp = scaled % p;
  std::string frac = fp.to_string();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = (num_.is_neg() ? "-" : "") + ip.to_string();
  if (digits > 0) out += "." + frac;
  return out;
}

double Rat::to_double_approx() const {
  return num_.to_double_approx() / den_.to_double_approx();
}

}  // namespace twistscan
