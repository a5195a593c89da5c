#include "twistscan/fixedlog.hpp"

#include <stdexcept>

namespace twistscan {

uint64_t log2_q48(uint64_t x) {
  if (x == 0) throw std::domain_error("log2_q48: x >= 1 required");
  int e = 63;
  while (!(x >> e)) --e;  // e = floor(log2 x)
  // mantissa in [1, 2) as Q1.63
  unsigned __int128 m = static_cast<unsigned __int128>(x) << (63 - e);
  uint64_t frac = 0;
  for (int i = 0; i < 48; ++i) {
    m = (m * m) >> 63;
    frac <<= 1;
    if (m >> 64) {  // m >= 2
      frac |= 1;
      m >>= 1;
    }
  }
  return (static_cast<uint64_t>(e) << 48) | frac;
}

uint64_t ln_q48(uint64_t x) {
  // ln 2 * 2^48, rounded to nearest.
  constexpr uint64_t LN2_Q48 = 195103586505167ull;
  unsigned __int128 p = static_cast<unsigned __int128>(log2_q48(x)) * LN2_Q48;
  return static_cast<uint64_t>(p >> 48);
}

uint64_t loglog_q48(uint64_t x) {
  if (x < 3) throw std::domain_error("loglog_q48: x >= 3 required");
  // ln(ln x) = ln(L) - 48 ln 2 for the Q48 integer L = ln_q48(x)
  uint64_t L = ln_q48(x);
  return ln_q48(L) - 9364972152248016ull;  // 48 * LN2_Q48
}

Rat q48_to_rat(uint64_t q) {
  return Rat(Int(static_cast<unsigned long long>(q)),
             Int(281474976710656ull));  // 2^48
}

std::string q48_to_decimal(uint64_t q, int digits) {
  return q48_to_rat(q).to_decimal(digits);
}

}  // namespace twistscan
