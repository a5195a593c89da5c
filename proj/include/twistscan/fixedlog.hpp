// Deterministic fixed-point logarithms (Q16.48) for report columns.
// Integer shift-and-square only; absolute error below 2^-47 per call.

#pragma once

#include <cstdint>

#include "twistscan/bigint.hpp"

namespace twistscan {

// log2(x) as Q16.48; x >= 1.
uint64_t log2_q48(uint64_t x);
// ln(x) as Q16.48.
uint64_t ln_q48(uint64_t x);
// ln(ln(x)) as Q16.48; x >= 3.
uint64_t loglog_q48(uint64_t x);
// Q16.48 value as an exact rational.
Rat q48_to_rat(uint64_t q);
// Decimal rendering with the given fractional digits (round toward zero).
std::string q48_to_decimal(uint64_t q, int digits);

}  // namespace twistscan
