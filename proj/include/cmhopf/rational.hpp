#pragma once

#include <gmpxx.h>

#include <string>

namespace cmhopf {

using Q = mpq_class;

// b^e for any integer e; 0^0 is 1.
Q qpow(const Q& b, long e);
Q factorial(long n);
Q binom(long n, long k);

std::string qstr(const Q& q);
Q parse_rational(const std::string& s);

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

}  // namespace cmhopf
