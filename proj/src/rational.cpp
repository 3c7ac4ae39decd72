#include "cmhopf/rational.hpp"

#include <stdexcept>

namespace cmhopf {

Q qpow(const Q& b, long e) {
  if (e == 0) return Q(1);
  if (e < 0) {
    if (sgn(b) == 0) throw std::domain_error("zero to a negative power");
    return Q(1) / qpow(b, -e);
  }
  Q r(1), base(b);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Q factorial(long n) {
  if (n < 0) throw std::domain_error("negative factorial");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(f);
}

Q binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Q(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Q(b);
}

std::string qstr(const Q& q) { return q.get_str(); }

Q parse_rational(const std::string& s) {
  Q q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace cmhopf
