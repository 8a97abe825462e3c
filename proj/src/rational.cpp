#include "gasket/rational.hpp"

#include <stdexcept>

namespace gasket {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  const bool neg = exp < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-exp)
                        : static_cast<unsigned long>(exp);
  Rat p;
  mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), e);
  // base canonical => powers canonical
  if (!neg) return p;
  if (p == 0) throw std::domain_error("rat_pow: negative power of zero");
  return Rat(1) / p;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

const Rat& res_scale() {
  static const Rat r = make_rat(3, 5);
  return r;
}

const Rat& res_scale_inv() {
  static const Rat r = make_rat(5, 3);
  return r;
}

}  // namespace gasket
