#include "activetime/rational.hpp"

#include <stdexcept>

namespace activetime {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational result;
  if (result.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: " + text);
  }
  if (result.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  result.canonicalize();
  return result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t floor_to_int(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

std::int64_t ceil_to_int(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

}  // namespace activetime
