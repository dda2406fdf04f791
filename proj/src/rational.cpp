#include "sglab/rational.hpp"

#include "sglab/error.hpp"

namespace sglab {

Rational rat(long num, long den) {
  if (den == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  // mpq_set_str accepts "p/q" but tolerates some forms we do not want
  // (empty strings, stray whitespace), so validate shape first.
  if (text.empty()) fail(Errc::parse_error, "empty rational");
  size_t i = 0;
  auto digits = [&](size_t from) {
    size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  size_t end_num = digits(i);
  if (end_num == i) fail(Errc::parse_error, "bad rational: " + std::string(text));
  size_t pos = end_num;
  if (pos != text.size()) {
    if (text[pos] != '/') fail(Errc::parse_error, "bad rational: " + std::string(text));
    ++pos;
    size_t end_den = digits(pos);
    if (end_den == pos || end_den != text.size())
      fail(Errc::parse_error, "bad rational: " + std::string(text));
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    fail(Errc::parse_error, "bad rational: " + std::string(text));
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    fail(Errc::division_by_zero, "rational with zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string emit_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool rational_sqrt(const Rational& r, Rational& out) {
  if (sgn(r) < 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = Rational(sn) / Rational(sd);
  out.canonicalize();
  return true;
}

}  // namespace sglab
