#include "homly/rational.hpp"

#include <cctype>

#include "homly/error.hpp"

namespace homly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::from_fraction(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw MalformedScalar("zero denominator");
  Rational r;
  r.q_.get_num() = num;
  r.q_.get_den() = den;
  r.q_.canonicalize();
  return r;
}

Rational Rational::from_fraction(long num, long den) {
  return from_fraction(mpz_class(num), mpz_class(den));
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (text.starts_with("-")) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with("−")) {
    negative = true;
    text.remove_prefix(std::string_view("−").size());
  }
  std::string_view num_text = text;
  std::string_view den_text = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num_text = text.substr(0, slash);
    den_text = text.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text))
    throw MalformedScalar("malformed rational '" + original + "'");
  mpz_class num(std::string(num_text), 10);
  const mpz_class den(std::string(den_text), 10);
  if (sgn(den) == 0) throw MalformedScalar("zero denominator in '" + original + "'");
  if (negative) num = -num;
  return from_fraction(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MalformedScalar("division by zero");
  q_ /= o.q_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  // Integer fast path keeps the hot multilinear loops allocation-light.
  if (mpz_cmp_ui(a.q_.get_den_mpz_t(), 1) == 0 && mpz_cmp_ui(b.q_.get_den_mpz_t(), 1) == 0 &&
      mpz_cmp_ui(q_.get_den_mpz_t(), 1) == 0) {
    mpz_addmul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
    return;
  }
  q_ += a.q_ * b.q_;
}

}  // namespace homly
