#include "viswork/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "viswork/errors.hpp"

namespace viswork {

ExactScalar::ExactScalar(long long n) {
  // mpz has no long long ctor on LP64-unfriendly paths; go through text.
  v_ = mpq_class(std::to_string(n));
  v_.canonicalize();
}

ExactScalar::ExactScalar(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidQuery, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) fail(ErrorCode::InvalidQuery, "division by zero");
  return raw(v_ / o.v_);
}

long ExactScalar::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  if (!q.fits_slong_p()) fail(ErrorCode::InternalError, "floor out of range");
  return q.get_si();
}

std::string ExactScalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t ExactScalar::bits() const {
  std::size_t nb = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
  std::size_t db = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  return nb > db ? nb : db;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<ExactScalar> ExactScalar::parse(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) return std::nullopt;

  mpq_class v;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    v = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if (!ip.empty() && !all_digits(ip)) return std::nullopt;
    if (!fp.empty() && !all_digits(fp)) return std::nullopt;
    mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp), 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    v = mpq_class(whole * den + frac, den);
  } else {
    if (!all_digits(body)) return std::nullopt;
    v = mpq_class(mpz_class(std::string(body), 10));
  }
  v.canonicalize();
  if (neg) v = -v;
  return ExactScalar(v);
}

}  // namespace viswork
