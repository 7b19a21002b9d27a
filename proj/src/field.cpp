#include "cohn/field.hpp"

#include <charconv>
#include <stdexcept>

#include "cohn/error.hpp"

namespace cohn {

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k * k <= n; k += 2)
    if (n % k == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_u64(p))
    fail(ErrorCode::NonprimeQ, "field characteristic " + std::to_string(p) + " is not a supported prime",
         {{"q", std::to_string(p)}});
  return Field(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  if (is_rational()) return "Q";
  return "Fp:" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
  }
  fail(ErrorCode::ParseError, "unknown field '" + std::string(text) + "' (expected \"Q\" or \"Fp:<p>\")");
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational())
    q_ = value;
  else
    r_ = reduce(mpz_class(value), field_.characteristic());
}

Scalar::Scalar(Field field, const mpz_class& value) : field_(field) {
  if (field_.is_rational())
    q_ = value;
  else
    r_ = reduce(value, field_.characteristic());
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
  } else {
    std::uint32_t den = reduce(value.get_den(), field_.characteristic());
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    r_ = mul_mod(reduce(value.get_num(), field_.characteristic()), inv_mod(den, field_.characteristic()),
                 field_.characteristic());
  }
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) fail(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");
    return Scalar(f, parse_integer(text));
  }
  if (!f.is_rational())
    fail(ErrorCode::ParseError, "fraction '" + std::string(text) + "' is not a residue; fractions are only allowed over Q");
  auto num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    fail(ErrorCode::ParseError, "malformed fraction '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Scalar(f, mpq_class(parse_integer(num), d));
}

bool Scalar::is_zero() const noexcept { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    fail(ErrorCode::MixedFields, "scalars over " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = 1 / q_;
  else
    out.r_ = inv_mod(r_, field_.characteristic());
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    std::uint64_t s = std::uint64_t{r_} + o.r_;
    r_ = static_cast<std::uint32_t>(s >= field_.characteristic() ? s - field_.characteristic() : s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = r_ >= o.r_ ? r_ - o.r_ : static_cast<std::uint32_t>(std::uint64_t{r_} + field_.characteristic() - o.r_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = mul_mod(r_, o.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = -q_;
  else
    out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.field_.is_rational()) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  return a.r_ <=> b.r_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str(10);
  return std::to_string(r_);
}

Scalar pow(Scalar base, std::uint64_t exponent) {
  Scalar result = Scalar::one(base.field());
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace cohn
