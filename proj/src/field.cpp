#include "postlie/field.hpp"

#include <charconv>
#include <ostream>

namespace postlie {

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= 65536)
    throw Error("field characteristic " + std::to_string(p) + " is not below 2^16");
  if (!is_prime(p))
    throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view tag) {
  if (tag == "Q")
    return rationals();
  if (tag.starts_with("Fp:")) {
    auto digits = tag.substr(3);
    std::uint32_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
      throw Error("malformed field tag '" + std::string(tag) + "'");
    return prime(p);
  }
  throw Error("unknown field tag '" + std::string(tag) + "'");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(p) : r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0)
    r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

} // namespace

Scalar::Scalar(Field f, long v) {
  if (f.is_rational())
    value_ = mpq_class(v);
  else
    value_ = Residue{reduce(v, f.characteristic()), f.characteristic()};
}

Scalar::Scalar(Field f, long num, long den) {
  if (den == 0)
    throw Error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  *this = from_rational(f, q);
}

Scalar::Scalar(mpq_class q) {
  q.canonicalize();
  value_ = std::move(q);
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational())
    return Scalar(q);
  auto p = f.characteristic();
  auto den = reduce(q.get_den(), p);
  if (den == 0)
    throw Error("denominator " + q.get_den().get_str() + " is not invertible mod " +
                std::to_string(p));
  auto num = reduce(q.get_num(), p);
  return Scalar(Residue{static_cast<std::uint32_t>(
                            static_cast<std::uint64_t>(num) * inverse_mod(den, p) % p),
                        p});
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto bad = [&](const char* why) {
    return Error("malformed rational '" + std::string(text) + "': " + why);
  };
  if (text.empty())
    throw bad("empty");
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty())
      return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
      i = 1;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  if (!valid_integer(num_text, true))
    throw bad("bad numerator");
  if (!valid_integer(den_text, false))
    throw bad("bad denominator");
  std::string num_str(num_text.starts_with('+') ? num_text.substr(1) : num_text);
  mpz_class num(num_str), den{std::string(den_text)};
  if (den == 0)
    throw bad("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(f, q);
}

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_))
    return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&value_))
    return r->r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&value_))
    return r->r == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  bool ok;
  if (auto a = std::get_if<Residue>(&value_)) {
    auto b = std::get_if<Residue>(&o.value_);
    ok = b && a->p == b->p;
  } else {
    ok = std::holds_alternative<mpq_class>(o.value_);
  }
  if (!ok)
    throw Error("field mismatch: " + field().to_string() + " vs " + o.field().to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw Error("division by zero");
  if (auto r = std::get_if<Residue>(&value_))
    return Scalar(Residue{inverse_mod(r->r, r->p), r->p});
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_))
    r->r = (r->r + std::get<Residue>(o.value_).r) % r->p;
  else
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_))
    r->r = (r->r + r->p - std::get<Residue>(o.value_).r) % r->p;
  else
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_))
    r->r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r->r) *
                                      std::get<Residue>(o.value_).r % r->p);
  else
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&value_))
    return Scalar(Residue{(r->p - r->r) % r->p, r->p});
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(q);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index())
    return false;
  if (auto r = std::get_if<Scalar::Residue>(&a.value_))
    return *r == std::get<Scalar::Residue>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index())
    return a.value_.index() <=> b.value_.index();
  if (auto r = std::get_if<Scalar::Residue>(&a.value_)) {
    auto s = std::get<Scalar::Residue>(b.value_);
    if (r->p != s.p)
      return r->p <=> s.p;
    return r->r <=> s.r;
  }
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c <=> 0;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&value_))
    return std::to_string(r->r);
  const auto& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, Field f) { return os << f.to_string(); }

} // namespace postlie
