#include "leibcoh/field.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "leibcoh/errors.hpp"

namespace leibcoh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw std::invalid_argument("not a supported prime: " + std::to_string(p));
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:"))
    digits = text.substr(3);
  else if (text.starts_with("F"))
    digits = text.substr(1);
  else
    throw ParseError("unknown field: " + std::string(text));
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("unknown field: " + std::string(text));
  try {
    return prime(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(std::uint32_t p, const mpz_class& z) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : p_(field.p()) {
  if (p_ == 0) {
    q_ = value;
  } else {
    long m = value % static_cast<long>(p_);
    if (m < 0) m += p_;
    r_ = static_cast<std::uint32_t>(m);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : p_(field.p()) {
  if (p_ == 0) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  std::uint32_t den = reduce(p_, value.get_den());
  if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(p_));
  std::uint64_t num = reduce(p_, value.get_num());
  r_ = static_cast<std::uint32_t>(num * inv_mod(den, p_) % p_);
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ParseError("empty scalar");
  mpq_class q;
  auto parse_int = [&](const std::string& t) {
    if (t.empty() || t == "-" || t == "+") throw ParseError("bad scalar: " + s);
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw ParseError("bad scalar: " + s);
    return mpz_class(t[0] == '+' ? t.substr(1) : t, 10);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: " + s);
    q = mpq_class(parse_int(s.substr(0, slash)), den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) frac = "0";
    for (char c : frac)
      if (c < '0' || c > '9') throw ParseError("bad scalar: " + s);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = parse_int(whole);
    mpz_class f(frac, 10);
    mpz_class num = w * scale;
    if (neg)
      num -= f;
    else
      num += f;
    q = mpq_class(num, scale);
  } else {
    q = parse_int(s);
  }
  q.canonicalize();
  try {
    return Scalar(field, q);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  }
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

std::uint32_t Scalar::residue() const {
  if (p_ == 0) throw std::logic_error("residue() on a rational scalar");
  return r_;
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw std::logic_error("rational() on a residue");
  return q_;
}

void Scalar::same_field(const Scalar& o) const {
  if (p_ != o.p_) throw DimensionMismatch("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : p_ - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  same_field(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % p_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  same_field(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = 1 / q_;
  else
    r.r_ = inv_mod(r_, p_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  same_field(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.name(); }

}  // namespace leibcoh
