#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leibcoh {

// Ground field: the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  // Accepts "Q", "F<p>" and "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return p_ == 0 ? Kind::rationals : Kind::prime_field; }
  bool is_rationals() const noexcept { return p_ == 0; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Element of a FieldSpec in canonical form.  Mixing fields in one operation
// throws DimensionMismatch.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
  // Decimal integers, decimal fractions ("1.25") and "a/b".
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const noexcept { return FieldSpec(p_); }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t residue() const;
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  std::string to_string() const;

 private:
  void same_field(const Scalar& o) const;

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

}  // namespace leibcoh
