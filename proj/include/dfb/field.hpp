#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dfb {

using Scalar = mpq_class;

/// Raised when inputs do not fit the configured rings/orders.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for mathematically unsupported or failed computations.
class MathError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Exact coefficient field: the rationals or a prime field F_p.
/// Prime-field elements are stored as integers in [0, p).
class Field {
 public:
  enum class Kind { Rationals, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

  Scalar from_int(long v) const;
  Scalar normalize(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  std::string name() const;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
  mpz_class pz_;
};

}  // namespace dfb
