#include "dfb/field.hpp"

namespace dfb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ConfigError("field characteristic " + std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  f.pz_ = p;
  return f;
}

Scalar Field::from_int(long v) const { return normalize(Scalar(v)); }

Scalar Field::normalize(const Scalar& v) const {
  if (kind_ == Kind::Rationals) return v;
  mpz_class num = v.get_num() % pz_;
  if (num < 0) num += pz_;
  mpz_class den = v.get_den() % pz_;
  if (den == 0) throw MathError("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class di;
    mpz_invert(di.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t());
    num = (num * di) % pz_;
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= pz_) r -= pz_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += pz_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % pz_;
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return -a;
  if (sgn(a) == 0) return a;
  return Scalar(pz_ - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw MathError("division by zero");
  if (kind_ == Kind::Rationals) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pz_.get_mpz_t());
  return Scalar(r);
}

std::string Field::name() const {
  return kind_ == Kind::Rationals ? "QQ" : "ZZ/" + std::to_string(p_);
}

}  // namespace dfb
