#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dfb/field.hpp"
#include "dfb/monomial.hpp"

namespace dfb {

/// Weighted polynomial ring k[x_1..x_m] with degrevlex order in the declared
/// variable order (x_1 > x_2 > ...).
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights);

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int v) const { return weights_[v]; }
  std::optional<int> index_of(const std::string& name) const;

  Monomial var(int v, int power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  int weight_of(const Monomial& m) const;
  std::string to_string(const Monomial& m) const;

  // All monomials of weight d, in descending order.
  std::vector<Monomial> monomials_of_degree(int d) const;

  bool same_as(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Scalar c;
  Monomial m;
};

/// Sparse polynomial; terms strictly descending, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}
  Poly(RingPtr r, std::vector<Term> terms);  // sorts and combines

  static Poly constant(RingPtr r, const Scalar& c);
  static Poly monomial(RingPtr r, const Scalar& c, const Monomial& m);
  static Poly variable(RingPtr r, int v);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  // Weighted degree if homogeneous, nullopt for zero or inhomogeneous.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  Scalar constant_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scaled(const Scalar& c) const;
  Poly times(const Scalar& c, const Monomial& m) const;
  Poly pow(unsigned k) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int v) const;
  Poly monic() const;
  // Exact quotient by o, throws MathError if o does not divide.
  Poly exact_div(const Poly& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Parses infix polynomial text with + - * ^, parentheses and rational
// constants. Throws ConfigError with a column on failure.
Poly parse_poly(const RingPtr& r, const std::string& text);

// Normal form of p modulo a Groebner basis of an ideal (full reduction).
Poly reduce_by(const Poly& p, const std::vector<Poly>& gb);

}  // namespace dfb
