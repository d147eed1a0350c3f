#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dfb/poly.hpp"

namespace dfb {

/// Graded ring A = P/I for a homogeneous ideal I of a weighted polynomial ring.
class QuotientRing {
 public:
  QuotientRing(RingPtr P, std::vector<Poly> generators, std::string name = "A");

  const std::string& name() const { return name_; }
  const RingPtr& poly_ring() const { return P_; }
  const Field& field() const { return P_->field(); }
  int nvars() const { return P_->nvars(); }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Poly>& gb() const { return gb_; }
  std::vector<Monomial> leading_monomials() const;

  int krull_dimension() const { return dim_; }
  // #generators == codimension, which for homogeneous ideals is equivalent
  // to the generators forming a regular sequence.
  bool is_complete_intersection() const { return ci_; }
  bool is_hypersurface() const { return ci_ && gens_.size() == 1; }
  bool is_polynomial_ring() const { return gens_.empty(); }
  // Known for complete intersections; otherwise set by the dualizing module.
  std::optional<bool> is_gorenstein() const { return gorenstein_; }

  Poly reduce(const Poly& p) const { return reduce_by(p, gb_); }
  Poly var(int v) const { return Poly::variable(P_, v); }
  Poly parse(const std::string& text) const;

  long hilbert_function(int d) const;
  std::map<int, long> hilbert_numerator() const;
  // Sum of variable weights and of generator degrees.
  int weight_sum() const;
  int generator_degree_sum() const;

 private:
  std::string name_;
  RingPtr P_;
  std::vector<Poly> gens_;
  std::vector<Poly> gb_;
  int dim_ = 0;
  bool ci_ = false;
  std::optional<bool> gorenstein_;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

QRingPtr make_ring(Field F, std::vector<std::string> names, std::vector<int> weights,
                   const std::vector<std::string>& ideal, std::string name = "A");

bool is_regular_sequence(const QuotientRing& A);

}  // namespace dfb
