#include "dfb/quotient_ring.hpp"

#include "dfb/groebner.hpp"
#include "dfb/hilbert.hpp"

namespace dfb {

QuotientRing::QuotientRing(RingPtr P, std::vector<Poly> generators, std::string name)
    : name_(std::move(name)), P_(std::move(P)) {
  for (auto& g : generators) {
    if (g.is_zero()) throw ConfigError("zero ideal generator");
    if (!g.is_homogeneous()) throw ConfigError("ideal generator " + g.to_string() + " is not homogeneous");
    gens_.push_back(g);
  }
  gb_ = ideal_groebner(gens_);
  for (const auto& g : gb_)
    if (g.lead().m.is_one()) throw ConfigError("ideal is the unit ideal");
  dim_ = monomial_dimension(leading_monomials(), P_->nvars());
  ci_ = static_cast<int>(gens_.size()) == P_->nvars() - dim_;
  if (ci_) gorenstein_ = true;
}

std::vector<Monomial> QuotientRing::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : gb_) out.push_back(g.lead().m);
  return out;
}

Poly QuotientRing::parse(const std::string& text) const { return reduce(parse_poly(P_, text)); }

long QuotientRing::hilbert_function(int d) const {
  return standard_monomial_count(*P_, leading_monomials(), d);
}

std::map<int, long> QuotientRing::hilbert_numerator() const {
  return dfb::hilbert_numerator(*P_, leading_monomials());
}

int QuotientRing::weight_sum() const {
  int s = 0;
  for (int w : P_->weights()) s += w;
  return s;
}

int QuotientRing::generator_degree_sum() const {
  int s = 0;
  for (const auto& g : gens_) s += *g.homogeneous_degree();
  return s;
}

QRingPtr make_ring(Field F, std::vector<std::string> names, std::vector<int> weights,
                   const std::vector<std::string>& ideal, std::string name) {
  auto P = std::make_shared<const PolyRing>(std::move(F), std::move(names), std::move(weights));
  std::vector<Poly> gens;
  for (const auto& s : ideal) gens.push_back(parse_poly(P, s));
  return std::make_shared<const QuotientRing>(P, std::move(gens), std::move(name));
}

bool is_regular_sequence(const QuotientRing& A) { return A.is_complete_intersection(); }

}  // namespace dfb
