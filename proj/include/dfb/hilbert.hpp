#pragma once

#include <map>
#include <vector>

#include "dfb/poly.hpp"

namespace dfb {

/// Krull dimension of P/(monomials): size of a largest set of variables
/// containing the support of no generator.
int monomial_dimension(const std::vector<Monomial>& gens, int nvars);

/// Number of monomials of weight d outside the monomial ideal.
long standard_monomial_count(const PolyRing& R, const std::vector<Monomial>& gens, int d);
std::vector<Monomial> standard_monomials(const PolyRing& R, const std::vector<Monomial>& gens, int d);

/// Hilbert series numerator N(t) of P/(monomials) with respect to the
/// weighted denominator prod(1 - t^{w_i}); key = exponent of t.
std::map<int, long> hilbert_numerator(const PolyRing& R, std::vector<Monomial> gens);

}  // namespace dfb
