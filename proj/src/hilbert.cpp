#include "dfb/hilbert.hpp"

#include <algorithm>

namespace dfb {

int monomial_dimension(const std::vector<Monomial>& gens, int nvars) {
  std::vector<unsigned> supports;
  for (const auto& m : gens) {
    unsigned s = 0;
    for (int i = 0; i < nvars; ++i)
      if (m.e[i]) s |= 1u << i;
    if (s == 0) return -1;  // unit ideal
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned set = 0; set < (1u << nvars); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool ok = true;
    for (unsigned s : supports)
      if ((s & ~set) == 0) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

std::vector<Monomial> standard_monomials(const PolyRing& R, const std::vector<Monomial>& gens, int d) {
  std::vector<Monomial> out;
  for (const auto& m : R.monomials_of_degree(d)) {
    bool in = false;
    for (const auto& g : gens)
      if (g.divides(m)) {
        in = true;
        break;
      }
    if (!in) out.push_back(m);
  }
  return out;
}

long standard_monomial_count(const PolyRing& R, const std::vector<Monomial>& gens, int d) {
  return static_cast<long>(standard_monomials(R, gens, d).size());
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) < 0; });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

void add_shifted(std::map<int, long>& acc, const std::map<int, long>& p, int shift, long sign) {
  for (const auto& [k, v] : p) {
    acc[k + shift] += sign * v;
    if (acc[k + shift] == 0) acc.erase(k + shift);
  }
}

std::map<int, long> numerator_rec(const PolyRing& R, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  std::map<int, long> out;
  if (gens.empty()) {
    out[0] = 1;
    return out;
  }
  // All generators pairwise coprime: product formula.
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    out[0] = 1;
    for (const auto& g : gens) {
      std::map<int, long> next;
      add_shifted(next, out, 0, 1);
      add_shifted(next, out, g.w, -1);
      out.swap(next);
    }
    return out;
  }
  // N(J + m) = N(J) - t^{deg m} N(J : m)
  Monomial last = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q;
    for (int i = 0; i < kMaxVars; ++i) q.e[i] = g.e[i] > last.e[i] ? static_cast<std::uint16_t>(g.e[i] - last.e[i]) : 0;
    q.w = R.weight_of(q);
    colon.push_back(q);
  }
  auto a = numerator_rec(R, gens);
  auto b = numerator_rec(R, colon);
  add_shifted(out, a, 0, 1);
  add_shifted(out, b, last.w, -1);
  return out;
}

}  // namespace

std::map<int, long> hilbert_numerator(const PolyRing& R, std::vector<Monomial> gens) {
  return numerator_rec(R, std::move(gens));
}

}  // namespace dfb
