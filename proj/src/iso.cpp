#include "dfb/iso.hpp"

#include <algorithm>

namespace dfb {

std::string verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic:
      return "isomorphic";
    case IsoVerdict::NotIsomorphic:
      return "not-isomorphic";
    case IsoVerdict::Undetermined:
      break;
  }
  return "undetermined";
}

ModuleMap to_minimal(const ModPtr& M, const Pruned& p) { return {M, p.module, p.to_min}; }

ModuleMap from_minimal(const ModPtr& M, const Pruned& p) {
  const QRingPtr& A = M->ring();
  Matrix m(A, M->gen_degrees(), p.module->gen_degrees());
  for (std::size_t k = 0; k < p.kept.size(); ++k) m.set(p.kept[k], static_cast<int>(k), Poly::constant(A->poly_ring(), Scalar(1)));
  return {p.module, M, m};
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Constant part of f, i.e. the induced map M ⊗ k -> N ⊗ k on minimal generators.
DenseMatrix constant_part(const Matrix& f) {
  DenseMatrix d(f.rows(), f.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (f.target_degrees()[i] == f.source_degrees()[j]) d.at(i, j) = f.at(i, j).constant_term();
  return d;
}

}  // namespace

IsoResult is_isomorphic(const ModPtr& M, const ModPtr& N, bool up_to_twist) {
  IsoResult out;
  const QRingPtr& A = M->ring();
  const Field& F = A->field();
  Pruned pm = prune(M), pn = prune(N);
  ModPtr Mm = pm.module, Nm = pn.module;
  if (Mm->num_gens() == 0 || Nm->num_gens() == 0) {
    bool both = Mm->num_gens() == 0 && Nm->num_gens() == 0;
    out.verdict = both ? IsoVerdict::Isomorphic : IsoVerdict::NotIsomorphic;
    if (both) out.map = ModuleMap{M, N, Matrix(A, N->gen_degrees(), M->gen_degrees())};
    out.reason = both ? "both zero" : "exactly one module is zero";
    return out;
  }
  if (up_to_twist) {
    int lm = *std::min_element(Mm->gen_degrees().begin(), Mm->gen_degrees().end());
    int ln = *std::min_element(Nm->gen_degrees().begin(), Nm->gen_degrees().end());
    out.twist = ln - lm;
  }
  ModPtr Mt = out.twist ? twist(Mm, -out.twist) : Mm;

  if (sorted(Mt->gen_degrees()) != sorted(Nm->gen_degrees()) ||
      sorted(Mt->presentation().source_degrees()) != sorted(Nm->presentation().source_degrees())) {
    out.verdict = IsoVerdict::NotIsomorphic;
    out.reason = "graded Betti numbers of the minimal presentations differ";
    return out;
  }
  if (Mt->hilbert_numerator() != Nm->hilbert_numerator()) {
    out.verdict = IsoVerdict::NotIsomorphic;
    out.reason = "Hilbert series differ";
    return out;
  }

  // A surjection between modules with equal Hilbert series is an isomorphism;
  // surjectivity is read off the constant part.
  HomModule H = hom_module(Mt, Nm);
  auto basis = H.degree_zero_basis();
  int need = Nm->num_gens();
  std::vector<DenseMatrix> parts;
  for (const auto& b : basis) parts.push_back(constant_part(b.matrix));
  auto try_combo = [&](const std::vector<Scalar>& c) -> bool {
    DenseMatrix d(need, Mt->num_gens());
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (!F.is_zero(c[k]))
        for (std::size_t e = 0; e < d.a.size(); ++e) d.a[e] = F.add(d.a[e], F.mul(c[k], parts[k].a[e]));
    if (rank(F, d) != need) return false;
    Matrix m(A, Nm->gen_degrees(), Mt->gen_degrees());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!F.is_zero(c[k])) m = m + basis[k].matrix.scaled(c[k]);
    ModuleMap f{Mt, Nm, m};
    ModuleMap back = to_minimal(M, pm);
    Matrix to = back.matrix.twisted(out.twist);
    ModPtr Msrc = out.twist ? twist(M, -out.twist) : M;
    out.map = compose(from_minimal(N, pn), compose(f, ModuleMap{Msrc, Mt, to}));
    return true;
  };
  std::size_t r = basis.size();
  std::vector<std::vector<Scalar>> trials;
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Scalar> c(r, Scalar(0));
    c[k] = 1;
    trials.push_back(c);
  }
  // powers of t modulo a small prime keep the entries short
  for (long t = 2; t <= 25; ++t) {
    std::vector<Scalar> c(r);
    long p = 1;
    for (std::size_t k = 0; k < r; ++k) {
      c[k] = F.from_int(p % 101 + 1);
      p = p * t % 10007;
    }
    trials.push_back(c);
  }
  for (const auto& c : trials)
    if (try_combo(c)) {
      out.verdict = IsoVerdict::Isomorphic;
      out.reason = "surjection found in Hom(M, N)_0 between modules with equal Hilbert series";
      return out;
    }
  out.reason = "no surjection found by the coefficient sweep";
  return out;
}

}  // namespace dfb
