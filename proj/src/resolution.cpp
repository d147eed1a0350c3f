#include "dfb/resolution.hpp"

#include <map>

namespace dfb {

std::vector<int> FreeResolution::betti() const {
  std::vector<int> b;
  for (const auto& d : degrees) b.push_back(static_cast<int>(d.size()));
  return b;
}

std::vector<std::map<int, int>> FreeResolution::graded_betti() const {
  std::vector<std::map<int, int>> out;
  for (const auto& ds : degrees) {
    std::map<int, int> m;
    for (int d : ds) ++m[d];
    out.push_back(m);
  }
  return out;
}

ModPtr FreeResolution::syzygy_module(int i) const {
  if (i == 0) return module;
  if (i + 1 > length()) throw MathError("resolution too short for Syz^" + std::to_string(i));
  return PresentedModule::make(d(i + 1), "Syz" + std::to_string(i));
}

namespace {

void extend(FreeResolution& F, int length) {
  const QRingPtr& A = F.module->ring();
  while (F.length() < length) {
    int i = F.length();  // next map is d_{i+1}: F_{i+1} -> F_i
    std::vector<SVec> nxt;
    std::vector<int> nd;
    if (i == 0) {
      const Matrix& p = F.module->presentation();
      nxt = p.columns();
      nd = p.source_degrees();
    } else {
      const Matrix& prev = F.d(i);
      auto ord = prev.target_order();
      auto syz = syzygies_modulo(A->poly_ring(), A->gb(), ord, prev.columns(), {});
      auto src = ModuleOrder::top(F.degrees[i]);
      for (auto& s : syz) vsort(s, A->field(), *src);
      for (int j : minimal_subset(A, src, syz)) {
        nxt.push_back(syz[j]);
        nd.push_back(vdegree(syz[j], *src));
      }
    }
    F.maps.push_back(Matrix::from_columns(A, F.degrees[i], nd, nxt));
    F.degrees.push_back(nd);
  }
}

}  // namespace

std::shared_ptr<const FreeResolution> free_resolution(const ModPtr& M, int length) {
  // The cached copy drops its pointers back to M so the cache does not keep M alive.
  std::shared_ptr<const FreeResolution> F;
  if (auto C = M->cached_resolution()) {
    auto G = std::make_shared<FreeResolution>(*C);
    G->input = M;
    if (!G->module) G->module = M;
    F = G;
  } else {
    auto G = std::make_shared<FreeResolution>();
    auto pr = prune(M);
    G->module = pr.module;
    G->input = M;
    G->to_min = pr.to_min;
    G->kept = pr.kept;
    G->degrees.push_back(G->module->gen_degrees());
    F = G;
  }
  if (F->length() < length) {
    auto G = std::make_shared<FreeResolution>(*F);
    extend(*G, length);
    F = G;
  }
  {
    auto S = std::make_shared<FreeResolution>(*F);
    S->input.reset();
    if (S->module == M) S->module.reset();
    M->store_resolution(S);
  }
  if (F->length() == length) return F;
  auto T = std::make_shared<FreeResolution>(*F);
  T->degrees.resize(length + 1);
  T->maps.resize(length);
  return T;
}

ResolutionCheck verify_resolution(const FreeResolution& F) {
  ResolutionCheck r;
  const QRingPtr& A = F.module->ring();
  for (int i = 1; i <= F.length(); ++i) {
    if (F.d(i).has_unit_entry()) r.minimal = false;
    if (i + 1 <= F.length() && !(F.d(i) * F.d(i + 1)).is_zero()) r.composites_vanish = false;
  }
  for (int i = 1; i + 1 <= F.length(); ++i) {
    const Matrix& di = F.d(i);
    auto ker = syzygies_by_elimination(A->poly_ring(), A->gb(), di.target_order(), di.columns(), {});
    GroebnerEngine img(A->poly_ring(), A->gb(), ModuleOrder::top(F.degrees[i]), false);
    for (const auto& c : F.d(i + 1).columns())
      if (!c.empty()) img.add_input(c);
    for (const auto& k : ker)
      if (!img.contains(k)) r.exact = false;
  }
  // exactness at F_0 is the presentation itself
  return r;
}

}  // namespace dfb
