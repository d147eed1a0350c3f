#include "dfb/module.hpp"

#include <algorithm>
#include <numeric>

#include "dfb/hilbert.hpp"

namespace dfb {

std::string origin_name(Origin o) {
  switch (o) {
    case Origin::Generic: return "generic";
    case Origin::ResidueField: return "residue_field";
    case Origin::MaximalIdeal: return "maximal_ideal";
    case Origin::Omega: return "omega";
    case Origin::Fundamental: return "fundamental";
    case Origin::Kaehler: return "kaehler";
    case Origin::T1Dual: return "t1_dual";
    case Origin::Dual: return "dual";
  }
  return "generic";
}

struct PresentedModule::Cache {
  std::mutex mu;
  std::unique_ptr<GroebnerEngine> engine;
  std::vector<std::vector<Monomial>> leads;  // per component, including I
  std::mutex res_mu;
  std::shared_ptr<const FreeResolution> resolution;
};

std::shared_ptr<const FreeResolution> PresentedModule::cached_resolution() const {
  std::lock_guard<std::mutex> lock(cache_->res_mu);
  return cache_->resolution;
}

void PresentedModule::store_resolution(std::shared_ptr<const FreeResolution> F) const {
  std::lock_guard<std::mutex> lock(cache_->res_mu);
  cache_->resolution = std::move(F);
}

PresentedModule::PresentedModule(Matrix presentation, std::string name)
    : pres_(std::move(presentation)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  order_ = pres_.target_order();
}

ModPtr PresentedModule::free(QRingPtr A, std::vector<int> degrees, std::string name) {
  return std::make_shared<const PresentedModule>(Matrix(A, std::move(degrees), {}), std::move(name));
}

ModPtr PresentedModule::make(Matrix presentation, std::string name) {
  return std::make_shared<const PresentedModule>(std::move(presentation), std::move(name));
}

ModPtr PresentedModule::with_origin(Origin o, ModPtr dual_of, std::string name) const {
  auto m = std::make_shared<PresentedModule>(pres_, name.empty() ? name_ : name);
  m->origin_ = o;
  m->dual_of_ = std::move(dual_of);
  m->cache_ = cache_;
  return m;
}

PresentedModule::Cache& PresentedModule::cache() const {
  Cache& c = *cache_;
  std::lock_guard<std::mutex> lock(c.mu);
  if (!c.engine) {
    c.engine = std::make_unique<GroebnerEngine>(ring()->poly_ring(), ring()->gb(), order_, true);
    for (int j = 0; j < pres_.cols(); ++j) c.engine->add_input(pres_.column(j), pres_.source_degrees()[j]);
    c.engine->complete();
    c.leads.assign(num_gens(), {});
    for (const auto& [m, comp] : c.engine->leading_terms(true)) c.leads[comp].push_back(m);
  }
  return c;
}

SVec PresentedModule::normal_form(const SVec& v) const {
  Cache& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  return c.engine->normal_form(v);
}

std::optional<SVec> PresentedModule::lift_to_relations(const SVec& v) const {
  Cache& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  return c.engine->lift(v);
}

std::vector<std::pair<Monomial, int>> PresentedModule::leading_terms() const {
  Cache& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  return c.engine->leading_terms(true);
}

long PresentedModule::hilbert_function(int d) const {
  Cache& c = cache();
  long s = 0;
  for (int g = 0; g < num_gens(); ++g)
    s += standard_monomial_count(*ring()->poly_ring(), c.leads[g], d - gen_degrees()[g]);
  return s;
}

std::map<int, long> PresentedModule::hilbert_numerator() const {
  Cache& c = cache();
  std::map<int, long> out;
  for (int g = 0; g < num_gens(); ++g)
    for (const auto& [k, v] : dfb::hilbert_numerator(*ring()->poly_ring(), c.leads[g])) {
      out[k + gen_degrees()[g]] += v;
      if (out[k + gen_degrees()[g]] == 0) out.erase(k + gen_degrees()[g]);
    }
  return out;
}

int PresentedModule::krull_dimension() const {
  Cache& c = cache();
  int d = -1;
  for (int g = 0; g < num_gens(); ++g)
    d = std::max(d, monomial_dimension(c.leads[g], ring()->nvars()));
  return d;
}

namespace {

// Standard monomials of a zero-dimensional monomial ideal.
std::vector<Monomial> all_standard(const PolyRing& R, const std::vector<Monomial>& leads) {
  std::vector<int> bound(R.nvars(), -1);
  for (const auto& m : leads) {
    int var = -1, nz = 0;
    for (int i = 0; i < R.nvars(); ++i)
      if (m.e[i]) {
        ++nz;
        var = i;
      }
    if (nz == 0) return {};
    if (nz == 1 && (bound[var] < 0 || m.e[var] < bound[var])) bound[var] = m.e[var];
  }
  for (int b : bound)
    if (b < 0) throw MathError("module does not have finite length");
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> rec = [&](int v) {
    if (v == R.nvars()) {
      cur.w = R.weight_of(cur);
      for (const auto& l : leads)
        if (l.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k < bound[v]; ++k) {
      cur.e[v] = static_cast<std::uint16_t>(k);
      rec(v + 1);
    }
    cur.e[v] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

long PresentedModule::length() const {
  Cache& c = cache();
  long s = 0;
  for (int g = 0; g < num_gens(); ++g) {
    if (monomial_dimension(c.leads[g], ring()->nvars()) < 0) continue;
    s += static_cast<long>(all_standard(*ring()->poly_ring(), c.leads[g]).size());
  }
  return s;
}

std::vector<int> PresentedModule::support_degrees() const {
  Cache& c = cache();
  std::set<int> degs;
  for (int g = 0; g < num_gens(); ++g) {
    if (monomial_dimension(c.leads[g], ring()->nvars()) < 0) continue;
    for (const auto& m : all_standard(*ring()->poly_ring(), c.leads[g])) degs.insert(m.w + gen_degrees()[g]);
  }
  return {degs.begin(), degs.end()};
}

std::vector<SVec> PresentedModule::basis_in_degree(int d) const {
  Cache& c = cache();
  std::vector<SVec> out;
  for (int g = 0; g < num_gens(); ++g)
    for (const auto& m : standard_monomials(*ring()->poly_ring(), c.leads[g], d - gen_degrees()[g]))
      out.push_back(SVec{{Scalar(1), m, g}});
  return out;
}

std::vector<Scalar> PresentedModule::coordinates(const SVec& v, int d) const {
  auto basis = basis_in_degree(d);
  std::vector<Scalar> x(basis.size(), Scalar(0));
  for (const auto& t : normal_form(v)) {
    bool found = false;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k][0].comp == t.comp && basis[k][0].m == t.m) {
        x[k] = t.c;
        found = true;
        break;
      }
    if (!found) throw MathError("coordinates: element is not of degree " + std::to_string(d));
  }
  return x;
}

// ------------------------------------------------------------ maps

bool is_well_defined(const ModuleMap& f) {
  Matrix comp = f.matrix * f.source->presentation();
  for (int j = 0; j < comp.cols(); ++j)
    if (!f.target->is_zero_element(comp.column(j))) return false;
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) { return {f.source, g.target, g.matrix * f.matrix}; }

ModuleMap identity_map(const ModPtr& M) { return {M, M, Matrix::identity(M->ring(), M->gen_degrees())}; }

bool is_zero_map(const ModuleMap& f) {
  for (int j = 0; j < f.matrix.cols(); ++j)
    if (!f.target->is_zero_element(f.matrix.column(j))) return false;
  return true;
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
  return is_zero_map({f.source, f.target, f.matrix - g.matrix});
}

bool is_surjective(const ModuleMap& f) { return cokernel(f)->is_zero(); }

bool is_injective(const ModuleMap& f) { return kernel(f).module->is_zero(); }

std::vector<int> minimal_subset(const QRingPtr& A, const OrderPtr& order, const std::vector<SVec>& cols,
                                const std::vector<SVec>& mod) {
  std::vector<int> idx;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    if (!cols[j].empty()) idx.push_back(j);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return vdegree(cols[a], *order) < vdegree(cols[b], *order); });
  GroebnerEngine eng(A->poly_ring(), A->gb(), order, false);
  for (const auto& m : mod)
    if (!m.empty()) eng.add_input(m);
  std::vector<int> keep;
  for (int j : idx)
    if (eng.add_if_independent(cols[j])) keep.push_back(j);
  return keep;
}

Subquotient subquotient(const QRingPtr& A, const std::vector<int>& ambient_degrees, const std::vector<SVec>& gens,
                        const std::vector<int>& gen_degrees, const std::vector<SVec>& rels) {
  auto ord = ModuleOrder::top(ambient_degrees);
  std::vector<SVec> sorted_gens;
  for (auto g : gens) {
    vsort(g, A->field(), *ord);
    sorted_gens.push_back(std::move(g));
  }
  auto keep = minimal_subset(A, ord, sorted_gens, rels);
  std::vector<SVec> kg;
  std::vector<int> kd;
  for (int j : keep) {
    kg.push_back(sorted_gens[j]);
    kd.push_back(gen_degrees[j]);
  }
  auto syz = syzygies_modulo(A->poly_ring(), A->gb(), ord, kg, rels);
  auto tag_ord = ModuleOrder::top(kd);
  for (auto& s : syz) vsort(s, A->field(), *tag_ord);
  auto rkeep = minimal_subset(A, tag_ord, syz);
  std::vector<SVec> rcols;
  for (int j : rkeep) rcols.push_back(syz[j]);
  Matrix pres = Matrix::from_columns(A, kd, rcols);
  return {PresentedModule::make(pres), kg};
}

Pruned prune(const ModPtr& M) {
  const QRingPtr& A = M->ring();
  const RingPtr& R = A->poly_ring();
  const Field& F = A->field();
  const Matrix& P = M->presentation();
  int r = P.rows(), c = P.cols();
  std::vector<std::vector<Poly>> col(c, std::vector<Poly>(r, Poly(R)));
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) col[j][i] = P.at(i, j);
  std::vector<std::vector<Poly>> expr(r, std::vector<Poly>(r, Poly(R)));
  for (int g = 0; g < r; ++g) expr[g][g] = Poly::constant(R, Scalar(1));
  std::vector<bool> row_alive(r, true), col_alive(c, true);
  for (;;) {
    int pj = -1, pi = -1;
    for (int j = 0; j < c && pj < 0; ++j) {
      if (!col_alive[j]) continue;
      for (int i = 0; i < r; ++i)
        if (row_alive[i] && !col[j][i].is_zero() && col[j][i].lead().m.is_one()) {
          pj = j;
          pi = i;
          break;
        }
    }
    if (pj < 0) break;
    Scalar inv = F.inv(col[pj][pi].lead().c);
    for (int k = 0; k < c; ++k) {
      if (k == pj || !col_alive[k] || col[k][pi].is_zero()) continue;
      Poly f = col[k][pi].scaled(inv);
      for (int i = 0; i < r; ++i)
        if (row_alive[i] && !col[pj][i].is_zero()) col[k][i] = A->reduce(col[k][i] - f * col[pj][i]);
    }
    for (int g = 0; g < r; ++g) {
      if (expr[g][pi].is_zero()) continue;
      Poly a = expr[g][pi].scaled(inv);
      for (int i = 0; i < r; ++i)
        if (i != pi && row_alive[i] && !col[pj][i].is_zero()) expr[g][i] = A->reduce(expr[g][i] - a * col[pj][i]);
      expr[g][pi] = Poly(R);
    }
    row_alive[pi] = false;
    col_alive[pj] = false;
  }
  std::vector<int> kept;
  std::vector<int> kd;
  for (int i = 0; i < r; ++i)
    if (row_alive[i]) {
      kept.push_back(i);
      kd.push_back(M->gen_degrees()[i]);
    }
  auto ord = ModuleOrder::top(kd);
  std::vector<SVec> cols;
  for (int j = 0; j < c; ++j) {
    if (!col_alive[j]) continue;
    SVec v;
    for (std::size_t k = 0; k < kept.size(); ++k)
      for (const auto& t : col[j][kept[k]].terms()) v.push_back({t.c, t.m, static_cast<int>(k)});
    vsort(v, F, *ord);
    if (!v.empty()) cols.push_back(std::move(v));
  }
  auto rk = minimal_subset(A, ord, cols);
  std::vector<SVec> rc;
  for (int j : rk) rc.push_back(cols[j]);
  auto mod = std::make_shared<PresentedModule>(Matrix::from_columns(A, kd, rc), M->name());
  ModPtr out = mod->with_origin(M->origin(), M->dual_of(), M->name());
  Matrix to_min(A, kd, M->gen_degrees());
  for (int g = 0; g < r; ++g)
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (!expr[g][kept[k]].is_zero()) to_min.set(static_cast<int>(k), g, expr[g][kept[k]]);
  return {out, kept, to_min};
}

ModPtr minimal_presentation(const ModPtr& M) { return prune(M).module; }

Subquotient kernel(const ModuleMap& f) {
  const QRingPtr& A = f.source->ring();
  auto syz = syzygies_modulo(A->poly_ring(), A->gb(), f.target->order(), f.matrix.columns(),
                             f.target->presentation().columns());
  // zero columns of f give unit syzygies; syzygies_modulo already includes them
  return subquotient(A, f.source->gen_degrees(), syz,
                     [&] {
                       std::vector<int> d;
                       auto ord = f.source->order();
                       for (auto s : syz) {
                         vsort(s, A->field(), *ord);
                         d.push_back(vdegree(s, *ord));
                       }
                       return d;
                     }(),
                     f.source->presentation().columns());
}

Subquotient image(const ModuleMap& f) {
  return subquotient(f.source->ring(), f.target->gen_degrees(), f.matrix.columns(), f.source->gen_degrees(),
                     f.target->presentation().columns());
}

ModPtr cokernel(const ModuleMap& f) {
  return PresentedModule::make(f.target->presentation().hconcat(f.matrix));
}

ModPtr direct_sum(const ModPtr& a, const ModPtr& b) {
  return PresentedModule::make(a->presentation().direct_sum(b->presentation()));
}

ModPtr twist(const ModPtr& M, int d) {
  return PresentedModule::make(M->presentation().twisted(-d), M->name())->with_origin(M->origin(), M->dual_of());
}

ModuleMap free_cover(const ModPtr& M) {
  auto F = PresentedModule::free(M->ring(), M->gen_degrees());
  return {F, M, Matrix::identity(M->ring(), M->gen_degrees())};
}

ModPtr residue_field(const QRingPtr& A) {
  Matrix m(A, {0}, A->poly_ring()->weights());
  for (int v = 0; v < A->nvars(); ++v) m.set(0, v, A->var(v));
  return PresentedModule::make(m, "k")->with_origin(Origin::ResidueField);
}

ModPtr maximal_ideal(const QRingPtr& A) {
  std::vector<SVec> gens;
  for (int v = 0; v < A->nvars(); ++v) gens.push_back(SVec{{Scalar(1), A->poly_ring()->var(v), 0}});
  auto sq = subquotient(A, {0}, gens, A->poly_ring()->weights(), {});
  return sq.module->with_origin(Origin::MaximalIdeal, nullptr, "m");
}

ModPtr ring_module(const QRingPtr& A) { return PresentedModule::free(A, {0}, "A"); }

}  // namespace dfb
