#include "dfb/ext.hpp"

#include <algorithm>

namespace dfb {

// ------------------------------------------------------------ layout

std::vector<int> HomLayout::degrees() const {
  std::vector<int> d(rank());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t a = 0; a < tgt.size(); ++a) d[comp(static_cast<int>(i), static_cast<int>(a))] = tgt[a] - src[i];
  return d;
}

SVec HomLayout::from_matrix(const Matrix& m) const {
  SVec v;
  for (int i = 0; i < m.cols(); ++i)
    for (int a = 0; a < m.rows(); ++a)
      for (const auto& t : m.at(a, i).terms()) v.push_back({t.c, t.m, comp(i, a)});
  vsort(v, m.ring()->field(), *order());
  return v;
}

Matrix HomLayout::to_matrix(const QRingPtr& A, const SVec& v, int degree) const {
  std::vector<int> s = src;
  for (auto& x : s) x += degree;
  Matrix m(A, tgt, s);
  auto parts = vsplit(A->poly_ring(), v, rank());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t a = 0; a < tgt.size(); ++a) {
      const Poly& p = parts[comp(static_cast<int>(i), static_cast<int>(a))];
      if (!p.is_zero()) m.set(static_cast<int>(a), static_cast<int>(i), p);
    }
  return m;
}

std::vector<SVec> HomLayout::precompose_columns(const Matrix& d, const HomLayout& out) const {
  std::vector<SVec> cols(rank());
  auto ord = out.order();
  const Field& F = d.ring()->field();
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t a = 0; a < tgt.size(); ++a) {
      SVec v;
      for (int k = 0; k < d.cols(); ++k)
        for (const auto& t : d.at(static_cast<int>(i), k).terms())
          v.push_back({t.c, t.m, out.comp(k, static_cast<int>(a))});
      vsort(v, F, *ord);
      cols[comp(static_cast<int>(i), static_cast<int>(a))] = std::move(v);
    }
  return cols;
}

std::vector<SVec> HomLayout::target_relations(const Matrix& psi) const {
  std::vector<SVec> out;
  auto ord = order();
  const Field& F = psi.ring()->field();
  for (std::size_t i = 0; i < src.size(); ++i)
    for (int b = 0; b < psi.cols(); ++b) {
      SVec v;
      for (int a = 0; a < psi.rows(); ++a)
        for (const auto& t : psi.at(a, b).terms()) v.push_back({t.c, t.m, comp(static_cast<int>(i), a)});
      vsort(v, F, *ord);
      if (!v.empty()) out.push_back(std::move(v));
    }
  return out;
}

SVec combine(const Field& F, const OrderPtr& order, const std::vector<SVec>& gens, const SVec& coeffs) {
  SVec out;
  for (const auto& t : coeffs) out = vaxpy(F, *order, out, t.c, t.m, gens[t.comp]);
  return out;
}

namespace {
std::vector<int> degrees_of(const std::vector<SVec>& vs, const OrderPtr& ord) {
  std::vector<int> d;
  for (const auto& v : vs) d.push_back(v.empty() ? 0 : vdegree(v, *ord));
  return d;
}
}  // namespace

// ------------------------------------------------------------ Hom

HomModule hom_module(const ModPtr& M, const ModPtr& N) {
  const QRingPtr& A = M->ring();
  HomLayout L0{M->gen_degrees(), N->gen_degrees()};
  HomLayout L1{M->presentation().source_degrees(), N->gen_degrees()};
  auto D = L0.precompose_columns(M->presentation(), L1);
  auto syz = syzygies_modulo(A->poly_ring(), A->gb(), L1.order(), D, L1.target_relations(N->presentation()));
  auto ord = L0.order();
  for (auto& s : syz) vsort(s, A->field(), *ord);
  auto sq = subquotient(A, L0.degrees(), syz, degrees_of(syz, ord), L0.target_relations(N->presentation()));
  return {M, N, L0, sq};
}

Matrix HomModule::as_matrix(const SVec& element, int degree) const {
  const QRingPtr& A = source->ring();
  return layout.to_matrix(A, combine(A->field(), layout.order(), sq.generators, element), degree);
}

std::vector<ModuleMap> HomModule::degree_zero_basis() const {
  std::vector<ModuleMap> out;
  for (const auto& b : module()->basis_in_degree(0)) out.push_back({source, target, as_matrix(b, 0)});
  return out;
}

std::optional<SVec> HomModule::element(const SVec& layout_vector) const {
  const QRingPtr& A = source->ring();
  auto ord = layout.order();
  GroebnerEngine eng(A->poly_ring(), A->gb(), ord, true);
  for (const auto& g : sq.generators) eng.add_input(g, vdegree(g, *ord));
  for (const auto& r : layout.target_relations(target->presentation())) eng.add_input(r);
  SVec v = layout_vector;
  vsort(v, A->field(), *ord);
  auto a = eng.lift(v);
  if (!a) return std::nullopt;
  SVec part;
  int s = static_cast<int>(sq.generators.size());
  for (const auto& t : *a)
    if (t.comp < s) part.push_back(t);
  vsort(part, A->field(), *module()->order());
  return part;
}

// ------------------------------------------------------------ Ext

ExtPtr ExtGroup::compute(int n, const ModPtr& M, const ModPtr& N) {
  if (n < 0) throw MathError("negative Ext index");
  std::shared_ptr<ExtGroup> g(new ExtGroup());
  const QRingPtr& A = M->ring();
  g->n_ = n;
  g->M_ = M;
  g->N_ = N;
  g->res_ = free_resolution(M, n + 1);
  const FreeResolution& F = *g->res_;
  g->layout_ = {F.degrees[n], N->gen_degrees()};
  g->next_layout_ = {F.degrees[n + 1], N->gen_degrees()};
  g->next_image_ = g->layout_.precompose_columns(F.d(n + 1), g->next_layout_);
  auto Z = syzygies_modulo(A->poly_ring(), A->gb(), g->next_layout_.order(), g->next_image_,
                           g->next_layout_.target_relations(N->presentation()));
  auto ord = g->layout_.order();
  for (auto& z : Z) vsort(z, A->field(), *ord);
  g->rels_ = g->layout_.target_relations(N->presentation());
  if (n >= 1) {
    HomLayout prev{F.degrees[n - 1], N->gen_degrees()};
    for (auto& b : prev.precompose_columns(F.d(n), g->layout_))
      if (!b.empty()) g->rels_.push_back(std::move(b));
  }
  g->sq_ = subquotient(A, g->layout_.degrees(), Z, degrees_of(Z, ord), g->rels_);
  return g;
}

long ExtGroup::total_dim() const {
  if (!finite_length()) throw MathError("Ext module does not have finite length");
  return module()->length();
}

std::map<int, long> ExtGroup::dims_by_degree(std::optional<int> bound) const {
  std::map<int, long> out;
  if (finite_length()) {
    for (int d : support_degrees()) out[d] = module()->hilbert_function(d);
    return out;
  }
  if (!bound) throw MathError("a degree bound is required for an Ext module of infinite length");
  const auto& gd = module()->gen_degrees();
  int lo = gd.empty() ? 0 : *std::min_element(gd.begin(), gd.end());
  for (int d = lo; d <= *bound; ++d) {
    long h = module()->hilbert_function(d);
    if (h) out[d] = h;
  }
  return out;
}

std::vector<ExtClass> ExtGroup::basis_in_degree(int d) const {
  std::vector<ExtClass> out;
  auto self = shared_from_this();
  const Field& F = M_->ring()->field();
  auto ord = layout_.order();
  for (const auto& b : module()->basis_in_degree(d)) out.push_back({self, combine(F, ord, sq_.generators, b), d});
  return out;
}

std::vector<ExtClass> ExtGroup::basis() const {
  std::vector<ExtClass> out;
  for (int d : support_degrees())
    for (auto& c : basis_in_degree(d)) out.push_back(std::move(c));
  return out;
}

bool ExtGroup::is_cocycle(const SVec& v) const {
  if (v.empty()) return true;
  int d = vdegree(v, *layout_.order());
  Matrix C = layout_.to_matrix(M_->ring(), v, d);
  Matrix P = C * res_->d(n_ + 1);
  for (int j = 0; j < P.cols(); ++j)
    if (!N_->is_zero_element(P.column(j))) return false;
  return true;
}

SVec ExtGroup::element(const SVec& cocycle) const {
  const QRingPtr& A = M_->ring();
  SVec v = cocycle;
  vsort(v, A->field(), *layout_.order());
  if (v.empty()) return {};
  std::optional<SVec> a;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!lift_) {
      lift_ = std::make_unique<GroebnerEngine>(A->poly_ring(), A->gb(), layout_.order(), true);
      auto ord = layout_.order();
      for (const auto& g : sq_.generators) lift_->add_input(g, vdegree(g, *ord));
      for (const auto& r : rels_) lift_->add_input(r);
    }
    a = lift_->lift(v);
  }
  if (!a) throw MathError("element is not a cocycle of Ext^" + std::to_string(n_));
  SVec part;
  int s = static_cast<int>(sq_.generators.size());
  for (const auto& t : *a)
    if (t.comp < s) part.push_back(t);
  vsort(part, A->field(), *module()->order());
  return part;
}

std::vector<Scalar> ExtGroup::coordinates(const SVec& cocycle, int d) const {
  SVec v = cocycle;
  vsort(v, M_->ring()->field(), *layout_.order());
  if (!v.empty() && vdegree(v, *layout_.order()) != d) throw MathError("cocycle degree mismatch");
  if (v.empty()) return std::vector<Scalar>(module()->basis_in_degree(d).size(), Scalar(0));
  return module()->coordinates(element(v), d);
}

bool ExtGroup::is_zero_class(const SVec& cocycle) const {
  if (cocycle.empty()) return true;
  int d = vdegree(cocycle, *layout_.order());
  for (const auto& x : coordinates(cocycle, d))
    if (!Field::is_zero(x)) return false;
  return true;
}

ExtClass ExtGroup::make_class(const Matrix& cocycle) const {
  int e = cocycle.cols() ? cocycle.source_degrees()[0] - res_->degrees[n_][0] : 0;
  return {shared_from_this(), layout_.from_matrix(cocycle), e};
}

ExtClass ExtGroup::make_class(const SVec& cocycle, int degree) const {
  SVec v = cocycle;
  vsort(v, M_->ring()->field(), *layout_.order());
  return {shared_from_this(), v, degree};
}

Matrix ExtClass::matrix() const { return group->layout().to_matrix(group->source()->ring(), cocycle, degree); }

bool ExtClass::is_zero() const { return group->is_zero_class(cocycle); }

std::vector<Scalar> ExtClass::coordinates() const { return group->coordinates(cocycle, degree); }

// ------------------------------------------------------------ graded maps

int GradedLinearMap::rank_in_degree(int d) const {
  auto it = blocks.find(d);
  if (it == blocks.end() || it->second.rows == 0 || it->second.cols == 0) return 0;
  return dfb::rank(Field::rationals(), it->second);
}

int GradedLinearMap::rank() const {
  int r = 0;
  for (const auto& [d, b] : blocks) r += rank_in_degree(d);
  return r;
}

int GradedLinearMap::source_dim() const {
  int s = 0;
  for (const auto& [d, n] : source_dims) s += n;
  return s;
}

int GradedLinearMap::target_dim() const {
  int s = 0;
  for (const auto& [d, n] : target_dims) s += n;
  return s;
}

GradedLinearMap induced_map(const ExtPtr& from, const ExtPtr& to, const std::function<ExtClass(const ExtClass&)>& f) {
  GradedLinearMap g;
  for (int d : to->support_degrees()) g.target_dims[d] = static_cast<int>(to->module()->basis_in_degree(d).size());
  for (int d : from->support_degrees()) {
    auto basis = from->basis_in_degree(d);
    g.source_dims[d] = static_cast<int>(basis.size());
    int rows = static_cast<int>(to->module()->basis_in_degree(d).size());
    DenseMatrix m(rows, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ExtClass img = f(basis[j]);
      if (img.degree != d && !img.cocycle.empty()) throw MathError("induced map is not degree preserving");
      auto x = to->coordinates(img.cocycle, d);
      for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = x[i];
    }
    g.blocks[d] = std::move(m);
  }
  return g;
}

// ------------------------------------------------------------ functoriality

std::optional<SVec> preimage(const ModuleMap& f, const SVec& y) {
  const QRingPtr& A = f.source->ring();
  GroebnerEngine eng(A->poly_ring(), A->gb(), f.target->order(), true);
  int n = f.matrix.cols();
  for (int j = 0; j < n; ++j) eng.add_input(f.matrix.column(j), f.matrix.source_degrees()[j]);
  for (const auto& r : f.target->presentation().columns())
    if (!r.empty()) eng.add_input(r);
  auto a = eng.lift(y);
  if (!a) return std::nullopt;
  SVec x;
  for (const auto& t : *a)
    if (t.comp < n) x.push_back(t);
  vsort(x, A->field(), *f.source->order());
  return x;
}

std::vector<Matrix> lift_chain_map(const ModuleMap& h, const FreeResolution& Fp, const FreeResolution& F, int length) {
  const QRingPtr& A = h.source->ring();
  Matrix incl(A, h.source->gen_degrees(), Fp.degrees[0]);
  for (std::size_t k = 0; k < Fp.kept.size(); ++k)
    incl.set(Fp.kept[k], static_cast<int>(k), Poly::constant(A->poly_ring(), Scalar(1)));
  std::vector<Matrix> out;
  out.push_back(F.to_min * h.matrix * incl);
  for (int i = 1; i <= length; ++i) {
    Matrix tgt = out.back() * Fp.d(i);
    const Matrix& di = F.d(i);
    GroebnerEngine eng(A->poly_ring(), A->gb(), di.target_order(), true);
    for (int j = 0; j < di.cols(); ++j) eng.add_input(di.column(j), di.source_degrees()[j]);
    std::vector<SVec> cols;
    auto ord = ModuleOrder::top(F.degrees[i]);
    for (int j = 0; j < tgt.cols(); ++j) {
      auto a = eng.lift(tgt.column(j));
      if (!a) throw MathError("chain map lift failed: resolution not exact");
      SVec c = *a;
      vsort(c, A->field(), *ord);
      cols.push_back(c);
    }
    out.push_back(Matrix::from_columns(A, F.degrees[i], Fp.degrees[i], cols));
  }
  return out;
}

ExtClass push_forward(const ExtClass& c, const ModuleMap& g, const ExtPtr& into) {
  return into->make_class(g.matrix * c.matrix());
}

ExtClass pull_back(const ExtClass& c, const ModuleMap& h, const ExtPtr& into) {
  int n = c.group->index();
  auto chain = lift_chain_map(h, into->resolution(), c.group->resolution(), n);
  Matrix m = c.matrix() * chain[n];
  ExtClass out = into->make_class(m);
  out.degree = c.degree;
  return out;
}

Extension build_extension(const ExtClass& c) {
  const ExtGroup& G = *c.group;
  if (G.index() != 1) throw MathError("build_extension needs a class of Ext^1");
  const QRingPtr& A = G.source()->ring();
  const FreeResolution& res = G.resolution();
  const Matrix& Psi = G.target()->presentation();
  const Matrix& Phi = res.d(1);
  int e = c.degree;
  Matrix C = c.matrix();
  int g0 = Psi.rows(), g1 = Psi.cols(), f0 = Phi.rows(), f1 = Phi.cols();
  std::vector<int> td = Psi.target_degrees(), sd = Psi.source_degrees();
  for (int d : Phi.target_degrees()) td.push_back(d + e);
  for (int d : Phi.source_degrees()) sd.push_back(d + e);
  Matrix E(A, td, sd);
  for (int a = 0; a < g0; ++a) {
    for (int b = 0; b < g1; ++b) E.set(a, b, Psi.at(a, b));
    for (int j = 0; j < f1; ++j) E.set(a, g1 + j, C.at(a, j));
  }
  for (int i = 0; i < f0; ++i)
    for (int j = 0; j < f1; ++j) E.set(g0 + i, g1 + j, -Phi.at(i, j));
  Extension out;
  out.E = PresentedModule::make(E, "E");
  Matrix fl(A, td, Psi.target_degrees());
  for (int a = 0; a < g0; ++a) fl.set(a, a, Poly::constant(A->poly_ring(), Scalar(1)));
  out.from_L = {G.target(), out.E, fl};
  auto Nt = PresentedModule::make(Phi.twisted(e), "N");
  Matrix tn(A, Nt->gen_degrees(), td);
  for (int i = 0; i < f0; ++i) tn.set(i, g0 + i, Poly::constant(A->poly_ring(), Scalar(1)));
  out.to_N = {out.E, Nt, tn};

  // connecting class: lift F_0 -> E along the N-block, restrict to F_1
  std::vector<SVec> xs;
  for (int j = 0; j < f1; ++j) {
    SVec y;
    for (int i = 0; i < f0; ++i)
      for (const auto& t : Phi.at(i, j).terms()) y.push_back({t.c, t.m, g0 + i});
    vsort(y, A->field(), *out.E->order());
    auto x = preimage(out.from_L, y);
    if (!x) throw MathError("build_extension: connecting lift failed");
    xs.push_back(*x);
  }
  std::vector<int> xsd = Phi.source_degrees();
  for (auto& d : xsd) d += e;
  Matrix X = Matrix::from_columns(A, Psi.target_degrees(), xsd, xs);
  out.connecting = G.layout().from_matrix(X);

  bool ok = is_well_defined(out.from_L) && is_well_defined(out.to_N);
  ok = ok && is_zero_map(compose(out.to_N, out.from_L));
  ok = ok && is_injective(out.from_L) && is_surjective(out.to_N);
  if (ok) {
    auto ker = kernel(out.to_N);
    for (const auto& k : ker.generators)
      if (!preimage(out.from_L, k)) ok = false;
  }
  SVec diff = vaxpy(A->field(), *G.layout().order(), out.connecting, Scalar(-1), Monomial{}, c.cocycle);
  ok = ok && G.is_zero_class(diff);
  out.verified = ok;
  return out;
}

}  // namespace dfb
