#include "dfb/cotangent.hpp"

#include <algorithm>
#include <set>

#include "dfb/hilbert.hpp"

namespace dfb {

namespace {

int deg_of(const Poly& p) {
  auto d = p.homogeneous_degree();
  if (!d) throw MathError("expected a nonzero homogeneous polynomial, got " + p.to_string());
  return *d;
}

std::vector<Monomial> std_monomials(const QRingPtr& A, int d) {
  if (d < 0) return {};
  return standard_monomials(*A->poly_ring(), A->leading_monomials(), d);
}

std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index_map(const std::vector<Monomial>& ms) {
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> idx(
      [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = static_cast<int>(i);
  return idx;
}

// Finite-length summary of a module; dims up to `bound` otherwise.
void summarize(const ModPtr& M, std::optional<int> bound, bool& finite, long& total, std::map<int, long>& dims) {
  finite = M->has_finite_length();
  dims.clear();
  if (finite) {
    total = M->length();
    for (int d : M->support_degrees()) dims[d] = M->hilbert_function(d);
    return;
  }
  total = -1;
  if (!bound) return;
  const auto& gd = M->gen_degrees();
  int lo = gd.empty() ? 0 : *std::min_element(gd.begin(), gd.end());
  for (int d = lo; d <= *bound; ++d) {
    long h = M->hilbert_function(d);
    if (h) dims[d] = h;
  }
}

ModPtr free_module(const QRingPtr& A, std::vector<int> degs) { return PresentedModule::free(A, std::move(degs)); }

// Quotient of H.module() by the images of layout vectors.
ModPtr quotient_of_hom(const HomModule& H, const std::vector<SVec>& layout_vectors, const std::vector<int>& degrees) {
  const QRingPtr& A = H.source->ring();
  std::vector<SVec> cols;
  for (const auto& v : layout_vectors) {
    auto e = H.element(v);
    if (!e) throw MathError("element does not lie in the Hom module");
    cols.push_back(*e);
  }
  Matrix m = Matrix::from_columns(A, H.module()->gen_degrees(), degrees, cols);
  return cokernel(ModuleMap{free_module(A, degrees), H.module(), m});
}

}  // namespace

// ------------------------------------------------------------ Ω and Der

ModPtr kaehler_module(const QRingPtr& A) {
  const auto& P = A->poly_ring();
  std::vector<int> rd;
  for (const auto& f : A->generators()) rd.push_back(deg_of(f));
  Matrix J(A, P->weights(), rd);
  for (std::size_t i = 0; i < A->generators().size(); ++i)
    for (int j = 0; j < A->nvars(); ++j) J.set(j, static_cast<int>(i), A->generators()[i].derivative(j));
  return PresentedModule::make(J, "Omega")->with_origin(Origin::Kaehler, nullptr, "Omega");
}

Poly apply(const QRingPtr& A, const Derivation& D, const Poly& p) {
  Poly out(A->poly_ring());
  for (int j = 0; j < A->nvars(); ++j) {
    if (D.values[j].is_zero()) continue;
    Poly dp = p.derivative(j);
    if (!dp.is_zero()) out += dp * D.values[j];
  }
  return A->reduce(out);
}

bool is_derivation(const QRingPtr& A, const Derivation& D) {
  if (static_cast<int>(D.values.size()) != A->nvars()) return false;
  for (int j = 0; j < A->nvars(); ++j) {
    const Poly& v = D.values[j];
    if (!v.is_zero() && (!v.is_homogeneous() || deg_of(v) != A->poly_ring()->weight(j) + D.degree)) return false;
  }
  for (const auto& f : A->generators())
    if (!apply(A, D, f).is_zero()) return false;
  return true;
}

std::vector<Derivation> derivations_in_degree(const QRingPtr& A, int e) {
  const auto& P = A->poly_ring();
  const Field& F = A->field();
  int n = A->nvars();
  // unknowns: coefficient of monomial μ in D(x_j)
  std::vector<std::pair<int, Monomial>> unk;
  for (int j = 0; j < n; ++j)
    for (const auto& mu : std_monomials(A, P->weight(j) + e)) unk.push_back({j, mu});
  std::vector<Derivation> out;
  if (unk.empty()) return out;
  // equations: coefficients of NF(Σ_j ∂f_i/∂x_j D(x_j))
  std::vector<std::vector<Monomial>> rows_mon;
  std::vector<int> row_offset;
  int nrows = 0;
  for (const auto& f : A->generators()) {
    row_offset.push_back(nrows);
    rows_mon.push_back(std_monomials(A, deg_of(f) + e));
    nrows += static_cast<int>(rows_mon.back().size());
  }
  DenseMatrix M(nrows, static_cast<int>(unk.size()));
  for (std::size_t i = 0; i < A->generators().size(); ++i) {
    auto idx = index_map(rows_mon[i]);
    for (std::size_t u = 0; u < unk.size(); ++u) {
      Poly df = A->generators()[i].derivative(unk[u].first);
      if (df.is_zero()) continue;
      Poly r = A->reduce(df.times(Scalar(1), unk[u].second));
      for (const auto& t : r.terms()) M.at(row_offset[i] + idx.at(t.m), static_cast<int>(u)) = t.c;
    }
  }
  for (const auto& v : nullspace(F, M)) {
    Derivation D;
    D.degree = e;
    D.values.assign(n, Poly(P));
    for (std::size_t u = 0; u < unk.size(); ++u)
      if (!F.is_zero(v[u])) D.values[unk[u].first] += Poly::monomial(P, v[u], unk[u].second);
    out.push_back(std::move(D));
  }
  return out;
}

Derivation euler_derivation(const QRingPtr& A) {
  Derivation D;
  const auto& P = A->poly_ring();
  for (int j = 0; j < A->nvars(); ++j) D.values.push_back(A->var(j).scaled(A->field().from_int(P->weight(j))));
  return D;
}

ModuleMap derivation_as_map(const QRingPtr& A, const Derivation& D) {
  auto Om = kaehler_module(A);
  auto R = free_module(A, {-D.degree});
  Matrix m(A, {-D.degree}, A->poly_ring()->weights());
  for (int j = 0; j < A->nvars(); ++j) m.set(0, j, D.values[j]);
  return {Om, R, m};
}

// ------------------------------------------------------------ T1, T2

long tjurina_number(const QRingPtr& A) {
  if (!A->is_hypersurface()) throw MathError("tjurina_number needs a hypersurface");
  const Poly& f = A->generators()[0];
  std::vector<Poly> gens{f};
  for (int j = 0; j < A->nvars(); ++j) {
    Poly d = f.derivative(j);
    if (d.is_zero()) continue;
    if (d.is_constant()) return 0;
    gens.push_back(d);
  }
  auto T = std::make_shared<QuotientRing>(A->poly_ring(), gens, "Tjurina");
  auto R = ring_module(T);
  return R->has_finite_length() ? R->length() : -1;
}

namespace {

std::vector<Poly> tjurina_basis(const QRingPtr& A) {
  const Poly& f = A->generators()[0];
  std::vector<Poly> gens{f};
  for (int j = 0; j < A->nvars(); ++j) {
    Poly d = f.derivative(j);
    if (d.is_zero()) continue;
    if (d.is_constant()) return {};
    gens.push_back(d);
  }
  auto T = std::make_shared<QuotientRing>(A->poly_ring(), gens, "Tjurina");
  if (T->krull_dimension() > 0) return {};
  std::vector<Poly> out;
  auto R = ring_module(T);
  for (int d : R->support_degrees())
    for (const auto& m : std_monomials(T, d)) out.push_back(Poly::monomial(A->poly_ring(), Scalar(1), m));
  return out;
}

}  // namespace

T1Space t1(const QRingPtr& A, std::optional<int> bound) {
  if (!A->is_complete_intersection()) return t1_general(A, bound);
  T1Space out;
  out.method = "complete-intersection";
  out.bound = bound;
  std::vector<int> td, sd;
  for (const auto& f : A->generators()) td.push_back(-deg_of(f));
  for (int w : A->poly_ring()->weights()) sd.push_back(-w);
  Matrix J(A, td, sd);
  for (std::size_t i = 0; i < A->generators().size(); ++i)
    for (int j = 0; j < A->nvars(); ++j) J.set(static_cast<int>(i), j, A->generators()[i].derivative(j));
  out.module = PresentedModule::make(J, "T1");
  summarize(out.module, bound, out.finite_length, out.total_dim, out.dims);
  if (A->is_hypersurface()) {
    out.tjurina_dim = tjurina_number(A);
    out.tjurina_basis = tjurina_basis(A);
  }
  return out;
}

T1Space t1_general(const QRingPtr& A, std::optional<int> bound) {
  T1Space out;
  out.method = "general";
  out.bound = bound;
  const auto& gens = A->generators();
  if (gens.empty()) {
    out.module = free_module(A, {});
    out.finite_length = true;
    out.total_dim = 0;
    return out;
  }
  // I/I² = coker(relations among the generators) over A
  auto P = ambient_ring(A);
  std::vector<int> gd;
  for (const auto& f : gens) gd.push_back(deg_of(f));
  std::vector<SVec> cols;
  auto ord1 = ModuleOrder::top({0});
  for (const auto& f : gens) {
    SVec v;
    for (const auto& t : f.terms()) v.push_back({t.c, t.m, 0});
    cols.push_back(v);
  }
  auto syz = syzygies_modulo(A->poly_ring(), {}, ord1, cols, {});
  auto ordg = ModuleOrder::top(gd);
  for (auto& s : syz) vsort(s, A->field(), *ordg);
  Matrix rel = Matrix::from_columns(P, gd, syz).over(A);
  auto II = PresentedModule::make(rel, "I/I^2");
  HomModule H = hom_module(II, ring_module(A));
  std::vector<SVec> jac;
  std::vector<int> jd;
  for (int j = 0; j < A->nvars(); ++j) {
    SVec v;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Poly d = A->reduce(gens[i].derivative(j));
      for (const auto& t : d.terms())
        v.push_back({t.c, t.m, H.layout.comp(static_cast<int>(i), 0)});
    }
    vsort(v, A->field(), *H.layout.order());
    jac.push_back(v);
    jd.push_back(-A->poly_ring()->weight(j));
  }
  out.module = quotient_of_hom(H, jac, jd);
  summarize(out.module, bound, out.finite_length, out.total_dim, out.dims);
  if (A->is_hypersurface()) {
    out.tjurina_dim = tjurina_number(A);
    out.tjurina_basis = tjurina_basis(A);
  }
  return out;
}

T2Space t2_ci(const QRingPtr& A) {
  if (!is_regular_sequence(*A)) throw MathError("t2_ci: the generators do not form a regular sequence");
  T2Space out;
  out.module = free_module(A, {});
  out.certified_zero = true;
  out.finite_length = true;
  out.total_dim = 0;
  out.method = "complete-intersection";
  return out;
}

T2Space t2_ls(const QRingPtr& A, std::optional<int> bound) {
  T2Space out;
  out.method = "lichtenbaum-schlessinger";
  out.bound = bound;
  const auto& gens = A->generators();
  const auto& R = A->poly_ring();
  const Field& F = A->field();
  int c = static_cast<int>(gens.size());
  std::vector<int> gd;
  for (const auto& f : gens) gd.push_back(deg_of(f));
  auto ordg = ModuleOrder::top(gd);
  std::vector<SVec> cols;
  auto ord1 = ModuleOrder::top({0});
  for (const auto& f : gens) {
    SVec v;
    for (const auto& t : f.terms()) v.push_back({t.c, t.m, 0});
    cols.push_back(v);
  }
  // R: relations among the generators over P
  auto rel = syzygies_modulo(R, {}, ord1, cols, {});
  std::vector<SVec> rs;
  for (auto& s : rel) {
    vsort(s, F, *ordg);
    if (!s.empty()) rs.push_back(s);
  }
  {
    auto keep = minimal_subset(ambient_ring(A), ordg, rs);
    std::vector<SVec> kept;
    for (int k : keep) kept.push_back(rs[k]);
    rs = kept;
  }
  if (rs.empty()) {
    out.module = free_module(A, {});
    out.finite_length = true;
    out.total_dim = 0;
    out.certified_zero = true;
    return out;
  }
  std::vector<int> rd;
  for (const auto& r : rs) rd.push_back(vdegree(r, *ordg));
  auto ordr = ModuleOrder::top(rd);
  // relations of R/R_0 over P: syzygies among the r_k and the Koszul relations
  std::vector<SVec> erel = syzygies_modulo(R, {}, ordg, rs, {});
  GroebnerEngine eng(R, {}, ordg, true);
  for (std::size_t k = 0; k < rs.size(); ++k) eng.add_input(rs[k], rd[k]);
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) {
      SVec kz;
      for (const auto& t : gens[b].terms()) kz.push_back({t.c, t.m, a});
      for (const auto& t : gens[a].terms()) kz.push_back({F.neg(t.c), t.m, b});
      vsort(kz, F, *ordg);
      auto l = eng.lift(kz);
      if (!l) throw MathError("t2_ls: Koszul relation outside the relation module");
      erel.push_back(*l);
    }
  std::vector<SVec> er;
  for (auto& e : erel) {
    SVec v = vreduce_ideal(R, e, A->gb(), *ordr);
    if (!v.empty()) er.push_back(v);
  }
  std::vector<int> erd;
  for (const auto& e : er) erd.push_back(vdegree(e, *ordr));
  auto E = PresentedModule::make(Matrix::from_columns(A, rd, erd, er), "R/R0");
  HomModule H = hom_module(E, ring_module(A));
  std::vector<SVec> imgs;
  std::vector<int> ideg;
  for (int i = 0; i < c; ++i) {
    SVec v;
    for (std::size_t k = 0; k < rs.size(); ++k)
      for (const auto& t : rs[k])
        if (t.comp == i) {
          Poly red = A->reduce(Poly::monomial(R, t.c, t.m));
          for (const auto& u : red.terms()) v.push_back({u.c, u.m, H.layout.comp(static_cast<int>(k), 0)});
        }
    vsort(v, F, *H.layout.order());
    imgs.push_back(v);
    ideg.push_back(-gd[i]);
  }
  out.module = quotient_of_hom(H, imgs, ideg);
  summarize(out.module, bound, out.finite_length, out.total_dim, out.dims);
  out.certified_zero = out.module->is_zero();
  return out;
}

// ------------------------------------------------------------ KS and Syz

namespace {

Matrix inclusion_of_minimal(const FreeResolution& F) {
  const QRingPtr& A = F.module->ring();
  Matrix incl(A, F.input->gen_degrees(), F.degrees[0]);
  for (std::size_t k = 0; k < F.kept.size(); ++k)
    incl.set(F.kept[k], static_cast<int>(k), Poly::constant(A->poly_ring(), Scalar(1)));
  return incl;
}

Matrix apply_to_matrix(const QRingPtr& A, const Derivation& D, const Matrix& m) {
  std::vector<int> sd = m.source_degrees();
  for (auto& d : sd) d += D.degree;
  Matrix out(A, m.target_degrees(), sd);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.set(i, j, apply(A, D, m.at(i, j)));
  return out;
}

}  // namespace

ExtClass ks_map(const ExtPtr& ext1, const Derivation& D) {
  if (ext1->index() != 1) throw MathError("ks_map needs Ext^1(N,N)");
  const QRingPtr& A = ext1->source()->ring();
  if (!is_derivation(A, D)) throw MathError("ks_map: not a derivation of A");
  const FreeResolution& F = ext1->resolution();
  Matrix C = inclusion_of_minimal(F) * apply_to_matrix(A, D, F.d(1));
  if (!ext1->is_cocycle(ext1->layout().from_matrix(C))) throw MathError("ks_map: D(d1) is not a cocycle");
  ExtClass c = ext1->make_class(C);
  c.degree = D.degree;
  return c;
}

ExtPtr syzygy_ext_group(const ExtPtr& ext1) {
  const FreeResolution& F = ext1->resolution();
  auto S = F.syzygy_module(1);
  auto G = ExtGroup::compute(1, S, S);
  const FreeResolution& FS = G->resolution();
  if (!(FS.d(1) == F.d(2)) || FS.kept.size() != F.degrees[1].size())
    throw MathError("syzygy_ext_group: resolution of Syz N is not the shifted resolution");
  return G;
}

ExtClass syz_on_ext(const ExtClass& c, const ExtPtr& syz_group) {
  const ExtGroup& G = *c.group;
  if (G.index() != 1) throw MathError("syz_on_ext needs a class of Ext^1");
  const QRingPtr& A = G.source()->ring();
  const FreeResolution& F = G.resolution();
  if (F.length() < 2) throw MathError("syz_on_ext: resolution too short");
  Matrix C0 = F.to_min * c.matrix();
  Matrix X = C0 * F.d(2);
  const Matrix& d1 = F.d(1);
  GroebnerEngine eng(A->poly_ring(), A->gb(), d1.target_order(), true);
  for (int j = 0; j < d1.cols(); ++j) eng.add_input(d1.column(j), d1.source_degrees()[j]);
  auto ord = ModuleOrder::top(F.degrees[1]);
  std::vector<SVec> cols;
  for (int j = 0; j < X.cols(); ++j) {
    auto a = eng.lift(X.column(j));
    if (!a) throw MathError("syz_on_ext: cocycle does not lift through d1");
    SVec v = *a;
    vsort(v, A->field(), *ord);
    cols.push_back(v);
  }
  Matrix C1 = Matrix::from_columns(A, F.degrees[1], X.source_degrees(), cols);
  ExtClass out = syz_group->make_class(C1);
  out.degree = c.degree;
  return out;
}

// ------------------------------------------------------------ matrix factorizations

bool MatrixFactorization::verify() const {
  Matrix a = phi * psi, b = psi * phi;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != (i == j ? f : Poly(P->poly_ring()))) return false;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (b.at(i, j) != (i == j ? f : Poly(P->poly_ring()))) return false;
  return true;
}

MatrixFactorization matrix_factorization(const ModPtr& N) {
  const QRingPtr& A = N->ring();
  if (!A->is_hypersurface()) throw MathError("matrix_factorization needs a hypersurface ring");
  auto P = ambient_ring(A);
  const Poly& f = A->generators()[0];
  int df = deg_of(f);
  auto F = free_resolution(N, 1);
  const auto& t = F->degrees[0];
  auto ord = ModuleOrder::top(t);
  std::vector<SVec> cols = F->d(1).over(P).columns();
  for (std::size_t i = 0; i < t.size(); ++i) {
    SVec v;
    for (const auto& term : f.terms()) v.push_back({term.c, term.m, static_cast<int>(i)});
    vsort(v, A->field(), *ord);
    cols.push_back(v);
  }
  auto keep = minimal_subset(P, ord, cols);
  std::vector<SVec> pc;
  std::vector<int> sd;
  for (int k : keep) {
    pc.push_back(cols[k]);
    sd.push_back(vdegree(cols[k], *ord));
  }
  if (pc.size() != t.size()) throw MathError("matrix_factorization: module is not MCM (presentation over P is not square)");
  MatrixFactorization mf{P, f, Matrix::from_columns(P, t, sd, pc), Matrix()};
  GroebnerEngine eng(P->poly_ring(), {}, ord, true);
  for (std::size_t j = 0; j < pc.size(); ++j) eng.add_input(pc[j], sd[j]);
  auto ords = ModuleOrder::top(sd);
  std::vector<SVec> psic;
  std::vector<int> psd;
  for (std::size_t i = 0; i < t.size(); ++i) {
    SVec v;
    for (const auto& term : f.terms()) v.push_back({term.c, term.m, static_cast<int>(i)});
    vsort(v, A->field(), *ord);
    auto a = eng.lift(v);
    if (!a) throw MathError("matrix_factorization: f e_i not in the image of phi");
    SVec w = *a;
    vsort(w, A->field(), *ords);
    psic.push_back(w);
    psd.push_back(t[i] + df);
  }
  mf.psi = Matrix::from_columns(P, sd, psd, psic);
  if (!mf.verify()) throw MathError("matrix_factorization: phi psi != f Id");
  return mf;
}

namespace {

// Linear system for Σ c_k g_k Id = ξ1 ψ + φ ξ2 in one degree. Columns are the
// c_k followed by the ξ coefficients.
struct MfSystem {
  DenseMatrix M;
  std::vector<std::tuple<int, int, int, Monomial>> xi;  // (which, row, col, monomial)
  int nc = 0;
};

MfSystem mf_system(const MatrixFactorization& mf, const std::vector<Poly>& gs, int deg_g) {
  const auto& P = mf.P->poly_ring();
  int df = deg_of(mf.f);
  const auto& t = mf.phi.target_degrees();
  const auto& s = mf.phi.source_degrees();
  int r = static_cast<int>(t.size());
  int delta = deg_g - df;
  MfSystem sys;
  sys.nc = static_cast<int>(gs.size());
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      int d = s[b] - t[a] + delta;
      if (d >= 0)
        for (const auto& m : P->monomials_of_degree(d)) sys.xi.push_back({1, a, b, m});
    }
  for (int b = 0; b < r; ++b)
    for (int c = 0; c < r; ++c) {
      int d = t[c] - s[b] + deg_g;
      if (d >= 0)
        for (const auto& m : P->monomials_of_degree(d)) sys.xi.push_back({2, b, c, m});
    }
  // equations indexed by (a, c, monomial of degree t_c - t_a + deg g)
  std::vector<int> offset(r * r + 1, 0);
  std::vector<std::vector<Monomial>> eqm(r * r);
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c) {
      int d = t[c] - t[a] + deg_g;
      if (d >= 0) eqm[a * r + c] = P->monomials_of_degree(d);
    }
  for (int k = 0; k < r * r; ++k) offset[k + 1] = offset[k] + static_cast<int>(eqm[k].size());
  std::vector<decltype(index_map({}))> idx;
  for (auto& e : eqm) idx.push_back(index_map(e));
  sys.M = DenseMatrix(offset[r * r], sys.nc + static_cast<int>(sys.xi.size()));
  const Field& F = P->field();
  auto add = [&](int a, int c, const Poly& p, int col, bool negate) {
    for (const auto& term : p.terms()) {
      auto& cell = sys.M.at(offset[a * r + c] + idx[a * r + c].at(term.m), col);
      cell = negate ? F.sub(cell, term.c) : F.add(cell, term.c);
    }
  };
  for (int k = 0; k < sys.nc; ++k)
    for (int a = 0; a < r; ++a) add(a, a, gs[k], k, false);
  for (std::size_t u = 0; u < sys.xi.size(); ++u) {
    auto [which, i, j, m] = sys.xi[u];
    int col = sys.nc + static_cast<int>(u);
    if (which == 1) {  // ξ1[i][j] m contributes m·ψ[j][c] to (i, c)
      for (int c = 0; c < r; ++c)
        if (!mf.psi.at(j, c).is_zero()) add(i, c, mf.psi.at(j, c).times(Scalar(1), m), col, true);
    } else {  // ξ2[i][j] m contributes φ[a][i]·m to (a, j)
      for (int a = 0; a < r; ++a)
        if (!mf.phi.at(a, i).is_zero()) add(a, j, mf.phi.at(a, i).times(Scalar(1), m), col, true);
    }
  }
  return sys;
}

}  // namespace

ObstructionResult obstruction_mf(const MatrixFactorization& mf, const Poly& g) {
  ObstructionResult out;
  if (g.is_zero()) {
    out.obstructed = false;
    out.xi1 = Matrix(mf.P, mf.phi.target_degrees(), mf.phi.source_degrees());
    out.xi2 = Matrix(mf.P, mf.psi.target_degrees(), mf.psi.source_degrees());
    out.witness_verified = true;
    return out;
  }
  if (!g.is_homogeneous()) throw MathError("obstruction_mf: g must be homogeneous");
  int dg = deg_of(g);
  const Field& F = mf.P->field();
  MfSystem sys = mf_system(mf, {}, dg);
  // right-hand side g·Id
  MfSystem withg = mf_system(mf, {g}, dg);
  std::vector<Scalar> rhs(withg.M.rows);
  for (int i = 0; i < withg.M.rows; ++i) rhs[i] = withg.M.at(i, 0);
  // ξ columns enter the system negated
  DenseMatrix Mx(sys.M.rows, sys.M.cols);
  for (int i = 0; i < sys.M.rows; ++i)
    for (int j = 0; j < sys.M.cols; ++j) Mx.at(i, j) = F.neg(sys.M.at(i, j));
  auto sol = Mx.cols ? solve(F, Mx, rhs) : std::nullopt;
  bool zero_rhs = std::all_of(rhs.begin(), rhs.end(), [&](const Scalar& x) { return F.is_zero(x); });
  if (!sol && !zero_rhs) return out;
  std::vector<int> d1 = mf.phi.source_degrees(), d2 = mf.psi.source_degrees();
  int shift = dg - deg_of(mf.f);
  for (auto& d : d1) d += shift;
  for (auto& d : d2) d += shift;
  Matrix x1(mf.P, mf.phi.target_degrees(), d1), x2(mf.P, mf.psi.target_degrees(), d2);
  if (sol) {
    std::vector<std::vector<Poly>> e1(x1.rows(), std::vector<Poly>(x1.cols(), Poly(mf.P->poly_ring())));
    auto e2 = std::vector<std::vector<Poly>>(x2.rows(), std::vector<Poly>(x2.cols(), Poly(mf.P->poly_ring())));
    for (std::size_t u = 0; u < sys.xi.size(); ++u) {
      const Scalar& c = (*sol)[u];
      if (F.is_zero(c)) continue;
      auto [which, i, j, m] = sys.xi[u];
      auto& e = which == 1 ? e1 : e2;
      e[i][j] += Poly::monomial(mf.P->poly_ring(), c, m);
    }
    for (int i = 0; i < x1.rows(); ++i)
      for (int j = 0; j < x1.cols(); ++j) x1.set(i, j, e1[i][j]);
    for (int i = 0; i < x2.rows(); ++i)
      for (int j = 0; j < x2.cols(); ++j) x2.set(i, j, e2[i][j]);
  }
  out.obstructed = false;
  Matrix lhs = x1 * mf.psi + mf.phi * x2;
  bool ok = true;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (lhs.at(i, j) != (i == j ? g : Poly(mf.P->poly_ring()))) ok = false;
  out.xi1 = x1;
  out.xi2 = x2;
  out.witness_verified = ok;
  return out;
}

int obstruction_rank_mf(const MatrixFactorization& mf, const std::vector<Poly>& gs) {
  std::map<int, std::vector<Poly>> by_degree;
  for (const auto& g : gs)
    if (!g.is_zero()) by_degree[deg_of(g)].push_back(g);
  const Field& F = mf.P->field();
  int rank = 0;
  for (const auto& [d, list] : by_degree) {
    MfSystem sys = mf_system(mf, list, d);
    auto ns = nullspace(F, sys.M);
    DenseMatrix proj(static_cast<int>(ns.size()), sys.nc);
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (int k = 0; k < sys.nc; ++k) proj.at(static_cast<int>(i), k) = ns[i][k];
    int unobstructed = ns.empty() ? 0 : dfb::rank(F, proj);
    rank += static_cast<int>(list.size()) - unobstructed;
  }
  return rank;
}

// ------------------------------------------------------------ Eisenbud operator

Matrix eisenbud_operator(const FreeResolution& F, const Poly& f) {
  const QRingPtr& A = F.module->ring();
  auto P = ambient_ring(A);
  Matrix prod = F.d(1).over(P) * F.d(2).over(P);
  std::vector<int> sd = F.degrees[2];
  int df = deg_of(f);
  for (auto& d : sd) d -= df;
  Matrix t(P, F.degrees[0], sd);
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j)
      if (!prod.at(i, j).is_zero()) t.set(i, j, prod.at(i, j).exact_div(f));
  return t;
}

ExtClass obstruction_class(const ExtPtr& ext2, const Poly& g) {
  if (ext2->index() != 2) throw MathError("obstruction_class needs Ext^2(N,N)");
  const QRingPtr& A = ext2->source()->ring();
  if (!A->is_hypersurface()) throw MathError("obstruction_class needs a hypersurface");
  const Poly& f = A->generators()[0];
  const FreeResolution& F = ext2->resolution();
  Matrix t = eisenbud_operator(F, f);
  int dg = deg_of(g);
  std::vector<int> sd = t.source_degrees();
  for (auto& d : sd) d += dg;
  Matrix gt(A, F.degrees[0], sd);
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j)
      if (!t.at(i, j).is_zero()) gt.set(i, j, g * t.at(i, j));
  Matrix C = inclusion_of_minimal(F) * gt;
  if (!ext2->is_cocycle(ext2->layout().from_matrix(C))) throw MathError("obstruction_class: g t is not a cocycle");
  ExtClass c = ext2->make_class(C);
  c.degree = dg - deg_of(f);
  return c;
}

int obstruction_rank_eisenbud(const ExtPtr& ext2, const std::vector<Poly>& gs) {
  const QRingPtr& A = ext2->source()->ring();
  int df = deg_of(A->generators()[0]);
  std::map<int, std::vector<Poly>> by_degree;
  for (const auto& g : gs) by_degree[deg_of(g) - df].push_back(g);
  int r = 0;
  for (const auto& [d, list] : by_degree) {
    auto basis = ext2->basis_in_degree(d);
    if (basis.empty()) continue;
    DenseMatrix m(static_cast<int>(basis.size()), static_cast<int>(list.size()));
    for (std::size_t j = 0; j < list.size(); ++j) {
      auto x = obstruction_class(ext2, list[j]).coordinates();
      for (std::size_t i = 0; i < x.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = x[i];
    }
    r += rank(A->field(), m);
  }
  return r;
}

// ------------------------------------------------------------ pair cohomology

PairCohomologyReport pair_cohomology(const ModPtr& N, std::optional<int> degree_bound, std::vector<int> extra_window) {
  const QRingPtr& A = N->ring();
  PairCohomologyReport rep;
  {
    const auto& gd = N->gen_degrees();
    const auto& rd = N->presentation().source_degrees();
    int g = gd.empty() ? 0 : *std::max_element(gd.begin(), gd.end());
    int r = rd.empty() ? 0 : *std::max_element(rd.begin(), rd.end());
    rep.degree_bound = degree_bound ? *degree_bound : g + r + A->krull_dimension() + 2;
  }
  std::vector<ExtPtr> ext(3);
  for (int n = 0; n <= 2; ++n) {
    ext[n] = ExtGroup::compute(n, N, N);
    rep.ext_finite[n] = ext[n]->finite_length();
    if (rep.ext_finite[n]) {
      rep.ext_dims[n] = ext[n]->total_dim();
    } else {
      long s = 0;
      for (const auto& [d, v] : ext[n]->dims_by_degree(rep.degree_bound)) s += v;
      rep.ext_dims[n] = s;
    }
  }
  rep.forgetful_smooth = ext[2]->module()->is_zero();

  // ∂0 = g^N on derivations in the degrees carried by Ext^1(N,N)
  std::set<int> window(extra_window.begin(), extra_window.end());
  if (rep.ext_finite[1])
    for (int d : ext[1]->support_degrees()) window.insert(d);
  rep.der_window.assign(window.begin(), window.end());
  for (int e : rep.der_window) {
    auto ders = derivations_in_degree(A, e);
    rep.der_dims[e] = static_cast<long>(ders.size());
    if (ders.empty()) continue;
    auto basis = ext[1]->module()->basis_in_degree(e);
    if (basis.empty()) continue;
    DenseMatrix m(static_cast<int>(basis.size()), static_cast<int>(ders.size()));
    for (std::size_t j = 0; j < ders.size(); ++j) {
      auto x = ks_map(ext[1], ders[j]).coordinates();
      for (std::size_t i = 0; i < x.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = x[i];
    }
    rep.rank_d0 += rank(A->field(), m);
  }

  T1Space T = t1(A, rep.degree_bound);
  rep.t1_finite = T.finite_length;
  rep.t1_dim = T.finite_length ? T.total_dim : -1;
  rep.t2_status = A->is_complete_intersection() ? "zero (complete intersection)" : "not computed";

  if (rep.t1_finite && rep.t1_dim == 0) {
    rep.rank_d1 = 0;
    rep.d1_method = "T1 = 0";
  } else if (A->is_hypersurface() && rep.t1_finite && rep.ext_finite[2]) {
    rep.d1_method = "eisenbud-operator";
    int r = obstruction_rank_eisenbud(ext[2], T.tjurina_basis);
    rep.rank_d1 = r;
    try {
      rep.rank_d1_mf = obstruction_rank_mf(matrix_factorization(N), T.tjurina_basis);
    } catch (const MathError&) {
      // N not MCM: no matrix factorization cross-check
    }
  } else {
    rep.d1_method = "not computed";
  }
  long base = rep.ext_dims[1] - rep.rank_d0;
  if (rep.t1_finite) {
    rep.ot1_lower = base;
    rep.ot1_upper = base + rep.t1_dim;
    if (rep.rank_d1) {
      rep.ot1 = base + rep.t1_dim - *rep.rank_d1;
      rep.ot1_lower = rep.ot1_upper = *rep.ot1;
    }
  }
  return rep;
}

}  // namespace dfb
