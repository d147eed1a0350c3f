#include "dfb/cm.hpp"

#include <algorithm>
#include <numeric>

#include "dfb/cotangent.hpp"

namespace dfb {

namespace {

Poly one(const QRingPtr& A) { return Poly::constant(A->poly_ring(), Scalar(1)); }

ModPtr zero_module(const QRingPtr& A) { return PresentedModule::free(A, {}); }

ModPtr sum_of(const QRingPtr& A, const std::vector<ModPtr>& parts) {
  if (parts.empty()) return zero_module(A);
  ModPtr out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

// ⊕_i ω(s_i) where generator block i of the result sits in degrees g_a - s_i.
ModPtr omega_sum(const DualizingModule& w, const std::vector<int>& shifts) {
  std::vector<ModPtr> parts;
  for (int s : shifts) parts.push_back(twist(w.module, s));
  return sum_of(w.ring, parts);
}

// Minimal generators F_0 of a resolution back to the generators of its input.
Matrix minimal_to_input(const FreeResolution& F) {
  const QRingPtr& A = F.module->ring();
  Matrix m(A, F.input->gen_degrees(), F.degrees[0]);
  for (std::size_t k = 0; k < F.kept.size(); ++k) m.set(F.kept[k], static_cast<int>(k), one(A));
  return m;
}

Check check(std::string name, bool ok, std::string detail = "") { return {std::move(name), ok, std::move(detail)}; }

bool is_gorenstein(const DualizingModule& w) {
  return w.module->num_gens() == 1 && w.module->presentation().cols() == 0;
}

std::vector<Check> certify(const ApproximationTriple& t, const DualizingModule& w) {
  std::vector<Check> out;
  const QRingPtr& A = t.n->ring();
  int dim = A->krull_dimension();
  bool pw = is_well_defined(t.pi), iw = is_well_defined(t.incl);
  out.push_back(check("pi well-defined", pw));
  out.push_back(check("incl well-defined", iw));
  out.push_back(check("pi surjective", pw && is_surjective(t.pi)));
  out.push_back(check("incl injective", iw && is_injective(t.incl)));
  out.push_back(check("exact at M", pw && iw && exact_at(t.incl, t.pi)));
  int dm = depth(t.m);
  out.push_back(check("M is MCM", dm >= dim, "depth " + std::to_string(dm) + ", dim " + std::to_string(dim)));
  for (auto& c : verify_omega_resolution(t.l_resolution, "L")) out.push_back(std::move(c));
  if (is_gorenstein(w) && !t.l->is_zero()) {
    auto F = free_resolution(t.l, dim + 1);
    out.push_back(check("L has finite projective dimension", F->rank(dim + 1) == 0,
                        "resolution terminates within dim A + 1 steps"));
  }
  return out;
}

bool closed_fiber_minimal(const ApproximationTriple& t) {
  if (t.l->num_gens() == 0) return true;
  auto pm = prune(t.m), pl = prune(t.l);
  Matrix m = pm.to_min * t.incl.matrix * from_minimal(t.l, pl).matrix;
  return !m.has_unit_entry();
}

ApproximationTriple finish(ApproximationTriple t, const DualizingModule& w) {
  t.checks = certify(t, w);
  t.closed_fiber_minimal = closed_fiber_minimal(t);
  return t;
}

ModuleMap iso_onto(const ModPtr& from, const ModPtr& N, const std::string& what) {
  auto r = is_isomorphic(from, N);
  if (!r.isomorphic() || !r.map)
    throw MathError(what + ": could not certify the isomorphism with the input (" + verdict_name(r.verdict) + ")");
  return *r.map;
}

// (a)
ApproximationTriple approx_mcm(const ModPtr& N, const DualizingModule& w) {
  ApproximationTriple t;
  const QRingPtr& A = N->ring();
  t.n = N;
  t.m = N;
  t.l = zero_module(A);
  t.pi = identity_map(N);
  t.incl = {t.l, N, Matrix(A, N->gen_degrees(), {})};
  t.strategy = "mcm";
  return finish(std::move(t), w);
}

// (c) 0 -> ω -> F -> m -> 0 from the generator of Ext^1(m, ω).
ApproximationTriple approx_maximal_ideal(const ModPtr& N, const DualizingModule& w) {
  auto E1 = ExtGroup::compute(1, N, w.module);
  if (!E1->finite_length() || E1->total_dim() != 1)
    throw MathError("mcm_approximation: Ext^1(m, omega) is not one dimensional");
  ExtClass c = E1->basis().at(0);
  Extension ext = build_extension(c);
  if (!ext.verified) throw MathError("mcm_approximation: extension from Ext^1(m, omega) failed verification");
  int e = c.degree;
  ApproximationTriple t;
  t.n = N;
  t.m = twist(ext.E, e);
  t.l = twist(w.module, e);
  t.incl = {t.l, t.m, ext.from_L.matrix.twisted(-e)};
  Matrix to_min_n = ext.to_N.matrix.twisted(-e);
  t.pi = {t.m, N, minimal_to_input(E1->resolution()) * to_min_n};
  t.l_resolution.steps.push_back(identity_map(t.l));
  t.strategy = "maximal-ideal";
  return finish(std::move(t), w);
}

// (b) N of finite length: N ≅ Ext^d(X, ω) with X = Ext^d(N, ω), and the
// cocycles Z^d = Hom(Syz^d X, ω) of the dualized resolution of X map onto it.
ApproximationTriple approx_finite_length(const ModPtr& N, const DualizingModule& w) {
  const QRingPtr& A = N->ring();
  int d = A->krull_dimension();
  auto X = ExtGroup::compute(d, N, w.module)->module();
  auto R = free_resolution(X, d + 1);
  auto G = ExtGroup::compute(d, X, w.module);
  HomModule H = hom_module(R->syzygy_module(d), w.module);
  if (H.layout.src != G->layout().src || H.layout.tgt != G->layout().tgt)
    throw MathError("mcm_approximation: cocycle layouts disagree");
  ModPtr M = H.module();

  std::vector<SVec> cols;
  for (const auto& g : H.sq.generators) cols.push_back(G->element(g));
  ModuleMap to_ext{M, G->module(), Matrix::from_columns(A, G->module()->gen_degrees(), M->gen_degrees(), cols)};

  ApproximationTriple t;
  t.n = N;
  t.m = M;
  t.pi = compose(iso_onto(G->module(), N, "mcm_approximation"), to_ext);

  // coboundaries B^d: image of Hom(F_{d-1}, ω)
  HomLayout L0{R->degrees[d - 1], w.module->gen_degrees()};
  ModPtr W0 = omega_sum(w, R->degrees[d - 1]);
  std::vector<SVec> u;
  for (const auto& col : L0.precompose_columns(R->d(d), H.layout)) {
    auto x = H.element(col);
    if (!x) throw MathError("mcm_approximation: coboundary outside the cocycles");
    u.push_back(*x);
  }
  ModuleMap uw{W0, M, Matrix::from_columns(A, M->gen_degrees(), W0->gen_degrees(), u)};
  Subquotient img = image(uw);
  t.l = img.module;
  t.incl = {t.l, M, Matrix::from_columns(A, M->gen_degrees(), t.l->gen_degrees(), img.generators)};
  std::vector<SVec> onto;
  for (const auto& col : u) {
    auto x = preimage(t.incl, col);
    if (!x) throw MathError("mcm_approximation: coboundary not in L");
    onto.push_back(*x);
  }
  t.l_resolution.steps.push_back({W0, t.l, Matrix::from_columns(A, t.l->gen_degrees(), W0->gen_degrees(), onto)});
  if (d == 2) {
    HomLayout L1{R->degrees[0], w.module->gen_degrees()};
    ModPtr W1 = omega_sum(w, R->degrees[0]);
    auto c1 = L1.precompose_columns(R->d(1), L0);
    t.l_resolution.steps.push_back({W1, W0, Matrix::from_columns(A, W0->gen_degrees(), W1->gen_degrees(), c1)});
  }
  t.strategy = "finite-length-duality";
  return finish(std::move(t), w);
}

// (d) 0 -> Ω -> Ω** -> (T^1)^∨ -> 0 with Ω resolved by the Jacobian.
ApproximationTriple approx_t1_dual(const ModPtr& N, const DualizingModule& w) {
  const QRingPtr& A = N->ring();
  if (!is_gorenstein(w) || !A->is_complete_intersection())
    throw MathError("mcm_approximation: the T1-dual route needs a complete intersection");
  auto K = kaehler_double_dual(A);
  ApproximationTriple t;
  t.n = N;
  t.m = K.double_dual;
  t.l = K.omega;
  t.incl = K.ev;
  ModuleMap q{K.double_dual, K.cokernel, Matrix::identity(A, K.double_dual->gen_degrees())};
  t.pi = compose(iso_onto(K.cokernel, N, "mcm_approximation"), q);
  int g = w.module->gen_degrees()[0];
  std::vector<int> s0, s1;
  for (int x : A->poly_ring()->weights()) s0.push_back(g - x);
  std::vector<int> fd;
  for (const auto& f : A->generators()) fd.push_back(*f.homogeneous_degree());
  for (int x : fd) s1.push_back(g - x);
  ModPtr W0 = omega_sum(w, s0), W1 = omega_sum(w, s1);
  t.l_resolution.steps.push_back({W0, t.l, Matrix::identity(A, W0->gen_degrees())});
  Matrix J(A, W0->gen_degrees(), W1->gen_degrees());
  for (std::size_t i = 0; i < fd.size(); ++i)
    for (int j = 0; j < A->nvars(); ++j) J.set(j, static_cast<int>(i), A->generators()[i].derivative(j));
  t.l_resolution.steps.push_back({W1, W0, J});
  t.strategy = "t1-dual";
  return finish(std::move(t), w);
}

}  // namespace

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

// ------------------------------------------------------------ ω, depth

int depth(const ModPtr& M) {
  const QRingPtr& A = M->ring();
  int dim = A->krull_dimension();
  if (M->is_zero()) return dim + 1;
  auto k = residue_field(A);
  for (int i = 0; i <= dim; ++i)
    if (!ExtGroup::compute(i, k, M)->module()->is_zero()) return i;
  return dim + 1;
}

bool is_mcm(const ModPtr& M) {
  if (M->is_zero()) return true;
  return depth(M) >= M->ring()->krull_dimension();
}

namespace {

// c-th derivative at t = 1 of a Laurent polynomial, after shifting to t^0.
mpz_class derivative_at_one(const std::map<int, long>& q, int c) {
  if (q.empty()) return 0;
  int lo = q.begin()->first;
  mpz_class sum = 0;
  for (const auto& [d, v] : q) {
    mpz_class f = v;
    for (int i = 0; i < c; ++i) f *= (d - lo - i);
    sum += f;
  }
  return sum;
}

}  // namespace

std::optional<long> generic_rank(const ModPtr& M) {
  const QRingPtr& A = M->ring();
  int c = A->nvars() - A->krull_dimension();
  mpz_class a = derivative_at_one(ring_module(A)->hilbert_numerator(), c);
  mpz_class m = derivative_at_one(M->hilbert_numerator(), c);
  if (a == 0 || m % a != 0) return std::nullopt;
  mpz_class r = m / a;
  return r.get_si();
}

ModPtr dualizing_module_over_P(const QRingPtr& A) {
  auto P = ambient_ring(A);
  const auto& w = A->poly_ring()->weights();
  int sw = std::accumulate(w.begin(), w.end(), 0);
  std::vector<int> sd;
  for (const auto& f : A->generators()) sd.push_back(*f.homogeneous_degree());
  Matrix rel(P, {0}, sd);
  for (std::size_t i = 0; i < A->generators().size(); ++i) rel.set(0, static_cast<int>(i), A->generators()[i]);
  auto AP = PresentedModule::make(rel, "A");
  int c = A->nvars() - A->krull_dimension();
  auto E = ExtGroup::compute(c, AP, twist(ring_module(P), -sw));
  auto m = E->module();
  return minimal_presentation(PresentedModule::make(m->presentation().over(A), "omega"));
}

DualizingModule dualizing_module(const QRingPtr& A) {
  DualizingModule out;
  out.ring = A;
  if (A->is_complete_intersection()) {
    const auto& w = A->poly_ring()->weights();
    int sw = std::accumulate(w.begin(), w.end(), 0), sf = 0;
    for (const auto& f : A->generators()) sf += *f.homogeneous_degree();
    out.twist = sf - sw;
    out.module = PresentedModule::free(A, {-out.twist}, "omega");
    out.construction = "complete-intersection-formula";
  } else {
    if (depth(ring_module(A)) < A->krull_dimension())
      throw MathError("dualizing_module: the ring is not Cohen-Macaulay");
    out.module = dualizing_module_over_P(A);
    out.construction = "ext-over-P";
  }
  out.module = out.module->with_origin(Origin::Omega, nullptr, "omega");
  return out;
}

ModPtr dual(const ModPtr& M, const ModPtr& omega) {
  return hom_module(M, omega).module()->with_origin(Origin::Dual, M, M->name() + "^v");
}

bool exact_at(const ModuleMap& f, const ModuleMap& g) {
  if (!is_zero_map(compose(g, f))) return false;
  auto ker = kernel(g);
  for (const auto& k : ker.generators)
    if (!preimage(f, k)) return false;
  return true;
}

std::vector<Check> verify_omega_resolution(const OmegaResolution& r, const std::string& label) {
  std::vector<Check> out;
  if (r.steps.empty()) {
    out.push_back(check(label + " resolution", true, "zero module"));
    return out;
  }
  bool wd = std::all_of(r.steps.begin(), r.steps.end(), [](const ModuleMap& f) { return is_well_defined(f); });
  out.push_back(check(label + " resolution maps well-defined", wd));
  if (!wd) return out;
  out.push_back(check(label + " resolution onto " + label, is_surjective(r.steps[0])));
  bool ex = true;
  for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) ex = ex && exact_at(r.steps[i + 1], r.steps[i]);
  out.push_back(check(label + " resolution exact", ex));
  out.push_back(check(label + " resolution starts injectively", is_injective(r.steps.back())));
  return out;
}

// ------------------------------------------------------------ Ω**

KaehlerDoubleDual kaehler_double_dual(const QRingPtr& A) {
  KaehlerDoubleDual out;
  out.omega = kaehler_module(A);
  auto R = ring_module(A);
  HomModule H1 = hom_module(out.omega, R);
  HomModule H2 = hom_module(H1.module(), R);
  out.double_dual = H2.module();
  int s = static_cast<int>(H1.sq.generators.size());
  std::vector<SVec> cols;
  for (int j = 0; j < A->nvars(); ++j) {
    // ev(dx_j) sends the k-th derivation D_k to D_k(x_j)
    SVec v;
    for (int k = 0; k < s; ++k)
      for (const auto& t : H1.sq.generators[k])
        if (t.comp == H1.layout.comp(j, 0)) v.push_back({t.c, t.m, H2.layout.comp(k, 0)});
    vsort(v, A->field(), *H2.layout.order());
    auto x = H2.element(v);
    if (!x) throw MathError("kaehler_double_dual: evaluation is not a homomorphism");
    cols.push_back(*x);
  }
  out.ev = {out.omega, out.double_dual,
            Matrix::from_columns(A, out.double_dual->gen_degrees(), out.omega->gen_degrees(), cols)};
  out.cokernel = cokernel(out.ev);
  return out;
}

ModPtr t1_dual_module(const QRingPtr& A) {
  return minimal_presentation(kaehler_double_dual(A).cokernel)->with_origin(Origin::T1Dual, nullptr, "T1dual");
}

// ------------------------------------------------------------ approximations

ApproximationTriple mcm_approximation(const ModPtr& N, const DualizingModule& omega) {
  const QRingPtr& A = N->ring();
  int dim = A->krull_dimension();
  if (is_mcm(N)) return approx_mcm(N, omega);
  if (N->origin() == Origin::MaximalIdeal && dim == 2) return approx_maximal_ideal(N, omega);
  if (N->origin() == Origin::T1Dual && dim == 2) return approx_t1_dual(N, omega);
  if (N->has_finite_length() && (dim == 1 || dim == 2)) return approx_finite_length(N, omega);
  throw MathError("mcm_approximation: unsupported module class (not MCM, not of finite length over a ring of "
                  "dimension 1 or 2, and not the maximal ideal or T1 dual of a surface)");
}

HullTriple fid_hull(const ApproximationTriple& t, const DualizingModule& omega) {
  if (!t.verified()) throw MathError("fid_hull: approximation triple is not verified");
  const QRingPtr& A = t.n->ring();
  HullTriple h;
  h.n = t.n;
  // M -> M^∨∨ ⊂ ⊕ ω(e_k), one summand for each generator of M^∨ = Hom(M, ω)
  HomModule H = hom_module(t.m, omega.module);
  const auto& ed = H.module()->gen_degrees();
  std::vector<int> wd;
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < ed.size(); ++k) {
    SVec unit{{Scalar(1), Monomial(), static_cast<int>(k)}};
    blocks.push_back(H.as_matrix(unit, ed[k]));
  }
  h.w = omega_sum(omega, ed);
  Matrix iota(A, h.w->gen_degrees(), t.m->gen_degrees());
  int g = omega.module->num_gens();
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (int a = 0; a < g; ++a)
      for (int i = 0; i < t.m->num_gens(); ++i) iota.set(static_cast<int>(k) * g + a, i, blocks[k].at(a, i));
  h.embed = {t.m, h.w, iota};
  if (!is_injective(h.embed)) throw MathError("fid_hull: M does not embed in its double dual");
  ModuleMap l_to_w = compose(h.embed, t.incl);
  h.mp = cokernel(h.embed);
  h.lp = cokernel(l_to_w);
  Matrix idw = Matrix::identity(A, h.w->gen_degrees());
  h.w_to_lp = {h.w, h.lp, idw};
  h.w_to_mp = {h.w, h.mp, idw};
  h.to_mp = {h.lp, h.mp, idw};
  std::vector<SVec> cols;
  for (int j = 0; j < t.n->num_gens(); ++j) {
    SVec e{{Scalar(1), Monomial(), j}};
    auto x = preimage(t.pi, e);
    if (!x) throw MathError("fid_hull: pi is not surjective");
    Matrix xm = Matrix::from_columns(A, t.m->gen_degrees(), {t.n->gen_degrees()[j]}, {*x});
    cols.push_back((iota * xm).column(0));
  }
  h.iota = {t.n, h.lp, Matrix::from_columns(A, h.w->gen_degrees(), t.n->gen_degrees(), cols)};

  // L' resolution: W -> L', then L's resolution pushed into W
  h.lp_resolution.steps.push_back(h.w_to_lp);
  if (!t.l_resolution.steps.empty()) {
    h.lp_resolution.steps.push_back(compose(l_to_w, t.l_resolution.steps[0]));
    for (std::size_t i = 1; i < t.l_resolution.steps.size(); ++i) h.lp_resolution.steps.push_back(t.l_resolution.steps[i]);
  }

  auto& c = h.checks;
  int dim = A->krull_dimension();
  bool wd_ok = is_well_defined(h.iota) && is_well_defined(h.to_mp) && is_well_defined(h.embed);
  c.push_back(check("hull maps well-defined", wd_ok));
  c.push_back(check("N -> L' injective", wd_ok && is_injective(h.iota)));
  c.push_back(check("L' -> M' surjective", wd_ok && is_surjective(h.to_mp)));
  c.push_back(check("hull exact at L'", wd_ok && exact_at(h.iota, h.to_mp)));
  int dmp = depth(h.mp);
  c.push_back(check("M' is MCM", dmp >= dim, "depth " + std::to_string(dmp)));
  c.push_back(check("L -> W injective", is_injective(l_to_w)));
  c.push_back(check("middle row exact at W", exact_at(l_to_w, h.w_to_lp)));
  c.push_back(check("M -> W -> M' exact", exact_at(h.embed, h.w_to_mp) && is_surjective(h.w_to_mp)));
  c.push_back(check("square N-L'", maps_equal(compose(h.iota, t.pi), compose(h.w_to_lp, h.embed))));
  c.push_back(check("triangle W-L'-M'", maps_equal(h.w_to_mp, compose(h.to_mp, h.w_to_lp))));
  for (auto& x : verify_omega_resolution(h.lp_resolution, "L'")) c.push_back(std::move(x));
  if (is_gorenstein(omega) && !h.lp->is_zero()) {
    auto F = free_resolution(h.lp, dim + 1);
    c.push_back(check("L' has finite projective dimension", F->rank(dim + 1) == 0));
  }
  return h;
}

FundamentalModule fundamental_module(const QRingPtr& A, const DualizingModule& omega) {
  if (A->krull_dimension() != 2) throw MathError("fundamental_module: the ring must have dimension 2");
  FundamentalModule out;
  out.sequence = approx_maximal_ideal(maximal_ideal(A), omega);
  out.module = out.sequence.m->with_origin(Origin::Fundamental, nullptr, "F");
  out.degenerate = minimal_presentation(out.module)->num_relations() == 0;
  return out;
}

// ------------------------------------------------------------ transfer maps

namespace {

bool vanishes(int n, const ModPtr& M, const ModPtr& N) { return ExtGroup::compute(n, M, N)->module()->is_zero(); }

// (b)^{-1} a degree by degree where b is bijective.
std::optional<GradedLinearMap> solve_through(const GradedLinearMap& a, const GradedLinearMap& b, const Field& F) {
  GradedLinearMap out;
  out.source_dims = a.source_dims;
  out.target_dims = b.source_dims;
  for (const auto& [d, m] : a.blocks) {
    auto it = b.blocks.find(d);
    int src = m.cols;
    int tgt = it == b.blocks.end() ? 0 : it->second.cols;
    DenseMatrix x(tgt, src);
    if (it == b.blocks.end() || it->second.rows != it->second.cols || rank(F, it->second) != it->second.cols) {
      if (m.rows != 0 || tgt != 0) return std::nullopt;
    } else {
      for (int j = 0; j < src; ++j) {
        std::vector<Scalar> rhs(m.rows);
        for (int i = 0; i < m.rows; ++i) rhs[i] = m.at(i, j);
        auto s = solve(F, it->second, rhs);
        if (!s) return std::nullopt;
        for (int i = 0; i < tgt; ++i) x.at(i, j) = (*s)[i];
      }
    }
    out.blocks[d] = x;
  }
  return out;
}

bool bijective_on(const GradedLinearMap& b) {
  for (const auto& [d, n] : b.target_dims) {
    auto it = b.blocks.find(d);
    int r = it == b.blocks.end() ? 0 : b.rank_in_degree(d);
    int s = b.source_dims.count(d) ? b.source_dims.at(d) : 0;
    if (r != n || r != s) return false;
  }
  for (const auto& [d, s] : b.source_dims)
    if (s && !b.target_dims.count(d)) return false;
  return true;
}

}  // namespace

TransferReport transfer_maps(const ApproximationTriple& t, const HullTriple& h) {
  TransferReport rep;
  const Field& F = t.n->ring()->field();
  const ModPtr &N = t.n, &M = t.m, &L = t.l, &Lp = h.lp, &Mp = h.mp;

  rep.hypotheses.push_back(check("Ext^1(M,L) = 0", vanishes(1, M, L)));
  rep.hypotheses.push_back(check("Ext^2(M,L) = 0", vanishes(2, M, L)));

  auto NN1 = ExtGroup::compute(1, N, N), MN1 = ExtGroup::compute(1, M, N), MM1 = ExtGroup::compute(1, M, M);
  if (NN1->finite_length() && MN1->finite_length() && MM1->finite_length()) {
    rep.pi_pull = induced_map(NN1, MN1, [&](const ExtClass& c) { return pull_back(c, t.pi, MN1); });
    rep.pi_push = induced_map(MM1, MN1, [&](const ExtClass& c) { return push_forward(c, t.pi, MN1); });
    if (bijective_on(rep.pi_push)) {
      auto e = solve_through(rep.pi_pull, rep.pi_push, F);
      if (e) {
        rep.eta1_m = *e;
        rep.eta1_m.target_dims = rep.pi_push.source_dims;
        rep.eta1_m_defined = true;
      }
    }
    rep.sigma1_injective = rep.pi_pull.injective();
    auto NN2 = ExtGroup::compute(2, N, N), MN2 = ExtGroup::compute(2, M, N);
    if (NN2->finite_length() && MN2->finite_length()) {
      auto p2 = induced_map(NN2, MN2, [&](const ExtClass& c) { return pull_back(c, t.pi, MN2); });
      rep.sigma1_iso = rep.pi_pull.bijective() && p2.injective();
    }
  }

  auto NLp1 = ExtGroup::compute(1, N, Lp), LpLp1 = ExtGroup::compute(1, Lp, Lp);
  if (NN1->finite_length() && NLp1->finite_length() && LpLp1->finite_length()) {
    rep.iota_push = induced_map(NN1, NLp1, [&](const ExtClass& c) { return push_forward(c, h.iota, NLp1); });
    rep.iota_pull = induced_map(LpLp1, NLp1, [&](const ExtClass& c) { return pull_back(c, h.iota, NLp1); });
    if (bijective_on(rep.iota_pull)) {
      auto e = solve_through(rep.iota_push, rep.iota_pull, F);
      if (e) {
        rep.eta1_lp = *e;
        rep.eta1_lp.target_dims = rep.iota_pull.source_dims;
        rep.eta1_lp_defined = true;
      }
    }
  }

  bool nmp0 = vanishes(0, N, Mp), nmp1 = vanishes(1, N, Mp);
  bool nm1 = vanishes(1, N, M), nm2 = vanishes(2, N, M);
  bool ln0 = vanishes(0, L, N), ln1 = vanishes(1, L, N);
  bool lpn1 = vanishes(1, Lp, N), lpn2 = vanishes(2, Lp, N);
  auto& c = rep.certificates;
  c.push_back(check("sigma_L' smooth", nmp1, "Ext^1(N,M') = 0"));
  c.push_back(check("sigma_L' iso", nmp0 && nmp1, "Ext^0(N,M') = Ext^1(N,M') = 0"));
  c.push_back(check("sigma_L smooth", nm2, "Ext^2(N,M) = 0"));
  c.push_back(check("sigma_L iso", nm1 && nm2, "Ext^1(N,M) = Ext^2(N,M) = 0"));
  c.push_back(check("sigma_M smooth", ln1, "Ext^1(L,N) = 0"));
  c.push_back(check("sigma_M iso", ln0 && ln1, "Ext^0(L,N) = Ext^1(L,N) = 0"));
  c.push_back(check("sigma_M' smooth", lpn2, "Ext^2(L',N) = 0"));
  c.push_back(check("sigma_M' iso", lpn1 && lpn2, "Ext^1(L',N) = Ext^2(L',N) = 0"));
  return rep;
}

}  // namespace dfb
