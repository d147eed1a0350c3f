#include <functional>
#include <map>

#include "dfb/cotangent.hpp"
#include "dfb/workbench/session.hpp"

namespace dfb::wb {

using nlohmann::json;

namespace {

json dims_json(const std::map<int, long>& dims) {
  json a = json::array();
  for (const auto& [d, v] : dims) a.push_back({d, v});
  return a;
}

std::string bound_tag(bool finite, std::optional<int> bound) {
  if (finite) return "exact";
  return bound ? "degree<=" + std::to_string(*bound) : "unbounded";
}

void add_checks(Report& r, const std::vector<Check>& cs, const std::string& prefix = "") {
  for (const auto& c : cs) r.certificates.push_back({{"name", prefix + c.name}, {"ok", c.ok}, {"detail", c.detail}});
}

void add_check(Report& r, const std::string& name, bool ok, const std::string& detail = "") {
  add_checks(r, {Check{name, ok, detail}});
}

json module_summary(const ModPtr& M) {
  auto m = minimal_presentation(M);
  json j{{"min_gens", m->num_gens()}, {"relations", m->num_relations()}, {"zero", m->is_zero()}};
  j["gen_degrees"] = m->gen_degrees();
  if (m->has_finite_length() && !m->is_zero()) j["length"] = m->length();
  return j;
}

json ext_entry(const ExtPtr& E, std::optional<int> bound) {
  json j{{"n", E->index()}, {"finite", E->finite_length()}};
  if (E->finite_length()) {
    j["dim"] = E->total_dim();
    j["dims"] = dims_json(E->dims_by_degree());
  } else {
    j["dim"] = nullptr;
    j["dims"] = dims_json(E->dims_by_degree(bound));
  }
  j["bound"] = bound_tag(E->finite_length(), bound);
  return j;
}

json linear_map_json(const GradedLinearMap& g) {
  return {{"source_dim", g.source_dim()},
          {"target_dim", g.target_dim()},
          {"rank", g.rank()},
          {"injective", g.injective()},
          {"surjective", g.surjective()},
          {"bijective", g.bijective()}};
}

int default_bound(const Definition& d, const SessionConfig& cfg) {
  if (cfg.degree_bound) return *cfg.degree_bound;
  int s = 0;
  for (int w : d.ring->poly_ring()->weights()) s += w;
  return 2 * s;
}

ModPtr arg_module(const Definition& d, const std::vector<std::string>& mods, std::size_t i, const std::string& cmd) {
  if (mods.size() <= i) throw InputError(cmd + ": missing module argument");
  return d.module(mods[i]);
}

using Handler = std::function<void(Report&, const Definition&, const std::vector<std::string>&, const SessionConfig&)>;

void cmd_resolve(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig& cfg) {
  auto M = arg_module(d, mods, 0, "resolve");
  int len = cfg.length.value_or(4);
  auto F = free_resolution(M, len);
  r.results["length"] = len;
  r.results["betti"] = F->betti();
  json gb = json::array();
  for (const auto& row : F->graded_betti()) {
    json a = json::array();
    for (const auto& [deg, mult] : row) a.push_back({deg, mult});
    gb.push_back(a);
  }
  r.results["graded_betti"] = gb;
  auto chk = verify_resolution(*F);
  add_check(r, "d^2 = 0", chk.composites_vanish);
  add_check(r, "exact", chk.exact);
  add_check(r, "minimal", chk.minimal);
  r.bounds["betti"] = "exact to length " + std::to_string(len);
}

void cmd_ext(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig& cfg) {
  auto M = arg_module(d, mods, 0, "ext");
  auto N = mods.size() > 1 ? d.module(mods[1]) : M;
  int top = cfg.length.value_or(2);
  int bound = default_bound(d, cfg);
  json a = json::array();
  for (int n = 0; n <= top; ++n) {
    auto E = ExtGroup::compute(n, M, N);
    a.push_back(ext_entry(E, bound));
    r.bounds["ext" + std::to_string(n)] = bound_tag(E->finite_length(), bound);
  }
  r.results["ext"] = a;
}

void cmd_t1(Report& r, const Definition& d, const std::vector<std::string>&, const SessionConfig& cfg) {
  int bound = default_bound(d, cfg);
  auto T = t1(d.ring, bound);
  r.results["method"] = T.method;
  r.results["finite"] = T.finite_length;
  r.results["dim"] = T.finite_length ? json(T.total_dim) : json(nullptr);
  r.results["dims"] = dims_json(T.dims);
  if (T.tjurina_dim) {
    r.results["tjurina_number"] = *T.tjurina_dim;
    json b = json::array();
    for (const auto& g : T.tjurina_basis) b.push_back(g.to_string());
    r.results["tjurina_basis"] = b;
    if (T.finite_length) add_check(r, "T1 length equals the Tjurina number", *T.tjurina_dim == T.total_dim);
  }
  r.bounds["t1"] = bound_tag(T.finite_length, bound);
}

void cmd_t2(Report& r, const Definition& d, const std::vector<std::string>&, const SessionConfig& cfg) {
  int bound = default_bound(d, cfg);
  auto ls = t2_ls(d.ring, bound);
  r.results["finite"] = ls.finite_length;
  r.results["dim"] = ls.finite_length ? json(ls.total_dim) : json(nullptr);
  r.results["dims"] = dims_json(ls.dims);
  r.results["method"] = ls.method;
  if (d.ring->is_complete_intersection()) {
    auto ci = t2_ci(d.ring);
    r.results["complete_intersection_zero"] = ci.certified_zero;
    add_check(r, "T2 routes agree", ci.certified_zero == ls.module->is_zero());
  }
  r.bounds["t2"] = bound_tag(ls.finite_length, bound);
}

void approximation_results(Report& r, const ApproximationTriple& t) {
  r.results["strategy"] = t.strategy;
  r.results["m"] = module_summary(t.m);
  r.results["m"]["depth"] = depth(t.m);
  r.results["l"] = module_summary(t.l);
  r.results["l"]["omega_resolution_length"] = t.l_resolution.steps.size();
  r.results["closed_fiber_minimal"] = t.closed_fiber_minimal;
  add_checks(r, t.checks, "approximation: ");
}

void cmd_mcm(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig&) {
  auto t = mcm_approximation(arg_module(d, mods, 0, "mcm-approx"), d.omega());
  approximation_results(r, t);
}

void cmd_hull(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig&) {
  auto t = mcm_approximation(arg_module(d, mods, 0, "fid-hull"), d.omega());
  approximation_results(r, t);
  auto h = fid_hull(t, d.omega());
  r.results["w_rank"] = h.w->num_gens();
  r.results["lp"] = module_summary(h.lp);
  r.results["mp"] = module_summary(h.mp);
  r.results["mp"]["depth"] = depth(h.mp);
  add_checks(r, h.checks, "hull: ");
}

void cmd_fundamental(Report& r, const Definition& d, const std::vector<std::string>&, const SessionConfig&) {
  auto F = fundamental_module(d.ring, d.omega());
  r.results["module"] = module_summary(F.module);
  auto rk = generic_rank(F.module);
  r.results["rank"] = rk ? json(*rk) : json(nullptr);
  r.results["depth"] = depth(F.module);
  r.results["degenerate"] = F.degenerate;
  auto E = ExtGroup::compute(1, F.module, F.module);
  r.results["ext1_FF"] = E->finite_length() ? json(E->total_dim()) : json(nullptr);
  auto Fv = dual(F.module, ring_module(d.ring));
  auto syz = free_resolution(F.module, 2)->syzygy_module(1);
  auto v1 = is_isomorphic(syz, Fv, true);
  auto v2 = is_isomorphic(Fv, F.module, true);
  r.results["syz_iso_dual"] = verdict_name(v1.verdict);
  r.results["dual_iso_self"] = verdict_name(v2.verdict);
  r.results["dual_iso_self_twist"] = v2.twist;
  add_checks(r, F.sequence.checks, "sequence: ");
}

void cmd_ks(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig&) {
  auto N = arg_module(d, mods, 0, "ks-map");
  auto E1 = ExtGroup::compute(1, N, N);
  if (!E1->finite_length()) throw MathError("Ext^1(N,N) is not of finite length");
  json rows = json::array();
  int total = 0;
  for (int e : E1->support_degrees()) {
    auto ders = derivations_in_degree(d.ring, e);
    auto basis = E1->basis_in_degree(e);
    DenseMatrix m(static_cast<int>(basis.size()), static_cast<int>(ders.size()));
    for (std::size_t j = 0; j < ders.size(); ++j) {
      auto x = ks_map(E1, ders[j]).coordinates();
      for (std::size_t i = 0; i < x.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = x[i];
    }
    int rk = ders.empty() ? 0 : rank(d.ring->field(), m);
    total += rk;
    rows.push_back({{"degree", e}, {"der_dim", ders.size()}, {"ext1_dim", basis.size()}, {"rank", rk}});
  }
  r.results["by_degree"] = rows;
  r.results["rank"] = total;
  r.bounds["rank"] = "support of Ext^1(N,N)";
}

void cmd_obstruction(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig&) {
  if (!d.ring->is_hypersurface()) throw MathError("the ring is not a hypersurface");
  auto N = arg_module(d, mods, 0, "obstruction");
  auto T = t1(d.ring);
  auto E2 = ExtGroup::compute(2, N, N);
  std::optional<MatrixFactorization> mf;
  try {
    mf = matrix_factorization(N);
  } catch (const MathError&) {
  }
  r.results["matrix_factorization"] = mf.has_value();
  if (mf) add_check(r, "phi psi = psi phi = f Id", mf->verify());
  json gs = json::array();
  for (const auto& g : T.tjurina_basis) {
    json e{{"g", g.to_string()}};
    bool zero = E2->finite_length() ? obstruction_class(E2, g).is_zero() : false;
    if (E2->finite_length()) e["eisenbud_class_zero"] = zero;
    if (mf) {
      auto o = obstruction_mf(*mf, g);
      e["mf_obstructed"] = o.obstructed;
      if (E2->finite_length()) add_check(r, "routes agree on " + g.to_string(), o.obstructed == !zero);
      if (!o.obstructed) add_check(r, "witness for " + g.to_string(), o.witness_verified);
    }
    gs.push_back(e);
  }
  r.results["tjurina_basis"] = gs;
  if (mf) {
    const Poly& f = mf->f;
    std::vector<std::pair<std::string, Poly>> unob{{"f", f}};
    for (int j = 0; j < d.ring->nvars(); ++j)
      if (!f.derivative(j).is_zero()) unob.push_back({"d f/d" + d.ring->poly_ring()->names()[j], f.derivative(j)});
    json w = json::array();
    for (const auto& [name, g] : unob) {
      auto o = obstruction_mf(*mf, g);
      w.push_back({{"g", name}, {"obstructed", o.obstructed}, {"witness_verified", o.witness_verified}});
      add_check(r, name + " unobstructed with verified witness", !o.obstructed && o.witness_verified);
    }
    r.results["unobstructed"] = w;
    r.results["rank_mf"] = obstruction_rank_mf(*mf, T.tjurina_basis);
  }
  if (E2->finite_length()) r.results["rank_eisenbud"] = obstruction_rank_eisenbud(E2, T.tjurina_basis);
}

void cmd_pair(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig& cfg) {
  auto N = arg_module(d, mods, 0, "pair-cohomology");
  auto rep = pair_cohomology(N, cfg.degree_bound);
  json ext = json::object();
  for (const auto& [n, v] : rep.ext_dims) {
    ext[std::to_string(n)] = v;
    r.bounds["ext" + std::to_string(n)] = bound_tag(rep.ext_finite[n], rep.degree_bound);
  }
  r.results["ext_dims"] = ext;
  r.results["der_window"] = rep.der_window;
  r.results["t1"] = rep.t1_finite ? json(rep.t1_dim) : json(nullptr);
  r.results["t2"] = rep.t2_status;
  r.results["rank_d0"] = rep.rank_d0;
  r.results["rank_d1"] = rep.rank_d1 ? json(*rep.rank_d1) : json(nullptr);
  r.results["d1_method"] = rep.d1_method;
  if (rep.rank_d1_mf) {
    r.results["rank_d1_mf"] = *rep.rank_d1_mf;
    if (rep.rank_d1) add_check(r, "obstruction ranks agree", *rep.rank_d1 == *rep.rank_d1_mf);
  }
  r.results["ot1"] = rep.ot1 ? json(*rep.ot1) : json(nullptr);
  r.results["ot1_range"] = {rep.ot1_lower, rep.ot1_upper};
  r.results["forgetful_smooth"] = rep.forgetful_smooth;
  r.bounds["rank_d0"] = "derivations in degrees of the Ext^1 support";
  r.bounds["t1"] = bound_tag(rep.t1_finite, rep.degree_bound);
}

void cmd_transfer(Report& r, const Definition& d, const std::vector<std::string>& mods, const SessionConfig&) {
  auto t = mcm_approximation(arg_module(d, mods, 0, "transfer"), d.omega());
  auto h = fid_hull(t, d.omega());
  add_checks(r, t.checks, "approximation: ");
  add_checks(r, h.checks, "hull: ");
  auto rep = transfer_maps(t, h);
  r.results["strategy"] = t.strategy;
  r.results["pi_pull"] = linear_map_json(rep.pi_pull);
  r.results["pi_push"] = linear_map_json(rep.pi_push);
  r.results["eta1_m_defined"] = rep.eta1_m_defined;
  if (rep.eta1_m_defined) r.results["eta1_m"] = linear_map_json(rep.eta1_m);
  r.results["eta1_lp_defined"] = rep.eta1_lp_defined;
  if (rep.eta1_lp_defined) r.results["eta1_lp"] = linear_map_json(rep.eta1_lp);
  r.results["sigma1_injective"] = rep.sigma1_injective ? json(*rep.sigma1_injective) : json(nullptr);
  r.results["sigma1_iso"] = rep.sigma1_iso ? json(*rep.sigma1_iso) : json(nullptr);
  json hyp = json::object(), st = json::object();
  for (const auto& c : rep.hypotheses) hyp[c.name] = c.ok;
  for (const auto& c : rep.certificates) st[c.name] = {{"holds", c.ok}, {"reason", c.detail}};
  r.results["hypotheses"] = hyp;
  r.results["statements"] = st;
  r.bounds["transfer"] = "all internal degrees";
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"resolve", cmd_resolve},     {"ext", cmd_ext},
      {"t1", cmd_t1},               {"t2", cmd_t2},
      {"mcm-approx", cmd_mcm},      {"fid-hull", cmd_hull},
      {"fundamental", cmd_fundamental}, {"ks-map", cmd_ks},
      {"obstruction", cmd_obstruction}, {"pair-cohomology", cmd_pair},
      {"transfer", cmd_transfer}};
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> v{"resolve", "ext",         "t1",          "t2",
                                          "mcm-approx", "fid-hull", "fundamental", "ks-map",
                                          "obstruction", "pair-cohomology", "transfer", "check-corpus"};
  return v;
}

Report run_on(const Definition& def, const std::string& command, const std::vector<std::string>& modules,
              const SessionConfig& cfg) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw InputError("unknown command '" + command + "'");
  Report r;
  r.command = command;
  r.input_digest = sha256_hex(def.source);
  r.results["ring"] = def.name;
  r.results["field"] = def.ring->field().name();
  r.results["modules"] = modules;
  r.results["ring_dim"] = def.ring->krull_dimension();
  try {
    it->second(r, def, modules, cfg);
  } catch (const MathError& e) {
    throw MathError(command + ": " + e.what());
  }
  return r;
}

}  // namespace dfb::wb
