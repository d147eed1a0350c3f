#include "dfb/groebner.hpp"

#include <algorithm>

namespace dfb {

// ------------------------------------------------------------ orders

OrderPtr ModuleOrder::top(std::vector<int> degrees) {
  auto o = std::make_shared<ModuleOrder>();
  o->kind_ = Kind::TermOverPosition;
  o->degrees_ = std::move(degrees);
  return o;
}

OrderPtr ModuleOrder::pot(std::vector<int> degrees) {
  auto o = std::make_shared<ModuleOrder>();
  o->kind_ = Kind::PositionOverTerm;
  o->degrees_ = std::move(degrees);
  return o;
}

OrderPtr ModuleOrder::schreyer(OrderPtr base, std::vector<std::pair<Monomial, int>> leads) {
  auto o = std::make_shared<ModuleOrder>();
  o->kind_ = Kind::Schreyer;
  for (const auto& [m, c] : leads) o->degrees_.push_back(m.w + base->degree(c));
  o->base_ = std::move(base);
  o->leads_ = std::move(leads);
  return o;
}

int ModuleOrder::compare(const Monomial& a, int i, const Monomial& b, int j) const {
  switch (kind_) {
    case Kind::TermOverPosition: {
      int da = a.w + degrees_[i], db = b.w + degrees_[j];
      if (da != db) return da > db ? 1 : -1;
      int c = compare_degrevlex(a, b);
      if (c) return c;
      break;
    }
    case Kind::PositionOverTerm:
      if (i != j) return i < j ? 1 : -1;
      return compare_degrevlex(a, b);
    case Kind::Schreyer: {
      int c = base_->compare(a * leads_[i].first, leads_[i].second, b * leads_[j].first, leads_[j].second);
      if (c) return c;
      break;
    }
  }
  if (i != j) return i < j ? 1 : -1;
  return 0;
}

// ------------------------------------------------------------ vectors

int vdegree(const SVec& v, const ModuleOrder& ord) { return v.front().m.w + ord.degree(v.front().comp); }

void vsort(SVec& v, const Field& F, const ModuleOrder& ord) {
  std::sort(v.begin(), v.end(),
            [&](const VTerm& a, const VTerm& b) { return ord.compare(a.m, a.comp, b.m, b.comp) > 0; });
  SVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    t.c = F.normalize(t.c);
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m)
      out.back().c = F.add(out.back().c, t.c);
    else
      out.push_back(std::move(t));
    if (Field::is_zero(out.back().c)) out.pop_back();
  }
  v.swap(out);
}

namespace {

SVec axpy_from(const Field& F, const ModuleOrder& ord, const SVec& a, std::size_t start, const Scalar& s,
               const Monomial& shift, const SVec& b) {
  SVec out;
  out.reserve(a.size() - start + b.size());
  std::size_t i = start, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = b[j].m * shift;
    int c = i == a.size() ? -1 : ord.compare(a[i].m, a[i].comp, mb, b[j].comp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({F.mul(s, b[j].c), mb, b[j].comp});
      ++j;
    } else {
      Scalar v = F.add(a[i].c, F.mul(s, b[j].c));
      if (!Field::is_zero(v)) out.push_back({std::move(v), mb, b[j].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SVec vaxpy(const Field& F, const ModuleOrder& ord, const SVec& a, const Scalar& s, const Monomial& shift,
           const SVec& b) {
  if (Field::is_zero(s)) return a;
  return axpy_from(F, ord, a, 0, s, shift, b);
}

SVec vscale(const Field& F, const SVec& a, const Scalar& s) {
  if (Field::is_zero(s)) return {};
  SVec out = a;
  for (auto& t : out) t.c = F.mul(t.c, s);
  return out;
}

bool vequal(const SVec& a, const SVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].comp != b[i].comp || a[i].m != b[i].m || a[i].c != b[i].c) return false;
  return true;
}

std::vector<Poly> vsplit(const RingPtr& R, const SVec& v, int rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts.at(t.comp).push_back({t.c, t.m});
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(R, std::move(p));
  return out;
}

SVec vjoin(const std::vector<Poly>& parts, const Field& F, const ModuleOrder& ord) {
  SVec v;
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (const auto& t : parts[c].terms()) v.push_back({t.c, t.m, static_cast<int>(c)});
  vsort(v, F, ord);
  return v;
}

SVec vreduce_ideal(const RingPtr& R, const SVec& v, const std::vector<Poly>& ideal_gb, const ModuleOrder& ord) {
  if (ideal_gb.empty() || v.empty()) return v;
  int rank = 0;
  for (const auto& t : v) rank = std::max(rank, t.comp + 1);
  auto parts = vsplit(R, v, rank);
  for (auto& p : parts) p = reduce_by(p, ideal_gb);
  return vjoin(parts, R->field(), ord);
}

// ------------------------------------------------------------ engine

GroebnerEngine::GroebnerEngine(RingPtr ring, std::vector<Poly> ideal_gb, OrderPtr order, bool track)
    : ring_(std::move(ring)),
      ideal_(std::move(ideal_gb)),
      order_(std::move(order)),
      tag_order_(ModuleOrder::pot({})),
      track_(track) {
  by_comp_.resize(order_->rank());
  for (int c = 0; c < order_->rank(); ++c)
    for (const auto& f : ideal_) {
      Elem e;
      for (const auto& t : f.terms()) e.v.push_back({t.c, t.m, c});
      vsort(e.v, ring_->field(), *order_);
      e.deg = vdegree(e.v, *order_);
      e.lm = e.v.front().m;
      e.lc = c;
      e.prefix = true;
      by_comp_[c].push_back(static_cast<int>(elems_.size()));
      elems_.push_back(std::move(e));
    }
}

int GroebnerEngine::add_input(SVec v, std::optional<int> degree) {
  vsort(v, ring_->field(), *order_);
  int d;
  if (v.empty()) {
    d = degree.value_or(0);
  } else {
    d = vdegree(v, *order_);
    for (const auto& t : v)
      if (t.m.w + order_->degree(t.comp) != d) throw ConfigError("inhomogeneous module element");
    if (degree && *degree != d) throw ConfigError("module element degree mismatch");
  }
  int idx = static_cast<int>(inputs_.size());
  inputs_.push_back(std::move(v));
  input_deg_.push_back(d);
  pending_inputs_.insert({d, idx});
  return idx;
}

bool GroebnerEngine::add_if_independent(const SVec& v) {
  SVec w = v;
  vsort(w, ring_->field(), *order_);
  if (w.empty()) return false;
  complete(vdegree(w, *order_));
  if (normal_form(w).empty()) return false;
  add_input(std::move(w));
  return true;
}

std::optional<int> GroebnerEngine::next_degree() const {
  std::optional<int> d;
  if (!pending_inputs_.empty()) d = pending_inputs_.begin()->first;
  if (!pairs_.empty()) {
    int pd = std::get<0>(*pairs_.begin());
    if (!d || pd < *d) d = pd;
  }
  return d;
}

SVec GroebnerEngine::reduce(SVec v, SVec* tag) const {
  const Field& F = ring_->field();
  SVec rem;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const VTerm& lt = v[pos];
    int red = -1;
    for (int k : by_comp_[lt.comp])
      if (elems_[k].lm.divides(lt.m)) {
        red = k;
        break;
      }
    if (red < 0) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Elem& e = elems_[red];
    Monomial sh = lt.m / e.lm;
    Scalar s = F.neg(F.div(lt.c, e.v.front().c));
    if (tag && !e.prefix && !e.tag.empty()) *tag = vaxpy(F, *tag_order_, *tag, s, sh, e.tag);
    v = axpy_from(F, *order_, v, pos, s, sh, e.v);
    pos = 0;
  }
  return rem;
}

SVec GroebnerEngine::reduce_tag(const SVec& t) const {
  return vreduce_ideal(ring_, t, ideal_, *tag_order_);
}

void GroebnerEngine::insert(SVec v, SVec tag) {
  const Field& F = ring_->field();
  Scalar inv = F.inv(v.front().c);
  v = vscale(F, v, inv);
  if (track_) tag = reduce_tag(vscale(F, tag, inv));
  Elem e;
  e.deg = vdegree(v, *order_);
  e.lm = v.front().m;
  e.lc = v.front().comp;
  e.prefix = false;
  e.v = std::move(v);
  e.tag = std::move(tag);
  int idx = static_cast<int>(elems_.size());
  for (int k : by_comp_[e.lc]) {
    Monomial l = ring_->lcm(elems_[k].lm, e.lm);
    // Leading terms on disjoint variables with the ideal prefix: the pair
    // still carries a syzygy, so it is kept.
    pairs_.insert({l.w + order_->degree(e.lc), idx, k});
  }
  by_comp_[e.lc].push_back(idx);
  elems_.push_back(std::move(e));
}

void GroebnerEngine::process_reduced(SVec v, SVec tag) {
  SVec r = reduce(std::move(v), track_ ? &tag : nullptr);
  if (r.empty()) {
    if (track_) {
      SVec s = reduce_tag(tag);
      if (!s.empty()) syz_.push_back(std::move(s));
    }
    return;
  }
  insert(std::move(r), std::move(tag));
}

void GroebnerEngine::complete(std::optional<int> max_degree) {
  const Field& F = ring_->field();
  while (auto d = next_degree()) {
    if (max_degree && *d > *max_degree) break;
    if (!pending_inputs_.empty() && pending_inputs_.begin()->first == *d) {
      int j = pending_inputs_.begin()->second;
      pending_inputs_.erase(pending_inputs_.begin());
      SVec tag;
      if (track_) tag.push_back({Scalar(1), Monomial{}, j});
      process_reduced(inputs_[j], std::move(tag));
      continue;
    }
    auto [deg, j, i] = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    ++pairs_done_;
    const Elem& a = elems_[j];
    const Elem& b = elems_[i];
    Monomial l = ring_->lcm(a.lm, b.lm);
    Monomial sa = l / a.lm, sb = l / b.lm;
    SVec s = vaxpy(F, *order_, {}, F.inv(a.v.front().c), sa, a.v);
    s = vaxpy(F, *order_, s, F.neg(F.inv(b.v.front().c)), sb, b.v);
    SVec tag;
    if (track_) {
      if (!a.prefix) tag = vaxpy(F, *tag_order_, tag, F.inv(a.v.front().c), sa, a.tag);
      if (!b.prefix) tag = vaxpy(F, *tag_order_, tag, F.neg(F.inv(b.v.front().c)), sb, b.tag);
    }
    process_reduced(std::move(s), std::move(tag));
  }
}

SVec GroebnerEngine::normal_form(const SVec& v) const {
  SVec w = v;
  vsort(w, ring_->field(), *order_);
  return reduce(std::move(w), nullptr);
}

bool GroebnerEngine::contains(const SVec& v) {
  SVec w = v;
  vsort(w, ring_->field(), *order_);
  if (w.empty()) return true;
  complete(vdegree(w, *order_));
  return reduce(std::move(w), nullptr).empty();
}

std::optional<SVec> GroebnerEngine::lift(const SVec& v) {
  if (!track_) throw MathError("lift requires a tracking engine");
  SVec w = v;
  vsort(w, ring_->field(), *order_);
  if (w.empty()) return SVec{};
  complete(vdegree(w, *order_));
  SVec tag;
  if (!reduce(std::move(w), &tag).empty()) return std::nullopt;
  return reduce_tag(vscale(ring_->field(), tag, ring_->field().neg(Scalar(1))));
}

namespace {
bool is_redundant(const std::vector<std::pair<Monomial, int>>& leads, std::size_t k) {
  for (std::size_t o = 0; o < leads.size(); ++o) {
    if (o == k || leads[o].second != leads[k].second) continue;
    if (leads[o].first.divides(leads[k].first) && (leads[o].first != leads[k].first || o < k)) return true;
  }
  return false;
}
}  // namespace

std::vector<std::pair<Monomial, int>> GroebnerEngine::leading_terms(bool with_prefix) const {
  std::vector<std::pair<Monomial, int>> out;
  for (const auto& e : elems_)
    if (with_prefix || !e.prefix) out.push_back({e.lm, e.lc});
  return out;
}

std::vector<SVec> GroebnerEngine::basis() const {
  std::vector<std::pair<Monomial, int>> leads;
  for (const auto& e : elems_) leads.push_back({e.lm, e.lc});
  std::vector<SVec> out;
  for (std::size_t k = 0; k < elems_.size(); ++k)
    if (!elems_[k].prefix && !is_redundant(leads, k)) out.push_back(elems_[k].v);
  return out;
}

std::vector<SVec> GroebnerEngine::reduced_basis() const {
  const Field& F = ring_->field();
  std::vector<SVec> out;
  for (const auto& b : basis()) {
    SVec tail(b.begin() + 1, b.end());
    SVec r = reduce(std::move(tail), nullptr);
    SVec v;
    v.push_back(b.front());
    v.insert(v.end(), r.begin(), r.end());
    out.push_back(vscale(F, v, F.inv(v.front().c)));
  }
  return out;
}

std::vector<SVec> GroebnerEngine::input_syzygies() const {
  if (!track_) throw MathError("syzygies require a tracking engine");
  return syz_;
}

// ------------------------------------------------------------ derived

std::vector<SVec> syzygies_modulo(const RingPtr& ring, const std::vector<Poly>& ideal_gb, const OrderPtr& order,
                                  const std::vector<SVec>& cols, const std::vector<SVec>& mod_cols) {
  GroebnerEngine eng(ring, ideal_gb, order, true);
  for (const auto& c : cols) eng.add_input(c, c.empty() ? std::optional<int>(0) : std::nullopt);
  for (const auto& c : mod_cols)
    if (!c.empty()) eng.add_input(c);
  eng.complete();
  int n = static_cast<int>(cols.size());
  std::vector<SVec> out;
  for (const auto& s : eng.input_syzygies()) {
    SVec p;
    for (const auto& t : s)
      if (t.comp < n) p.push_back(t);
    if (!p.empty()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<SVec> syzygies_by_elimination(const RingPtr& ring, const std::vector<Poly>& ideal_gb,
                                          const OrderPtr& order, const std::vector<SVec>& cols,
                                          const std::vector<SVec>& mod_cols) {
  int r = order->rank();
  int n = static_cast<int>(cols.size());
  std::vector<int> degs = order->degrees();
  for (const auto& c : cols) degs.push_back(c.empty() ? 0 : vdegree(c, *order));
  auto pot = ModuleOrder::pot(degs);
  GroebnerEngine eng(ring, ideal_gb, pot, false);
  for (int j = 0; j < n; ++j) {
    SVec v = cols[j];
    v.push_back({Scalar(1), Monomial{}, r + j});
    eng.add_input(std::move(v));
  }
  for (const auto& c : mod_cols)
    if (!c.empty()) eng.add_input(c);
  eng.complete();
  std::vector<SVec> out;
  for (const auto& b : eng.reduced_basis()) {
    if (b.front().comp < r) continue;
    SVec p;
    for (const auto& t : b) p.push_back({t.c, t.m, t.comp - r});
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SVec> schreyer_syzygies(const RingPtr& ring, const OrderPtr& order, const std::vector<SVec>& gb) {
  const Field& F = ring->field();
  auto tag_order = ModuleOrder::pot({});
  std::vector<SVec> out;
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const auto& a = gb[i].front();
      const auto& b = gb[j].front();
      if (a.comp != b.comp) continue;
      Monomial l = ring->lcm(a.m, b.m);
      Monomial sa = l / a.m, sb = l / b.m;
      SVec s = vaxpy(F, *order, {}, F.inv(a.c), sa, gb[i]);
      s = vaxpy(F, *order, s, F.neg(F.inv(b.c)), sb, gb[j]);
      SVec sig;
      sig.push_back({F.inv(a.c), sa, static_cast<int>(i)});
      sig.push_back({F.neg(F.inv(b.c)), sb, static_cast<int>(j)});
      vsort(sig, F, *tag_order);
      while (!s.empty()) {
        const auto& lt = s.front();
        std::size_t k = 0;
        for (; k < gb.size(); ++k)
          if (gb[k].front().comp == lt.comp && gb[k].front().m.divides(lt.m)) break;
        if (k == gb.size()) throw MathError("schreyer_syzygies: input is not a Groebner basis");
        Monomial sh = lt.m / gb[k].front().m;
        Scalar c = F.div(lt.c, gb[k].front().c);
        SVec e{{Scalar(1), Monomial{}, static_cast<int>(k)}};
        sig = vaxpy(F, *tag_order, sig, F.neg(c), sh, e);
        s = vaxpy(F, *order, s, F.neg(c), sh, gb[k]);
      }
      out.push_back(std::move(sig));
    }
  return out;
}

std::vector<Poly> ideal_groebner(const std::vector<Poly>& gens) {
  std::vector<Poly> out;
  if (gens.empty()) return out;
  RingPtr R = gens.front().ring();
  auto ord = ModuleOrder::top({0});
  GroebnerEngine eng(R, {}, ord, false);
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw ConfigError("inhomogeneous ideal generator " + g.to_string());
    SVec v;
    for (const auto& t : g.terms()) v.push_back({t.c, t.m, 0});
    if (!v.empty()) eng.add_input(std::move(v));
  }
  eng.complete();
  for (const auto& b : eng.reduced_basis()) {
    std::vector<Term> t;
    for (const auto& x : b) t.push_back({x.c, x.m});
    out.emplace_back(R, std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const Poly& a, const Poly& b) { return compare_degrevlex(a.lead().m, b.lead().m) < 0; });
  return out;
}

}  // namespace dfb
