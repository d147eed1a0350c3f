#include "dfb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dfb {

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights)
    : field_(std::move(field)), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw ConfigError("variable/weight count mismatch");
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw ConfigError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (int w : weights_)
    if (w <= 0) throw ConfigError("variable weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw ConfigError("duplicate variable " + names_[i]);
}

std::optional<int> PolyRing::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Monomial PolyRing::var(int v, int power) const {
  Monomial m;
  m.e[v] = static_cast<std::uint16_t>(power);
  m.w = weights_[v] * power;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  r.w = weight_of(r);
  return r;
}

int PolyRing::weight_of(const Monomial& m) const {
  int w = 0;
  for (int i = 0; i < nvars(); ++i) w += m.e[i] * weights_[i];
  return w;
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int v, int rest) {
    if (v == nvars()) {
      if (rest == 0) {
        cur.w = d;
        out.push_back(cur);
      }
      return;
    }
    for (int k = rest / weights_[v]; k >= 0; --k) {
      cur.e[v] = static_cast<std::uint16_t>(k);
      rec(v + 1, rest - k * weights_[v]);
    }
    cur.e[v] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; });
  return out;
}

namespace {

void normalize_terms(const Field& F, std::vector<Term>& t) {
  for (auto& x : t) x.c = F.normalize(x.c);
  std::sort(t.begin(), t.end(),
            [](const Term& a, const Term& b) { return compare_degrevlex(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(t.size());
  for (auto& x : t) {
    if (!out.empty() && out.back().m == x.m)
      out.back().c = F.add(out.back().c, x.c);
    else
      out.push_back(std::move(x));
    if (Field::is_zero(out.back().c)) out.pop_back();
  }
  t.swap(out);
}

// Merges a + s*b for sorted term lists.
std::vector<Term> axpy(const Field& F, const std::vector<Term>& a, const Scalar& s,
                       const Monomial* shift, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = shift ? b[j].m * *shift : b[j].m;
    int c = i == a.size() ? -1 : compare_degrevlex(a[i].m, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({F.mul(s, b[j].c), mb});
      ++j;
    } else {
      Scalar v = F.add(a[i].c, F.mul(s, b[j].c));
      if (!Field::is_zero(v)) out.push_back({std::move(v), mb});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(RingPtr r, std::vector<Term> terms) : ring_(std::move(r)), terms_(std::move(terms)) {
  normalize_terms(ring_->field(), terms_);
}

Poly Poly::constant(RingPtr r, const Scalar& c) {
  return Poly(r, std::vector<Term>{{c, Monomial{}}});
}

Poly Poly::monomial(RingPtr r, const Scalar& c, const Monomial& m) {
  return Poly(r, std::vector<Term>{{c, m}});
}

Poly Poly::variable(RingPtr r, int v) {
  Monomial m = r->var(v);
  return Poly(r, std::vector<Term>{{Scalar(1), m}});
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_[0].m.w;
  for (const auto& t : terms_)
    if (t.m.w != d) return std::nullopt;
  return d;
}

bool Poly::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return Scalar(0);
}

Poly Poly::operator+(const Poly& o) const {
  const RingPtr& r = ring_ ? ring_ : o.ring_;
  if (!r) return Poly();
  Poly p(r);
  p.terms_ = axpy(r->field(), terms_, Scalar(1), nullptr, o.terms_);
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  const RingPtr& r = ring_ ? ring_ : o.ring_;
  if (!r) return Poly();
  Poly p(r);
  p.terms_ = axpy(r->field(), terms_, r->field().neg(Scalar(1)), nullptr, o.terms_);
  return p;
}

Poly Poly::operator-() const { return Poly(ring_) - *this; }

Poly Poly::operator*(const Poly& o) const {
  const RingPtr& r = ring_ ? ring_ : o.ring_;
  if (!r) return Poly();
  Poly acc(r);
  if (is_zero() || o.is_zero()) return acc;
  const Poly& big = size() >= o.size() ? *this : o;
  const Poly& small = size() >= o.size() ? o : *this;
  for (const auto& t : small.terms_) acc.terms_ = axpy(r->field(), acc.terms_, t.c, &t.m, big.terms_);
  return acc;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly p(ring_);
  if (Field::is_zero(c)) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.c = ring_->field().mul(t.c, c);
  return p;
}

Poly Poly::times(const Scalar& c, const Monomial& m) const {
  Poly p(ring_);
  if (Field::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({ring_->field().mul(t.c, c), t.m * m});
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(ring_, Scalar(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Poly Poly::derivative(int v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (!t.m.e[v]) continue;
    Monomial m = t.m;
    m.e[v] -= 1;
    m.w -= ring_->weight(v);
    out.push_back({ring_->field().mul(t.c, ring_->field().from_int(t.m.e[v])), m});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().c));
}

Poly Poly::exact_div(const Poly& o) const {
  if (o.is_zero()) throw MathError("division by zero polynomial");
  const Field& F = ring_->field();
  Poly rem = *this;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!o.lead().m.divides(lt.m)) throw MathError("inexact polynomial division");
    Term t{F.div(lt.c, o.lead().c), lt.m / o.lead().m};
    rem.terms_ = axpy(F, rem.terms_, F.neg(t.c), &t.m, o.terms_);
    q.push_back(std::move(t));
  }
  return Poly(ring_, std::move(q));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (t.m.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << ring_->to_string(t.m);
    }
  }
  return os.str();
}

Poly reduce_by(const Poly& p, const std::vector<Poly>& gb) {
  if (gb.empty() || p.is_zero()) return p;
  const Field& F = p.ring()->field();
  std::vector<Term> rem;
  std::vector<Term> cur = p.terms();
  while (!cur.empty()) {
    const Term& lt = cur.front();
    const Poly* red = nullptr;
    for (const auto& g : gb)
      if (g.lead().m.divides(lt.m)) {
        red = &g;
        break;
      }
    if (!red) {
      rem.push_back(lt);
      cur.erase(cur.begin());
      continue;
    }
    Monomial sh = lt.m / red->lead().m;
    Scalar s = F.neg(F.div(lt.c, red->lead().c));
    cur = axpy(F, cur, s, &sh, red->terms());
  }
  Poly out(p.ring());
  out.mutable_terms() = std::move(rem);
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const RingPtr& r, const std::string& s) : r_(r), s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ConfigError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc(r_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }
  Poly term() {
    Poly p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (eat('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        p = p.scaled(r_->field().inv(d.constant_term()));
      } else {
        skip();
        // implicit multiplication: "2x", "x y", "(..)(..)"
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
          p = p * factor();
        else
          break;
      }
    }
    return p;
  }
  Poly factor() {
    Poly b = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return b;
  }
  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(r_, Scalar(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto v = r_->index_of(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(r_, *v);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const RingPtr& r_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& r, const std::string& text) { return Parser(r, text).parse(); }

}  // namespace dfb
