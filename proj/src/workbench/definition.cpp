#include "dfb/workbench/definition.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "dfb/cotangent.hpp"

namespace dfb::wb {

InputError::InputError(const std::string& msg, int l, int c)
    : std::runtime_error(l ? "line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg : msg),
      line(l),
      column(c) {}

namespace {

struct Statement {
  std::string text;
  int line = 1, column = 1;
};

// Splits on ';' outside brackets; '#' starts a comment to end of line.
std::vector<Statement> statements(const std::string& text) {
  std::vector<Statement> out;
  Statement cur;
  bool started = false;
  int line = 1, col = 1, depth = 0;
  bool comment = false;
  for (char ch : text) {
    if (comment) {
      if (ch == '\n') comment = false;
    } else if (ch == '#') {
      comment = true;
    } else if (ch == ';' && depth == 0) {
      if (started) out.push_back(cur);
      cur = Statement{};
      started = false;
    } else {
      if (!started && !std::isspace(static_cast<unsigned char>(ch))) {
        started = true;
        cur.line = line;
        cur.column = col;
      }
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (started) cur.text += ch;
    }
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  if (started) {
    auto last = cur.text.find_last_not_of(" \t\r\n");
    if (last != std::string::npos) throw InputError("missing ';' after statement", cur.line, cur.column);
  }
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Top-level comma split (brackets respected).
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

std::string strip_brackets(const std::string& s, const Statement& st) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw InputError("expected [...]", st.line, st.column);
  return t.substr(1, t.size() - 2);
}

Field parse_field(const std::string& rest, const Statement& st) {
  std::istringstream in(rest);
  std::string kind;
  in >> kind;
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    long long p = 0;
    if (!(in >> p) || p < 2 || p > 2147483647LL || !is_prime(static_cast<std::uint64_t>(p)))
      throw InputError("Fp needs a prime below 2^31", st.line, st.column);
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("unknown field '" + kind + "' (expected Q or Fp <p>)", st.line, st.column);
}

ModPtr matrix_module(const QRingPtr& A, const std::string& text, const Statement& st) {
  auto tw = text.find("twists");
  if (tw == std::string::npos) throw InputError("matrix module needs 'twists [...]'", st.line, st.column);
  std::string mtext = trim(text.substr(0, tw));
  if (mtext.rfind("matrix", 0) != 0) throw InputError("expected 'matrix'", st.line, st.column);
  mtext = trim(mtext.substr(6));
  std::vector<int> twists;
  for (const auto& t : split_commas(strip_brackets(text.substr(tw + 6), st))) {
    try {
      twists.push_back(std::stoi(t));
    } catch (const std::exception&) {
      throw InputError("bad twist '" + t + "'", st.line, st.column);
    }
  }
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : split_commas(strip_brackets(mtext, st))) {
    std::vector<Poly> row;
    for (const auto& e : split_commas(strip_brackets(r, st))) {
      try {
        row.push_back(A->parse(e));
      } catch (const ConfigError& err) {
        throw InputError(err.what(), st.line, st.column);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != twists.size()) throw InputError("one twist per matrix row is required", st.line, st.column);
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw InputError("matrix rows have different lengths", st.line, st.column);
  // generator i sits in degree twists[i]; column degrees follow from the entries
  std::vector<int> sd;
  for (std::size_t j = 0; j < ncols; ++j) {
    std::optional<int> d;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Poly& p = rows[i][j];
      if (p.is_zero()) continue;
      auto hd = p.homogeneous_degree();
      if (!hd) throw InputError("matrix entry " + p.to_string() + " is not homogeneous", st.line, st.column);
      int c = *hd + twists[i];
      if (d && *d != c) throw InputError("column " + std::to_string(j + 1) + " is not homogeneous", st.line, st.column);
      d = c;
    }
    if (!d) throw InputError("column " + std::to_string(j + 1) + " is zero", st.line, st.column);
    sd.push_back(*d);
  }
  Matrix m(A, twists, sd);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  return PresentedModule::make(m);
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> v{"residue_field", "maximal_ideal", "omega", "fundamental",
                                          "kaehler",       "t1_dual",       "ring"};
  return v;
}

ModPtr builtin_module(const Definition& d, const std::string& name) {
  const QRingPtr& A = d.ring;
  if (name == "residue_field") return residue_field(A);
  if (name == "maximal_ideal") return maximal_ideal(A);
  if (name == "ring") return ring_module(A);
  if (name == "omega") return d.omega().module;
  if (name == "fundamental") return fundamental_module(A, d.omega()).module;
  if (name == "kaehler") return kaehler_module(A);
  if (name == "t1_dual") return t1_dual_module(A);
  throw InputError("unknown module or constructor '" + name + "'");
}

const DualizingModule& Definition::omega() const {
  if (!omega_) omega_ = dualizing_module(ring);
  return *omega_;
}

ModPtr Definition::module(const std::string& n) const {
  auto it = modules.find(n);
  if (it != modules.end()) return it->second;
  return builtin_module(*this, n);
}

Definition parse_definition(const std::string& text, const std::optional<Field>& field_override) {
  Definition d;
  d.source = text;
  std::optional<Field> field;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::optional<std::vector<std::string>> ideal;
  Statement ideal_st{};
  std::vector<std::pair<Statement, std::string>> module_stmts;
  for (const auto& st : statements(text)) {
    std::string s = trim(st.text);
    std::string kw = s.substr(0, s.find_first_of(" \t\r\n:"));
    std::string rest = trim(s.substr(kw.size()));
    if (kw == "ring") {
      if (rest.empty()) throw InputError("ring needs a name", st.line, st.column);
      d.name = rest;
    } else if (kw == "field") {
      field = parse_field(rest, st);
    } else if (kw == "vars") {
      std::istringstream in(rest);
      std::string tok;
      while (in >> tok) {
        auto c = tok.find(':');
        if (c == std::string::npos) throw InputError("expected name:weight, got '" + tok + "'", st.line, st.column);
        names.push_back(tok.substr(0, c));
        try {
          weights.push_back(std::stoi(tok.substr(c + 1)));
        } catch (const std::exception&) {
          throw InputError("bad weight in '" + tok + "'", st.line, st.column);
        }
      }
    } else if (kw == "ideal") {
      if (rest.empty() || rest[0] != ':') throw InputError("expected 'ideal: ...'", st.line, st.column);
      std::vector<std::string> gens;
      for (const auto& g : split_commas(rest.substr(1)))
        if (!g.empty()) gens.push_back(g);
      ideal = gens;
      ideal_st = st;
    } else if (kw == "module") {
      module_stmts.push_back({st, rest});
    } else {
      throw InputError("unknown statement '" + kw + "'", st.line, st.column);
    }
  }
  if (d.name.empty()) throw InputError("missing 'ring <name>;'");
  if (names.empty()) throw InputError("missing 'vars ...;'");
  if (!ideal) throw InputError("missing 'ideal: ...;'");
  Field F = field_override ? *field_override : (field ? *field : Field::rationals());
  try {
    d.ring = make_ring(F, names, weights, *ideal, d.name);
  } catch (const ConfigError& e) {
    throw InputError(e.what(), ideal_st.line, ideal_st.column);
  }
  for (const auto& [st, rest] : module_stmts) {
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("expected 'module <name>: ...'", st.line, st.column);
    std::string name = trim(rest.substr(0, colon)), body = trim(rest.substr(colon + 1));
    if (name.empty()) throw InputError("module needs a name", st.line, st.column);
    if (d.modules.count(name)) throw InputError("module '" + name + "' defined twice", st.line, st.column);
    ModPtr M;
    if (body.rfind("builtin", 0) == 0) {
      std::string b = trim(body.substr(7));
      if (std::find(builtin_names().begin(), builtin_names().end(), b) == builtin_names().end())
        throw InputError("unknown constructor '" + b + "'", st.line, st.column);
      M = builtin_module(d, b);
    } else {
      M = matrix_module(d.ring, body, st);
    }
    d.module_names.push_back(name);
    d.modules[name] = M;
  }
  return d;
}

Definition load_definition(const std::string& path, const std::optional<Field>& field) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read definition file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str(), field);
}

}  // namespace dfb::wb
