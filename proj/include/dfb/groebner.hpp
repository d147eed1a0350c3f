#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "dfb/poly.hpp"

namespace dfb {

/// A term c*m*e_comp of a free module element.
struct VTerm {
  Scalar c;
  Monomial m;
  int comp;
};

/// Sparse free-module element, terms strictly descending for some ModuleOrder.
using SVec = std::vector<VTerm>;

/// Module monomial order on a graded free module with generator degrees.
class ModuleOrder;
using OrderPtr = std::shared_ptr<const ModuleOrder>;

class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, PositionOverTerm, Schreyer };

  static OrderPtr top(std::vector<int> degrees);
  static OrderPtr pot(std::vector<int> degrees);
  // Order induced by the leading terms (monomial, component) of a basis in `base`.
  static OrderPtr schreyer(OrderPtr base, std::vector<std::pair<Monomial, int>> leads);

  Kind kind() const { return kind_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  int degree(int comp) const { return degrees_[comp]; }
  const std::vector<int>& degrees() const { return degrees_; }

  // >0 if a*e_i > b*e_j.
  int compare(const Monomial& a, int i, const Monomial& b, int j) const;

 private:
  Kind kind_ = Kind::TermOverPosition;
  std::vector<int> degrees_;
  OrderPtr base_;
  std::vector<std::pair<Monomial, int>> leads_;
};

// ---- free-module element helpers (ring needed only for the field)

int vdegree(const SVec& v, const ModuleOrder& ord);  // total degree of the lead term
void vsort(SVec& v, const Field& F, const ModuleOrder& ord);  // sort, combine, drop zeros
SVec vaxpy(const Field& F, const ModuleOrder& ord, const SVec& a, const Scalar& s,
           const Monomial& shift, const SVec& b);  // a + s*shift*b
SVec vscale(const Field& F, const SVec& a, const Scalar& s);
bool vequal(const SVec& a, const SVec& b);
// Entries by component as polynomials.
std::vector<Poly> vsplit(const RingPtr& R, const SVec& v, int rank);
SVec vjoin(const std::vector<Poly>& parts, const Field& F, const ModuleOrder& ord);
// Reduces every component modulo an ideal Groebner basis.
SVec vreduce_ideal(const RingPtr& R, const SVec& v, const std::vector<Poly>& ideal_gb,
                   const ModuleOrder& ord);

/// Buchberger engine for submodules of (P/I)^r with optional tracking of
/// every basis element as a combination of the input generators.
///
/// Inputs must be homogeneous for the degrees carried by the module order.
/// Pairs are processed by the normal strategy: lowest degree first, then by
/// index. Elements of I*e_c form a known prefix and never pair among
/// themselves.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, std::vector<Poly> ideal_gb, OrderPtr order, bool track = true);

  const RingPtr& ring() const { return ring_; }
  const OrderPtr& order() const { return order_; }
  int num_inputs() const { return static_cast<int>(inputs_.size()); }
  const SVec& input(int j) const { return inputs_[j]; }
  int input_degree(int j) const { return input_deg_[j]; }

  // Adds a generator and returns its index among the inputs.
  int add_input(SVec v, std::optional<int> degree = std::nullopt);
  // Adds v only if it is not already in the span. Returns whether it was added.
  bool add_if_independent(const SVec& v);

  // Runs Buchberger through all pairs of degree <= max_degree.
  void complete(std::optional<int> max_degree = std::nullopt);

  // Fully reduced normal form; membership is exact once complete(deg v) ran.
  SVec normal_form(const SVec& v) const;
  bool contains(const SVec& v);
  // Coefficients a (over P/I) with v = sum a_j input_j, or nullopt.
  std::optional<SVec> lift(const SVec& v);

  // Minimal Groebner basis without the ideal prefix, in insertion order.
  std::vector<SVec> basis() const;
  std::vector<SVec> reduced_basis() const;
  std::vector<std::pair<Monomial, int>> leading_terms(bool with_prefix = true) const;
  // Syzygies on the inputs (requires tracking); complete() first.
  std::vector<SVec> input_syzygies() const;

  std::size_t pairs_processed() const { return pairs_done_; }

 private:
  struct Elem {
    SVec v;
    SVec tag;
    int deg;
    Monomial lm;
    int lc;
    bool prefix;
  };

  SVec reduce(SVec v, SVec* tag) const;  // tag accumulates -sum(q_k tag_k)
  void insert(SVec v, SVec tag);
  void process_reduced(SVec v, SVec tag);
  std::optional<int> next_degree() const;
  SVec reduce_tag(const SVec& t) const;

  RingPtr ring_;
  std::vector<Poly> ideal_;
  OrderPtr order_;
  OrderPtr tag_order_;
  bool track_;

  std::vector<SVec> inputs_;
  std::vector<int> input_deg_;
  std::set<std::pair<int, int>> pending_inputs_;  // (degree, index)
  std::vector<Elem> elems_;
  std::vector<std::vector<int>> by_comp_;
  std::set<std::tuple<int, int, int>> pairs_;  // (degree, j, i) with i < j
  std::vector<SVec> syz_;
  std::size_t pairs_done_ = 0;
};

/// Generators of {a : sum a_j cols_j in span(mod_cols)} over P/I, reduced
/// modulo I. Degrees of the result are the input degrees of `cols`.
std::vector<SVec> syzygies_modulo(const RingPtr& ring, const std::vector<Poly>& ideal_gb,
                                  const OrderPtr& order, const std::vector<SVec>& cols,
                                  const std::vector<SVec>& mod_cols);

/// Independent route: the same module via a position-over-term elimination
/// Groebner basis of the graph {(col_j, e_j)}.
std::vector<SVec> syzygies_by_elimination(const RingPtr& ring, const std::vector<Poly>& ideal_gb,
                                          const OrderPtr& order, const std::vector<SVec>& cols,
                                          const std::vector<SVec>& mod_cols);

/// Schreyer syzygies of a Groebner basis of a submodule of P^r (no ideal),
/// expressed on the basis elements themselves.
std::vector<SVec> schreyer_syzygies(const RingPtr& ring, const OrderPtr& order,
                                    const std::vector<SVec>& gb);

/// Reduced Groebner basis of an ideal of P.
std::vector<Poly> ideal_groebner(const std::vector<Poly>& gens);

}  // namespace dfb
