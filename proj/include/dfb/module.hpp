#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dfb/matrix.hpp"

namespace dfb {

/// How a module was constructed; strategy dispatch in the approximation
/// code reads this.
enum class Origin { Generic, ResidueField, MaximalIdeal, Omega, Fundamental, Kaehler, T1Dual, Dual };

std::string origin_name(Origin o);

class PresentedModule;
struct FreeResolution;
using ModPtr = std::shared_ptr<const PresentedModule>;

/// coker(presentation) over A. Immutable; Groebner data is computed lazily
/// behind a mutex.
class PresentedModule {
 public:
  explicit PresentedModule(Matrix presentation, std::string name = "");

  static ModPtr free(QRingPtr A, std::vector<int> degrees, std::string name = "");
  static ModPtr make(Matrix presentation, std::string name = "");

  const QRingPtr& ring() const { return pres_.ring(); }
  const Matrix& presentation() const { return pres_; }
  int num_gens() const { return pres_.rows(); }
  int num_relations() const { return pres_.cols(); }
  const std::vector<int>& gen_degrees() const { return pres_.target_degrees(); }
  OrderPtr order() const { return order_; }
  const std::string& name() const { return name_; }

  Origin origin() const { return origin_; }
  // For modules built as a dual X^v, the module X.
  const ModPtr& dual_of() const { return dual_of_; }
  ModPtr with_origin(Origin o, ModPtr dual_of = nullptr, std::string name = "") const;

  SVec normal_form(const SVec& v) const;
  bool is_zero_element(const SVec& v) const { return normal_form(v).empty(); }
  // Coefficients on the relation columns expressing v, if v is a relation.
  std::optional<SVec> lift_to_relations(const SVec& v) const;
  std::vector<std::pair<Monomial, int>> leading_terms() const;

  long hilbert_function(int d) const;
  std::map<int, long> hilbert_numerator() const;
  int krull_dimension() const;  // -1 for the zero module
  bool is_zero() const { return krull_dimension() < 0; }
  bool has_finite_length() const { return krull_dimension() <= 0; }
  // Length over k; requires finite length.
  long length() const;
  // k-basis of the degree-d piece as standard monomials m*e_c.
  std::vector<SVec> basis_in_degree(int d) const;
  // Degrees carrying a nonzero piece; requires finite length.
  std::vector<int> support_degrees() const;
  // Coefficients of v (an element of degree d) on basis_in_degree(d).
  std::vector<Scalar> coordinates(const SVec& v, int d) const;

  // Resolution memo shared by all handles to this module.
  std::shared_ptr<const FreeResolution> cached_resolution() const;
  void store_resolution(std::shared_ptr<const FreeResolution> F) const;

 private:
  struct Cache;
  Cache& cache() const;

  Matrix pres_;
  OrderPtr order_;
  std::string name_;
  Origin origin_ = Origin::Generic;
  ModPtr dual_of_;
  std::shared_ptr<Cache> cache_;
};

/// Degree-0 homomorphism given on generators: column j is the image of the
/// j-th source generator in target generator coordinates.
struct ModuleMap {
  ModPtr source;
  ModPtr target;
  Matrix matrix;
};

bool is_well_defined(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap identity_map(const ModPtr& M);
bool is_zero_map(const ModuleMap& f);
bool maps_equal(const ModuleMap& f, const ModuleMap& g);
bool is_surjective(const ModuleMap& f);
bool is_injective(const ModuleMap& f);

/// Indices of a minimal subset of `cols` generating span(cols) modulo
/// span(mod), chosen by increasing degree then index.
std::vector<int> minimal_subset(const QRingPtr& A, const OrderPtr& order, const std::vector<SVec>& cols,
                                const std::vector<SVec>& mod = {});

/// Module span(gens)/(span(gens) ∩ span(rels)) in a free module with the given
/// degrees, with a minimal generating subset of gens kept as generators.
struct Subquotient {
  ModPtr module;
  std::vector<SVec> generators;  // ambient coordinates of the module generators
};
Subquotient subquotient(const QRingPtr& A, const std::vector<int>& ambient_degrees, const std::vector<SVec>& gens,
                        const std::vector<int>& gen_degrees, const std::vector<SVec>& rels);

/// Minimal presentation. `kept` lists the surviving original generators;
/// `to_min` expresses every original generator in the new ones.
struct Pruned {
  ModPtr module;
  std::vector<int> kept;
  Matrix to_min;
};
Pruned prune(const ModPtr& M);
ModPtr minimal_presentation(const ModPtr& M);

Subquotient kernel(const ModuleMap& f);  // generators in source coordinates
Subquotient image(const ModuleMap& f);   // generators in target coordinates
ModPtr cokernel(const ModuleMap& f);
ModPtr direct_sum(const ModPtr& a, const ModPtr& b);
ModPtr twist(const ModPtr& M, int d);  // M(d): generator degrees drop by d

/// Free cover F0 -> M of a minimally presented module as a map.
ModuleMap free_cover(const ModPtr& M);

// Standard constructions over A.
ModPtr residue_field(const QRingPtr& A);
ModPtr maximal_ideal(const QRingPtr& A);
ModPtr ring_module(const QRingPtr& A);

}  // namespace dfb
