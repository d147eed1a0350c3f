#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dfb/linalg.hpp"
#include "dfb/resolution.hpp"

namespace dfb {

/// Coordinates on Hom(F, G) for free modules F = ⊕A(-f_i), G = ⊕A(-g_a):
/// component i*|G| + a holds the (a,i) matrix entry and has degree g_a - f_i.
/// An element of total degree e is a homogeneous map of degree e.
struct HomLayout {
  std::vector<int> src;
  std::vector<int> tgt;

  int rank() const { return static_cast<int>(src.size() * tgt.size()); }
  int comp(int i, int a) const { return i * static_cast<int>(tgt.size()) + a; }
  std::vector<int> degrees() const;
  OrderPtr order() const { return ModuleOrder::top(degrees()); }

  SVec from_matrix(const Matrix& m) const;
  Matrix to_matrix(const QRingPtr& A, const SVec& v, int degree) const;
  // Columns of phi -> phi∘d as a map Hom(F,G) -> Hom(F',G), d : F' -> F.
  std::vector<SVec> precompose_columns(const Matrix& d, const HomLayout& out) const;
  // Image of Hom(F, G1) under composition with psi : G1 -> G.
  std::vector<SVec> target_relations(const Matrix& psi) const;
};

// sum_k coeffs_k * gens[comp_k], re-sorted for `order`.
SVec combine(const Field& F, const OrderPtr& order, const std::vector<SVec>& gens, const SVec& coeffs);

/// Hom_A(M, N) as a presented module whose generators are explicit
/// homomorphisms F_0(M) -> G_0(N).
struct HomModule {
  ModPtr source;
  ModPtr target;
  HomLayout layout;
  Subquotient sq;

  const ModPtr& module() const { return sq.module; }
  // Homomorphism represented by an element in module generator coordinates.
  Matrix as_matrix(const SVec& element, int degree) const;
  std::vector<ModuleMap> degree_zero_basis() const;
  // Module coordinates of a homomorphism given in layout coordinates, if it
  // is one.
  std::optional<SVec> element(const SVec& layout_vector) const;
};

HomModule hom_module(const ModPtr& M, const ModPtr& N);

class ExtGroup;
using ExtPtr = std::shared_ptr<const ExtGroup>;

/// Cocycle F_n -> G_0(N) of internal degree `degree` in the group's layout.
struct ExtClass {
  ExtPtr group;
  SVec cocycle;
  int degree = 0;

  Matrix matrix() const;
  bool is_zero() const;
  std::vector<Scalar> coordinates() const;
};

/// Ext^n_A(M, N) from the minimal resolution of M and the given
/// presentation of N.
class ExtGroup : public std::enable_shared_from_this<ExtGroup> {
 public:
  static ExtPtr compute(int n, const ModPtr& M, const ModPtr& N);

  int index() const { return n_; }
  const ModPtr& source() const { return M_; }
  const ModPtr& target() const { return N_; }
  const FreeResolution& resolution() const { return *res_; }
  const HomLayout& layout() const { return layout_; }
  const ModPtr& module() const { return sq_.module; }
  const std::vector<SVec>& cocycle_generators() const { return sq_.generators; }

  bool finite_length() const { return module()->has_finite_length(); }
  long total_dim() const;
  // Exact for finite length, otherwise degrees up to `bound`.
  std::map<int, long> dims_by_degree(std::optional<int> bound = std::nullopt) const;
  std::vector<int> support_degrees() const { return module()->support_degrees(); }

  std::vector<ExtClass> basis_in_degree(int d) const;
  std::vector<ExtClass> basis() const;  // finite length only

  bool is_cocycle(const SVec& v) const;
  // Coordinates of the class of a cocycle of degree d on basis_in_degree(d).
  std::vector<Scalar> coordinates(const SVec& cocycle, int d) const;
  bool is_zero_class(const SVec& cocycle) const;
  // The class of a cocycle as an element of module(); throws if v is not one.
  SVec element(const SVec& cocycle) const;
  ExtClass make_class(const Matrix& cocycle) const;
  ExtClass make_class(const SVec& cocycle, int degree) const;

 private:
  ExtGroup() = default;
  int n_ = 0;
  ModPtr M_, N_;
  std::shared_ptr<const FreeResolution> res_;
  HomLayout layout_;
  Subquotient sq_;
  std::vector<SVec> rels_;
  std::vector<SVec> next_image_;  // columns of Hom(F_n,G_0) -> Hom(F_{n+1},G_0)
  HomLayout next_layout_;
  mutable std::mutex mu_;
  mutable std::unique_ptr<GroebnerEngine> lift_;
};

/// A graded map f of k-vector spaces given per degree on chosen bases.
struct GradedLinearMap {
  std::map<int, DenseMatrix> blocks;  // degree -> (target dim x source dim)
  std::map<int, int> source_dims;
  std::map<int, int> target_dims;

  int rank() const;
  int rank_in_degree(int d) const;
  int source_dim() const;
  int target_dim() const;
  int kernel_dim() const { return source_dim() - rank(); }
  int cokernel_dim() const { return target_dim() - rank(); }
  bool injective() const { return kernel_dim() == 0; }
  bool surjective() const { return cokernel_dim() == 0; }
  bool bijective() const { return injective() && surjective(); }
};

// Class of g∘c in Ext^n(M, N').
ExtClass push_forward(const ExtClass& c, const ModuleMap& g, const ExtPtr& into);
// Class of c∘h_n in Ext^n(M', N) for h : M' -> M lifted along resolutions.
ExtClass pull_back(const ExtClass& c, const ModuleMap& h, const ExtPtr& into);
// Chain map F'_i -> F_i lifting h : M' -> M, for i = 0..length.
std::vector<Matrix> lift_chain_map(const ModuleMap& h, const FreeResolution& Fp, const FreeResolution& F, int length);

// Some x with f(x) = y in the target, if y lies in the image.
std::optional<SVec> preimage(const ModuleMap& f, const SVec& y);

/// 0 -> L -> E -> N(-e) -> 0 classified by a class of Ext^1(N, L) of degree e.
struct Extension {
  ModPtr E;
  ModuleMap from_L;
  ModuleMap to_N;
  SVec connecting;  // cocycle of the output sequence in the input layout
  bool verified = false;
};
Extension build_extension(const ExtClass& c);

// Map induced on Ext groups, given on bases degree by degree.
GradedLinearMap induced_map(const ExtPtr& from, const ExtPtr& to,
                            const std::function<ExtClass(const ExtClass&)>& f);

}  // namespace dfb
