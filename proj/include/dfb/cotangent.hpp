#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfb/ext.hpp"

namespace dfb {

/// Ω_{A/k} = coker(Jacobian : ⊕A(-deg f_i) -> ⊕A(-deg x_j)); generator j is dx_j.
ModPtr kaehler_module(const QRingPtr& A);

/// A derivation D of A given by D(x_j), homogeneous of degree `degree`.
struct Derivation {
  std::vector<Poly> values;
  int degree = 0;
};

Poly apply(const QRingPtr& A, const Derivation& D, const Poly& p);
// D(f_i) ∈ I for every generator and the values are homogeneous of the right degree.
bool is_derivation(const QRingPtr& A, const Derivation& D);
// Basis of Der_k(A)_e from the linear system D(f_i) ∈ I.
std::vector<Derivation> derivations_in_degree(const QRingPtr& A, int e);
Derivation euler_derivation(const QRingPtr& A);
// f^D : Ω -> A, dx_j ↦ D(x_j), as a map of degree 0 into A(e).
ModuleMap derivation_as_map(const QRingPtr& A, const Derivation& D);

struct T1Space {
  ModPtr module;
  bool finite_length = false;
  long total_dim = -1;              // -1 when not of finite length
  std::map<int, long> dims;         // exact, or up to `bound`
  std::optional<int> bound;
  std::string method;               // "complete-intersection" or "general"
  // Hypersurfaces: monomial basis of P/(f, ∂f) and its length.
  std::vector<Poly> tjurina_basis;
  std::optional<long> tjurina_dim;
};
T1Space t1(const QRingPtr& A, std::optional<int> bound = std::nullopt);
// Always the Hom(I/I², A) presentation, even for complete intersections.
T1Space t1_general(const QRingPtr& A, std::optional<int> bound = std::nullopt);
// Length of P/(f, ∂f/∂x_1, ..., ∂f/∂x_m) for a hypersurface.
long tjurina_number(const QRingPtr& A);

struct T2Space {
  ModPtr module;
  bool certified_zero = false;
  bool finite_length = false;
  long total_dim = -1;
  std::map<int, long> dims;
  std::optional<int> bound;
  std::string method;
};
// Zero with certificate; throws unless the generators form a regular sequence.
T2Space t2_ci(const QRingPtr& A);
// coker(Hom(F ⊗ A, A) -> Hom(R/R_0, A)) with R the relations among the
// generators and R_0 the Koszul relations.
T2Space t2_ls(const QRingPtr& A, std::optional<int> bound = std::nullopt);

/// g^N(D) ∈ Ext^1(N,N): D applied to the entries of the first differential.
ExtClass ks_map(const ExtPtr& ext1, const Derivation& D);

/// Ext^1(Syz N, Syz N) on the shifted resolution of N.
ExtPtr syzygy_ext_group(const ExtPtr& ext1);
/// Image of c under Ext^1(N,N) -> Ext^2(N,Syz N) ≅ Ext^1(Syz N,Syz N).
ExtClass syz_on_ext(const ExtClass& c, const ExtPtr& syz_group);

/// φψ = ψφ = f·Id over P, presenting an MCM module over P/(f).
struct MatrixFactorization {
  QRingPtr P;
  Poly f;
  Matrix phi, psi;
  bool verify() const;
};
MatrixFactorization matrix_factorization(const ModPtr& N);

struct ObstructionResult {
  bool obstructed = true;
  std::optional<Matrix> xi1, xi2;
  bool witness_verified = false;
};
// Solvability of ξ1 ψ + φ ξ2 = g·Id over P.
ObstructionResult obstruction_mf(const MatrixFactorization& mf, const Poly& g);
// Rank of g ↦ [solvable or not] on span(gs), i.e. dim span(gs) minus the
// dimension of the unobstructed subspace. gs must be homogeneous.
int obstruction_rank_mf(const MatrixFactorization& mf, const std::vector<Poly>& gs);

/// t with d1 d2 = f·t over P, for a hypersurface; the class of g·t in
/// Ext^2(N,N) is the obstruction of N along f + εg.
Matrix eisenbud_operator(const FreeResolution& F, const Poly& f);
ExtClass obstruction_class(const ExtPtr& ext2, const Poly& g);
// Rank of g ↦ [g·t] on span(gs), degree by degree; gs linearly independent.
int obstruction_rank_eisenbud(const ExtPtr& ext2, const std::vector<Poly>& gs);

struct PairCohomologyReport {
  std::map<int, long> ext_dims;      // n -> total dim Ext^n(N,N), n = 0,1,2
  std::map<int, bool> ext_finite;
  std::vector<int> der_window;       // degrees of Der used for ∂0
  std::map<int, long> der_dims;
  long t1_dim = 0;
  bool t1_finite = true;
  std::string t2_status;
  int rank_d0 = 0;
  std::optional<int> rank_d1;        // nullopt: not computed
  std::string d1_method;
  std::optional<int> rank_d1_mf;     // matrix factorization cross-check
  long ot1_lower = 0, ot1_upper = 0;
  std::optional<long> ot1;
  bool forgetful_smooth = false;     // Ext^2(N,N) = 0
  int degree_bound = 0;
};
PairCohomologyReport pair_cohomology(const ModPtr& N, std::optional<int> degree_bound = std::nullopt,
                                     std::vector<int> extra_window = {});

}  // namespace dfb
