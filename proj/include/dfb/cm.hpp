#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfb/iso.hpp"

namespace dfb {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};
bool all_ok(const std::vector<Check>& checks);

struct DualizingModule {
  QRingPtr ring;
  ModPtr module;
  int twist = 0;  // ω ≅ A(twist) for complete intersections
  std::string construction;  // "complete-intersection-formula" or "ext-over-P"
};

DualizingModule dualizing_module(const QRingPtr& A);
// Ext^c_P(A, P(-Σ deg x_j)) read over A; used for non-CI rings and as the
// cross-check of the CI formula.
ModPtr dualizing_module_over_P(const QRingPtr& A);

// Smallest i with Ext^i(k, M) != 0, searched up to dim A; dim A + 1 for M = 0.
int depth(const ModPtr& M);
bool is_mcm(const ModPtr& M);
// Rank over A from the Hilbert series: ratio of multiplicities in dimension
// dim A; nullopt if the ratio is not an integer.
std::optional<long> generic_rank(const ModPtr& M);

// Hom(M, ω).
ModPtr dual(const ModPtr& M, const ModPtr& omega);

// im f = ker g
bool exact_at(const ModuleMap& f, const ModuleMap& g);

/// A finite complex 0 -> W_s -> ... -> W_0 -> X -> 0 with every W_i a sum of
/// twisted copies of ω. steps[0] : W_0 -> X, steps[i] : W_i -> W_{i-1}.
struct OmegaResolution {
  std::vector<ModuleMap> steps;
};
std::vector<Check> verify_omega_resolution(const OmegaResolution& r, const std::string& label);

/// 0 -> L -> M -> N -> 0 with M MCM and L of finite injective dimension.
struct ApproximationTriple {
  ModPtr n, m, l;
  ModuleMap pi;    // M -> N
  ModuleMap incl;  // L -> M
  OmegaResolution l_resolution;
  std::string strategy;
  std::vector<Check> checks;
  // L ⊗ k -> M ⊗ k is zero: no unit entries once M is minimally presented.
  bool closed_fiber_minimal = false;
  bool verified() const { return all_ok(checks); }
};

/// 0 -> N -> L' -> M' -> 0 with M' MCM and L' of finite injective dimension,
/// together with the middle row 0 -> L -> W -> L' -> 0 of the diagram.
struct HullTriple {
  ModPtr n, lp, mp, w;
  ModuleMap iota;        // N -> L'
  ModuleMap to_mp;       // L' -> M'
  ModuleMap embed;       // M -> W = ⊕ ω(twists)
  ModuleMap w_to_lp;     // W -> L'
  ModuleMap w_to_mp;     // W -> M'
  OmegaResolution lp_resolution;
  std::vector<Check> checks;
  bool verified() const { return all_ok(checks); }
};

/// Ω -> Ω** for a complete intersection; the cokernel is (T^1)^∨ up to twist.
struct KaehlerDoubleDual {
  ModPtr omega;        // Ω_{A/k}
  ModPtr double_dual;  // Ω**
  ModuleMap ev;        // Ω -> Ω**
  ModPtr cokernel;
};
KaehlerDoubleDual kaehler_double_dual(const QRingPtr& A);
ModPtr t1_dual_module(const QRingPtr& A);

ApproximationTriple mcm_approximation(const ModPtr& N, const DualizingModule& omega);
HullTriple fid_hull(const ApproximationTriple& t, const DualizingModule& omega);

struct FundamentalModule {
  ModPtr module;
  ApproximationTriple sequence;  // 0 -> ω -> F -> m -> 0
  bool degenerate = false;       // F free (regular ring)
};
FundamentalModule fundamental_module(const QRingPtr& A, const DualizingModule& omega);

/// Tangent-level transfer maps for an approximation and its hull.
struct TransferReport {
  GradedLinearMap pi_pull;     // π^*: Ext^1(N,N) -> Ext^1(M,N)
  GradedLinearMap pi_push;     // π_*: Ext^1(M,M) -> Ext^1(M,N)
  GradedLinearMap eta1_m;      // (π_*)^{-1} π^*
  bool eta1_m_defined = false;
  GradedLinearMap iota_push;   // ι_*: Ext^1(N,N) -> Ext^1(N,L')
  GradedLinearMap iota_pull;   // ι^*: Ext^1(L',L') -> Ext^1(N,L')
  GradedLinearMap eta1_lp;     // (ι^*)^{-1} ι_*
  bool eta1_lp_defined = false;
  // σ^1_1 injective / iso from π^* on Ext^1 and Ext^2
  std::optional<bool> sigma1_injective, sigma1_iso;
  std::vector<Check> hypotheses;  // Ext-vanishing conditions
  std::vector<Check> certificates;  // named smoothness/iso statements
};
TransferReport transfer_maps(const ApproximationTriple& t, const HullTriple& h);

}  // namespace dfb
