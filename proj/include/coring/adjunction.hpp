#pragma once

// The adjunction - (x)_B Sigma -| - (x)_A Sigma dagger for a (B, A)-bimodule
// Sigma whose components f_j Sigma are finitely generated projective.

#include "coring/coring.hpp"

#include <vector>

namespace coring {

/// y -> sum_i y (x) u_i (x) v_i, with the dual basis of f_j Sigma for y = y f_j.
LinearMap unit_eta(const ModulePtr& sigma, const ModulePtr& y, const DualBasisFamily& family);
LinearMap unit_eta(const ModulePtr& sigma, const ModulePtr& y);
/// The same formula with one dual basis for a unity h covering every grade of y.
LinearMap unit_eta(const ModulePtr& sigma, const ModulePtr& y, const DualBasis& unity);

/// x (x) phi (x) u -> x phi(u).
LinearMap counit_zeta(const ModulePtr& sigma, const ModulePtr& x);

/// e_i A and A on one side, f_j B and B on the other.
std::vector<ModulePtr> test_modules(const RingPtr& r);

Report check_triangle_identities(const ModulePtr& sigma);
Report check_triangle_identities(const ModulePtr& sigma, const DualBasisFamily& family);

/// eta built from the per-generator family against eta built from the full unity.
Report check_eta_independence(const ModulePtr& sigma);

/// Naturality squares of eta over maps f: Y -> Y' and of zeta over g: X -> X'.
Report check_eta_naturality(const ModulePtr& sigma, const LinearMap& f);
Report check_zeta_naturality(const ModulePtr& sigma, const LinearMap& g);

/// (W (x)_B Sigma) dagger -> Sigma dagger (x)_B W dagger,
/// chi -> sum_k chi(w_k (x) -) (x) w_k*, with the dual bases of W.
LinearMap dual_tensor_iso(const ModulePtr& w, const ModulePtr& sigma);
/// phi (x) psi -> (w (x) u -> phi(psi(w) u)), the inverse direction.
LinearMap dual_tensor_pairing(const ModulePtr& w, const ModulePtr& sigma);

struct DualTensorResult {
  LinearMap iso;
  std::size_t rank = 0;
  Report report;
};
/// Square, full rank, bilinear, and inverse to the pairing.
DualTensorResult check_dual_tensor_iso(const ModulePtr& w, const ModulePtr& sigma);

/// Delta of base_extension(Sigma, D) against
/// Sigma dagger (x) (eta (x) D) Delta_D (x) Sigma, rebracketed.
Report check_base_extension_consistency(const ModulePtr& sigma, const CoringPtr& d);

}  // namespace coring
