#pragma once

// Explicit coring constructions: trivial, Sweedler, split, comatrix, base
// ring extension, Rees, and corings presented by comonad data at A.

#include "coring/coring.hpp"

#include <optional>

namespace coring {

class InvalidMorphism : public std::invalid_argument {
 public:
  InvalidMorphism(const std::string& what, Report report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// A with Delta the inverse left unitor and counit the identity. Cached per
/// ring.
CoringPtr trivial_coring(const RingPtr& a);

/// The counit of C as a coring morphism C -> trivial(A).
CoringMorphism counit_morphism(const CoringPtr& c);

// ------------------------------------------------------------- Sweedler

/// Minimal f in E(B) whose image is a unity for the generators in `s` of A.
IndexSet sweedler_unity(const RingMorphism& psi, const IndexSet& s);

/// A (x)_B A with a (x) a' -> a (x) e (x) e (x) a' and counit aa'. The unity
/// e is psi of sweedler_unity for the supports of a and a'.
CoringPtr sweedler_coring(const RingMorphism& psi);
/// Delta of the pair (a, a') computed with the unity psi(f_F).
Vector sweedler_delta(const Coring& sw, const RingMorphism& psi, std::size_t a, std::size_t a2, const IndexSet& f);

// ------------------------------------------------------------- split

/// A + M with Delta(a, m) = (a,0)(x)(e,0) + (0,m)(x)(e,0) + (e,0)(x)(0,m).
CoringPtr split_coring(const RingPtr& a, const ModulePtr& m);
/// Delta of carrier basis vector k computed with the unity e_S.
Vector split_delta(const Coring& split, std::size_t k, const IndexSet& s);

// ------------------------------------------------------------- comatrix

/// Sigma dagger (x)_B Sigma. Throws MissingDualBasis when some f_j Sigma has
/// no finite dual basis.
CoringPtr comatrix_coring(const ModulePtr& sigma);
CoringPtr comatrix_coring(const ModulePtr& sigma, const DualBasisFamily& family);

/// The coaction u -> sum_i u_i (x) v_i (x) u making Sigma a right comodule
/// over its comatrix coring.
Comodule comatrix_comodule(const ModulePtr& sigma, const CoringPtr& comatrix);

// ------------------------------------------------------------- base extension

/// Sigma dagger (x)_B D (x)_B Sigma for a B-coring D.
CoringPtr base_extension(const ModulePtr& sigma, const CoringPtr& d);
CoringPtr base_extension(const ModulePtr& sigma, const CoringPtr& d, const DualBasisFamily& family);

/// The bijection base_extension(Sigma, trivial(B)) -> comatrix(Sigma) given
/// by phi (x) b (x) u -> phi.b (x) u.
CoringMorphism base_extension_to_comatrix(const CoringPtr& ext, const CoringPtr& comatrix);

// ------------------------------------------------------------- Rees

struct CounitCertificate {
  std::size_t rank = 0;
  std::size_t carrier_dim = 0;
  std::size_t ring_dim = 0;
  bool bijective = false;
};

struct ReesResult {
  CoringPtr coring;
  CounitCertificate counit;
};

/// The comatrix coring of eA over (eAe, A), i.e. A e (x)_{eAe} eA.
ReesResult rees_coring(const RingPtr& a, const IndexSet& e);

// ------------------------------------------------------------- comonads

struct ComonadResult {
  CoringPtr coring;
  Report report;
};

/// Coring presented by the value at A of a comonad - (x)_A N: delta_A and
/// xi_A on the representing bimodule N. Delta is delta_A transported along
/// the unitors of A (x)_A N, and the coring laws are checked.
ComonadResult comonad_to_coring(const std::string& name, const ModulePtr& n, const LinearMap& delta,
                                const LinearMap& xi);

// ------------------------------------------------------------- fault fixtures

/// Delta followed by the flip of legs [x|y] -> [y|x] on representatives.
CoringPtr with_swapped_legs(const Coring& c);

}  // namespace coring
