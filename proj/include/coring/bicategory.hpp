#pragma once

// The bicategory of corings. A 1-cell from (D over B) to (C over A) is an
// (A, B)-bimodule M with a bilinear m: C (x)_A M -> M (x)_B D compatible with
// the counits and comultiplications; a 2-cell (M, m) => (M', m') is a
// bilinear a: C (x)_A M -> M'.

#include "coring/coring.hpp"

#include <string>

namespace coring {

struct OneCell {
  std::string name;
  CoringPtr target;  // C over A
  CoringPtr source;  // D over B
  ModulePtr module;  // (A, B)
  LinearMap map;     // C (x) M -> M (x) D
};

Report check_one_cell(const OneCell& c);

/// (A, C (x) A -> A (x) C).
OneCell identity_one_cell(const CoringPtr& c);
/// M = A with m the unitors around phi: a 1-cell from phi.target to phi.source.
OneCell morphism_one_cell(const CoringMorphism& phi);
/// Any (A, B)-bimodule M as a 1-cell from trivial(B) to C, m = eps_C (x) M.
OneCell collapse_one_cell(const CoringPtr& c, const ModulePtr& m);
/// A right D-comodule whose carrier is a (B, A)-bimodule with left linear
/// coaction, as a 1-cell from D to trivial(B).
OneCell comodule_one_cell(const Comodule& x);

/// (M (x)_B N, (M (x) n)(m (x) N)) for m from D to C and n from E to D.
OneCell compose_one_cells(const OneCell& m, const OneCell& n);
bool composable(const OneCell& m, const OneCell& n);

/// Composition with identity 1-cells, compared through the unitors.
Report check_unit_laws(const OneCell& c);
/// (m n) p against m (n p), compared through the associator.
Report check_associativity(const OneCell& m, const OneCell& n, const OneCell& p);

struct TwoCell {
  std::string name;
  OneCell source;
  OneCell target;
  LinearMap map;  // C (x) M -> M'
};

Report check_two_cell(const TwoCell& t);

/// k times the collapse eps_C (x) M, a 2-cell from c to itself.
TwoCell collapse_two_cell(const OneCell& c, const Scalar& k = 1);
TwoCell zero_two_cell(const OneCell& source, const OneCell& target);

/// a2 after a: a2 (C (x) a)(Delta_C (x) M).
TwoCell compose_vertical(const TwoCell& a2, const TwoCell& a);
/// a on the outer cells, b on the inner ones.
TwoCell compose_horizontal(const TwoCell& a, const TwoCell& b);

/// X (x)_A M with coaction (X (x) m)(rho (x) M), a comodule over the source.
Comodule induce_comodule(const OneCell& c, const Comodule& x);
/// induce along m n against inducing along m then n, through the associator.
Report check_induce_functoriality(const OneCell& m, const OneCell& n, const Comodule& x);

}  // namespace coring
