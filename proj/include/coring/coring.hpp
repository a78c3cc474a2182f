#pragma once

// Corings, coring morphisms and comodules with their law checkers.
//
// Every law is compared as a matrix identity on the canonical bases: each
// failing column becomes a witness naming the offending basis vector.

#include "coring/tensor.hpp"

#include <memory>
#include <string>

namespace coring {

struct Coring {
  std::string name;
  RingPtr ring;
  ModulePtr carrier;   // (A, A)-bimodule
  LinearMap delta;     // C -> C (x) C
  LinearMap epsilon;   // C -> A
};

using CoringPtr = std::shared_ptr<const Coring>;

/// Validates shapes only; laws are left to check_coring.
CoringPtr make_coring(std::string name, ModulePtr carrier, Matrix delta, Matrix epsilon);

Report check_coring(const Coring& c);

struct CoringMorphism {
  std::string name;
  CoringPtr source;
  CoringPtr target;
  LinearMap map;
};

Report check_coring_morphism(const CoringMorphism& phi);
CoringMorphism identity_morphism(const CoringPtr& c);
/// psi after phi.
CoringMorphism compose(const CoringMorphism& psi, const CoringMorphism& phi);

struct Comodule {
  std::string name;
  CoringPtr coring;
  ModulePtr module;    // right module over the base ring
  LinearMap coaction;  // M -> M (x) C
};

Report check_comodule(const Comodule& m);
Report check_comodule_morphism(const LinearMap& f, const Comodule& m, const Comodule& m2);

/// X (x) C with coaction the inverse associator after X (x) Delta.
Comodule cofree_comodule(const ModulePtr& x, const CoringPtr& c);
/// C as a right comodule over itself.
Comodule regular_comodule(const CoringPtr& c);
/// Coaction (M (x) phi) after rho, over the target of phi.
Comodule corestrict(const CoringMorphism& phi, const Comodule& m);

/// Triangle identities of the forgetful / cofree adjunction, on a comodule
/// M and a module X.
Report check_cofree_adjunction(const Comodule& m, const ModulePtr& x);

/// Appends a failure for every column where lhs and rhs differ.
void compare_columns(Report& rep, const std::string& law, const Matrix& lhs, const Matrix& rhs,
                     const Bimodule& source);

}  // namespace coring
