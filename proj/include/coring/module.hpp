#pragma once

// Unital bimodules over graded rings, linear maps between them, right duals
// and dual bases.
//
// A (B, A)-bimodule basis element m is homogeneous of grade (left, right):
// it lies in f_left M e_right. A one-sided right A-module is a bimodule whose
// left ring is the rational field.

#include "coring/ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coring {

struct ModuleBasisElement {
  std::string label;
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(const ModuleBasisElement&, const ModuleBasisElement&) = default;
};

class Bimodule {
 public:
  /// `left_action[b * dim + m]` is b.m for b in the left ring basis,
  /// `right_action[m * dimA + a]` is m.a.
  Bimodule(std::string name, RingPtr left_ring, RingPtr right_ring,
           std::vector<ModuleBasisElement> basis, std::vector<SparseVector> left_action,
           std::vector<SparseVector> right_action);

  const std::string& name() const { return name_; }
  const RingPtr& left_ring() const { return left_; }
  const RingPtr& right_ring() const { return right_; }

  std::size_t dim() const { return basis_.size(); }
  const ModuleBasisElement& basis(std::size_t k) const { return basis_.at(k); }
  const std::vector<ModuleBasisElement>& basis() const { return basis_; }
  std::optional<std::size_t> find_basis(const std::string& label) const;

  const SparseVector& left_act(std::size_t b, std::size_t m) const {
    return left_action_[b * basis_.size() + m];
  }
  const SparseVector& right_act(std::size_t m, std::size_t a) const {
    return right_action_[m * right_->dim() + a];
  }
  Vector act_left(const Vector& b, const Vector& m) const;
  Vector act_right(const Vector& m, const Vector& a) const;
  /// Matrix of m -> b.m, resp. m -> m.a, for a basis element.
  Matrix left_matrix(std::size_t b) const;
  Matrix right_matrix(std::size_t a) const;

  friend bool operator==(const Bimodule& x, const Bimodule& y);

 private:
  std::string name_;
  RingPtr left_;
  RingPtr right_;
  std::vector<ModuleBasisElement> basis_;
  std::vector<SparseVector> left_action_;
  std::vector<SparseVector> right_action_;
};

using ModulePtr = std::shared_ptr<const Bimodule>;

bool same_module(const ModulePtr& a, const ModulePtr& b);

Report verify_module(const Bimodule& m, const IndexSet& left_corner, const IndexSet& right_corner);
Report verify_module(const Bimodule& m);

// ------------------------------------------------------------- examples

/// A as an (A, A)-bimodule. Cached per ring so repeated calls share identity.
ModulePtr regular(const RingPtr& a);
/// e_S A as a right A-module (left ring Q).
ModulePtr right_ideal(const RingPtr& a, const IndexSet& s);
/// e_S A as an (e_S A e_S, A)-bimodule.
ModulePtr corner_right_ideal(const RingPtr& a, const IndexSet& s);
/// A e_S as a left A-module (right ring Q).
ModulePtr left_ideal(const RingPtr& a, const IndexSet& s);
/// The same right module with its left structure forgotten.
ModulePtr as_right_module(const ModulePtr& m);
/// e_S M as a (Q, right ring)-module.
ModulePtr corner_submodule(const ModulePtr& m, const IndexSet& s);
ModulePtr zero_module(const RingPtr& left, const RingPtr& right);
/// Direct sum with basis (x, 0) then (0, y). Labels are kept unless the
/// summands share one, in which case they become "(x,0)" and "(0,y)".
ModulePtr direct_sum(const ModulePtr& x, const ModulePtr& y, std::string name = {});
/// Right structure restricted along psi. Basis elements must be homogeneous
/// for the decomposition by psi(f_j); throws otherwise.
ModulePtr restrict_right(const ModulePtr& m, const RingMorphism& psi);
ModulePtr restrict_left(const ModulePtr& m, const RingMorphism& psi);
/// The simple top of e_i A for a path algebra: e_i A modulo its arrows.
ModulePtr simple_top(const RingPtr& a, std::size_t i);

ModulePtr with_corrupted_right_action(const Bimodule& m, std::size_t basis, std::size_t ring_basis,
                                      SparseVector value);

// ------------------------------------------------------------- maps

struct LinearMap {
  ModulePtr source;
  ModulePtr target;
  Matrix matrix;  // target.dim() x source.dim()

  Vector operator()(const Vector& x) const { return matrix * x; }
};

LinearMap make_map(ModulePtr source, ModulePtr target, Matrix matrix);
LinearMap identity_map(const ModulePtr& m);
LinearMap zero_map(const ModulePtr& source, const ModulePtr& target);
/// g after f.
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap scale(const Scalar& s, const LinearMap& f);
LinearMap add(const LinearMap& f, const LinearMap& g);
bool same_matrix(const LinearMap& f, const LinearMap& g);

enum class Side { Right, Left, Both };

/// Linearity of f on all basis pairs; the witness names the failing pair.
Report check_linearity(const LinearMap& f, Side side);
bool is_linear(const LinearMap& f, Side side);

/// Basis of the space of `side`-linear maps M -> N.
std::vector<LinearMap> hom_space(const ModulePtr& m, const ModulePtr& n, Side side);

// ------------------------------------------------------------- duals

/// Sigma dagger: right A-linear functionals Sigma -> A, graded as an
/// (A, B)-bimodule. Component (i, j) holds the functionals supported on
/// f_j Sigma with values in e_i A.
struct RightDual {
  ModulePtr sigma;
  ModulePtr module;
  /// Per basis element, the functional as a dimA x dimSigma matrix.
  std::vector<Matrix> functionals;

  Matrix functional(const Vector& chi) const;
  /// chi(x) in A.
  Vector evaluate(const Vector& chi, const Vector& x) const;
  /// Coordinates of a functional in the basis, if it lies in Sigma dagger.
  std::optional<Vector> coordinates(const Matrix& functional) const;

  struct Component {
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;  // (a, m)
    std::vector<std::size_t> basis;  // dual basis positions, one per free unknown
    std::vector<std::size_t> free;   // index into unknowns
  };
  std::vector<Component> components;
};

/// Cached per module.
std::shared_ptr<const RightDual> right_dual(const ModulePtr& sigma);

/// Pairs (u_i, v_i) with u_i in h Sigma and v_i in Sigma dagger supported
/// on h Sigma, such that u = sum_i u_i v_i(u) for u in h Sigma.
struct DualBasis {
  IndexSet h;
  std::vector<Vector> u;  // Sigma coordinates
  std::vector<Vector> v;  // Sigma dagger coordinates

  std::size_t size() const { return u.size(); }
};

enum class GeneratorStrategy { Greedy, FullBasis };

std::optional<DualBasis> dual_basis(const ModulePtr& sigma, const IndexSet& h,
                                    GeneratorStrategy strategy = GeneratorStrategy::Greedy);
Report check_dual_basis(const ModulePtr& sigma, const DualBasis& db);

struct ProjectivityCertificate {
  bool projective = false;
  std::optional<DualBasis> basis;
};
ProjectivityCertificate is_fg_projective(const ModulePtr& sigma, const IndexSet& h);

/// One dual basis per generator idempotent f_j of the left ring.
using DualBasisFamily = std::vector<DualBasis>;

class MissingDualBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws MissingDualBasis naming the first non-projective component.
DualBasisFamily dual_basis_family(const ModulePtr& sigma,
                                  GeneratorStrategy strategy = GeneratorStrategy::Greedy);

/// A family with functional v_0 of component `j` scaled by `factor`.
DualBasisFamily corrupt_dual_basis(DualBasisFamily family, std::size_t j, const Scalar& factor);

}  // namespace coring
