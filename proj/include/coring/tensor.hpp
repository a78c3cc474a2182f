#pragma once

// Tensor products M (x)_A N as explicit quotients.
//
// The ambient space has one coordinate per grade-matched pair of basis
// vectors (x, y) with right(x) = left(y), ordered by (x, y). It is divided by
// the balancing relations x.a (x) y - x (x) a.y for all basis triples. The
// canonical basis of the quotient is the set of non-pivot ambient
// coordinates; each is shown as "[x|y]".

#include "coring/module.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coring {

class BalancingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TensorSpace {
  ModulePtr left;    // (X, A)
  ModulePtr right;   // (A, Y)
  ModulePtr module;  // (X, Y)
  QuotientSpace quotient;
  std::vector<std::pair<std::size_t, std::size_t>> ambient_pairs;

  /// Ambient coordinate of (x, y), or -1 when the grades do not match.
  long ambient_index(std::size_t x, std::size_t y) const { return index_[x * right->dim() + y]; }
  /// The basis pair representing canonical basis vector k.
  const std::pair<std::size_t, std::size_t>& representative(std::size_t k) const {
    return ambient_pairs[quotient.representative(k)];
  }
  /// Quotient coordinates of x (x) y.
  SparseVector pure_basis(std::size_t x, std::size_t y) const;
  Vector pure(const Vector& x, const Vector& y) const;

  std::vector<long> index_;
};

using TensorPtr = std::shared_ptr<const TensorSpace>;

/// Cached per (M, N) pointer pair, so iterated tensors keep identity.
TensorPtr tensor(const ModulePtr& m, const ModulePtr& n);
inline ModulePtr tensor_module(const ModulePtr& m, const ModulePtr& n) { return tensor(m, n)->module; }
/// The tensor space whose quotient module is `module`, or null.
TensorPtr tensor_space_of(const ModulePtr& module);

/// f (x) g. Throws BalancingError when a relation is not mapped to zero.
LinearMap induced_map(const LinearMap& f, const LinearMap& g);
inline LinearMap tensor_left(const ModulePtr& m, const LinearMap& g) { return induced_map(identity_map(m), g); }
inline LinearMap tensor_right(const LinearMap& f, const ModulePtr& n) { return induced_map(f, identity_map(n)); }

/// (M (x) N) (x) P -> M (x) (N (x) P) and back.
LinearMap associator(const ModulePtr& m, const ModulePtr& n, const ModulePtr& p);
LinearMap associator_inverse(const ModulePtr& m, const ModulePtr& n, const ModulePtr& p);

/// A (x)_A N -> N with A the left ring of N, and its inverse.
LinearMap left_unitor(const ModulePtr& n);
LinearMap left_unitor_inverse(const ModulePtr& n);
/// M (x)_A A -> M with A the right ring of M, and its inverse.
LinearMap right_unitor(const ModulePtr& m);
LinearMap right_unitor_inverse(const ModulePtr& m);

/// x -> e (x) x, from X to eA (x)_A X.
LinearMap gamma(const RingPtr& a, const IndexSet& e, const ModulePtr& x);
/// ea (x) x -> eax, from eA (x)_A X to X.
LinearMap tau(const RingPtr& a, const IndexSet& e, const ModulePtr& x);
/// The corner isomorphisms eN -> eA (x)_A N and back.
LinearMap upsilon(const RingPtr& a, const IndexSet& e, const ModulePtr& n);
LinearMap theta(const RingPtr& a, const IndexSet& e, const ModulePtr& n);

}  // namespace coring
