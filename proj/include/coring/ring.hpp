#pragma once

// Rings with enough orthogonal idempotents over the rationals.
//
// A ring is presented by a finite list of idempotent labels e_0..e_{n-1} and
// a basis whose elements are homogeneous: basis element b lies in e_l A e_r
// where (l, r) = (b.left, b.right). Each e_i is itself a basis element.
// Products of basis elements are stored as sparse structure constants.

#include "coring/linalg.hpp"
#include "coring/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace coring {

/// Sorted, duplicate-free list of idempotent indices. Represents the
/// generator-sum idempotent e_S = sum of e_i for i in S.
using IndexSet = std::vector<std::size_t>;

IndexSet make_index_set(std::vector<std::size_t> indices);
IndexSet index_union(const IndexSet& a, const IndexSet& b);
bool index_contains(const IndexSet& s, std::size_t i);

struct GradedBasisElement {
  std::string label;
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(const GradedBasisElement&, const GradedBasisElement&) = default;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GradedRing {
 public:
  /// `products[a * dim + b]` is the product of basis elements a and b.
  /// Shapes are validated here; algebraic laws are checked by verify_ring.
  GradedRing(std::string name, std::vector<std::string> index_labels,
             std::vector<GradedBasisElement> basis, std::vector<std::size_t> idempotents,
             std::vector<SparseVector> products);

  const std::string& name() const { return name_; }
  std::size_t index_count() const { return index_labels_.size(); }
  const std::string& index_label(std::size_t i) const { return index_labels_.at(i); }
  const std::vector<std::string>& index_labels() const { return index_labels_; }
  std::optional<std::size_t> find_index(const std::string& label) const;
  IndexSet all_indices() const;

  std::size_t dim() const { return basis_.size(); }
  const GradedBasisElement& basis(std::size_t k) const { return basis_.at(k); }
  const std::vector<GradedBasisElement>& basis() const { return basis_; }
  std::optional<std::size_t> find_basis(const std::string& label) const;

  /// Basis position of the generator idempotent e_i.
  std::size_t idempotent_basis(std::size_t i) const { return idempotents_.at(i); }
  Vector idempotent(const IndexSet& s) const;

  const SparseVector& product(std::size_t a, std::size_t b) const {
    return products_[a * basis_.size() + b];
  }
  Vector multiply(const Vector& x, const Vector& y) const;

  /// Generator indices occurring as left or right grade in the support of x.
  IndexSet support_indices(const Vector& x) const;

  friend bool operator==(const GradedRing& a, const GradedRing& b);

 private:
  std::string name_;
  std::vector<std::string> index_labels_;
  std::vector<GradedBasisElement> basis_;
  std::vector<std::size_t> idempotents_;
  std::vector<SparseVector> products_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Pointer identity, else structural equality.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// An element together with the ring it lives in.
class RingElement {
 public:
  RingElement(RingPtr ring, Vector coords);
  static RingElement basis(RingPtr ring, std::size_t k);
  static RingElement idempotent(RingPtr ring, const IndexSet& s);

  const RingPtr& ring() const { return ring_; }
  const Vector& coords() const { return coords_; }
  bool is_zero() const { return coring::is_zero(coords_); }
  /// Nonzero graded components (left, right).
  std::vector<std::pair<std::size_t, std::size_t>> support() const;
  bool is_idempotent() const;

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingPtr ring_;
  Vector coords_;
};

RingElement multiply(const RingElement& x, const RingElement& y);

/// The minimal generator-sum idempotent acting as a two-sided identity on
/// every element of `elems`. Throws on an empty set or mixed rings.
RingElement local_unit_for(const std::vector<RingElement>& elems);
IndexSet local_unit_indices(const std::vector<RingElement>& elems);

/// e <= e' iff e = e e' = e' e. Throws if either input is not idempotent.
bool idempotent_leq(const RingElement& e, const RingElement& e_prime);

Report verify_ring(const GradedRing& r, const IndexSet& corner);
Report verify_ring(const GradedRing& r);

struct RingMorphism {
  std::string name;
  RingPtr source;
  RingPtr target;
  std::vector<Vector> images;  // image of each source basis element

  Vector apply(const Vector& x) const;
};

/// Multiplicativity on basis pairs and the local-unit condition: every
/// generator idempotent e of the target satisfies e psi(f) = psi(f) e = e for
/// some idempotent f of the source.
Report check_morphism(const RingMorphism& psi);

RingMorphism identity_morphism(const RingPtr& r);

/// The corner ring e_S A e_S, graded by S; cached per (ring, S).
RingPtr corner(const RingPtr& r, const IndexSet& s);
/// Corner at a general idempotent element: a one-index ring with identity e.
/// Generator-sum idempotents are forwarded to the graded overload.
RingPtr corner(const RingElement& e);

// ------------------------------------------------------------- builders

/// The rational field as a ring with one idempotent.
RingPtr field_ring();
/// M_n(Q) with matrix units E_ij graded by (i, j).
RingPtr matrix_ring(std::size_t n, std::string name = {});

struct Quiver {
  std::vector<std::string> vertices;
  struct Arrow {
    std::string label;
    std::size_t source;
    std::size_t target;
  };
  std::vector<Arrow> arrows;
};

/// Path algebra with left-to-right concatenation, so a path p: i -> j lies in
/// e_i A e_j. Cyclic quivers need `max_length` (paths longer are set to zero).
RingPtr path_algebra(const Quiver& q, std::string name = {},
                     std::optional<std::size_t> max_length = std::nullopt);
/// Labels are prefixed "<summand>."; repeated summands also carry their position.
RingPtr direct_sum(const std::vector<RingPtr>& rings, std::string name = {});
/// Matrices of size n over a unital ring R, graded by (matrix position,
/// grade in R). The corner at position 0 recovers R.
RingPtr rees_ring(const RingPtr& base, std::size_t n, std::string name = {});

/// Returns a copy of `r` with one structure constant replaced.
RingPtr with_corrupted_product(const GradedRing& r, std::size_t a, std::size_t b,
                               SparseVector value);

/// A ring with infinitely many orthogonal idempotents, materialized one
/// finite corner at a time. Corners are memoized and built under a lock.
class LazyRing {
 public:
  using Builder = std::function<RingPtr(std::size_t)>;
  LazyRing(std::string name, Builder builder, std::size_t max_corner);

  const std::string& name() const { return name_; }
  std::size_t max_corner() const { return max_corner_; }
  /// The corner on the first n idempotents. Throws for n == 0 or n > bound.
  RingPtr corner(std::size_t n) const;

 private:
  std::string name_;
  Builder builder_;
  std::size_t max_corner_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, RingPtr> cache_;
};

/// Finitary matrices over Q indexed by the naturals.
std::shared_ptr<LazyRing> infinite_matrix_ring(std::size_t max_corner);
/// Path algebra of the linear quiver 1 -> 2 -> 3 -> ...
std::shared_ptr<LazyRing> infinite_path_algebra(std::size_t max_corner);

}  // namespace coring
