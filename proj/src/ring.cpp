#include "coring/ring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace coring {

IndexSet make_index_set(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

IndexSet index_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool index_contains(const IndexSet& s, std::size_t i) {
  return std::binary_search(s.begin(), s.end(), i);
}

// ---------------------------------------------------------------- GradedRing

GradedRing::GradedRing(std::string name, std::vector<std::string> index_labels,
                       std::vector<GradedBasisElement> basis, std::vector<std::size_t> idempotents,
                       std::vector<SparseVector> products)
    : name_(std::move(name)),
      index_labels_(std::move(index_labels)),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      products_(std::move(products)) {
  if (index_labels_.empty()) throw std::invalid_argument("ring '" + name_ + "': empty index set");
  if (idempotents_.size() != index_labels_.size())
    throw DimensionError("ring '" + name_ + "': one idempotent per index required");
  for (const auto& b : basis_)
    if (b.left >= index_labels_.size() || b.right >= index_labels_.size())
      throw DimensionError("ring '" + name_ + "': basis grade out of range for " + b.label);
  for (std::size_t i = 0; i < idempotents_.size(); ++i) {
    std::size_t k = idempotents_[i];
    if (k >= basis_.size() || basis_[k].left != i || basis_[k].right != i)
      throw DimensionError("ring '" + name_ + "': idempotent of index " + index_labels_[i] +
                           " must be a basis element of grade (i, i)");
  }
  if (products_.size() != basis_.size() * basis_.size())
    throw DimensionError("ring '" + name_ + "': product table has wrong size");
  for (const auto& p : products_)
    for (const auto& [k, x] : p.entries)
      if (k >= basis_.size()) throw DimensionError("ring '" + name_ + "': product index out of range");
}

std::optional<std::size_t> GradedRing::find_index(const std::string& label) const {
  for (std::size_t i = 0; i < index_labels_.size(); ++i)
    if (index_labels_[i] == label) return i;
  return std::nullopt;
}

IndexSet GradedRing::all_indices() const {
  IndexSet s(index_labels_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

std::optional<std::size_t> GradedRing::find_basis(const std::string& label) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].label == label) return k;
  return std::nullopt;
}

Vector GradedRing::idempotent(const IndexSet& s) const {
  Vector v(dim());
  for (auto i : s) v.at(idempotents_.at(i)) = 1;
  return v;
}

Vector GradedRing::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionError("multiply: element length");
  Vector out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (sgn(y[b]) == 0) continue;
      product(a, b).add_to(out, x[a] * y[b]);
    }
  }
  return out;
}

IndexSet GradedRing::support_indices(const Vector& x) const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    idx.push_back(basis_[k].left);
    idx.push_back(basis_[k].right);
  }
  return make_index_set(std::move(idx));
}

bool operator==(const GradedRing& a, const GradedRing& b) {
  return a.index_labels_ == b.index_labels_ && a.basis_ == b.basis_ &&
         a.idempotents_ == b.idempotents_ && a.products_ == b.products_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- elements

RingElement::RingElement(RingPtr ring, Vector coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (!ring_) throw std::invalid_argument("ring element without a ring");
  if (coords_.size() != ring_->dim()) throw DimensionError("ring element has wrong length");
}

RingElement RingElement::basis(RingPtr ring, std::size_t k) {
  std::size_t n = ring->dim();
  return RingElement(std::move(ring), unit_vector(n, k));
}

RingElement RingElement::idempotent(RingPtr ring, const IndexSet& s) {
  Vector v = ring->idempotent(s);
  return RingElement(std::move(ring), std::move(v));
}

std::vector<std::pair<std::size_t, std::size_t>> RingElement::support() const {
  std::set<std::pair<std::size_t, std::size_t>> s;
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (sgn(coords_[k]) != 0) s.emplace(ring_->basis(k).left, ring_->basis(k).right);
  return {s.begin(), s.end()};
}

bool RingElement::is_idempotent() const { return ring_->multiply(coords_, coords_) == coords_; }

bool operator==(const RingElement& a, const RingElement& b) {
  return same_ring(a.ring_, b.ring_) && a.coords_ == b.coords_;
}

RingElement multiply(const RingElement& x, const RingElement& y) {
  if (!same_ring(x.ring(), y.ring())) throw RingMismatch("multiply: elements of different rings");
  return RingElement(x.ring(), x.ring()->multiply(x.coords(), y.coords()));
}

IndexSet local_unit_indices(const std::vector<RingElement>& elems) {
  if (elems.empty()) throw std::invalid_argument("local_unit_for: empty set");
  IndexSet s;
  for (const auto& x : elems) {
    if (!same_ring(x.ring(), elems.front().ring()))
      throw RingMismatch("local_unit_for: elements of different rings");
    s = index_union(s, x.ring()->support_indices(x.coords()));
  }
  return s;
}

RingElement local_unit_for(const std::vector<RingElement>& elems) {
  IndexSet s = local_unit_indices(elems);
  return RingElement::idempotent(elems.front().ring(), s);
}

bool idempotent_leq(const RingElement& e, const RingElement& e_prime) {
  if (!same_ring(e.ring(), e_prime.ring())) throw RingMismatch("idempotent_leq: different rings");
  if (!e.is_idempotent() || !e_prime.is_idempotent())
    throw std::invalid_argument("idempotent_leq: input is not idempotent");
  return multiply(e, e_prime) == e && multiply(e_prime, e) == e;
}

// ---------------------------------------------------------------- verification

namespace {

std::string vec_str(const GradedRing& r, const Vector& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (v[k] != 1) out << to_string(v[k]) << "*";
    out << r.basis(k).label;
  }
  return first ? "0" : out.str();
}

}  // namespace

Report verify_ring(const GradedRing& r, const IndexSet& corner) {
  Report rep("ring.verify", r.name());
  for (auto i : corner)
    if (i >= r.index_count()) throw std::out_of_range("verify_ring: corner index out of range");
  std::vector<std::size_t> in_corner;
  for (std::size_t k = 0; k < r.dim(); ++k)
    if (index_contains(corner, r.basis(k).left) && index_contains(corner, r.basis(k).right))
      in_corner.push_back(k);
  const auto n = r.dim();

  for (auto i : corner) {
    for (auto j : corner) {
      Vector expect = i == j ? unit_vector(n, r.idempotent_basis(i)) : zero_vector(n);
      Vector got = r.product(r.idempotent_basis(i), r.idempotent_basis(j)).to_dense(n);
      if (got != expect)
        rep.fail("idempotency", "e_" + r.index_label(i) + " * e_" + r.index_label(j) + " = " +
                                    vec_str(r, got));
    }
  }
  for (auto a : in_corner) {
    const auto& ba = r.basis(a);
    for (auto i : corner) {
      Vector left = r.product(r.idempotent_basis(i), a).to_dense(n);
      Vector right = r.product(a, r.idempotent_basis(i)).to_dense(n);
      Vector want_left = i == ba.left ? unit_vector(n, a) : zero_vector(n);
      Vector want_right = i == ba.right ? unit_vector(n, a) : zero_vector(n);
      if (left != want_left)
        rep.fail("local unit", "e_" + r.index_label(i) + " * " + ba.label + " = " + vec_str(r, left));
      if (right != want_right)
        rep.fail("local unit", ba.label + " * e_" + r.index_label(i) + " = " + vec_str(r, right));
    }
  }
  for (auto a : in_corner) {
    for (auto b : in_corner) {
      const auto& p = r.product(a, b);
      const auto& ba = r.basis(a);
      const auto& bb = r.basis(b);
      bool ok = true;
      for (const auto& [k, x] : p.entries) {
        if (ba.right != bb.left || r.basis(k).left != ba.left || r.basis(k).right != bb.right) ok = false;
      }
      if (!ok)
        rep.fail("grading", ba.label + " * " + bb.label + " = " + vec_str(r, p.to_dense(n)));
    }
  }
  for (auto a : in_corner) {
    for (auto b : in_corner) {
      if (r.basis(a).right != r.basis(b).left) continue;
      Vector ab = r.product(a, b).to_dense(n);
      for (auto c : in_corner) {
        if (r.basis(b).right != r.basis(c).left) continue;
        Vector lhs = r.multiply(ab, unit_vector(n, c));
        Vector rhs = r.multiply(unit_vector(n, a), r.product(b, c).to_dense(n));
        if (lhs != rhs)
          rep.fail("associativity", "(" + r.basis(a).label + ", " + r.basis(b).label + ", " +
                                        r.basis(c).label + ")");
      }
    }
  }
  return rep;
}

Report verify_ring(const GradedRing& r) { return verify_ring(r, r.all_indices()); }

// ---------------------------------------------------------------- morphisms

Vector RingMorphism::apply(const Vector& x) const {
  if (x.size() != source->dim()) throw DimensionError("morphism applied to element of wrong ring");
  Vector out(target->dim());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += x[k] * images[k][t];
  }
  return out;
}

Report check_morphism(const RingMorphism& psi) {
  Report rep("morphism", psi.name);
  if (psi.images.size() != psi.source->dim()) {
    rep.fail("shape", "expected one image per source basis element");
    return rep;
  }
  for (const auto& im : psi.images) {
    if (im.size() != psi.target->dim()) {
      rep.fail("shape", "image vector has wrong length");
      return rep;
    }
  }
  const auto& src = *psi.source;
  const auto& tgt = *psi.target;
  for (std::size_t a = 0; a < src.dim(); ++a) {
    for (std::size_t b = 0; b < src.dim(); ++b) {
      Vector lhs = psi.apply(src.product(a, b).to_dense(src.dim()));
      Vector rhs = tgt.multiply(psi.images[a], psi.images[b]);
      if (lhs != rhs)
        rep.fail("multiplicativity", "psi(" + src.basis(a).label + " * " + src.basis(b).label +
                                         ") != psi(" + src.basis(a).label + ") * psi(" +
                                         src.basis(b).label + ")");
    }
  }
  // The local-unit condition is monotone in f, so the total idempotent of
  // the source decides it.
  Vector f = psi.apply(src.idempotent(src.all_indices()));
  for (std::size_t i = 0; i < tgt.index_count(); ++i) {
    Vector e = tgt.idempotent({i});
    if (tgt.multiply(e, f) != e || tgt.multiply(f, e) != e)
      rep.fail("local unit", "no idempotent f of " + src.name() + " with e_" + tgt.index_label(i) +
                                 " psi(f) = psi(f) e_" + tgt.index_label(i) + " = e_" +
                                 tgt.index_label(i));
  }
  return rep;
}

RingMorphism identity_morphism(const RingPtr& r) {
  RingMorphism m{"id_" + r->name(), r, r, {}};
  for (std::size_t k = 0; k < r->dim(); ++k) m.images.push_back(unit_vector(r->dim(), k));
  return m;
}

// ---------------------------------------------------------------- corners

namespace {

std::mutex corner_mutex;
std::map<std::pair<const GradedRing*, IndexSet>, std::pair<RingPtr, RingPtr>> corner_cache;

std::string index_set_str(const GradedRing& r, const IndexSet& s) {
  std::string out;
  for (auto i : s) out += (out.empty() ? "" : ",") + r.index_label(i);
  return out;
}

}  // namespace

RingPtr corner(const RingPtr& r, const IndexSet& s_in) {
  IndexSet s = make_index_set(s_in);
  if (s.empty()) throw std::invalid_argument("corner: empty index set");
  for (auto i : s)
    if (i >= r->index_count()) throw std::out_of_range("corner: index out of range");
  if (s.size() == r->index_count()) return r;
  std::lock_guard lock(corner_mutex);
  auto key = std::make_pair(r.get(), s);
  if (auto it = corner_cache.find(key); it != corner_cache.end()) return it->second.second;

  std::vector<long> new_index(r->index_count(), -1);
  std::vector<std::string> labels;
  for (auto i : s) {
    new_index[i] = static_cast<long>(labels.size());
    labels.push_back(r->index_label(i));
  }
  std::vector<long> new_basis(r->dim(), -1);
  std::vector<GradedBasisElement> basis;
  for (std::size_t k = 0; k < r->dim(); ++k) {
    const auto& b = r->basis(k);
    if (new_index[b.left] < 0 || new_index[b.right] < 0) continue;
    new_basis[k] = static_cast<long>(basis.size());
    basis.push_back({b.label, static_cast<std::size_t>(new_index[b.left]),
                     static_cast<std::size_t>(new_index[b.right])});
  }
  std::vector<std::size_t> idem;
  for (auto i : s) idem.push_back(static_cast<std::size_t>(new_basis[r->idempotent_basis(i)]));
  const std::size_t n = basis.size();
  std::vector<SparseVector> products(n * n);
  for (std::size_t a = 0; a < r->dim(); ++a) {
    if (new_basis[a] < 0) continue;
    for (std::size_t b = 0; b < r->dim(); ++b) {
      if (new_basis[b] < 0) continue;
      SparseVector p;
      for (const auto& [k, x] : r->product(a, b).entries) {
        if (new_basis[k] < 0) throw std::logic_error("corner: product leaves the corner");
        p.entries.emplace_back(static_cast<std::size_t>(new_basis[k]), x);
      }
      std::sort(p.entries.begin(), p.entries.end(),
                [](const auto& u, const auto& v) { return u.first < v.first; });
      products[static_cast<std::size_t>(new_basis[a]) * n + static_cast<std::size_t>(new_basis[b])] =
          std::move(p);
    }
  }
  auto c = std::make_shared<const GradedRing>(r->name() + "[" + index_set_str(*r, s) + "]",
                                              std::move(labels), std::move(basis), std::move(idem),
                                              std::move(products));
  corner_cache.emplace(key, std::make_pair(r, c));
  return c;
}

RingPtr corner(const RingElement& e) {
  if (!e.is_idempotent()) throw std::invalid_argument("corner: element is not idempotent");
  const auto& r = *e.ring();
  // Generator sums keep their grading.
  IndexSet s = r.support_indices(e.coords());
  if (!s.empty() && e.coords() == r.idempotent(s)) return corner(e.ring(), s);
  if (e.is_zero()) throw std::invalid_argument("corner: zero idempotent");

  // General idempotent: eAe spanned by e b e, with e first in the basis.
  const std::size_t n = r.dim();
  std::vector<Vector> spanning{e.coords()};
  for (std::size_t b = 0; b < n; ++b)
    spanning.push_back(r.multiply(r.multiply(e.coords(), unit_vector(n, b)), e.coords()));
  std::vector<Vector> chosen;
  for (const auto& v : spanning) {
    auto trial = chosen;
    trial.push_back(v);
    if (rank(Matrix::from_columns(trial, n)) == trial.size()) chosen = std::move(trial);
  }
  Matrix basis_cols = Matrix::from_columns(chosen, n);
  const std::size_t m = chosen.size();
  std::vector<GradedBasisElement> basis;
  for (std::size_t k = 0; k < m; ++k) basis.push_back({k == 0 ? "e" : "c" + std::to_string(k), 0, 0});
  std::vector<SparseVector> products(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto coords = solve(basis_cols, r.multiply(chosen[a], chosen[b]));
      if (!coords) throw std::logic_error("corner: product leaves eAe");
      products[a * m + b] = SparseVector::from_dense(*coords);
    }
  }
  return std::make_shared<const GradedRing>(r.name() + "[e]", std::vector<std::string>{"e"},
                                            std::move(basis), std::vector<std::size_t>{0},
                                            std::move(products));
}

// ---------------------------------------------------------------- builders

RingPtr field_ring() {
  static const RingPtr q = std::make_shared<const GradedRing>(
      "Q", std::vector<std::string>{"1"}, std::vector<GradedBasisElement>{{"1", 0, 0}},
      std::vector<std::size_t>{0},
      std::vector<SparseVector>{SparseVector{{{0, Scalar(1)}}}});
  return q;
}

RingPtr matrix_ring(std::size_t n, std::string name) {
  if (n == 0) throw std::invalid_argument("matrix_ring: size must be positive");
  if (name.empty()) name = "M" + std::to_string(n);
  auto label = [n](std::size_t i, std::size_t j) {
    std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
    return n < 10 ? "E" + a + b : "E" + a + "," + b;
  };
  std::vector<std::string> indices;
  for (std::size_t i = 0; i < n; ++i) indices.push_back(std::to_string(i + 1));
  std::vector<GradedBasisElement> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back({label(i, j), i, j});
  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < n; ++i) idem.push_back(i * n + i);
  const std::size_t d = n * n;
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        products[(i * n + j) * d + (j * n + k)].entries.emplace_back(i * n + k, Scalar(1));
  return std::make_shared<const GradedRing>(std::move(name), std::move(indices), std::move(basis),
                                            std::move(idem), std::move(products));
}

RingPtr path_algebra(const Quiver& q, std::string name, std::optional<std::size_t> max_length) {
  if (q.vertices.empty()) throw std::invalid_argument("path_algebra: quiver without vertices");
  for (const auto& a : q.arrows)
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw std::out_of_range("path_algebra: arrow endpoint out of range");
  if (name.empty()) name = "kQ";

  struct Path {
    std::vector<std::size_t> arrows;
    std::size_t source, target;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back({{}, v, v});
  std::deque<std::size_t> frontier;
  for (std::size_t k = 0; k < paths.size(); ++k) frontier.push_back(k);
  const std::size_t cap = max_length.value_or(q.vertices.size());
  while (!frontier.empty()) {
    std::size_t k = frontier.front();
    frontier.pop_front();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != paths[k].target) continue;
      if (paths[k].arrows.size() + 1 > cap) {
        if (!max_length) throw std::invalid_argument("path_algebra: cyclic quiver needs max_length");
        continue;
      }
      Path p = paths[k];
      p.arrows.push_back(a);
      p.target = q.arrows[a].target;
      paths.push_back(std::move(p));
      frontier.push_back(paths.size() - 1);
    }
  }
  std::map<std::vector<std::size_t>, std::size_t> by_arrows;
  std::vector<GradedBasisElement> basis;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    std::string label;
    if (paths[k].arrows.empty()) {
      label = "e" + q.vertices[paths[k].source];
    } else {
      for (auto a : paths[k].arrows) label += (label.empty() ? "" : ".") + q.arrows[a].label;
    }
    basis.push_back({label, paths[k].source, paths[k].target});
    if (!paths[k].arrows.empty()) by_arrows[paths[k].arrows] = k;
  }
  const std::size_t d = paths.size();
  std::vector<SparseVector> products(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (paths[a].target != paths[b].source) continue;
      std::size_t result;
      if (paths[a].arrows.empty()) {
        result = b;
      } else if (paths[b].arrows.empty()) {
        result = a;
      } else {
        auto joined = paths[a].arrows;
        joined.insert(joined.end(), paths[b].arrows.begin(), paths[b].arrows.end());
        auto it = by_arrows.find(joined);
        if (it == by_arrows.end()) continue;  // truncated away
        result = it->second;
      }
      products[a * d + b].entries.emplace_back(result, Scalar(1));
    }
  }
  std::vector<std::size_t> idem(q.vertices.size());
  for (std::size_t v = 0; v < idem.size(); ++v) idem[v] = v;
  return std::make_shared<const GradedRing>(std::move(name), q.vertices, std::move(basis),
                                            std::move(idem), std::move(products));
}

RingPtr direct_sum(const std::vector<RingPtr>& rings, std::string name) {
  if (rings.empty()) throw std::invalid_argument("direct_sum: no summands");
  std::map<std::string, std::size_t> seen;
  for (const auto& r : rings) ++seen[r->name()];
  std::vector<std::string> labels;
  std::vector<GradedBasisElement> basis;
  std::vector<std::size_t> idem;
  std::vector<std::size_t> index_offset, basis_offset;
  for (std::size_t s = 0; s < rings.size(); ++s) {
    const auto& r = rings[s];
    // Repeated summands are told apart by position.
    std::string prefix = r->name() + (seen[r->name()] > 1 ? std::to_string(s + 1) : "") + ".";
    index_offset.push_back(labels.size());
    basis_offset.push_back(basis.size());
    for (std::size_t i = 0; i < r->index_count(); ++i) {
      labels.push_back(prefix + r->index_label(i));
      idem.push_back(basis_offset.back() + r->idempotent_basis(i));
    }
    for (const auto& b : r->basis())
      basis.push_back({prefix + b.label, b.left + index_offset.back(), b.right + index_offset.back()});
  }
  if (name.empty())
    for (const auto& r : rings) name += (name.empty() ? "" : "+") + r->name();
  const std::size_t d = basis.size();
  std::vector<SparseVector> products(d * d);
  for (std::size_t s = 0; s < rings.size(); ++s) {
    const auto& r = *rings[s];
    for (std::size_t a = 0; a < r.dim(); ++a) {
      for (std::size_t b = 0; b < r.dim(); ++b) {
        SparseVector p;
        for (const auto& [k, x] : r.product(a, b).entries) p.entries.emplace_back(k + basis_offset[s], x);
        products[(a + basis_offset[s]) * d + (b + basis_offset[s])] = std::move(p);
      }
    }
  }
  return std::make_shared<const GradedRing>(std::move(name), std::move(labels), std::move(basis),
                                            std::move(idem), std::move(products));
}

RingPtr rees_ring(const RingPtr& base, std::size_t n, std::string name) {
  if (n == 0) throw std::invalid_argument("rees_ring: size must be positive");
  if (name.empty()) name = "Rees(" + base->name() + "," + std::to_string(n) + ")";
  const std::size_t ri = base->index_count(), rd = base->dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < ri; ++r) labels.push_back(std::to_string(i + 1) + ":" + base->index_label(r));
  auto index_of = [ri](std::size_t pos, std::size_t r) { return pos * ri + r; };
  auto basis_of = [rd, n](std::size_t i, std::size_t j, std::size_t b) { return (i * n + j) * rd + b; };
  std::vector<GradedBasisElement> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t b = 0; b < rd; ++b) {
        const auto& g = base->basis(b);
        basis.push_back({g.label + "@" + std::to_string(i + 1) + std::to_string(j + 1), index_of(i, g.left),
                         index_of(j, g.right)});
      }
  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < ri; ++r) idem.push_back(basis_of(i, i, base->idempotent_basis(r)));
  const std::size_t d = basis.size();
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < rd; ++a)
          for (std::size_t b = 0; b < rd; ++b) {
            SparseVector p;
            for (const auto& [c, x] : base->product(a, b).entries) p.entries.emplace_back(basis_of(i, k, c), x);
            products[basis_of(i, j, a) * d + basis_of(j, k, b)] = std::move(p);
          }
  return std::make_shared<const GradedRing>(std::move(name), std::move(labels), std::move(basis),
                                            std::move(idem), std::move(products));
}

RingPtr with_corrupted_product(const GradedRing& r, std::size_t a, std::size_t b, SparseVector value) {
  std::vector<SparseVector> products;
  products.reserve(r.dim() * r.dim());
  for (std::size_t x = 0; x < r.dim(); ++x)
    for (std::size_t y = 0; y < r.dim(); ++y) products.push_back(r.product(x, y));
  products.at(a * r.dim() + b) = std::move(value);
  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < r.index_count(); ++i) idem.push_back(r.idempotent_basis(i));
  return std::make_shared<const GradedRing>(r.name() + "~corrupt", r.index_labels(), r.basis(),
                                            std::move(idem), std::move(products));
}

// ---------------------------------------------------------------- lazy rings

LazyRing::LazyRing(std::string name, Builder builder, std::size_t max_corner)
    : name_(std::move(name)), builder_(std::move(builder)), max_corner_(max_corner) {}

RingPtr LazyRing::corner(std::size_t n) const {
  if (n == 0) throw std::invalid_argument(name_ + ": empty corner");
  if (n > max_corner_)
    throw std::out_of_range(name_ + ": corner of size " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(max_corner_));
  std::lock_guard lock(mutex_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  RingPtr r = builder_(n);
  cache_.emplace(n, r);
  return r;
}

std::shared_ptr<LazyRing> infinite_matrix_ring(std::size_t max_corner) {
  return std::make_shared<LazyRing>(
      "M_inf", [](std::size_t n) { return matrix_ring(n, "M_inf[" + std::to_string(n) + "]"); },
      max_corner);
}

std::shared_ptr<LazyRing> infinite_path_algebra(std::size_t max_corner) {
  return std::make_shared<LazyRing>(
      "A_inf",
      [](std::size_t n) {
        Quiver q;
        for (std::size_t v = 0; v < n; ++v) q.vertices.push_back(std::to_string(v + 1));
        for (std::size_t v = 0; v + 1 < n; ++v)
          q.arrows.push_back({"a" + std::to_string(v + 1), v, v + 1});
        return path_algebra(q, "A_inf[" + std::to_string(n) + "]");
      },
      max_corner);
}

}  // namespace coring
