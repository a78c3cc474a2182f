#include "coring/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace coring {

Bimodule::Bimodule(std::string name, RingPtr left_ring, RingPtr right_ring,
                   std::vector<ModuleBasisElement> basis, std::vector<SparseVector> left_action,
                   std::vector<SparseVector> right_action)
    : name_(std::move(name)),
      left_(std::move(left_ring)),
      right_(std::move(right_ring)),
      basis_(std::move(basis)),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (!left_ || !right_) throw std::invalid_argument("module '" + name_ + "' without rings");
  for (const auto& b : basis_)
    if (b.left >= left_->index_count() || b.right >= right_->index_count())
      throw DimensionError("module '" + name_ + "': grade out of range for " + b.label);
  if (left_action_.size() != left_->dim() * basis_.size())
    throw DimensionError("module '" + name_ + "': left action table has wrong size");
  if (right_action_.size() != right_->dim() * basis_.size())
    throw DimensionError("module '" + name_ + "': right action table has wrong size");
  for (const auto* table : {&left_action_, &right_action_})
    for (const auto& v : *table)
      for (const auto& [k, x] : v.entries)
        if (k >= basis_.size()) throw DimensionError("module '" + name_ + "': action index out of range");
}

std::optional<std::size_t> Bimodule::find_basis(const std::string& label) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].label == label) return k;
  return std::nullopt;
}

Vector Bimodule::act_left(const Vector& b, const Vector& m) const {
  if (b.size() != left_->dim() || m.size() != dim()) throw DimensionError("act_left: length mismatch");
  Vector out(dim());
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (sgn(b[x]) == 0) continue;
    for (std::size_t y = 0; y < m.size(); ++y)
      if (sgn(m[y]) != 0) left_act(x, y).add_to(out, b[x] * m[y]);
  }
  return out;
}

Vector Bimodule::act_right(const Vector& m, const Vector& a) const {
  if (a.size() != right_->dim() || m.size() != dim()) throw DimensionError("act_right: length mismatch");
  Vector out(dim());
  for (std::size_t y = 0; y < m.size(); ++y) {
    if (sgn(m[y]) == 0) continue;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (sgn(a[x]) != 0) right_act(y, x).add_to(out, m[y] * a[x]);
  }
  return out;
}

Matrix Bimodule::left_matrix(std::size_t b) const {
  Matrix out(dim(), dim());
  for (std::size_t m = 0; m < dim(); ++m)
    for (const auto& [k, x] : left_act(b, m).entries) out(k, m) = x;
  return out;
}

Matrix Bimodule::right_matrix(std::size_t a) const {
  Matrix out(dim(), dim());
  for (std::size_t m = 0; m < dim(); ++m)
    for (const auto& [k, x] : right_act(m, a).entries) out(k, m) = x;
  return out;
}

bool operator==(const Bimodule& x, const Bimodule& y) {
  return same_ring(x.left_, y.left_) && same_ring(x.right_, y.right_) && x.basis_ == y.basis_ &&
         x.left_action_ == y.left_action_ && x.right_action_ == y.right_action_;
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- verification

namespace {

std::string vec_str(const Bimodule& m, const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[k] != 1) out += to_string(v[k]) + "*";
    out += m.basis(k).label;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Report verify_module(const Bimodule& m, const IndexSet& lc, const IndexSet& rc) {
  Report rep("module.verify", m.name());
  const auto& B = *m.left_ring();
  const auto& A = *m.right_ring();
  const std::size_t n = m.dim();
  auto in = [](const IndexSet& s, std::size_t i) { return index_contains(s, i); };
  std::vector<std::size_t> mods, bs, as;
  for (std::size_t k = 0; k < n; ++k)
    if (in(lc, m.basis(k).left) && in(rc, m.basis(k).right)) mods.push_back(k);
  for (std::size_t k = 0; k < B.dim(); ++k)
    if (in(lc, B.basis(k).left) && in(lc, B.basis(k).right)) bs.push_back(k);
  for (std::size_t k = 0; k < A.dim(); ++k)
    if (in(rc, A.basis(k).left) && in(rc, A.basis(k).right)) as.push_back(k);

  for (auto x : mods) {
    const auto& bx = m.basis(x);
    for (auto j : lc) {
      Vector got = m.left_act(B.idempotent_basis(j), x).to_dense(n);
      Vector want = j == bx.left ? unit_vector(n, x) : zero_vector(n);
      if (got != want) rep.fail("unital (left)", "f_" + B.index_label(j) + " . " + bx.label + " = " + vec_str(m, got));
    }
    for (auto i : rc) {
      Vector got = m.right_act(x, A.idempotent_basis(i)).to_dense(n);
      Vector want = i == bx.right ? unit_vector(n, x) : zero_vector(n);
      if (got != want) rep.fail("unital (right)", bx.label + " . e_" + A.index_label(i) + " = " + vec_str(m, got));
    }
  }
  for (auto x : mods) {
    const auto& bx = m.basis(x);
    for (auto b : bs) {
      for (const auto& [k, c] : m.left_act(b, x).entries) {
        if (B.basis(b).right != bx.left || m.basis(k).left != B.basis(b).left || m.basis(k).right != bx.right) {
          rep.fail("grading (left)", B.basis(b).label + " . " + bx.label);
          break;
        }
      }
    }
    for (auto a : as) {
      for (const auto& [k, c] : m.right_act(x, a).entries) {
        if (A.basis(a).left != bx.right || m.basis(k).right != A.basis(a).right || m.basis(k).left != bx.left) {
          rep.fail("grading (right)", bx.label + " . " + A.basis(a).label);
          break;
        }
      }
    }
  }
  for (auto x : mods) {
    for (auto a : as) {
      if (A.basis(a).left != m.basis(x).right) continue;
      Vector xa = m.right_act(x, a).to_dense(n);
      for (auto a2 : as) {
        if (A.basis(a2).left != A.basis(a).right) continue;
        Vector lhs = m.act_right(xa, unit_vector(A.dim(), a2));
        Vector rhs = m.act_right(unit_vector(n, x), A.product(a, a2).to_dense(A.dim()));
        if (lhs != rhs)
          rep.fail("associativity (right)", "(" + m.basis(x).label + ", " + A.basis(a).label + ", " + A.basis(a2).label + ")");
      }
    }
    for (auto b : bs) {
      if (B.basis(b).right != m.basis(x).left) continue;
      Vector bx = m.left_act(b, x).to_dense(n);
      for (auto b2 : bs) {
        if (B.basis(b2).right != B.basis(b).left) continue;
        Vector lhs = m.act_left(unit_vector(B.dim(), b2), bx);
        Vector rhs = m.act_left(B.product(b2, b).to_dense(B.dim()), unit_vector(n, x));
        if (lhs != rhs)
          rep.fail("associativity (left)", "(" + B.basis(b2).label + ", " + B.basis(b).label + ", " + m.basis(x).label + ")");
      }
      for (auto a : as) {
        if (A.basis(a).left != m.basis(x).right) continue;
        Vector lhs = m.act_right(bx, unit_vector(A.dim(), a));
        Vector rhs = m.act_left(unit_vector(B.dim(), b), m.right_act(x, a).to_dense(n));
        if (lhs != rhs)
          rep.fail("bimodule", "(" + B.basis(b).label + ", " + m.basis(x).label + ", " + A.basis(a).label + ")");
      }
    }
  }
  return rep;
}

Report verify_module(const Bimodule& m) {
  return verify_module(m, m.left_ring()->all_indices(), m.right_ring()->all_indices());
}

// ---------------------------------------------------------------- examples

namespace {

std::mutex module_cache_mutex;
std::map<std::pair<const void*, std::string>, std::pair<std::shared_ptr<const void>, ModulePtr>> module_cache;

template <class Build>
ModulePtr cached(const std::shared_ptr<const void>& owner, const std::string& key, Build build) {
  {
    std::lock_guard lock(module_cache_mutex);
    auto it = module_cache.find({owner.get(), key});
    if (it != module_cache.end()) return it->second.second;
  }
  ModulePtr m = build();
  std::lock_guard lock(module_cache_mutex);
  auto [it, inserted] = module_cache.emplace(std::make_pair(owner.get(), key), std::make_pair(owner, m));
  return it->second.second;
}

std::string set_key(const IndexSet& s) {
  std::string k;
  for (auto i : s) k += std::to_string(i) + ",";
  return k;
}

std::string set_label(const GradedRing& r, const IndexSet& s) {
  std::string out;
  for (auto i : s) out += (out.empty() ? "" : "+") + r.index_label(i);
  return out;
}

std::vector<SparseVector> identity_left_action(std::size_t n) {
  std::vector<SparseVector> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m].entries.emplace_back(m, Scalar(1));
  return out;
}

SparseVector reindex(const SparseVector& v, const std::vector<long>& map) {
  SparseVector out;
  for (const auto& [k, x] : v.entries) {
    if (map[k] < 0) throw std::logic_error("reindex: product leaves the submodule");
    out.entries.emplace_back(static_cast<std::size_t>(map[k]), x);
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void check_index_set(const GradedRing& r, const IndexSet& s) {
  if (s.empty()) throw std::invalid_argument("empty idempotent set");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] >= r.index_count()) throw std::out_of_range("idempotent index out of range");
    if (k > 0 && s[k] <= s[k - 1]) throw std::invalid_argument("idempotent set must be sorted and distinct");
  }
}

}  // namespace

ModulePtr regular(const RingPtr& a) {
  return cached(a, "regular", [&] {
    const std::size_t d = a->dim();
    std::vector<ModuleBasisElement> basis;
    for (const auto& b : a->basis()) basis.push_back({b.label, b.left, b.right});
    std::vector<SparseVector> left(d * d), right(d * d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        left[x * d + y] = a->product(x, y);
        right[y * d + x] = a->product(y, x);
      }
    return std::make_shared<const Bimodule>(a->name(), a, a, std::move(basis), std::move(left), std::move(right));
  });
}

ModulePtr right_ideal(const RingPtr& a, const IndexSet& s) {
  check_index_set(*a, s);
  return cached(a, "right_ideal:" + set_key(s), [&] {
    std::vector<long> map(a->dim(), -1);
    std::vector<ModuleBasisElement> basis;
    for (std::size_t k = 0; k < a->dim(); ++k) {
      if (!index_contains(s, a->basis(k).left)) continue;
      map[k] = static_cast<long>(basis.size());
      basis.push_back({a->basis(k).label, 0, a->basis(k).right});
    }
    std::vector<SparseVector> right(basis.size() * a->dim());
    for (std::size_t k = 0; k < a->dim(); ++k) {
      if (map[k] < 0) continue;
      for (std::size_t x = 0; x < a->dim(); ++x)
        right[static_cast<std::size_t>(map[k]) * a->dim() + x] = reindex(a->product(k, x), map);
    }
    const std::size_t n = basis.size();
    return std::make_shared<const Bimodule>("e(" + set_label(*a, s) + ")" + a->name(), field_ring(), a,
                                            std::move(basis), identity_left_action(n), std::move(right));
  });
}

ModulePtr corner_right_ideal(const RingPtr& a, const IndexSet& s) {
  check_index_set(*a, s);
  return cached(a, "corner_right_ideal:" + set_key(s), [&] {
    RingPtr c = corner(a, s);
    std::vector<long> pos(a->index_count(), -1);
    for (std::size_t k = 0; k < s.size(); ++k) pos[s[k]] = static_cast<long>(k);
    std::vector<long> map(a->dim(), -1);
    std::vector<std::size_t> corner_to_ring;
    std::vector<ModuleBasisElement> basis;
    for (std::size_t k = 0; k < a->dim(); ++k) {
      const auto& b = a->basis(k);
      if (pos[b.left] >= 0 && pos[b.right] >= 0) corner_to_ring.push_back(k);
      if (pos[b.left] < 0) continue;
      map[k] = static_cast<long>(basis.size());
      basis.push_back({b.label, static_cast<std::size_t>(pos[b.left]), b.right});
    }
    const std::size_t n = basis.size();
    std::vector<SparseVector> left(c->dim() * n), right(n * a->dim());
    for (std::size_t cb = 0; cb < c->dim(); ++cb)
      for (std::size_t k = 0; k < a->dim(); ++k)
        if (map[k] >= 0)
          left[cb * n + static_cast<std::size_t>(map[k])] = reindex(a->product(corner_to_ring[cb], k), map);
    for (std::size_t k = 0; k < a->dim(); ++k) {
      if (map[k] < 0) continue;
      for (std::size_t x = 0; x < a->dim(); ++x)
        right[static_cast<std::size_t>(map[k]) * a->dim() + x] = reindex(a->product(k, x), map);
    }
    return std::make_shared<const Bimodule>(c->name() + ":e(" + set_label(*a, s) + ")" + a->name(), c, a, std::move(basis),
                                            std::move(left), std::move(right));
  });
}

ModulePtr left_ideal(const RingPtr& a, const IndexSet& s) {
  check_index_set(*a, s);
  return cached(a, "left_ideal:" + set_key(s), [&] {
    std::vector<long> map(a->dim(), -1);
    std::vector<ModuleBasisElement> basis;
    for (std::size_t k = 0; k < a->dim(); ++k) {
      if (!index_contains(s, a->basis(k).right)) continue;
      map[k] = static_cast<long>(basis.size());
      basis.push_back({a->basis(k).label, a->basis(k).left, 0});
    }
    const std::size_t n = basis.size();
    std::vector<SparseVector> left(a->dim() * n), right = identity_left_action(n);
    for (std::size_t x = 0; x < a->dim(); ++x)
      for (std::size_t k = 0; k < a->dim(); ++k)
        if (map[k] >= 0) left[x * n + static_cast<std::size_t>(map[k])] = reindex(a->product(x, k), map);
    return std::make_shared<const Bimodule>(a->name() + "e(" + set_label(*a, s) + ")", a, field_ring(),
                                            std::move(basis), std::move(left), std::move(right));
  });
}

ModulePtr as_right_module(const ModulePtr& m) {
  if (m->left_ring() == field_ring()) return m;
  return cached(m, "as_right", [&] {
    std::vector<ModuleBasisElement> basis;
    for (const auto& b : m->basis()) basis.push_back({b.label, 0, b.right});
    std::vector<SparseVector> right;
    for (std::size_t x = 0; x < m->dim(); ++x)
      for (std::size_t a = 0; a < m->right_ring()->dim(); ++a) right.push_back(m->right_act(x, a));
    return std::make_shared<const Bimodule>(m->name(), field_ring(), m->right_ring(), std::move(basis),
                                            identity_left_action(m->dim()), std::move(right));
  });
}

ModulePtr corner_submodule(const ModulePtr& m, const IndexSet& s) {
  check_index_set(*m->left_ring(), s);
  return cached(m, "corner_sub:" + set_key(s), [&] {
    std::vector<long> map(m->dim(), -1);
    std::vector<ModuleBasisElement> basis;
    for (std::size_t k = 0; k < m->dim(); ++k) {
      if (!index_contains(s, m->basis(k).left)) continue;
      map[k] = static_cast<long>(basis.size());
      basis.push_back({m->basis(k).label, 0, m->basis(k).right});
    }
    const std::size_t da = m->right_ring()->dim();
    std::vector<SparseVector> right(basis.size() * da);
    for (std::size_t k = 0; k < m->dim(); ++k) {
      if (map[k] < 0) continue;
      for (std::size_t a = 0; a < da; ++a)
        right[static_cast<std::size_t>(map[k]) * da + a] = reindex(m->right_act(k, a), map);
    }
    const std::size_t n = basis.size();
    return std::make_shared<const Bimodule>("e(" + set_label(*m->left_ring(), s) + ")" + m->name(), field_ring(),
                                            m->right_ring(), std::move(basis), identity_left_action(n),
                                            std::move(right));
  });
}

ModulePtr zero_module(const RingPtr& left, const RingPtr& right) {
  return std::make_shared<const Bimodule>("0", left, right, std::vector<ModuleBasisElement>{},
                                          std::vector<SparseVector>{}, std::vector<SparseVector>{});
}

ModulePtr direct_sum(const ModulePtr& x, const ModulePtr& y, std::string name) {
  if (!same_ring(x->left_ring(), y->left_ring()) || !same_ring(x->right_ring(), y->right_ring()))
    throw RingMismatch("direct_sum: summands over different rings");
  if (name.empty()) name = x->name() + "+" + y->name();
  const std::size_t nx = x->dim(), n = x->dim() + y->dim();
  const std::size_t db = x->left_ring()->dim(), da = x->right_ring()->dim();
  std::vector<ModuleBasisElement> basis = x->basis();
  for (const auto& b : y->basis()) basis.push_back(b);
  bool clash = false;
  for (const auto& b : y->basis()) clash = clash || x->find_basis(b.label).has_value();
  if (clash) {
    for (std::size_t k = 0; k < n; ++k)
      basis[k].label = k < nx ? "(" + basis[k].label + ",0)" : "(0," + basis[k].label + ")";
  }
  auto shift = [nx](const SparseVector& v) {
    SparseVector out = v;
    for (auto& e : out.entries) e.first += nx;
    return out;
  };
  std::vector<SparseVector> left(db * n), right(n * da);
  for (std::size_t b = 0; b < db; ++b) {
    for (std::size_t k = 0; k < nx; ++k) left[b * n + k] = x->left_act(b, k);
    for (std::size_t k = 0; k < y->dim(); ++k) left[b * n + nx + k] = shift(y->left_act(b, k));
  }
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t k = 0; k < nx; ++k) right[k * da + a] = x->right_act(k, a);
    for (std::size_t k = 0; k < y->dim(); ++k) right[(nx + k) * da + a] = shift(y->right_act(k, a));
  }
  return std::make_shared<const Bimodule>(std::move(name), x->left_ring(), x->right_ring(), std::move(basis),
                                          std::move(left), std::move(right));
}

namespace {

// Grade of each basis vector under the decomposition by the images of the
// generator idempotents, acting on the chosen side.
std::vector<std::size_t> induced_grades(const Bimodule& m, const RingMorphism& psi, bool right) {
  std::vector<std::size_t> grades(m.dim());
  for (std::size_t x = 0; x < m.dim(); ++x) {
    std::optional<std::size_t> grade;
    Vector ux = unit_vector(m.dim(), x);
    for (std::size_t j = 0; j < psi.source->index_count(); ++j) {
      Vector f = psi.images[psi.source->idempotent_basis(j)];
      Vector moved = right ? m.act_right(ux, f) : m.act_left(f, ux);
      if (moved == ux) {
        if (grade) throw std::invalid_argument("restriction: grades overlap at " + m.basis(x).label);
        grade = j;
      } else if (!is_zero(moved)) {
        throw std::invalid_argument("restriction: basis element " + m.basis(x).label +
                                    " is not homogeneous under " + psi.name);
      }
    }
    if (!grade) throw std::invalid_argument("restriction: " + m.basis(x).label + " is not unital under " + psi.name);
    grades[x] = *grade;
  }
  return grades;
}

}  // namespace

ModulePtr restrict_right(const ModulePtr& m, const RingMorphism& psi) {
  if (!same_ring(psi.target, m->right_ring())) throw RingMismatch("restrict_right: morphism target differs");
  auto grades = induced_grades(*m, psi, true);
  std::vector<ModuleBasisElement> basis = m->basis();
  for (std::size_t x = 0; x < basis.size(); ++x) basis[x].right = grades[x];
  std::vector<SparseVector> left;
  for (std::size_t b = 0; b < m->left_ring()->dim(); ++b)
    for (std::size_t x = 0; x < m->dim(); ++x) left.push_back(m->left_act(b, x));
  std::vector<SparseVector> right;
  for (std::size_t x = 0; x < m->dim(); ++x)
    for (std::size_t b = 0; b < psi.source->dim(); ++b)
      right.push_back(SparseVector::from_dense(m->act_right(unit_vector(m->dim(), x), psi.images[b])));
  return std::make_shared<const Bimodule>(m->name(), m->left_ring(), psi.source, std::move(basis), std::move(left),
                                          std::move(right));
}

ModulePtr restrict_left(const ModulePtr& m, const RingMorphism& psi) {
  if (!same_ring(psi.target, m->left_ring())) throw RingMismatch("restrict_left: morphism target differs");
  auto grades = induced_grades(*m, psi, false);
  std::vector<ModuleBasisElement> basis = m->basis();
  for (std::size_t x = 0; x < basis.size(); ++x) basis[x].left = grades[x];
  std::vector<SparseVector> left;
  for (std::size_t b = 0; b < psi.source->dim(); ++b)
    for (std::size_t x = 0; x < m->dim(); ++x)
      left.push_back(SparseVector::from_dense(m->act_left(psi.images[b], unit_vector(m->dim(), x))));
  std::vector<SparseVector> right;
  for (std::size_t x = 0; x < m->dim(); ++x)
    for (std::size_t a = 0; a < m->right_ring()->dim(); ++a) right.push_back(m->right_act(x, a));
  return std::make_shared<const Bimodule>(m->name(), psi.source, m->right_ring(), std::move(basis), std::move(left),
                                          std::move(right));
}

ModulePtr simple_top(const RingPtr& a, std::size_t i) {
  const std::size_t ei = a->idempotent_basis(i);
  std::vector<SparseVector> right(a->dim());
  for (std::size_t x = 0; x < a->dim(); ++x) {
    for (const auto& [k, c] : a->product(ei, x).entries)
      if (k == ei) right[x].entries.emplace_back(0, c);
  }
  return std::make_shared<const Bimodule>("S" + a->index_label(i) + "(" + a->name() + ")", field_ring(), a,
                                          std::vector<ModuleBasisElement>{{"s" + a->index_label(i), 0, i}},
                                          identity_left_action(1), std::move(right));
}

ModulePtr with_corrupted_right_action(const Bimodule& m, std::size_t basis, std::size_t ring_basis,
                                      SparseVector value) {
  std::vector<SparseVector> left, right;
  for (std::size_t b = 0; b < m.left_ring()->dim(); ++b)
    for (std::size_t x = 0; x < m.dim(); ++x) left.push_back(m.left_act(b, x));
  for (std::size_t x = 0; x < m.dim(); ++x)
    for (std::size_t a = 0; a < m.right_ring()->dim(); ++a) right.push_back(m.right_act(x, a));
  right.at(basis * m.right_ring()->dim() + ring_basis) = std::move(value);
  return std::make_shared<const Bimodule>(m.name() + "~corrupt", m.left_ring(), m.right_ring(), m.basis(),
                                          std::move(left), std::move(right));
}

// ---------------------------------------------------------------- maps

LinearMap make_map(ModulePtr source, ModulePtr target, Matrix matrix) {
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw DimensionError("map " + source->name() + " -> " + target->name() + ": matrix is " +
                         std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) + ", expected " +
                         std::to_string(target->dim()) + "x" + std::to_string(source->dim()));
  return {std::move(source), std::move(target), std::move(matrix)};
}

LinearMap identity_map(const ModulePtr& m) { return {m, m, Matrix::identity(m->dim())}; }

LinearMap zero_map(const ModulePtr& source, const ModulePtr& target) {
  return {source, target, Matrix(target->dim(), source->dim())};
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!same_module(f.target, g.source))
    throw DimensionError("compose: " + f.target->name() + " does not match " + g.source->name());
  return {f.source, g.target, g.matrix * f.matrix};
}

LinearMap scale(const Scalar& s, const LinearMap& f) { return {f.source, f.target, s * f.matrix}; }

LinearMap add(const LinearMap& f, const LinearMap& g) {
  if (!same_module(f.source, g.source) || !same_module(f.target, g.target))
    throw DimensionError("add: maps between different modules");
  return {f.source, f.target, f.matrix + g.matrix};
}

bool same_matrix(const LinearMap& f, const LinearMap& g) { return f.matrix == g.matrix; }

Report check_linearity(const LinearMap& f, Side side) {
  Report rep("linearity", f.source->name() + " -> " + f.target->name());
  const auto& s = *f.source;
  const auto& t = *f.target;
  auto image = [&](const SparseVector& v) {
    Vector out(t.dim());
    for (const auto& [k, x] : v.entries)
      for (std::size_t r = 0; r < t.dim(); ++r)
        if (sgn(f.matrix(r, k)) != 0) out[r] += x * f.matrix(r, k);
    return out;
  };
  if (side != Side::Left) {
    if (!same_ring(s.right_ring(), t.right_ring())) {
      rep.fail("right linearity", "source and target have different right rings");
    } else {
      const std::size_t da = s.right_ring()->dim();
      for (std::size_t x = 0; x < s.dim(); ++x) {
        for (std::size_t a = 0; a < da; ++a) {
          Vector lhs = image(s.right_act(x, a));
          Vector rhs(t.dim());
          for (std::size_t r = 0; r < t.dim(); ++r)
            if (sgn(f.matrix(r, x)) != 0) t.right_act(r, a).add_to(rhs, f.matrix(r, x));
          if (lhs != rhs)
            rep.fail("right linearity", "f(" + s.basis(x).label + " . " + s.right_ring()->basis(a).label + ")");
        }
      }
    }
  }
  if (side != Side::Right) {
    if (!same_ring(s.left_ring(), t.left_ring())) {
      rep.fail("left linearity", "source and target have different left rings");
    } else {
      const std::size_t db = s.left_ring()->dim();
      for (std::size_t x = 0; x < s.dim(); ++x) {
        for (std::size_t b = 0; b < db; ++b) {
          Vector lhs = image(s.left_act(b, x));
          Vector rhs(t.dim());
          for (std::size_t r = 0; r < t.dim(); ++r)
            if (sgn(f.matrix(r, x)) != 0) t.left_act(b, r).add_to(rhs, f.matrix(r, x));
          if (lhs != rhs)
            rep.fail("left linearity", "f(" + s.left_ring()->basis(b).label + " . " + s.basis(x).label + ")");
        }
      }
    }
  }
  return rep;
}

bool is_linear(const LinearMap& f, Side side) { return check_linearity(f, side).passed(); }

std::vector<LinearMap> hom_space(const ModulePtr& m, const ModulePtr& n, Side side) {
  if (side != Side::Left && !same_ring(m->right_ring(), n->right_ring()))
    throw RingMismatch("hom_space: different right rings");
  if (side != Side::Right && !same_ring(m->left_ring(), n->left_ring()))
    throw RingMismatch("hom_space: different left rings");
  // Unknown X(t, x) for grade-compatible pairs.
  std::vector<long> unknown(n->dim() * m->dim(), -1);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t t = 0; t < n->dim(); ++t)
    for (std::size_t x = 0; x < m->dim(); ++x) {
      bool ok = true;
      if (side != Side::Left && n->basis(t).right != m->basis(x).right) ok = false;
      if (side != Side::Right && n->basis(t).left != m->basis(x).left) ok = false;
      if (!ok) continue;
      unknown[t * m->dim() + x] = static_cast<long>(unknowns.size());
      unknowns.emplace_back(t, x);
    }
  std::vector<Vector> rows;
  auto emit = [&](std::map<std::size_t, Scalar>& row) {
    Vector v(unknowns.size());
    bool nonzero = false;
    for (auto& [k, c] : row)
      if (sgn(c) != 0) {
        v[k] = c;
        nonzero = true;
      }
    if (nonzero) rows.push_back(std::move(v));
  };
  auto var = [&](std::size_t t, std::size_t x) { return unknown[t * m->dim() + x]; };
  // f(x.a) - f(x).a = 0, coordinate t.
  if (side != Side::Left) {
    for (std::size_t x = 0; x < m->dim(); ++x)
      for (std::size_t a = 0; a < m->right_ring()->dim(); ++a)
        for (std::size_t t = 0; t < n->dim(); ++t) {
          std::map<std::size_t, Scalar> row;
          for (const auto& [x2, c] : m->right_act(x, a).entries)
            if (auto k = var(t, x2); k >= 0) row[static_cast<std::size_t>(k)] += c;
          for (std::size_t t2 = 0; t2 < n->dim(); ++t2) {
            auto k = var(t2, x);
            if (k < 0) continue;
            for (const auto& [tt, c] : n->right_act(t2, a).entries)
              if (tt == t) row[static_cast<std::size_t>(k)] -= c;
          }
          emit(row);
        }
  }
  if (side != Side::Right) {
    for (std::size_t x = 0; x < m->dim(); ++x)
      for (std::size_t b = 0; b < m->left_ring()->dim(); ++b)
        for (std::size_t t = 0; t < n->dim(); ++t) {
          std::map<std::size_t, Scalar> row;
          for (const auto& [x2, c] : m->left_act(b, x).entries)
            if (auto k = var(t, x2); k >= 0) row[static_cast<std::size_t>(k)] += c;
          for (std::size_t t2 = 0; t2 < n->dim(); ++t2) {
            auto k = var(t2, x);
            if (k < 0) continue;
            for (const auto& [tt, c] : n->left_act(b, t2).entries)
              if (tt == t) row[static_cast<std::size_t>(k)] -= c;
          }
          emit(row);
        }
  }
  std::vector<LinearMap> out;
  for (const auto& v : kernel_basis(Matrix::from_rows(rows, unknowns.size()))) {
    Matrix mat(n->dim(), m->dim());
    for (std::size_t k = 0; k < unknowns.size(); ++k) mat(unknowns[k].first, unknowns[k].second) = v[k];
    out.push_back({m, n, std::move(mat)});
  }
  return out;
}

// ---------------------------------------------------------------- duals

Matrix RightDual::functional(const Vector& chi) const {
  const std::size_t da = sigma->right_ring()->dim();
  Matrix out(da, sigma->dim());
  for (std::size_t k = 0; k < chi.size(); ++k)
    if (sgn(chi[k]) != 0) out = out + chi[k] * functionals[k];
  return out;
}

Vector RightDual::evaluate(const Vector& chi, const Vector& x) const {
  Vector out(sigma->right_ring()->dim());
  for (std::size_t k = 0; k < chi.size(); ++k) {
    if (sgn(chi[k]) == 0) continue;
    Vector part = functionals[k] * x;
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += chi[k] * part[a];
  }
  return out;
}

std::optional<Vector> RightDual::coordinates(const Matrix& f) const {
  Vector coords(functionals.size());
  for (const auto& comp : components)
    for (std::size_t k = 0; k < comp.basis.size(); ++k) {
      auto [a, m] = comp.unknowns[comp.free[k]];
      coords[comp.basis[k]] = f(a, m);
    }
  if (functional(coords) != f) return std::nullopt;
  return coords;
}

namespace {

std::mutex dual_mutex;
std::map<const Bimodule*, std::pair<ModulePtr, std::shared_ptr<const RightDual>>> dual_cache;

std::shared_ptr<const RightDual> build_right_dual(const ModulePtr& sigma) {
  const auto& A = sigma->right_ring();
  const auto& B = sigma->left_ring();
  const std::size_t da = A->dim(), ds = sigma->dim();
  auto dual = std::make_shared<RightDual>();
  dual->sigma = sigma;
  std::vector<ModuleBasisElement> basis;

  for (std::size_t i = 0; i < A->index_count(); ++i) {
    for (std::size_t j = 0; j < B->index_count(); ++j) {
      RightDual::Component comp;
      std::vector<long> var(da * ds, -1);
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t m = 0; m < ds; ++m)
          if (A->basis(a).left == i && sigma->basis(m).left == j && A->basis(a).right == sigma->basis(m).right) {
            var[a * ds + m] = static_cast<long>(comp.unknowns.size());
            comp.unknowns.emplace_back(a, m);
          }
      if (comp.unknowns.empty()) continue;
      // chi(m.a') - chi(m) a' = 0, coordinate c of A.
      std::vector<Vector> rows;
      for (std::size_t m = 0; m < ds; ++m) {
        if (sigma->basis(m).left != j) continue;
        for (std::size_t a2 = 0; a2 < da; ++a2)
          for (std::size_t c = 0; c < da; ++c) {
            Vector row(comp.unknowns.size());
            bool nonzero = false;
            for (const auto& [m2, x] : sigma->right_act(m, a2).entries)
              if (auto k = var[c * ds + m2]; k >= 0) {
                row[static_cast<std::size_t>(k)] += x;
                nonzero = true;
              }
            for (std::size_t a = 0; a < da; ++a) {
              auto k = var[a * ds + m];
              if (k < 0) continue;
              for (const auto& [cc, x] : A->product(a, a2).entries)
                if (cc == c) {
                  row[static_cast<std::size_t>(k)] -= x;
                  nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
          }
      }
      Matrix eqs = Matrix::from_rows(rows, comp.unknowns.size());
      auto pivots = rref(eqs).pivots;
      std::vector<bool> is_pivot(comp.unknowns.size(), false);
      for (auto p : pivots) is_pivot[p] = true;
      for (std::size_t u = 0; u < comp.unknowns.size(); ++u)
        if (!is_pivot[u]) comp.free.push_back(u);
      auto kernel = kernel_basis(eqs);
      for (std::size_t k = 0; k < kernel.size(); ++k) {
        Matrix f(da, ds);
        for (std::size_t u = 0; u < comp.unknowns.size(); ++u)
          f(comp.unknowns[u].first, comp.unknowns[u].second) = kernel[k][u];
        comp.basis.push_back(basis.size());
        std::string label = "d" + A->index_label(i) + "," + B->index_label(j);
        if (kernel.size() > 1) label += "." + std::to_string(k + 1);
        basis.push_back({label, i, j});
        dual->functionals.push_back(std::move(f));
      }
      dual->components.push_back(std::move(comp));
    }
  }

  const std::size_t n = basis.size();
  const std::size_t db = B->dim();
  std::vector<SparseVector> left(da * n), right(n * db);
  auto coords_of = [&](const Matrix& f) {
    auto c = dual->coordinates(f);
    if (!c) throw std::logic_error("right dual is not closed under the actions");
    return SparseVector::from_dense(*c);
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix& f = dual->functionals[k];
    for (std::size_t a = 0; a < da; ++a) {
      Matrix g = regular(A)->left_matrix(a) * f;
      left[a * n + k] = coords_of(g);
    }
    for (std::size_t b = 0; b < db; ++b) {
      Matrix g = f * sigma->left_matrix(b);
      right[k * db + b] = coords_of(g);
    }
  }
  dual->module = std::make_shared<const Bimodule>(sigma->name() + "^+", A, B, std::move(basis), std::move(left),
                                                  std::move(right));
  return dual;
}

// Incremental row echelon form for span membership tests.
class Span {
 public:
  explicit Span(std::size_t n) : n_(n) {}
  /// Adds v; returns true if it enlarged the span.
  bool insert(Vector v) {
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && sgn(v[p]) == 0) ++p;
    if (p == n_) return false;
    Scalar inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.emplace_back(p, std::move(v));
    return true;
  }
  bool contains(Vector v) const {
    reduce(v);
    return is_zero(v);
  }

 private:
  void reduce(Vector& v) const {
    for (const auto& [p, row] : rows_) {
      if (sgn(v[p]) == 0) continue;
      Scalar c = v[p];
      for (std::size_t k = 0; k < n_; ++k)
        if (sgn(row[k]) != 0) v[k] -= c * row[k];
    }
  }
  std::size_t n_;
  std::vector<std::pair<std::size_t, Vector>> rows_;
};

}  // namespace

std::shared_ptr<const RightDual> right_dual(const ModulePtr& sigma) {
  {
    std::lock_guard lock(dual_mutex);
    auto it = dual_cache.find(sigma.get());
    if (it != dual_cache.end()) return it->second.second;
  }
  auto d = build_right_dual(sigma);
  std::lock_guard lock(dual_mutex);
  auto [it, inserted] = dual_cache.emplace(sigma.get(), std::make_pair(sigma, d));
  return it->second.second;
}

std::optional<DualBasis> dual_basis(const ModulePtr& sigma, const IndexSet& h_in, GeneratorStrategy strategy) {
  IndexSet h = make_index_set(h_in);
  const auto& A = *sigma->right_ring();
  const std::size_t ds = sigma->dim();
  auto dual = right_dual(sigma);
  std::vector<std::size_t> h_basis;
  for (std::size_t m = 0; m < ds; ++m)
    if (index_contains(h, sigma->basis(m).left)) h_basis.push_back(m);

  std::vector<std::size_t> gens;
  if (strategy == GeneratorStrategy::FullBasis) {
    gens = h_basis;
  } else {
    Span span(ds);
    for (auto m : h_basis) {
      if (span.contains(unit_vector(ds, m))) continue;
      gens.push_back(m);
      for (std::size_t a = 0; a < A.dim(); ++a) span.insert(sigma->right_act(m, a).to_dense(ds));
    }
  }

  // Unknown c(g, k): coefficient of dual basis vector k in v_g.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t k = 0; k < dual->module->dim(); ++k) {
      const auto& bk = dual->module->basis(k);
      if (index_contains(h, bk.right) && bk.left == sigma->basis(gens[g]).right) unknowns.emplace_back(g, k);
    }
  std::vector<Vector> rows;
  Vector rhs;
  for (auto u : h_basis) {
    Vector ux = unit_vector(ds, u);
    std::vector<Vector> contrib;
    for (const auto& [g, k] : unknowns) {
      Vector val = dual->functionals[k] * ux;
      contrib.push_back(sigma->act_right(unit_vector(ds, gens[g]), val));
    }
    for (std::size_t t = 0; t < ds; ++t) {
      Vector row(unknowns.size());
      for (std::size_t q = 0; q < unknowns.size(); ++q) row[q] = contrib[q][t];
      rows.push_back(std::move(row));
      rhs.push_back(t == u ? 1 : 0);
    }
  }
  auto sol = solve(Matrix::from_rows(rows, unknowns.size()), rhs);
  if (!sol) return std::nullopt;
  DualBasis db;
  db.h = h;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    db.u.push_back(unit_vector(ds, gens[g]));
    db.v.push_back(zero_vector(dual->module->dim()));
  }
  for (std::size_t q = 0; q < unknowns.size(); ++q) db.v[unknowns[q].first][unknowns[q].second] = (*sol)[q];
  return db;
}

Report check_dual_basis(const ModulePtr& sigma, const DualBasis& db) {
  Report rep("dual_basis", sigma->name());
  auto dual = right_dual(sigma);
  const std::size_t ds = sigma->dim();
  for (std::size_t m = 0; m < ds; ++m) {
    if (!index_contains(db.h, sigma->basis(m).left)) continue;
    Vector ux = unit_vector(ds, m);
    Vector sum(ds);
    for (std::size_t i = 0; i < db.size(); ++i) {
      Vector part = sigma->act_right(db.u[i], dual->evaluate(db.v[i], ux));
      for (std::size_t t = 0; t < ds; ++t) sum[t] += part[t];
    }
    if (sum != ux) rep.fail("dual basis law", "u = " + sigma->basis(m).label);
  }
  return rep;
}

ProjectivityCertificate is_fg_projective(const ModulePtr& sigma, const IndexSet& h) {
  ProjectivityCertificate cert;
  cert.basis = dual_basis(sigma, h);
  cert.projective = cert.basis.has_value();
  return cert;
}

DualBasisFamily dual_basis_family(const ModulePtr& sigma, GeneratorStrategy strategy) {
  DualBasisFamily family;
  for (std::size_t j = 0; j < sigma->left_ring()->index_count(); ++j) {
    auto db = dual_basis(sigma, {j}, strategy);
    if (!db)
      throw MissingDualBasis("no finite dual basis for f_" + sigma->left_ring()->index_label(j) + " " +
                             sigma->name());
    family.push_back(std::move(*db));
  }
  return family;
}

DualBasisFamily corrupt_dual_basis(DualBasisFamily family, std::size_t j, const Scalar& factor) {
  auto& db = family.at(j);
  if (db.v.empty()) throw std::invalid_argument("corrupt_dual_basis: empty component");
  for (auto& x : db.v[0]) x *= factor;
  return family;
}

}  // namespace coring
