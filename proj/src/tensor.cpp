#include "coring/tensor.hpp"

#include <future>
#include <map>
#include <mutex>

namespace coring {

SparseVector TensorSpace::pure_basis(std::size_t x, std::size_t y) const {
  long k = ambient_index(x, y);
  if (k < 0) return {};
  return quotient.project_basis(static_cast<std::size_t>(k));
}

Vector TensorSpace::pure(const Vector& x, const Vector& y) const {
  if (x.size() != left->dim() || y.size() != right->dim()) throw DimensionError("pure: factor length mismatch");
  Vector out(module->dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      pure_basis(i, j).add_to(out, x[i] * y[j]);
    }
  }
  return out;
}

namespace {

TensorPtr build_tensor(const ModulePtr& m, const ModulePtr& n) {
  if (!same_ring(m->right_ring(), n->left_ring()))
    throw RingMismatch("tensor: " + m->name() + " and " + n->name() + " are not over a common ring");
  const auto& A = *m->right_ring();
  auto t = std::make_shared<TensorSpace>();
  t->left = m;
  t->right = n;
  const std::size_t dm = m->dim(), dn = n->dim();
  t->index_.assign(dm * dn, -1);
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dn; ++y)
      if (m->basis(x).right == n->basis(y).left) {
        t->index_[x * dn + y] = static_cast<long>(t->ambient_pairs.size());
        t->ambient_pairs.emplace_back(x, y);
      }

  std::vector<SparseVector> relations;
  for (std::size_t x = 0; x < dm; ++x) {
    for (std::size_t a = 0; a < A.dim(); ++a) {
      if (A.basis(a).left != m->basis(x).right) continue;
      const auto& xa = m->right_act(x, a);
      for (std::size_t y = 0; y < dn; ++y) {
        if (n->basis(y).left != A.basis(a).right) continue;
        std::map<std::size_t, Scalar> rel;
        for (const auto& [x2, c] : xa.entries)
          if (long k = t->index_[x2 * dn + y]; k >= 0) rel[static_cast<std::size_t>(k)] += c;
        for (const auto& [y2, c] : n->left_act(a, y).entries)
          if (long k = t->index_[x * dn + y2]; k >= 0) rel[static_cast<std::size_t>(k)] -= c;
        SparseVector v;
        for (auto& [k, c] : rel)
          if (sgn(c) != 0) v.entries.emplace_back(k, c);
        if (!v.empty()) relations.push_back(std::move(v));
      }
    }
  }
  t->quotient = quotient(t->ambient_pairs.size(), relations);

  const std::size_t d = t->quotient.dim();
  std::vector<ModuleBasisElement> basis;
  for (std::size_t k = 0; k < d; ++k) {
    auto [x, y] = t->representative(k);
    basis.push_back({"[" + m->basis(x).label + "|" + n->basis(y).label + "]", m->basis(x).left, n->basis(y).right});
  }
  const auto& X = *m->left_ring();
  const auto& Y = *n->right_ring();
  std::vector<SparseVector> left(X.dim() * d), right(d * Y.dim());
  for (std::size_t k = 0; k < d; ++k) {
    auto [x, y] = t->representative(k);
    for (std::size_t b = 0; b < X.dim(); ++b) {
      Vector out(d);
      for (const auto& [x2, c] : m->left_act(b, x).entries) t->pure_basis(x2, y).add_to(out, c);
      left[b * d + k] = SparseVector::from_dense(out);
    }
    for (std::size_t c = 0; c < Y.dim(); ++c) {
      Vector out(d);
      for (const auto& [y2, s] : n->right_act(y, c).entries) t->pure_basis(x, y2).add_to(out, s);
      right[k * Y.dim() + c] = SparseVector::from_dense(out);
    }
  }
  t->module = std::make_shared<const Bimodule>(m->name() + "(x)" + n->name(), m->left_ring(), n->right_ring(),
                                               std::move(basis), std::move(left), std::move(right));
  return t;
}

std::mutex tensor_mutex;
std::map<std::pair<const Bimodule*, const Bimodule*>, std::shared_future<TensorPtr>> tensor_cache;
std::map<const Bimodule*, TensorPtr> tensor_by_module;

}  // namespace

TensorPtr tensor(const ModulePtr& m, const ModulePtr& n) {
  auto key = std::make_pair(m.get(), n.get());
  std::promise<TensorPtr> promise;
  std::shared_future<TensorPtr> future;
  bool builder = false;
  {
    std::lock_guard lock(tensor_mutex);
    auto it = tensor_cache.find(key);
    if (it != tensor_cache.end()) {
      future = it->second;
    } else {
      future = promise.get_future().share();
      tensor_cache.emplace(key, future);
      builder = true;
    }
  }
  if (builder) {
    try {
      TensorPtr t = build_tensor(m, n);
      {
        std::lock_guard lock(tensor_mutex);
        tensor_by_module.emplace(t->module.get(), t);
      }
      promise.set_value(std::move(t));
    } catch (...) {
      {
        std::lock_guard lock(tensor_mutex);
        tensor_cache.erase(key);
      }
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

TensorPtr tensor_space_of(const ModulePtr& module) {
  std::lock_guard lock(tensor_mutex);
  auto it = tensor_by_module.find(module.get());
  return it == tensor_by_module.end() ? nullptr : it->second;
}

namespace {

// The map on T determined by its values on basis pairs; evaluated on the
// canonical representatives.
template <class F>
Matrix on_representatives(const TensorSpace& t, std::size_t target_dim, F&& image) {
  Matrix out(target_dim, t.module->dim());
  for (std::size_t k = 0; k < t.module->dim(); ++k) {
    auto [x, y] = t.representative(k);
    out.set_column(k, image(x, y));
  }
  return out;
}

}  // namespace

LinearMap induced_map(const LinearMap& f, const LinearMap& g) {
  auto src = tensor(f.source, g.source);
  auto tgt = tensor(f.target, g.target);
  const std::size_t d = tgt->module->dim();
  auto pair_image = [&](std::size_t x, std::size_t y) {
    Vector out(d);
    for (std::size_t x2 = 0; x2 < f.target->dim(); ++x2) {
      const Scalar& fx = f.matrix(x2, x);
      if (sgn(fx) == 0) continue;
      for (std::size_t y2 = 0; y2 < g.target->dim(); ++y2) {
        const Scalar& gy = g.matrix(y2, y);
        if (sgn(gy) == 0) continue;
        tgt->pure_basis(x2, y2).add_to(out, fx * gy);
      }
    }
    return out;
  };
  if (!is_linear(f, Side::Right) || !is_linear(g, Side::Left)) {
    auto unbalanced = [&](std::size_t x, std::size_t y) {
      return BalancingError("induced map " + f.source->name() + "(x)" + g.source->name() +
                            " is not balanced: relation at [" + f.source->basis(x).label + "|" +
                            g.source->basis(y).label + "] has nonzero image");
    };
    // Grade-mismatched pairs vanish in the source and must vanish in the target.
    for (std::size_t x = 0; x < f.source->dim(); ++x)
      for (std::size_t y = 0; y < g.source->dim(); ++y)
        if (src->ambient_index(x, y) < 0 && !is_zero(pair_image(x, y))) throw unbalanced(x, y);
    for (const auto& rel : src->quotient.relation_basis()) {
      Vector out(d);
      for (const auto& [k, c] : rel.entries) {
        auto [x, y] = src->ambient_pairs[k];
        Vector part = pair_image(x, y);
        for (std::size_t i = 0; i < d; ++i)
          if (sgn(part[i]) != 0) out[i] += c * part[i];
      }
      if (!is_zero(out)) {
        auto [x, y] = src->ambient_pairs[rel.entries.front().first];
        throw unbalanced(x, y);
      }
    }
  }
  return {src->module, tgt->module, on_representatives(*src, d, pair_image)};
}

LinearMap associator(const ModulePtr& m, const ModulePtr& n, const ModulePtr& p) {
  auto mn = tensor(m, n);
  auto np = tensor(n, p);
  auto src = tensor(mn->module, p);
  auto tgt = tensor(m, np->module);
  const std::size_t d = tgt->module->dim();
  auto image = [&](std::size_t u, std::size_t z) {
    auto [x, y] = mn->representative(u);
    Vector out(d);
    for (const auto& [w, c] : np->pure_basis(y, z).entries) tgt->pure_basis(x, w).add_to(out, c);
    return out;
  };
  return {src->module, tgt->module, on_representatives(*src, d, image)};
}

LinearMap associator_inverse(const ModulePtr& m, const ModulePtr& n, const ModulePtr& p) {
  auto mn = tensor(m, n);
  auto np = tensor(n, p);
  auto src = tensor(m, np->module);
  auto tgt = tensor(mn->module, p);
  const std::size_t d = tgt->module->dim();
  auto image = [&](std::size_t x, std::size_t w) {
    auto [y, z] = np->representative(w);
    Vector out(d);
    for (const auto& [u, c] : mn->pure_basis(x, y).entries) tgt->pure_basis(u, z).add_to(out, c);
    return out;
  };
  return {src->module, tgt->module, on_representatives(*src, d, image)};
}

LinearMap left_unitor(const ModulePtr& n) {
  auto t = tensor(regular(n->left_ring()), n);
  auto image = [&](std::size_t a, std::size_t y) { return n->left_act(a, y).to_dense(n->dim()); };
  return {t->module, n, on_representatives(*t, n->dim(), image)};
}

LinearMap left_unitor_inverse(const ModulePtr& n) {
  auto t = tensor(regular(n->left_ring()), n);
  Matrix out(t->module->dim(), n->dim());
  for (std::size_t y = 0; y < n->dim(); ++y)
    out.set_column(y, t->pure_basis(n->left_ring()->idempotent_basis(n->basis(y).left), y).to_dense(t->module->dim()));
  return {n, t->module, std::move(out)};
}

LinearMap right_unitor(const ModulePtr& m) {
  auto t = tensor(m, regular(m->right_ring()));
  auto image = [&](std::size_t x, std::size_t a) { return m->right_act(x, a).to_dense(m->dim()); };
  return {t->module, m, on_representatives(*t, m->dim(), image)};
}

LinearMap right_unitor_inverse(const ModulePtr& m) {
  auto t = tensor(m, regular(m->right_ring()));
  Matrix out(t->module->dim(), m->dim());
  for (std::size_t x = 0; x < m->dim(); ++x)
    out.set_column(x, t->pure_basis(x, m->right_ring()->idempotent_basis(m->basis(x).right)).to_dense(t->module->dim()));
  return {m, t->module, std::move(out)};
}

namespace {

// Positions in A of the basis of e_S A, in order.
std::vector<std::size_t> ideal_positions(const GradedRing& a, const IndexSet& e) {
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (index_contains(e, a.basis(k).left)) pos.push_back(k);
  return pos;
}

// The element e_S of A as a vector of e_S A.
Vector idempotent_in_ideal(const GradedRing& a, const IndexSet& e) {
  auto pos = ideal_positions(a, e);
  Vector v(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k)
    for (auto i : e)
      if (pos[k] == a.idempotent_basis(i)) v[k] = 1;
  return v;
}

}  // namespace

LinearMap gamma(const RingPtr& a, const IndexSet& e, const ModulePtr& x) {
  auto ea = right_ideal(a, e);
  auto t = tensor(ea, x);
  Vector ev = idempotent_in_ideal(*a, e);
  Matrix out(t->module->dim(), x->dim());
  for (std::size_t k = 0; k < x->dim(); ++k) out.set_column(k, t->pure(ev, unit_vector(x->dim(), k)));
  return {x, t->module, std::move(out)};
}

LinearMap tau(const RingPtr& a, const IndexSet& e, const ModulePtr& x) {
  auto ea = right_ideal(a, e);
  auto t = tensor(ea, x);
  auto pos = ideal_positions(*a, e);
  auto image = [&](std::size_t p, std::size_t y) { return x->left_act(pos[p], y).to_dense(x->dim()); };
  return {t->module, x, on_representatives(*t, x->dim(), image)};
}

LinearMap upsilon(const RingPtr& a, const IndexSet& e, const ModulePtr& n) {
  auto en = corner_submodule(n, e);
  auto ea = right_ideal(a, e);
  auto t = tensor(ea, n);
  Vector ev = idempotent_in_ideal(*a, e);
  Matrix out(t->module->dim(), en->dim());
  std::size_t col = 0;
  for (std::size_t k = 0; k < n->dim(); ++k) {
    if (!index_contains(e, n->basis(k).left)) continue;
    out.set_column(col++, t->pure(ev, unit_vector(n->dim(), k)));
  }
  return {en, t->module, std::move(out)};
}

LinearMap theta(const RingPtr& a, const IndexSet& e, const ModulePtr& n) {
  auto en = corner_submodule(n, e);
  auto ea = right_ideal(a, e);
  auto t = tensor(ea, n);
  auto pos = ideal_positions(*a, e);
  std::vector<long> sub(n->dim(), -1);
  std::size_t count = 0;
  for (std::size_t k = 0; k < n->dim(); ++k)
    if (index_contains(e, n->basis(k).left)) sub[k] = static_cast<long>(count++);
  auto image = [&](std::size_t p, std::size_t y) {
    Vector out(en->dim());
    for (const auto& [k, c] : n->left_act(pos[p], y).entries) {
      if (sub[k] < 0) throw std::logic_error("theta: product leaves eN");
      out[static_cast<std::size_t>(sub[k])] += c;
    }
    return out;
  };
  return {t->module, en, on_representatives(*t, en->dim(), image)};
}

}  // namespace coring
