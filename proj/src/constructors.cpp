#include "coring/constructors.hpp"

#include <map>
#include <mutex>

namespace coring {

namespace {

std::mutex trivial_mutex;
std::map<const GradedRing*, std::pair<RingPtr, CoringPtr>> trivial_cache;

IndexSet grades_of(std::initializer_list<std::size_t> idx) { return make_index_set(std::vector<std::size_t>(idx)); }

std::string set_label(const GradedRing& r, const IndexSet& s) {
  std::string out;
  for (auto i : s) out += (out.empty() ? "" : "+") + r.index_label(i);
  return out;
}

}  // namespace

CoringPtr trivial_coring(const RingPtr& a) {
  std::lock_guard lock(trivial_mutex);
  auto it = trivial_cache.find(a.get());
  if (it != trivial_cache.end()) return it->second.second;
  auto reg = regular(a);
  auto c = make_coring("Trivial(" + a->name() + ")", reg, left_unitor_inverse(reg).matrix,
                       Matrix::identity(reg->dim()));
  trivial_cache.emplace(a.get(), std::make_pair(a, c));
  return c;
}

CoringMorphism counit_morphism(const CoringPtr& c) {
  return {"eps_" + c->name, c, trivial_coring(c->ring), c->epsilon};
}

// ---------------------------------------------------------------- Sweedler

IndexSet sweedler_unity(const RingMorphism& psi, const IndexSet& s) {
  const auto& A = *psi.target;
  const auto& B = *psi.source;
  Vector es = A.idempotent(s);
  std::vector<std::size_t> f;
  for (std::size_t j = 0; j < B.index_count(); ++j) {
    const Vector& pf = psi.images[B.idempotent_basis(j)];
    if (!is_zero(A.multiply(pf, es)) || !is_zero(A.multiply(es, pf))) f.push_back(j);
  }
  IndexSet out = make_index_set(std::move(f));
  Vector e = psi.apply(B.idempotent(out));
  for (auto i : s) {
    Vector ei = A.idempotent({i});
    if (A.multiply(e, ei) != ei || A.multiply(ei, e) != ei)
      throw std::invalid_argument("sweedler: no unity in psi(E(B)) for e_" + A.index_label(i));
  }
  return out;
}

Vector sweedler_delta(const Coring& sw, const RingMorphism& psi, std::size_t a, std::size_t a2, const IndexSet& f) {
  auto t = tensor_space_of(sw.carrier);
  auto tt = tensor_space_of(sw.delta.target);
  if (!t || !tt) throw std::invalid_argument("sweedler_delta: not a Sweedler coring");
  Vector e = psi.apply(psi.source->idempotent(f));
  const std::size_t n = psi.target->dim();
  return tt->pure(t->pure(unit_vector(n, a), e), t->pure(e, unit_vector(n, a2)));
}

CoringPtr sweedler_coring(const RingMorphism& psi) {
  Report rep = check_morphism(psi);
  if (!rep.passed()) throw InvalidMorphism("sweedler: " + psi.name + " is not a morphism of rings with local units", rep);
  const auto& A = psi.target;
  auto ab = restrict_right(regular(A), psi);
  auto ba = restrict_left(regular(A), psi);
  auto t = tensor(ab, ba);
  const auto& c = t->module;
  auto tt = tensor(c, c);
  Matrix delta(tt->module->dim(), c->dim()), eps(A->dim(), c->dim());
  for (std::size_t k = 0; k < c->dim(); ++k) {
    auto [a, a2] = t->representative(k);
    const auto& ba1 = A->basis(a);
    const auto& ba2 = A->basis(a2);
    IndexSet f = sweedler_unity(psi, grades_of({ba1.left, ba1.right, ba2.left, ba2.right}));
    Vector e = psi.apply(psi.source->idempotent(f));
    delta.set_column(k, tt->pure(t->pure(unit_vector(A->dim(), a), e), t->pure(e, unit_vector(A->dim(), a2))));
    eps.set_column(k, A->product(a, a2).to_dense(A->dim()));
  }
  return make_coring("Sweedler(" + psi.name + ")", c, std::move(delta), std::move(eps));
}

// ---------------------------------------------------------------- split

Vector split_delta(const Coring& split, std::size_t k, const IndexSet& s) {
  const auto& A = *split.ring;
  const auto& c = split.carrier;
  auto tt = tensor_space_of(split.delta.target);
  if (!tt) throw std::invalid_argument("split_delta: not a split coring");
  Vector e(c->dim());
  for (auto i : s) e[A.idempotent_basis(i)] = 1;
  Vector x = unit_vector(c->dim(), k);
  Vector out = tt->pure(x, e);
  if (k >= A.dim()) add_into(out, tt->pure(e, x));
  return out;
}

CoringPtr split_coring(const RingPtr& a, const ModulePtr& m) {
  if (!same_ring(m->left_ring(), a) || !same_ring(m->right_ring(), a))
    throw RingMismatch("split: " + m->name() + " is not an " + a->name() + "-bimodule");
  auto c = direct_sum(regular(a), m, a->name() + "+" + m->name());
  auto tt = tensor(c, c);
  Matrix eps(a->dim(), c->dim());
  for (std::size_t k = 0; k < a->dim(); ++k) eps(k, k) = 1;
  auto coring = std::make_shared<Coring>();
  coring->name = "Split(" + a->name() + "," + m->name() + ")";
  coring->ring = a;
  coring->carrier = c;
  coring->delta = zero_map(c, tt->module);
  coring->epsilon = make_map(c, regular(a), std::move(eps));
  for (std::size_t k = 0; k < c->dim(); ++k) {
    const auto& b = c->basis(k);
    coring->delta.matrix.set_column(k, split_delta(*coring, k, grades_of({b.left, b.right})));
  }
  return coring;
}

// ---------------------------------------------------------------- comatrix

CoringPtr comatrix_coring(const ModulePtr& sigma) { return comatrix_coring(sigma, dual_basis_family(sigma)); }

CoringPtr comatrix_coring(const ModulePtr& sigma, const DualBasisFamily& family) {
  auto dual = right_dual(sigma);
  auto t = tensor(dual->module, sigma);
  const auto& c = t->module;
  auto tt = tensor(c, c);
  const std::size_t da = sigma->right_ring()->dim(), ds = sigma->dim(), dd = dual->module->dim();
  Matrix delta(tt->module->dim(), c->dim()), eps(da, c->dim());
  for (std::size_t k = 0; k < c->dim(); ++k) {
    auto [chi, x] = t->representative(k);
    const auto& db = family.at(sigma->basis(x).left);
    Vector out(tt->module->dim());
    for (std::size_t i = 0; i < db.size(); ++i)
      add_into(out, tt->pure(t->pure(unit_vector(dd, chi), db.u[i]), t->pure(db.v[i], unit_vector(ds, x))));
    delta.set_column(k, out);
    eps.set_column(k, dual->functionals[chi].column(x));
  }
  return make_coring("Comatrix(" + sigma->name() + ")", c, std::move(delta), std::move(eps));
}

Comodule comatrix_comodule(const ModulePtr& sigma, const CoringPtr& comatrix) {
  auto family = dual_basis_family(sigma);
  auto t = tensor_space_of(comatrix->carrier);
  if (!t || !same_module(t->right, sigma)) throw std::invalid_argument("comatrix_comodule: carrier mismatch");
  auto sc = tensor(sigma, comatrix->carrier);
  const std::size_t ds = sigma->dim();
  Matrix rho(sc->module->dim(), ds);
  for (std::size_t x = 0; x < ds; ++x) {
    const auto& db = family.at(sigma->basis(x).left);
    Vector out(sc->module->dim());
    for (std::size_t i = 0; i < db.size(); ++i) add_into(out, sc->pure(db.u[i], t->pure(db.v[i], unit_vector(ds, x))));
    rho.set_column(x, out);
  }
  return {sigma->name(), comatrix, sigma, make_map(sigma, sc->module, std::move(rho))};
}

// ---------------------------------------------------------------- base extension

CoringPtr base_extension(const ModulePtr& sigma, const CoringPtr& d) {
  return base_extension(sigma, d, dual_basis_family(sigma));
}

CoringPtr base_extension(const ModulePtr& sigma, const CoringPtr& d, const DualBasisFamily& family) {
  if (!same_ring(d->ring, sigma->left_ring()))
    throw RingMismatch("base_extension: " + d->name + " is not over the left ring of " + sigma->name());
  auto dual = right_dual(sigma);
  auto sd = tensor(dual->module, d->carrier);
  auto t = tensor(sd->module, sigma);
  const auto& c = t->module;
  auto tt = tensor(c, c);
  auto dd = tensor(d->carrier, d->carrier);
  const std::size_t ds = sigma->dim(), n_dual = dual->module->dim(), n_d = d->carrier->dim();
  Matrix delta(tt->module->dim(), c->dim()), eps(sigma->right_ring()->dim(), c->dim());
  for (std::size_t k = 0; k < c->dim(); ++k) {
    auto [w, x] = t->representative(k);
    auto [phi, dvec] = sd->representative(w);
    Vector uphi = unit_vector(n_dual, phi);
    Vector ux = unit_vector(ds, x);
    Vector out(tt->module->dim());
    Vector delta_d = d->delta.matrix.column(dvec);
    for (std::size_t q = 0; q < delta_d.size(); ++q) {
      if (sgn(delta_d[q]) == 0) continue;
      auto [d1, d2] = dd->representative(q);
      const auto& db = family.at(d->carrier->basis(d1).right);
      Vector left_head = sd->pure(uphi, unit_vector(n_d, d1));
      for (std::size_t i = 0; i < db.size(); ++i) {
        Vector lhs = t->pure(left_head, db.u[i]);
        Vector rhs = t->pure(sd->pure(db.v[i], unit_vector(n_d, d2)), ux);
        add_into(out, tt->pure(lhs, rhs), delta_d[q]);
      }
    }
    delta.set_column(k, out);
    Vector bu = sigma->act_left(d->epsilon.matrix.column(dvec), ux);
    eps.set_column(k, dual->evaluate(uphi, bu));
  }
  return make_coring("BaseExt(" + sigma->name() + "," + d->name + ")", c, std::move(delta), std::move(eps));
}

CoringMorphism base_extension_to_comatrix(const CoringPtr& ext, const CoringPtr& comatrix) {
  auto t = tensor_space_of(comatrix->carrier);
  if (!t) throw std::invalid_argument("base_extension_to_comatrix: not a comatrix coring");
  LinearMap map = tensor_right(right_unitor(t->left), t->right);
  if (!same_module(map.source, ext->carrier))
    throw std::invalid_argument("base_extension_to_comatrix: " + ext->name + " is not over the trivial coring");
  return {"iso(" + ext->name + "," + comatrix->name + ")", ext, comatrix, map};
}

// ---------------------------------------------------------------- Rees

ReesResult rees_coring(const RingPtr& a, const IndexSet& e) {
  auto sigma = corner_right_ideal(a, e);
  auto c = comatrix_coring(sigma);
  auto rees = std::make_shared<Coring>(*c);
  rees->name = "Rees(" + a->name() + "," + set_label(*a, e) + ")";
  ReesResult out;
  out.coring = rees;
  out.counit.rank = rank(rees->epsilon.matrix);
  out.counit.carrier_dim = rees->carrier->dim();
  out.counit.ring_dim = a->dim();
  out.counit.bijective = out.counit.rank == out.counit.carrier_dim && out.counit.rank == out.counit.ring_dim;
  return out;
}

// ---------------------------------------------------------------- comonads

ComonadResult comonad_to_coring(const std::string& name, const ModulePtr& n, const LinearMap& delta,
                                const LinearMap& xi) {
  if (!same_module(delta.source, n) || !same_module(delta.target, tensor_module(n, n)))
    throw DimensionError("comonad_to_coring: delta is not a map N -> N(x)N");
  if (!same_module(xi.source, n) || !same_module(xi.target, regular(n->right_ring())))
    throw DimensionError("comonad_to_coring: xi is not a map N -> A");
  LinearMap lam = left_unitor(n);
  LinearMap lam_inv = left_unitor_inverse(n);
  // delta_A on F(A) = A (x) N, valued in FF(A) = (A (x) N) (x) N.
  LinearMap delta_a = compose(tensor_right(lam_inv, n), compose(delta, lam));
  LinearMap big_delta = compose(tensor_right(lam, n), compose(delta_a, lam_inv));
  LinearMap eps = compose(xi, compose(lam, lam_inv));
  auto c = make_coring(name, n, big_delta.matrix, eps.matrix);
  return {c, check_coring(*c)};
}

// ---------------------------------------------------------------- faults

CoringPtr with_swapped_legs(const Coring& c) {
  auto tt = tensor(c.carrier, c.carrier);
  const std::size_t d = tt->module->dim();
  Matrix flip(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    auto [x, y] = tt->representative(k);
    flip.set_column(k, tt->pure_basis(y, x).to_dense(d));
  }
  return make_coring(c.name + "~swapped", c.carrier, flip * c.delta.matrix, c.epsilon.matrix);
}

}  // namespace coring
