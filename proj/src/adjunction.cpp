#include "coring/adjunction.hpp"

#include "coring/constructors.hpp"

#include <stdexcept>

namespace coring {

namespace {

template <class F>
void guarded(Report& rep, const std::string& law, F&& body) {
  try {
    body();
  } catch (const BalancingError& e) {
    rep.fail(law, std::string("not well defined: ") + e.what());
  } catch (const DimensionError& e) {
    rep.fail(law, std::string("shape: ") + e.what());
  } catch (const MissingDualBasis& e) {
    rep.fail(law, std::string("missing dual basis: ") + e.what());
  }
}

void require_right_over(const ModulePtr& y, const RingPtr& r, const char* where) {
  if (!same_ring(y->right_ring(), r))
    throw RingMismatch(std::string(where) + ": " + y->name() + " is not a right " + r->name() + "-module");
}

LinearMap eta_with(const ModulePtr& sigma, const ModulePtr& y, const auto& basis_for) {
  require_right_over(y, sigma->left_ring(), "unit_eta");
  auto dual = right_dual(sigma);
  auto ys = tensor(y, sigma);
  auto t = tensor(ys->module, dual->module);
  Matrix m(t->module->dim(), y->dim());
  for (std::size_t k = 0; k < y->dim(); ++k) {
    const DualBasis& db = basis_for(y->basis(k).right);
    Vector ey = unit_vector(y->dim(), k);
    Vector out(t->module->dim());
    for (std::size_t i = 0; i < db.size(); ++i) add_into(out, t->pure(ys->pure(ey, db.u[i]), db.v[i]));
    m.set_column(k, out);
  }
  return make_map(y, t->module, std::move(m));
}

Matrix identity_of(const ModulePtr& m) { return Matrix::identity(m->dim()); }

}  // namespace

LinearMap unit_eta(const ModulePtr& sigma, const ModulePtr& y, const DualBasisFamily& family) {
  return eta_with(sigma, y, [&](std::size_t j) -> const DualBasis& { return family.at(j); });
}

LinearMap unit_eta(const ModulePtr& sigma, const ModulePtr& y) {
  return unit_eta(sigma, y, dual_basis_family(sigma));
}

LinearMap unit_eta(const ModulePtr& sigma, const ModulePtr& y, const DualBasis& unity) {
  return eta_with(sigma, y, [&](std::size_t j) -> const DualBasis& {
    if (!index_contains(unity.h, j))
      throw std::invalid_argument("unit_eta: unity does not cover grade " + sigma->left_ring()->index_label(j));
    return unity;
  });
}

LinearMap counit_zeta(const ModulePtr& sigma, const ModulePtr& x) {
  require_right_over(x, sigma->right_ring(), "counit_zeta");
  auto dual = right_dual(sigma);
  auto xd = tensor(x, dual->module);
  auto t = tensor(xd->module, sigma);
  Matrix m(x->dim(), t->module->dim());
  for (std::size_t k = 0; k < t->module->dim(); ++k) {
    auto [w, u] = t->representative(k);
    auto [xb, phi] = xd->representative(w);
    Vector a = dual->evaluate(unit_vector(dual->module->dim(), phi), unit_vector(sigma->dim(), u));
    m.set_column(k, x->act_right(unit_vector(x->dim(), xb), a));
  }
  return make_map(t->module, x, std::move(m));
}

std::vector<ModulePtr> test_modules(const RingPtr& r) {
  std::vector<ModulePtr> out;
  for (std::size_t i = 0; i < r->index_count(); ++i) out.push_back(right_ideal(r, {i}));
  out.push_back(regular(r));
  return out;
}

Report check_triangle_identities(const ModulePtr& sigma) {
  try {
    return check_triangle_identities(sigma, dual_basis_family(sigma));
  } catch (const MissingDualBasis& e) {
    Report rep("adjunction.triangles", sigma->name());
    rep.fail("dual basis", e.what());
    return rep;
  }
}

Report check_triangle_identities(const ModulePtr& sigma, const DualBasisFamily& family) {
  Report rep("adjunction.triangles", sigma->name());
  auto dual = right_dual(sigma);
  for (const auto& x : test_modules(sigma->right_ring())) {
    std::string law = "zeta G after G eta on " + x->name();
    guarded(rep, law, [&] {
      auto gx = tensor_module(x, dual->module);
      LinearMap lhs = compose(tensor_right(counit_zeta(sigma, x), dual->module), unit_eta(sigma, gx, family));
      compare_columns(rep, law, lhs.matrix, identity_of(gx), *gx);
    });
  }
  for (const auto& y : test_modules(sigma->left_ring())) {
    std::string law = "zeta F after F eta on " + y->name();
    guarded(rep, law, [&] {
      auto fy = tensor_module(y, sigma);
      LinearMap lhs = compose(counit_zeta(sigma, fy), tensor_right(unit_eta(sigma, y, family), sigma));
      compare_columns(rep, law, lhs.matrix, identity_of(fy), *fy);
    });
  }
  return rep;
}

Report check_eta_independence(const ModulePtr& sigma) {
  Report rep("adjunction.eta_unity", sigma->name());
  guarded(rep, "unity", [&] {
    const auto& b = sigma->left_ring();
    auto family = dual_basis_family(sigma);
    auto full = dual_basis(sigma, b->all_indices());
    auto wide = dual_basis_family(sigma, GeneratorStrategy::FullBasis);
    if (!full) {
      rep.fail("unity", "no dual basis for the full unity");
      return;
    }
    for (const auto& y : test_modules(b)) {
      LinearMap small = unit_eta(sigma, y, family);
      compare_columns(rep, "full unity on " + y->name(), small.matrix, unit_eta(sigma, y, *full).matrix, *y);
      compare_columns(rep, "full generators on " + y->name(), small.matrix, unit_eta(sigma, y, wide).matrix, *y);
    }
  });
  return rep;
}

Report check_eta_naturality(const ModulePtr& sigma, const LinearMap& f) {
  Report rep("adjunction.eta_naturality", sigma->name());
  guarded(rep, "naturality", [&] {
    auto dual = right_dual(sigma);
    LinearMap lhs = compose(unit_eta(sigma, f.target), f);
    LinearMap rhs = compose(tensor_right(tensor_right(f, sigma), dual->module), unit_eta(sigma, f.source));
    compare_columns(rep, "naturality", lhs.matrix, rhs.matrix, *f.source);
  });
  return rep;
}

Report check_zeta_naturality(const ModulePtr& sigma, const LinearMap& g) {
  Report rep("adjunction.zeta_naturality", sigma->name());
  guarded(rep, "naturality", [&] {
    auto dual = right_dual(sigma);
    LinearMap head = tensor_right(tensor_right(g, dual->module), sigma);
    LinearMap lhs = compose(g, counit_zeta(sigma, g.source));
    LinearMap rhs = compose(counit_zeta(sigma, g.target), head);
    compare_columns(rep, "naturality", lhs.matrix, rhs.matrix, *head.source);
  });
  return rep;
}

LinearMap dual_tensor_iso(const ModulePtr& w, const ModulePtr& sigma) {
  if (!same_ring(w->right_ring(), sigma->left_ring()))
    throw RingMismatch("dual_tensor_iso: " + w->name() + " and " + sigma->name() + " do not meet");
  auto ws = tensor(w, sigma);
  auto wsd = right_dual(ws->module);
  auto sd = right_dual(sigma);
  auto wd = right_dual(w);
  auto t = tensor(sd->module, wd->module);
  auto family = dual_basis_family(w);
  const std::size_t da = sigma->right_ring()->dim();
  Matrix m(t->module->dim(), wsd->module->dim());
  for (std::size_t chi = 0; chi < wsd->module->dim(); ++chi) {
    const Matrix& f = wsd->functionals[chi];
    const DualBasis& db = family.at(wsd->module->basis(chi).right);
    Vector out(t->module->dim());
    for (std::size_t i = 0; i < db.size(); ++i) {
      Matrix partial(da, sigma->dim());
      for (std::size_t s = 0; s < sigma->dim(); ++s)
        partial.set_column(s, f * ws->pure(db.u[i], unit_vector(sigma->dim(), s)));
      auto coords = sd->coordinates(partial);
      if (!coords) throw std::logic_error("dual_tensor_iso: partial functional outside " + sd->module->name());
      add_into(out, t->pure(*coords, db.v[i]));
    }
    m.set_column(chi, out);
  }
  return make_map(wsd->module, t->module, std::move(m));
}

LinearMap dual_tensor_pairing(const ModulePtr& w, const ModulePtr& sigma) {
  auto ws = tensor(w, sigma);
  auto wsd = right_dual(ws->module);
  auto sd = right_dual(sigma);
  auto wd = right_dual(w);
  auto t = tensor(sd->module, wd->module);
  const std::size_t da = sigma->right_ring()->dim();
  Matrix m(wsd->module->dim(), t->module->dim());
  for (std::size_t k = 0; k < t->module->dim(); ++k) {
    auto [phi, psi] = t->representative(k);
    Matrix f(da, ws->module->dim());
    for (std::size_t z = 0; z < ws->module->dim(); ++z) {
      auto [wb, u] = ws->representative(z);
      Vector b = wd->evaluate(unit_vector(wd->module->dim(), psi), unit_vector(w->dim(), wb));
      Vector bu = sigma->act_left(b, unit_vector(sigma->dim(), u));
      f.set_column(z, sd->evaluate(unit_vector(sd->module->dim(), phi), bu));
    }
    auto coords = wsd->coordinates(f);
    if (!coords) throw std::logic_error("dual_tensor_pairing: pairing outside " + wsd->module->name());
    m.set_column(k, *coords);
  }
  return make_map(t->module, wsd->module, std::move(m));
}

DualTensorResult check_dual_tensor_iso(const ModulePtr& w, const ModulePtr& sigma) {
  DualTensorResult out{zero_map(w, w), 0, Report("adjunction.dual_tensor", w->name() + ", " + sigma->name())};
  auto& rep = out.report;
  try {
    out.iso = dual_tensor_iso(w, sigma);
    LinearMap back = dual_tensor_pairing(w, sigma);
    const auto& src = out.iso.source;
    const auto& tgt = out.iso.target;
    out.rank = rank(out.iso.matrix);
    if (src->dim() != tgt->dim())
      rep.fail("dimension", std::to_string(src->dim()) + " against " + std::to_string(tgt->dim()));
    if (out.rank != src->dim() || out.rank != tgt->dim())
      rep.fail("bijectivity", "rank " + std::to_string(out.rank) + " of " + std::to_string(src->dim()) + " x " +
                                  std::to_string(tgt->dim()));
    rep.absorb(check_linearity(out.iso, Side::Both), "bilinearity");
    compare_columns(rep, "pairing after iso", compose(back, out.iso).matrix, identity_of(src), *src);
    compare_columns(rep, "iso after pairing", compose(out.iso, back).matrix, identity_of(tgt), *tgt);
  } catch (const MissingDualBasis& e) {
    rep.fail("dual basis", e.what());
  } catch (const std::logic_error& e) {
    rep.fail("construction", e.what());
  }
  return out;
}

Report check_base_extension_consistency(const ModulePtr& sigma, const CoringPtr& d) {
  Report rep("adjunction.base_extension", sigma->name() + ", " + d->name);
  guarded(rep, "comultiplication", [&] {
    auto ext = base_extension(sigma, d);
    auto p = right_dual(sigma)->module;
    const auto& D = d->carrier;
    auto ds = tensor_module(D, sigma);
    auto pd = tensor_module(p, D);
    auto e = tensor_module(pd, sigma);
    auto y = tensor_module(p, D);
    // (P (x) D) (x) S -> (P (x) (((D (x) S) (x) P) (x) D)) (x) S
    LinearMap built = tensor_right(tensor_left(p, compose(tensor_right(unit_eta(sigma, D), D), d->delta)), sigma);
    // -> (P (x) ((D (x) S) (x) (P (x) D))) (x) S
    built = compose(tensor_right(tensor_left(p, associator(ds, p, D)), sigma), built);
    // -> ((P (x) (D (x) S)) (x) (P (x) D)) (x) S
    built = compose(tensor_right(associator_inverse(p, ds, y), sigma), built);
    // -> (((P (x) D) (x) S) (x) (P (x) D)) (x) S
    built = compose(tensor_right(tensor_right(associator_inverse(p, D, sigma), y), sigma), built);
    // -> ((P (x) D) (x) S) (x) ((P (x) D) (x) S)
    built = compose(associator(e, y, sigma), built);
    compare_columns(rep, "comultiplication", ext->delta.matrix, built.matrix, *ext->carrier);
  });
  return rep;
}

}  // namespace coring
