#include "coring/coring.hpp"

namespace coring {

void compare_columns(Report& rep, const std::string& law, const Matrix& lhs, const Matrix& rhs,
                     const Bimodule& source) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.fail(law, "shape mismatch");
    return;
  }
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      if (lhs(r, c) != rhs(r, c)) {
        rep.fail(law, "at " + source.basis(c).label);
        break;
      }
    }
  }
}

CoringPtr make_coring(std::string name, ModulePtr carrier, Matrix delta, Matrix epsilon) {
  if (!same_ring(carrier->left_ring(), carrier->right_ring()))
    throw RingMismatch("coring '" + name + "': carrier is not a bimodule over one ring");
  RingPtr a = carrier->right_ring();
  auto cc = tensor_module(carrier, carrier);
  auto c = std::make_shared<Coring>();
  c->name = std::move(name);
  c->ring = a;
  c->delta = make_map(carrier, cc, std::move(delta));
  c->epsilon = make_map(carrier, regular(a), std::move(epsilon));
  c->carrier = std::move(carrier);
  return c;
}

namespace {

template <class F>
void guarded(Report& rep, const std::string& law, F&& body) {
  try {
    body();
  } catch (const BalancingError& e) {
    rep.fail(law, std::string("not well defined: ") + e.what());
  } catch (const DimensionError& e) {
    rep.fail(law, std::string("shape: ") + e.what());
  }
}

}  // namespace

Report check_coring(const Coring& c) {
  Report rep("coring.laws", c.name);
  const auto& C = c.carrier;
  if (!same_module(c.delta.source, C) || !same_module(c.delta.target, tensor_module(C, C))) {
    rep.fail("shape", "comultiplication is not a map C -> C(x)C");
    return rep;
  }
  if (!same_module(c.epsilon.source, C) || !same_module(c.epsilon.target, regular(c.ring))) {
    rep.fail("shape", "counit is not a map C -> A");
    return rep;
  }
  rep.absorb(check_linearity(c.delta, Side::Both), "comultiplication");
  rep.absorb(check_linearity(c.epsilon, Side::Both), "counit");
  guarded(rep, "coassociativity", [&] {
    LinearMap lhs = compose(associator(C, C, C), compose(tensor_right(c.delta, C), c.delta));
    LinearMap rhs = compose(tensor_left(C, c.delta), c.delta);
    compare_columns(rep, "coassociativity", lhs.matrix, rhs.matrix, *C);
  });
  Matrix id = Matrix::identity(C->dim());
  guarded(rep, "left counit", [&] {
    LinearMap lhs = compose(left_unitor(C), compose(tensor_right(c.epsilon, C), c.delta));
    compare_columns(rep, "left counit", lhs.matrix, id, *C);
  });
  guarded(rep, "right counit", [&] {
    LinearMap lhs = compose(right_unitor(C), compose(tensor_left(C, c.epsilon), c.delta));
    compare_columns(rep, "right counit", lhs.matrix, id, *C);
  });
  return rep;
}

Report check_coring_morphism(const CoringMorphism& phi) {
  Report rep("coring.morphism", phi.name);
  const auto& C = *phi.source;
  const auto& D = *phi.target;
  if (!same_ring(C.ring, D.ring)) {
    rep.fail("shape", "corings over different rings");
    return rep;
  }
  if (!same_module(phi.map.source, C.carrier) || !same_module(phi.map.target, D.carrier)) {
    rep.fail("shape", "map is not between the carriers");
    return rep;
  }
  rep.absorb(check_linearity(phi.map, Side::Both));
  compare_columns(rep, "counit", (D.epsilon.matrix * phi.map.matrix), C.epsilon.matrix, *C.carrier);
  guarded(rep, "comultiplication", [&] {
    Matrix lhs = D.delta.matrix * phi.map.matrix;
    Matrix rhs = induced_map(phi.map, phi.map).matrix * C.delta.matrix;
    compare_columns(rep, "comultiplication", lhs, rhs, *C.carrier);
  });
  return rep;
}

CoringMorphism identity_morphism(const CoringPtr& c) { return {"id_" + c->name, c, c, identity_map(c->carrier)}; }

CoringMorphism compose(const CoringMorphism& psi, const CoringMorphism& phi) {
  return {psi.name + "*" + phi.name, phi.source, psi.target, compose(psi.map, phi.map)};
}

Report check_comodule(const Comodule& m) {
  Report rep("comodule.laws", m.name);
  const auto& C = m.coring->carrier;
  const auto& M = m.module;
  if (!same_module(m.coaction.source, M) || !same_module(m.coaction.target, tensor_module(M, C))) {
    rep.fail("shape", "coaction is not a map M -> M(x)C");
    return rep;
  }
  rep.absorb(check_linearity(m.coaction, Side::Right), "coaction");
  guarded(rep, "coassociativity", [&] {
    LinearMap lhs = compose(tensor_left(M, m.coring->delta), m.coaction);
    LinearMap rhs = compose(associator(M, C, C), compose(tensor_right(m.coaction, C), m.coaction));
    compare_columns(rep, "coassociativity", lhs.matrix, rhs.matrix, *M);
  });
  guarded(rep, "counit", [&] {
    LinearMap lhs = compose(right_unitor(M), compose(tensor_left(M, m.coring->epsilon), m.coaction));
    compare_columns(rep, "counit", lhs.matrix, Matrix::identity(M->dim()), *M);
  });
  return rep;
}

Report check_comodule_morphism(const LinearMap& f, const Comodule& m, const Comodule& m2) {
  Report rep("comodule.morphism", m.name + " -> " + m2.name);
  if (m.coring != m2.coring && !same_module(m.coring->carrier, m2.coring->carrier)) {
    rep.fail("shape", "comodules over different corings");
    return rep;
  }
  rep.absorb(check_linearity(f, Side::Right));
  guarded(rep, "colinearity", [&] {
    LinearMap lhs = compose(m2.coaction, f);
    LinearMap rhs = compose(tensor_right(f, m.coring->carrier), m.coaction);
    compare_columns(rep, "colinearity", lhs.matrix, rhs.matrix, *m.module);
  });
  return rep;
}

Comodule cofree_comodule(const ModulePtr& x, const CoringPtr& c) {
  auto xc = tensor_module(x, c->carrier);
  LinearMap rho = compose(associator_inverse(x, c->carrier, c->carrier), tensor_left(x, c->delta));
  return {x->name() + "(x)" + c->name, c, xc, rho};
}

Comodule regular_comodule(const CoringPtr& c) { return {c->name, c, c->carrier, c->delta}; }

Comodule corestrict(const CoringMorphism& phi, const Comodule& m) {
  LinearMap rho = compose(tensor_left(m.module, phi.map), m.coaction);
  return {m.name + "_" + phi.name, phi.target, m.module, rho};
}

Report check_cofree_adjunction(const Comodule& m, const ModulePtr& x) {
  Report rep("comodule.cofree_adjunction", m.name + ", " + x->name());
  const auto& C = m.coring;
  guarded(rep, "unit-counit on comodule", [&] {
    LinearMap counit_m = compose(right_unitor(m.module), tensor_left(m.module, C->epsilon));
    compare_columns(rep, "unit-counit on comodule", compose(counit_m, m.coaction).matrix,
                    Matrix::identity(m.module->dim()), *m.module);
  });
  guarded(rep, "unit-counit on module", [&] {
    Comodule cof = cofree_comodule(x, C);
    LinearMap counit_x = compose(right_unitor(x), tensor_left(x, C->epsilon));
    LinearMap lhs = compose(tensor_right(counit_x, C->carrier), cof.coaction);
    compare_columns(rep, "unit-counit on module", lhs.matrix, Matrix::identity(cof.module->dim()), *cof.module);
  });
  return rep;
}

}  // namespace coring
