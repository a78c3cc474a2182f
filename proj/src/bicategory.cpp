#include "coring/bicategory.hpp"

#include "coring/constructors.hpp"

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
  }
}

// Chains g_n o ... o g_1 given in application order.
LinearMap chain(std::initializer_list<LinearMap> maps) {
  auto it = maps.begin();
  LinearMap out = *it++;
  for (; it != maps.end(); ++it) out = compose(*it, out);
  return out;
}

}  // namespace

Report check_one_cell(const OneCell& c) {
  Report rep("cell.one", c.name);
  const auto& C = c.target->carrier;
  const auto& D = c.source->carrier;
  const auto& M = c.module;
  if (!same_ring(M->left_ring(), c.target->ring) || !same_ring(M->right_ring(), c.source->ring)) {
    rep.fail("shape", "module is not a bimodule over the coring base rings");
    return rep;
  }
  if (!same_module(c.map.source, tensor_module(C, M)) || !same_module(c.map.target, tensor_module(M, D))) {
    rep.fail("shape", "map is not C(x)M -> M(x)D");
    return rep;
  }
  rep.absorb(check_linearity(c.map, Side::Both), "bilinearity");
  guarded(rep, "counit", [&] {
    LinearMap lhs = chain({c.map, tensor_left(M, c.source->epsilon), right_unitor(M)});
    LinearMap rhs = chain({tensor_right(c.target->epsilon, M), left_unitor(M)});
    compare_columns(rep, "counit", lhs.matrix, rhs.matrix, *c.map.source);
  });
  guarded(rep, "comultiplication", [&] {
    LinearMap lhs = chain({tensor_right(c.target->delta, M), associator(C, C, M), tensor_left(C, c.map),
                           associator_inverse(C, M, D), tensor_right(c.map, D), associator(M, D, D)});
    LinearMap rhs = chain({c.map, tensor_left(M, c.source->delta)});
    compare_columns(rep, "comultiplication", lhs.matrix, rhs.matrix, *c.map.source);
  });
  return rep;
}

OneCell identity_one_cell(const CoringPtr& c) {
  auto a = regular(c->ring);
  LinearMap m = compose(left_unitor_inverse(c->carrier), right_unitor(c->carrier));
  return {"id_" + c->name, c, c, a, m};
}

OneCell morphism_one_cell(const CoringMorphism& phi) {
  auto a = regular(phi.source->ring);
  LinearMap m = chain({right_unitor(phi.source->carrier), phi.map, left_unitor_inverse(phi.target->carrier)});
  return {"cell(" + phi.name + ")", phi.source, phi.target, a, m};
}

OneCell collapse_one_cell(const CoringPtr& c, const ModulePtr& m) {
  auto d = trivial_coring(m->right_ring());
  LinearMap map = chain({tensor_right(c->epsilon, m), left_unitor(m), right_unitor_inverse(m)});
  return {"collapse(" + c->name + "," + m->name() + ")", c, d, m, map};
}

OneCell comodule_one_cell(const Comodule& x) {
  auto b = trivial_coring(x.module->left_ring());
  LinearMap map = compose(x.coaction, left_unitor(x.module));
  return {"comodule(" + x.name + ")", b, x.coring, x.module, map};
}

bool composable(const OneCell& m, const OneCell& n) {
  return m.source == n.target || (same_ring(m.source->ring, n.target->ring) &&
                                  same_module(m.source->carrier, n.target->carrier) &&
                                  m.source->delta.matrix == n.target->delta.matrix &&
                                  m.source->epsilon.matrix == n.target->epsilon.matrix);
}

OneCell compose_one_cells(const OneCell& m, const OneCell& n) {
  if (!composable(m, n)) throw std::invalid_argument("compose_one_cells: " + m.name + " and " + n.name + " do not meet");
  const auto& C = m.target->carrier;
  const auto& D = m.source->carrier;
  const auto& E = n.source->carrier;
  const auto& M = m.module;
  const auto& N = n.module;
  LinearMap map = chain({associator_inverse(C, M, N), tensor_right(m.map, N), associator(M, D, N),
                         tensor_left(M, n.map), associator_inverse(M, N, E)});
  return {m.name + "." + n.name, m.target, n.source, tensor_module(M, N), map};
}

Report check_unit_laws(const OneCell& c) {
  Report rep("cell.unit_laws", c.name);
  const auto& C = c.target->carrier;
  const auto& D = c.source->carrier;
  const auto& M = c.module;
  guarded(rep, "right unit", [&] {
    OneCell r = compose_one_cells(c, identity_one_cell(c.source));
    LinearMap lhs = compose(tensor_right(right_unitor(M), D), r.map);
    LinearMap rhs = compose(c.map, tensor_left(C, right_unitor(M)));
    compare_columns(rep, "right unit", lhs.matrix, rhs.matrix, *r.map.source);
  });
  guarded(rep, "left unit", [&] {
    OneCell l = compose_one_cells(identity_one_cell(c.target), c);
    LinearMap lhs = compose(tensor_right(left_unitor(M), D), l.map);
    LinearMap rhs = compose(c.map, tensor_left(C, left_unitor(M)));
    compare_columns(rep, "left unit", lhs.matrix, rhs.matrix, *l.map.source);
  });
  return rep;
}

Report check_associativity(const OneCell& m, const OneCell& n, const OneCell& p) {
  Report rep("cell.associativity", m.name + ", " + n.name + ", " + p.name);
  guarded(rep, "associativity", [&] {
    OneCell x = compose_one_cells(compose_one_cells(m, n), p);
    OneCell y = compose_one_cells(m, compose_one_cells(n, p));
    LinearMap a = associator(m.module, n.module, p.module);
    LinearMap lhs = compose(tensor_right(a, p.source->carrier), x.map);
    LinearMap rhs = compose(y.map, tensor_left(m.target->carrier, a));
    compare_columns(rep, "associativity", lhs.matrix, rhs.matrix, *x.map.source);
    rep.absorb(check_one_cell(x), "left bracketing");
    rep.absorb(check_one_cell(y), "right bracketing");
  });
  return rep;
}

Report check_two_cell(const TwoCell& t) {
  Report rep("cell.two", t.name);
  const auto& s = t.source;
  const auto& u = t.target;
  if (!composable(s, u) && s.target != u.target) {
    rep.fail("shape", "source and target 1-cells join different corings");
    return rep;
  }
  const auto& C = s.target->carrier;
  const auto& D = s.source->carrier;
  const auto& M = s.module;
  if (!same_module(t.map.source, tensor_module(C, M)) || !same_module(t.map.target, u.module)) {
    rep.fail("shape", "map is not C(x)M -> M'");
    return rep;
  }
  rep.absorb(check_linearity(t.map, Side::Both), "bilinearity");
  guarded(rep, "2-cell law", [&] {
    LinearMap head = compose(associator(C, C, M), tensor_right(s.target->delta, M));
    LinearMap lhs = chain({head, tensor_left(C, s.map), associator_inverse(C, M, D), tensor_right(t.map, D)});
    LinearMap rhs = chain({head, tensor_left(C, t.map), u.map});
    compare_columns(rep, "2-cell law", lhs.matrix, rhs.matrix, *t.map.source);
  });
  return rep;
}

TwoCell collapse_two_cell(const OneCell& c, const Scalar& k) {
  LinearMap map = compose(left_unitor(c.module), tensor_right(c.target->epsilon, c.module));
  std::string name = k == 1 ? "collapse(" + c.name + ")" : to_string(k) + "*collapse(" + c.name + ")";
  return {name, c, c, scale(k, map)};
}

TwoCell zero_two_cell(const OneCell& source, const OneCell& target) {
  return {"0(" + source.name + "," + target.name + ")", source, target,
          zero_map(tensor_module(source.target->carrier, source.module), target.module)};
}

TwoCell compose_vertical(const TwoCell& a2, const TwoCell& a) {
  const auto& C = a.source.target->carrier;
  const auto& M = a.source.module;
  LinearMap map = chain({tensor_right(a.source.target->delta, M), associator(C, C, M), tensor_left(C, a.map), a2.map});
  return {a2.name + "|" + a.name, a.source, a2.target, map};
}

TwoCell compose_horizontal(const TwoCell& a, const TwoCell& b) {
  const auto& C = a.source.target->carrier;
  const auto& D = a.source.source->carrier;
  const auto& M = a.source.module;
  const auto& M2 = a.target.module;
  const auto& N = b.source.module;
  LinearMap map = chain({associator_inverse(C, M, N), tensor_right(tensor_right(a.source.target->delta, M), N),
                         tensor_right(associator(C, C, M), N), tensor_right(tensor_left(C, a.map), N),
                         tensor_right(a.target.map, N), associator(M2, D, N), tensor_left(M2, b.map)});
  return {a.name + "*" + b.name, compose_one_cells(a.source, b.source), compose_one_cells(a.target, b.target), map};
}

Comodule induce_comodule(const OneCell& c, const Comodule& x) {
  const auto& X = x.module;
  const auto& C = c.target->carrier;
  const auto& M = c.module;
  LinearMap rho = chain({tensor_right(x.coaction, M), associator(X, C, M), tensor_left(X, c.map),
                         associator_inverse(X, M, c.source->carrier)});
  return {x.name + "(x)" + M->name(), c.source, tensor_module(X, M), rho};
}

Report check_induce_functoriality(const OneCell& m, const OneCell& n, const Comodule& x) {
  Report rep("cell.induce_functoriality", m.name + ", " + n.name + ", " + x.name);
  guarded(rep, "functoriality", [&] {
    Comodule once = induce_comodule(compose_one_cells(m, n), x);
    Comodule twice = induce_comodule(n, induce_comodule(m, x));
    LinearMap a = associator_inverse(x.module, m.module, n.module);
    rep.absorb(check_comodule_morphism(a, once, twice), "associator");
  });
  return rep;
}

}  // namespace coring
