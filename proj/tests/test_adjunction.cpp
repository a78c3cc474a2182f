#include "coring/adjunction.hpp"
#include "coring/constructors.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace coring;

namespace {

RingPtr a2() { return path_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}}}); }

std::vector<ModulePtr> sigmas() {
  auto m2 = matrix_ring(2);
  return {right_ideal(m2, {0}), corner_right_ideal(m2, {0}), regular(m2), right_ideal(a2(), {0}),
          regular(a2()), corner_right_ideal(matrix_ring(3), {0, 2})};
}

}  // namespace

TEST_CASE("eta on the row module") {
  auto m2 = matrix_ring(2);
  auto row = right_ideal(m2, {0});
  auto q = regular(field_ring());
  auto eta = unit_eta(row, q);
  auto target = eta.target;
  CHECK(target->dim() == oracle::tensor_dim(*tensor_module(q, row), *right_dual(row)->module));
  REQUIRE(target->dim() == 1);
  CHECK(target->basis(0).label == "[[1|E12]|d2,1]");
  CHECK(eta.matrix(0, 0) == 1);

  // sum_i 1 (x) u_i (x) v_i, with the dual basis spelled out by hand.
  auto db = dual_basis(row, {0});
  REQUIRE(db);
  REQUIRE(db->size() == 1);
  CHECK(db->u[0] == Vector{1, 0});
  auto ys = tensor(q, row);
  auto t = tensor(ys->module, right_dual(row)->module);
  CHECK(eta.matrix.column(0) == t->pure(ys->pure(Vector{1}, db->u[0]), db->v[0]));
}

TEST_CASE("eta for the regular bimodule is invertible") {
  auto m2 = matrix_ring(2);
  for (const auto& y : test_modules(m2)) {
    auto eta = unit_eta(regular(m2), y);
    CHECK(eta.target->dim() == y->dim());
    CHECK(oracle::rank(eta.matrix) == y->dim());
  }
  auto zero = zero_module(field_ring(), m2);
  auto eta = unit_eta(regular(m2), zero);
  CHECK(eta.source->dim() == 0);
  CHECK(eta.target->dim() == 0);
}

TEST_CASE("zeta evaluates on every basis triple") {
  for (const auto& sigma : sigmas()) {
    auto dual = right_dual(sigma);
    for (const auto& x : test_modules(sigma->right_ring())) {
      auto zeta = counit_zeta(sigma, x);
      auto xd = tensor(x, dual->module);
      auto t = tensor(xd->module, sigma);
      for (std::size_t i = 0; i < x->dim(); ++i)
        for (std::size_t p = 0; p < dual->module->dim(); ++p)
          for (std::size_t u = 0; u < sigma->dim(); ++u) {
            Vector ex = unit_vector(x->dim(), i), phi = unit_vector(dual->module->dim(), p);
            Vector eu = unit_vector(sigma->dim(), u);
            Vector expect = x->act_right(ex, dual->evaluate(phi, eu));
            CHECK(zeta.matrix * t->pure(xd->pure(ex, phi), eu) == expect);
          }
    }
  }
}

TEST_CASE("zeta is onto for the row module") {
  auto m2 = matrix_ring(2);
  auto row = right_ideal(m2, {0});
  for (const auto& x : test_modules(m2)) CHECK(oracle::rank(counit_zeta(row, x).matrix) == x->dim());
}

TEST_CASE("triangle identities") {
  for (const auto& sigma : sigmas()) CHECK_MESSAGE(check_triangle_identities(sigma).passed(), sigma->name());

  auto row = right_ideal(matrix_ring(2), {0});
  auto bad = corrupt_dual_basis(dual_basis_family(row), 0, 2);
  auto rep = check_triangle_identities(row, bad);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failed_law("zeta G after G eta"));
  CHECK_FALSE(rep.failures()[0].witness.empty());

  auto top = check_triangle_identities(simple_top(a2(), 0));
  CHECK(top.failed_law("dual basis"));
}

TEST_CASE("eta does not depend on the dual basis") {
  for (const auto& sigma : sigmas()) CHECK_MESSAGE(check_eta_independence(sigma).passed(), sigma->name());

  auto m2 = matrix_ring(2);
  auto sigma = regular(m2);
  auto greedy = dual_basis_family(sigma);
  auto full = dual_basis_family(sigma, GeneratorStrategy::FullBasis);
  for (const auto& y : test_modules(m2))
    CHECK(unit_eta(sigma, y, greedy).matrix == unit_eta(sigma, y, full).matrix);
}

TEST_CASE("naturality of eta and zeta") {
  for (const auto& sigma : sigmas()) {
    auto ys = test_modules(sigma->left_ring());
    for (const auto& y : ys)
      for (const auto& y2 : ys)
        for (const auto& f : hom_space(y, y2, Side::Right))
          CHECK_MESSAGE(check_eta_naturality(sigma, f).passed(), sigma->name());
    auto xs = test_modules(sigma->right_ring());
    for (const auto& x : xs)
      for (const auto& x2 : xs)
        for (const auto& g : hom_space(x, x2, Side::Right))
          CHECK_MESSAGE(check_zeta_naturality(sigma, g).passed(), sigma->name());
  }
}

TEST_CASE("dual of a tensor product") {
  auto m2 = matrix_ring(2);
  auto p = a2();
  std::vector<std::pair<ModulePtr, ModulePtr>> cases = {
      {left_ideal(m2, {0}), right_ideal(m2, {0})},
      {regular(corner(m2, {0})), corner_right_ideal(m2, {0})},
      {regular(field_ring()), right_ideal(m2, {0})},
      {left_ideal(p, {1}), right_ideal(p, {0})},
      {regular(m2), regular(m2)},
  };
  for (const auto& [w, sigma] : cases) {
    auto res = check_dual_tensor_iso(w, sigma);
    CHECK_MESSAGE(res.report.passed(), std::string(w->name() + " " + sigma->name()));
    auto ws = tensor_module(w, sigma);
    auto lhs = oracle::hom_dim(*as_right_module(ws), *as_right_module(regular(sigma->right_ring())), false, true);
    auto rhs = oracle::tensor_dim(*right_dual(sigma)->module, *right_dual(w)->module);
    CHECK(res.iso.source->dim() == lhs);
    CHECK(res.iso.target->dim() == rhs);
    CHECK(lhs == rhs);
    CHECK(res.rank == lhs);
    CHECK(oracle::rank(res.iso.matrix) == lhs);
  }

  auto zero = zero_module(field_ring(), m2);
  auto res = check_dual_tensor_iso(left_ideal(m2, {0}), zero);
  CHECK(res.report.passed());
  CHECK(res.iso.source->dim() == 0);
}

TEST_CASE("base extension agrees with the adjunction") {
  auto m2 = matrix_ring(2);
  auto d = right_ideal(m2, {0});
  auto q = field_ring();
  RingMorphism id{"id", q, q, {q->idempotent({0})}};
  for (const auto& c : {trivial_coring(q), sweedler_coring(id), split_coring(q, regular(q))})
    for (const auto& sigma : {d, right_ideal(a2(), {0})})
      CHECK_MESSAGE(check_base_extension_consistency(sigma, c).passed(), std::string(sigma->name() + " " + c->name));
  CHECK(check_base_extension_consistency(regular(m2), trivial_coring(m2)).passed());
}
