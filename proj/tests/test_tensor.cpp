#include "coring/tensor.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace coring;

namespace {

RingPtr a2() { return path_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}}}); }

std::size_t label(const Bimodule& m, const std::string& l) {
  auto k = m.find_basis(l);
  REQUIRE(k);
  return *k;
}

std::vector<ModulePtr> samples() {
  auto m2 = matrix_ring(2);
  auto p = a2();
  return {regular(m2),           right_ideal(m2, {0}), left_ideal(m2, {0}),  corner_right_ideal(m2, {0}),
          right_ideal(m2, {1}),  regular(p),           right_ideal(p, {0}),  left_ideal(p, {1}),
          left_ideal(m2, {0, 1}), regular(field_ring()), right_ideal(p, {1}), left_ideal(p, {0})};
}

LinearMap random_combination(const std::vector<LinearMap>& basis, const ModulePtr& s, const ModulePtr& t,
                             std::mt19937& rng) {
  LinearMap out = zero_map(s, t);
  for (const auto& f : basis) out = add(out, scale(static_cast<int>(rng() % 7) - 3, f));
  return out;
}

}  // namespace

TEST_CASE("tensor dimensions") {
  auto m2 = matrix_ring(2);
  auto t = tensor(right_ideal(m2, {0}), left_ideal(m2, {0}));
  CHECK(t->module->dim() == 1);
  CHECK(t->module->dim() == oracle::tensor_dim(*right_ideal(m2, {0}), *left_ideal(m2, {0})));

  auto a = regular(m2);
  CHECK(tensor_module(a, a)->dim() == 4);
  CHECK(tensor_module(a, a)->dim() == oracle::tensor_dim(*a, *a));
  for (const auto& n : samples()) {
    if (!same_ring(n->left_ring(), m2)) continue;
    CHECK(tensor_module(a, n)->dim() == n->dim());
  }
}

TEST_CASE("tensor dimensions agree with the all-pairs quotient") {
  for (const auto& m : samples())
    for (const auto& n : samples()) {
      if (!same_ring(m->right_ring(), n->left_ring())) continue;
      CHECK_MESSAGE(tensor_module(m, n)->dim() == oracle::tensor_dim(*m, *n), std::string(m->name() + " (x) " + n->name()));
    }
}

TEST_CASE("pure tensors are balanced on every basis triple") {
  for (const auto& m : samples())
    for (const auto& n : samples()) {
      if (!same_ring(m->right_ring(), n->left_ring())) continue;
      auto t = tensor(m, n);
      const auto& A = *m->right_ring();
      for (std::size_t x = 0; x < m->dim(); ++x)
        for (std::size_t a = 0; a < A.dim(); ++a)
          for (std::size_t y = 0; y < n->dim(); ++y) {
            Vector ua = unit_vector(A.dim(), a);
            Vector ux = unit_vector(m->dim(), x), uy = unit_vector(n->dim(), y);
            CHECK(t->pure(m->act_right(ux, ua), uy) == t->pure(ux, n->act_left(ua, uy)));
          }
    }
}

TEST_CASE("A (x)_A N tracks e.n") {
  auto m2 = matrix_ring(2);
  auto a = regular(m2);
  auto n = left_ideal(m2, {0});
  auto t = tensor(a, n);
  auto lu = left_unitor(n);
  for (std::size_t x = 0; x < m2->dim(); ++x)
    for (std::size_t y = 0; y < n->dim(); ++y) {
      Vector ux = unit_vector(m2->dim(), x), uy = unit_vector(n->dim(), y);
      CHECK(lu(t->pure(ux, uy)) == n->act_left(ux, uy));
    }
}

TEST_CASE("induced maps") {
  auto m2 = matrix_ring(2);
  auto a = regular(m2);
  auto n = left_ideal(m2, {0});

  auto id = induced_map(identity_map(a), identity_map(n));
  CHECK(id.matrix == Matrix::identity(tensor_module(a, n)->dim()));

  CHECK(induced_map(zero_map(a, a), identity_map(n)).matrix.is_zero());

  // Left multiplication by a on the first factor against a acting on N.
  auto lu = left_unitor(n);
  for (std::size_t k = 0; k < m2->dim(); ++k) {
    auto la = make_map(a, a, a->left_matrix(k));
    auto lhs = compose(lu, induced_map(la, identity_map(n)));
    auto rhs = compose(make_map(n, n, n->left_matrix(k)), lu);
    CHECK(same_matrix(lhs, rhs));
  }

  // Right multiplication by E12 is not right linear, so it does not descend.
  auto rho = make_map(a, a, a->right_matrix(*m2->find_basis("E12")));
  CHECK_THROWS_AS(induced_map(rho, identity_map(a)), BalancingError);
}

TEST_CASE("induced maps are functorial") {
  std::mt19937 rng(3);
  auto m2 = matrix_ring(2);
  auto row = right_ideal(m2, {0, 1});
  auto col = left_ideal(m2, {0, 1});
  auto right_maps = hom_space(row, row, Side::Right);
  auto left_maps = hom_space(col, col, Side::Left);
  REQUIRE(right_maps.size() == 4);
  REQUIRE(left_maps.size() == 4);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_combination(right_maps, row, row, rng), g = random_combination(right_maps, row, row, rng);
    auto h = random_combination(left_maps, col, col, rng), k = random_combination(left_maps, col, col, rng);
    CHECK(same_matrix(induced_map(compose(g, f), compose(k, h)), compose(induced_map(g, k), induced_map(f, h))));
  }
}

TEST_CASE("gamma and tau") {
  auto m2 = matrix_ring(2);
  auto a = regular(m2);
  auto g = gamma(m2, {0}, a);
  auto t = tensor_space_of(g.target);
  REQUIRE(t);
  std::size_t e11 = label(*t->left, "E11"), e12 = label(*a, "E12");
  Vector pure = t->pure(unit_vector(t->left->dim(), e11), unit_vector(a->dim(), e12));
  CHECK(g(unit_vector(a->dim(), e12)) == pure);

  auto ta = tau(m2, {0}, a);
  CHECK(ta(pure) == unit_vector(a->dim(), e12));

  // tau after gamma is left multiplication by e.
  for (IndexSet e : {IndexSet{0}, IndexSet{1}, IndexSet{0, 1}}) {
    for (const auto& x : samples()) {
      if (!same_ring(x->left_ring(), m2)) continue;
      Matrix expect(x->dim(), x->dim());
      for (std::size_t i : e) expect = expect + x->left_matrix(m2->idempotent_basis(i));
      CHECK(compose(tau(m2, e, x), gamma(m2, e, x)).matrix == expect);
    }
  }

  auto zero = zero_module(m2, field_ring());
  CHECK(gamma(m2, {0}, zero).matrix.is_zero());
  CHECK(tau(m2, {0}, zero).matrix.is_zero());
}

TEST_CASE("gamma is natural") {
  std::mt19937 rng(9);
  auto m2 = matrix_ring(2);
  std::vector<std::pair<ModulePtr, ModulePtr>> pairs = {
      {left_ideal(m2, {0}), left_ideal(m2, {1})}, {regular(m2), regular(m2)}, {left_ideal(m2, {0, 1}), left_ideal(m2, {0})}};
  for (const auto& [x, y] : pairs) {
    auto maps = hom_space(x, y, Side::Both);
    REQUIRE_FALSE(maps.empty());
    auto f = random_combination(maps, x, y, rng);
    for (IndexSet e : {IndexSet{0}, IndexSet{0, 1}}) {
      auto ea = right_ideal(m2, e);
      CHECK(same_matrix(compose(tensor_left(ea, f), gamma(m2, e, x)), compose(gamma(m2, e, y), f)));
    }
  }
}

TEST_CASE("upsilon and theta are mutually inverse") {
  for (const auto& n : samples()) {
    const auto& a = n->left_ring();
    std::vector<IndexSet> idempotents;
    for (std::size_t i = 0; i < a->index_count(); ++i) idempotents.push_back({i});
    idempotents.push_back(a->all_indices());
    for (const auto& e : idempotents) {
      auto u = upsilon(a, e, n), t = theta(a, e, n);
      CHECK(compose(u, t).matrix == Matrix::identity(u.target->dim()));
      CHECK(compose(t, u).matrix == Matrix::identity(u.source->dim()));
    }
  }

  auto m2 = matrix_ring(2);
  auto col = left_ideal(m2, {0});
  auto u = upsilon(m2, {0, 1}, col);
  CHECK(u.source->dim() == 2);
  CHECK(u.target->dim() == 2);
}

TEST_CASE("upsilon on A is gamma restricted to eA") {
  auto m2 = matrix_ring(2);
  auto a = regular(m2);
  auto u = upsilon(m2, {0}, a);
  auto g = gamma(m2, {0}, a);
  REQUIRE(u.target == g.target);
  for (std::size_t k = 0; k < u.source->dim(); ++k)
    CHECK(u.matrix.column(k) == g.matrix.column(label(*a, u.source->basis(k).label)));
}

TEST_CASE("upsilon is natural in bimodule maps") {
  std::mt19937 rng(17);
  auto m2 = matrix_ring(2);
  auto n = left_ideal(m2, {0}), n2 = left_ideal(m2, {0, 1});
  auto maps = hom_space(n, n2, Side::Both);
  REQUIRE_FALSE(maps.empty());
  auto xi = random_combination(maps, n, n2, rng);
  IndexSet e = {1};
  auto un = upsilon(m2, e, n), un2 = upsilon(m2, e, n2);
  // xi restricted to eN -> eN', by labels.
  Matrix restricted(un2.source->dim(), un.source->dim());
  for (std::size_t c = 0; c < un.source->dim(); ++c)
    for (std::size_t r = 0; r < un2.source->dim(); ++r)
      restricted(r, c) = xi.matrix(label(*n2, un2.source->basis(r).label), label(*n, un.source->basis(c).label));
  auto lhs = compose(tensor_left(right_ideal(m2, e), xi), un);
  CHECK(lhs.matrix == un2.matrix * restricted);
}

TEST_CASE("associators and unitors") {
  auto m2 = matrix_ring(2);
  auto a = regular(m2);
  auto as = associator(a, a, a);
  CHECK(oracle::rank(as.matrix) == as.matrix.rows());
  CHECK(as.matrix.rows() == as.matrix.cols());
  CHECK(compose(associator_inverse(a, a, a), as).matrix == Matrix::identity(as.source->dim()));
  CHECK(compose(as, associator_inverse(a, a, a)).matrix == Matrix::identity(as.target->dim()));

  auto row = right_ideal(m2, {0});
  auto col = left_ideal(m2, {0});
  auto as2 = associator(row, a, col);
  CHECK(compose(associator_inverse(row, a, col), as2).matrix == Matrix::identity(as2.source->dim()));

  for (const auto& n : samples()) {
    auto l = left_unitor(n), li = left_unitor_inverse(n);
    CHECK(compose(l, li).matrix == Matrix::identity(n->dim()));
    CHECK(compose(li, l).matrix == Matrix::identity(li.target->dim()));
    auto r = right_unitor(n), ri = right_unitor_inverse(n);
    CHECK(compose(r, ri).matrix == Matrix::identity(n->dim()));
    CHECK(compose(ri, r).matrix == Matrix::identity(ri.target->dim()));
  }
}
