#include "coring/constructors.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace coring;

namespace {

RingPtr a2() { return path_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}}}); }

RingMorphism diag() {
  auto m2 = matrix_ring(2);
  return {"diag", field_ring(), m2, {m2->idempotent({0, 1})}};
}

RingMorphism separate(const RingPtr& target) {
  auto d2 = direct_sum({field_ring(), field_ring()});
  return {"sep", d2, target, {target->idempotent({0}), target->idempotent({1})}};
}

std::size_t label(const Bimodule& m, const std::string& l) {
  auto k = m.find_basis(l);
  REQUIRE(k);
  return *k;
}

bool bijective_counit(const CoringPtr& c) {
  return oracle::rank(c->epsilon.matrix) == c->carrier->dim() && c->carrier->dim() == c->ring->dim();
}

}  // namespace

TEST_CASE("trivial corings") {
  auto m2 = matrix_ring(2);
  auto t = trivial_coring(m2);
  CHECK(check_coring(*t).passed());
  CHECK(t->epsilon.matrix == Matrix::identity(4));
  CHECK(trivial_coring(m2) == t);

  auto c = trivial_coring(corner(m2, {0}));
  CHECK(c->carrier->dim() == 1);
  CHECK(check_coring(*c).passed());
}

TEST_CASE("Sweedler coring of the diagonal embedding") {
  auto psi = diag();
  auto sw = sweedler_coring(psi);
  CHECK(sw->carrier->dim() == 16);
  CHECK(sw->carrier->dim() == oracle::sweedler_dim(psi));
  CHECK(check_coring(*sw).passed());

  // Delta(a (x) a') = a (x) 1 (x) 1 (x) a'.
  auto s = tensor_space_of(sw->carrier);
  auto cc = tensor(sw->carrier, sw->carrier);
  REQUIRE(s);
  const auto& A = *psi.target;
  Vector one = A.idempotent({0, 1});
  for (std::size_t k = 0; k < sw->carrier->dim(); ++k) {
    auto [x, y] = s->representative(k);
    Vector expect = cc->pure(s->pure(unit_vector(4, x), one), s->pure(one, unit_vector(4, y)));
    CHECK(sw->delta.matrix.column(k) == expect);
  }

  // eps(E12 (x) E21) = E11.
  auto k = label(*sw->carrier, "[E12|E21]");
  CHECK(sw->epsilon.matrix.column(k) == unit_vector(4, label(*regular(psi.target), "E11")));
}

TEST_CASE("Sweedler coring of the identity is the trivial coring") {
  auto m2 = matrix_ring(2);
  auto sw = sweedler_coring(identity_morphism(m2));
  CHECK(check_coring(*sw).passed());
  CHECK(sw->carrier->dim() == oracle::sweedler_dim(identity_morphism(m2)));
  CHECK(check_coring_morphism(counit_morphism(sw)).passed());
  CHECK(bijective_counit(sw));
}

TEST_CASE("Sweedler refuses a morphism without local units") {
  auto m2 = matrix_ring(2);
  RingMorphism bad{"corner", field_ring(), m2, {m2->idempotent({0})}};
  try {
    sweedler_coring(bad);
    FAIL("expected InvalidMorphism");
  } catch (const InvalidMorphism& e) {
    CHECK(e.report().failed_law("local unit"));
  }
}

TEST_CASE("Sweedler comultiplication does not depend on the unity") {
  for (const auto& psi : {separate(matrix_ring(2)), separate(a2()), diag()}) {
    auto sw = sweedler_coring(psi);
    CHECK(check_coring(*sw).passed());
    CHECK(sw->carrier->dim() == oracle::sweedler_dim(psi));
    auto s = tensor_space_of(sw->carrier);
    const auto all = psi.source->all_indices();
    std::size_t distinct = 0;
    for (std::size_t k = 0; k < sw->carrier->dim(); ++k) {
      auto [x, y] = s->representative(k);
      IndexSet grades = {psi.target->basis(x).left, psi.target->basis(x).right, psi.target->basis(y).left,
                         psi.target->basis(y).right};
      IndexSet minimal = sweedler_unity(psi, make_index_set(grades));
      if (minimal != all) ++distinct;
      CHECK(sweedler_delta(*sw, psi, x, y, minimal) == sweedler_delta(*sw, psi, x, y, all));
      CHECK(sweedler_delta(*sw, psi, x, y, all) == sw->delta.matrix.column(k));
    }
    if (psi.source->index_count() > 1) CHECK(distinct > 0);
  }
}

TEST_CASE("split corings") {
  auto q = field_ring();
  auto s = split_coring(q, regular(q));
  CHECK(s->carrier->dim() == 2);
  CHECK(check_coring(*s).passed());
  // Delta(0,1) = (0,1) (x) (1,0) + (1,0) (x) (0,1).
  auto cc = tensor(s->carrier, s->carrier);
  std::size_t p = label(*s->carrier, "(1,0)"), m = label(*s->carrier, "(0,1)");
  Vector expect = cc->pure(unit_vector(2, m), unit_vector(2, p));
  add_into(expect, cc->pure(unit_vector(2, p), unit_vector(2, m)));
  CHECK(s->delta.matrix.column(m) == expect);
  CHECK(s->delta.matrix.column(p) == cc->pure(unit_vector(2, p), unit_vector(2, p)));

  auto m2 = matrix_ring(2);
  auto z = split_coring(m2, zero_module(m2, m2));
  CHECK(z->carrier->dim() == 4);
  CHECK(check_coring(*z).passed());
  CHECK(bijective_counit(z));

  CHECK(check_coring(*split_coring(m2, regular(m2))).passed());
}

TEST_CASE("split comultiplication does not depend on the unity") {
  auto m2 = matrix_ring(2);
  for (const auto& s : {split_coring(m2, regular(m2)), split_coring(a2(), regular(a2()))}) {
    const auto all = s->ring->all_indices();
    std::size_t distinct = 0;
    for (std::size_t k = 0; k < s->carrier->dim(); ++k) {
      const auto& b = s->carrier->basis(k);
      IndexSet minimal = make_index_set({b.left, b.right});
      if (minimal != all) ++distinct;
      CHECK(split_delta(*s, k, minimal) == split_delta(*s, k, all));
      CHECK(split_delta(*s, k, all) == s->delta.matrix.column(k));
    }
    CHECK(distinct > 0);
  }
}

TEST_CASE("comatrix coring of the row module") {
  auto m2 = matrix_ring(2);
  auto row = right_ideal(m2, {0});
  auto c = comatrix_coring(row);
  auto d = right_dual(row);
  CHECK(c->carrier->dim() == 4);
  CHECK(c->carrier->dim() == oracle::tensor_dim(*d->module, *row));
  CHECK(check_coring(*c).passed());
  CHECK(oracle::rank(c->epsilon.matrix) == 4);

  auto t = tensor_space_of(c->carrier);
  auto cc = tensor(c->carrier, c->carrier);
  auto db = dual_basis_family(row);
  for (std::size_t k = 0; k < c->carrier->dim(); ++k) {
    auto [phi, u] = t->representative(k);
    Vector vphi = unit_vector(d->module->dim(), phi), vu = unit_vector(row->dim(), u);
    // eps(phi (x) u) = phi(u).
    CHECK(c->epsilon(unit_vector(c->carrier->dim(), k)) == d->evaluate(vphi, vu));
    // Delta(phi (x) u) = sum_i phi (x) u_i (x) v_i (x) u.
    Vector expect(cc->module->dim());
    const auto& basis = db[row->basis(u).left];
    for (std::size_t i = 0; i < basis.size(); ++i)
      add_into(expect, cc->pure(t->pure(vphi, basis.u[i]), t->pure(basis.v[i], vu)));
    CHECK(c->delta.matrix.column(k) == expect);
  }
}

TEST_CASE("comatrix coring of A over itself is the trivial coring") {
  auto m2 = matrix_ring(2);
  auto c = comatrix_coring(regular(m2));
  CHECK(check_coring(*c).passed());
  CHECK(c->carrier->dim() == 4);
  CHECK(check_coring_morphism(counit_morphism(c)).passed());
  CHECK(bijective_counit(c));
}

TEST_CASE("comatrix comultiplication does not depend on the dual basis") {
  auto m2 = matrix_ring(2);
  for (const auto& sigma : {right_ideal(m2, {0}), corner_right_ideal(m2, {0}), regular(m2), right_ideal(m2, {0, 1}),
                            right_ideal(a2(), {0}), regular(a2())}) {
    auto greedy = comatrix_coring(sigma, dual_basis_family(sigma, GeneratorStrategy::Greedy));
    auto full = comatrix_coring(sigma, dual_basis_family(sigma, GeneratorStrategy::FullBasis));
    CHECK(greedy->delta.matrix == full->delta.matrix);
    CHECK(greedy->epsilon.matrix == full->epsilon.matrix);
    CHECK(check_coring(*full).passed());
  }
}

TEST_CASE("comatrix needs projective components") {
  CHECK_THROWS_AS(comatrix_coring(simple_top(a2(), 0)), MissingDualBasis);
}

TEST_CASE("base ring extension") {
  auto m2 = matrix_ring(2);
  auto q = field_ring();
  auto row = right_ideal(m2, {0});
  auto comatrix = comatrix_coring(row);

  auto ext = base_extension(row, trivial_coring(q));
  CHECK(check_coring(*ext).passed());
  auto iso = base_extension_to_comatrix(ext, comatrix);
  CHECK(check_coring_morphism(iso).passed());
  CHECK(oracle::rank(iso.map.matrix) == ext->carrier->dim());
  CHECK(ext->carrier->dim() == comatrix->carrier->dim());

  auto sw = base_extension(row, sweedler_coring(identity_morphism(q)));
  CHECK(check_coring(*sw).passed());
  CHECK(sw->carrier->dim() == comatrix->carrier->dim());

  // Sigma = A over B = A gives D back.
  auto d = split_coring(m2, regular(m2));
  auto same = base_extension(regular(m2), d);
  CHECK(check_coring(*same).passed());
  CHECK(same->carrier->dim() == d->carrier->dim());

  auto path = base_extension(right_ideal(a2(), {0}), sweedler_coring(identity_morphism(q)));
  CHECK(check_coring(*path).passed());
}

TEST_CASE("Rees corings") {
  auto m2 = matrix_ring(2);
  auto r = rees_coring(m2, {0});
  CHECK(r.counit.carrier_dim == 4);
  CHECK(r.counit.rank == 4);
  CHECK(r.counit.bijective);
  CHECK(oracle::rank(r.coring->epsilon.matrix) == 4);
  CHECK(check_coring(*r.coring).passed());

  auto whole = rees_coring(m2, {0, 1});
  CHECK(whole.counit.bijective);
  CHECK(check_coring(*whole.coring).passed());

  // In the path algebra of 1 -> 2, e2 A e2 does not generate: A e2 (x) e2 A misses e1.
  auto p = rees_coring(a2(), {1});
  CHECK_FALSE(p.counit.bijective);
  CHECK(p.counit.rank == oracle::rank(p.coring->epsilon.matrix));
  CHECK(p.counit.rank < p.counit.ring_dim);
  CHECK(check_coring(*p.coring).passed());

  auto reesring = rees_ring(field_ring(), 2);
  CHECK(rees_coring(reesring, {0}).counit.bijective);
}

TEST_CASE("corings presented by comonad data") {
  auto m2 = matrix_ring(2);
  for (const auto& c : {trivial_coring(m2), sweedler_coring(diag()), split_coring(m2, regular(m2)),
                        comatrix_coring(right_ideal(m2, {0}))}) {
    auto r = comonad_to_coring("again", c->carrier, c->delta, c->epsilon);
    CHECK(r.report.passed());
    CHECK(r.coring->delta.matrix == c->delta.matrix);
    CHECK(r.coring->epsilon.matrix == c->epsilon.matrix);
  }

  auto a = regular(m2);
  auto t = comonad_to_coring("unit", a, left_unitor_inverse(a), identity_map(a));
  CHECK(t.report.passed());
  CHECK(t.coring->delta.matrix == trivial_coring(m2)->delta.matrix);

  // Delta(m) = m (x) m + p (x) m on Q + Q is not coassociative.
  auto q = field_ring();
  auto s = split_coring(q, regular(q));
  auto cc = tensor(s->carrier, s->carrier);
  std::size_t p = label(*s->carrier, "(1,0)"), m = label(*s->carrier, "(0,1)");
  Matrix delta = s->delta.matrix;
  Vector col = cc->pure(unit_vector(2, m), unit_vector(2, m));
  add_into(col, cc->pure(unit_vector(2, p), unit_vector(2, m)));
  delta.set_column(m, col);
  auto bad = comonad_to_coring("bad", s->carrier, make_map(s->carrier, cc->module, delta), s->epsilon);
  CHECK(bad.report.failed_law("coassociativity"));
}
