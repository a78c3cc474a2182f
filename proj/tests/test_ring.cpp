#include "coring/ring.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace coring;

namespace {

RingElement element(const RingPtr& r, const std::string& label) {
  auto k = r->find_basis(label);
  REQUIRE(k);
  return RingElement::basis(r, *k);
}

RingPtr a2() { return path_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}}}); }
RingPtr a3() { return path_algebra(Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}}); }

std::vector<RingPtr> sample_rings() {
  return {field_ring(),
          matrix_ring(2),
          matrix_ring(3),
          a2(),
          a3(),
          direct_sum({field_ring(), matrix_ring(2)}),
          rees_ring(field_ring(), 2),
          infinite_matrix_ring(4)->corner(3),
          infinite_path_algebra(4)->corner(4)};
}

}  // namespace

TEST_CASE("matrix units multiply like matrix units") {
  auto m2 = matrix_ring(2);
  CHECK(multiply(element(m2, "E12"), element(m2, "E21")) == element(m2, "E11"));
  CHECK(multiply(element(m2, "E11"), element(m2, "E11")) == element(m2, "E11"));
  auto m4 = matrix_ring(4);
  CHECK(multiply(element(m4, "E12"), element(m4, "E34")).is_zero());

  auto m3 = matrix_ring(3);
  for (const auto& x : m3->basis())
    for (const auto& y : m3->basis()) {
      auto expect = oracle::matrix_unit_product(x.label, y.label);
      auto got = multiply(element(m3, x.label), element(m3, y.label));
      if (expect.empty()) CHECK(got.is_zero());
      else CHECK(got == element(m3, expect));
    }
}

TEST_CASE("multiplying elements of different rings throws") {
  CHECK_THROWS_AS(multiply(element(matrix_ring(2), "E11"), RingElement::basis(field_ring(), 0)), RingMismatch);
}

TEST_CASE("local units") {
  auto m2 = matrix_ring(2);
  auto e12 = element(m2, "E12");
  auto u = local_unit_for({e12});
  CHECK(u == RingElement::idempotent(m2, {0, 1}));
  CHECK(multiply(e12, u) == e12);
  CHECK(multiply(u, e12) == e12);

  CHECK(local_unit_for({element(m2, "E11")}) == element(m2, "E11"));

  auto a = a2();
  auto p = element(a, "a");
  auto ua = local_unit_for({p});
  CHECK(ua == RingElement::idempotent(a, {0, 1}));
  CHECK(multiply(p, ua) == p);
  CHECK(multiply(ua, p) == p);

  CHECK_THROWS(local_unit_for({}));
}

TEST_CASE("idempotent order") {
  auto m2 = matrix_ring(2);
  auto e11 = element(m2, "E11"), e22 = element(m2, "E22");
  auto one = RingElement::idempotent(m2, {0, 1});
  CHECK(idempotent_leq(e11, one));
  CHECK_FALSE(idempotent_leq(e11, e22));
  CHECK_FALSE(idempotent_leq(one, e11));
  CHECK_THROWS(idempotent_leq(element(m2, "E12"), one));
}

TEST_CASE("idempotent order is a partial order on generator sums") {
  auto m3 = matrix_ring(3);
  std::vector<RingElement> sums;
  for (unsigned mask = 1; mask < 8; ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) s.push_back(i);
    sums.push_back(RingElement::idempotent(m3, s));
  }
  for (const auto& x : sums) {
    CHECK(idempotent_leq(x, x));
    for (const auto& y : sums) {
      if (idempotent_leq(x, y) && idempotent_leq(y, x)) CHECK(x == y);
      for (const auto& z : sums)
        if (idempotent_leq(x, y) && idempotent_leq(y, z)) CHECK(idempotent_leq(x, z));
    }
  }
}

TEST_CASE("local unit dominates every generator in the supports") {
  auto m3 = matrix_ring(3);
  std::vector<RingElement> elems = {element(m3, "E12"), element(m3, "E23")};
  auto u = local_unit_for(elems);
  for (const auto& x : elems)
    for (auto [l, r] : x.support()) {
      CHECK(idempotent_leq(RingElement::idempotent(m3, {l}), u));
      CHECK(idempotent_leq(RingElement::idempotent(m3, {r}), u));
    }
}

TEST_CASE("every basis element is fixed by its local unit") {
  for (const auto& r : sample_rings()) {
    for (std::size_t k = 0; k < r->dim(); ++k) {
      auto a = RingElement::basis(r, k);
      auto u = local_unit_for({a});
      CHECK(u.is_idempotent());
      CHECK(multiply(a, u) == a);
      CHECK(multiply(u, a) == a);
    }
  }
}

TEST_CASE("ring laws") {
  CHECK(verify_ring(*matrix_ring(3)).passed());
  CHECK(verify_ring(*a3()).passed());
  for (const auto& r : sample_rings()) CHECK_MESSAGE(verify_ring(*r).passed(), r->name());

  auto m2 = matrix_ring(2);
  auto bad = with_corrupted_product(*m2, *m2->find_basis("E12"), *m2->find_basis("E21"),
                                    SparseVector{{{*m2->find_basis("E11"), 2}}});
  auto rep = verify_ring(*bad);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failed_law("associativity"));
  bool named = false;
  for (const auto& f : rep.failures()) named = named || f.witness == "(E12, E21, E12)";
  CHECK(named);
}

TEST_CASE("morphism checks") {
  auto m2 = matrix_ring(2);
  RingMorphism diag{"diag", field_ring(), m2, {Vector{1, 0, 0, 1}}};
  CHECK(check_morphism(diag).passed());

  RingMorphism corner1{"corner", field_ring(), m2, {Vector{1, 0, 0, 0}}};
  auto rep = check_morphism(corner1);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failed_law("local unit"));
  CHECK(rep.failures()[0].witness.find("e_2") != std::string::npos);

  CHECK(check_morphism(identity_morphism(m2)).passed());
  CHECK(check_morphism(identity_morphism(a3())).passed());
}

TEST_CASE("corner rings") {
  auto m2 = matrix_ring(2);
  auto c = corner(m2, {0});
  CHECK(c->dim() == 1);
  CHECK(verify_ring(*c).passed());
  CHECK(corner(m2, {0, 1})->dim() == m2->dim());

  auto a = a2();
  auto c1 = corner(a, {0});
  REQUIRE(c1->dim() == 1);
  CHECK(c1->basis(0).label == "e1");

  // E11 + E12 is a rank one idempotent outside the generator sums.
  auto f = RingElement(m2, {1, 1, 0, 0});
  REQUIRE(f.is_idempotent());
  auto cf = corner(f);
  CHECK(cf->dim() == 1);
  CHECK(verify_ring(*cf).passed());

  CHECK_THROWS(corner(element(m2, "E12")));
}

TEST_CASE("corner multiplication agrees with the ambient ring") {
  auto m3 = matrix_ring(3);
  IndexSet s = {0, 2};
  auto c = corner(m3, s);
  for (std::size_t x = 0; x < c->dim(); ++x)
    for (std::size_t y = 0; y < c->dim(); ++y) {
      auto expect = oracle::matrix_unit_product(c->basis(x).label, c->basis(y).label);
      Vector got = c->multiply(unit_vector(c->dim(), x), unit_vector(c->dim(), y));
      if (expect.empty()) {
        CHECK(is_zero(got));
      } else {
        auto k = c->find_basis(expect);
        REQUIRE(k);
        CHECK(got == unit_vector(c->dim(), *k));
      }
    }
}

TEST_CASE("direct sums keep summands apart") {
  auto d = direct_sum({field_ring(), field_ring()});
  CHECK(d->dim() == 2);
  CHECK(d->find_basis("Q1.1"));
  CHECK(d->find_basis("Q2.1"));
  CHECK(verify_ring(*d).passed());
}

TEST_CASE("lazy rings refuse unbounded corners") {
  auto inf = infinite_matrix_ring(3);
  CHECK(inf->corner(2)->dim() == 4);
  CHECK(inf->corner(2) == inf->corner(2));
  CHECK_THROWS(inf->corner(0));
  CHECK_THROWS(inf->corner(4));
}
