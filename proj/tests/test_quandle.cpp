#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "qnd/io.hpp"
#include "qnd/quandle.hpp"

using namespace qnd;

namespace {
  // Alexander quandle over GF(4) with t = ω: a ◁ b = ωa + ω²b. Elements are
  // bit-encoded polynomials in ω modulo ω² + ω + 1.
  elem gf4_mul(elem x, elem y) {
    elem r = 0;
    for (int bit = 0; bit < 2; ++bit) {
      if ((y >> bit) & 1) {
        elem shifted = x;
        for (int s = 0; s < bit; ++s) {
          shifted <<= 1;
          if (shifted & 4) {
            shifted ^= 0b111;
          }
        }
        r ^= shifted;
      }
    }
    return r;
  }

  Quandle tetrahedral() {
    std::vector<std::vector<elem>> t(4, std::vector<elem>(4));
    for (elem a = 0; a < 4; ++a) {
      for (elem b = 0; b < 4; ++b) {
        t[a][b] = gf4_mul(2, a) ^ gf4_mul(3, b);
      }
    }
    return build_quandle(t);
  }
}  // namespace

TEST_SUITE("quandle") {
  TEST_CASE("build_quandle accepts the trivial quandle with inverse equal to table") {
    Quandle const t3 = build_quandle({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
    CHECK(t3.order() == 3);
    CHECK(std::ranges::equal(t3.table(), t3.inv_table()));
  }

  TEST_CASE("build_quandle on A4") {
    Quandle const a4 = fixtures::A4();
    CHECK(a4.op(0, 3) == 1);  // a ◁ d = b
    CHECK(a4.op(1, 3) == 0);  // b ◁ d = a
  }

  TEST_CASE("a column that is not injective is an A2 violation") {
    try {
      build_quandle({{0, 0, 2, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}});
      FAIL("expected AxiomViolation");
    } catch (AxiomViolation const& e) {
      CHECK(e.axiom == Axiom::A2);
      CHECK(e.k == 2);
    }
  }

  TEST_CASE("idempotency and self-distributivity failures") {
    try {
      build_quandle({{1, 0}, {0, 1}});
      FAIL("expected AxiomViolation");
    } catch (AxiomViolation const& e) {
      CHECK(e.axiom == Axiom::A1);
    }
    // Column permutations fixing the diagonal that violate (A3).
    try {
      build_quandle({{0, 2, 1}, {1, 1, 0}, {2, 0, 2}});
      FAIL("expected AxiomViolation");
    } catch (AxiomViolation const& e) {
      CHECK(e.axiom == Axiom::A3);
    }
  }

  TEST_CASE("shape errors") {
    CHECK_THROWS_AS(build_quandle({{0, 0}, {1}}), ShapeError);
    CHECK_THROWS_AS(build_quandle({}), ShapeError);
    CHECK_THROWS_AS(build_quandle({{0, 5}, {1, 1}}), ShapeError);
  }

  TEST_CASE("trivial quandles") {
    CHECK(trivial_quandle(1).order() == 1);
    CHECK(trivial_quandle(2) == fixtures::B2());
    CHECK(trivial_quandle(3) == fixtures::M3());
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(is_involutive(trivial_quandle(n)));
    }
  }

  TEST_CASE("product quandles") {
    CHECK(product_quandle(trivial_quandle(2), trivial_quandle(2)) == trivial_quandle(4));
    CHECK(product_quandle(fixtures::R3(), trivial_quandle(1)) == fixtures::R3());

    // The pairs with equal f4-image form a 10-element subquandle.
    Quandle const a4 = fixtures::A4();
    Quandle const sq = product_quandle(a4, a4);
    Hom const     f4 = fixtures::f4();
    std::vector<elem> eq;
    for (elem x = 0; x < 4; ++x) {
      for (elem y = 0; y < 4; ++y) {
        if (f4(x) == f4(y)) {
          eq.push_back(x * 4 + y);
        }
      }
    }
    CHECK(eq.size() == 10);
    CHECK(subquandle_check(sq, eq));
    CHECK(restrict_to(sq, eq).order() == 10);
  }

  TEST_CASE("product projections are homomorphisms") {
    Quandle const a = fixtures::R3(), b = fixtures::A4();
    Hom const     l = product_projection_left(a, b);
    Hom const     r = product_projection_right(a, b);
    CHECK(is_surjective_hom(l));
    CHECK(is_surjective_hom(r));
    CHECK(l.dom().order() == 12);
  }

  TEST_CASE("subquandle_check") {
    Quandle const     a4 = fixtures::A4();
    std::vector<elem> cd{2, 3}, ad{0, 3}, all{0, 1, 2, 3};
    CHECK(subquandle_check(a4, cd));
    CHECK_FALSE(subquandle_check(a4, ad));
    CHECK(subquandle_check(a4, all));
  }

  TEST_CASE("is_involutive") {
    CHECK(is_involutive(fixtures::A4()));
    CHECK(is_involutive(fixtures::R3()));
    Quandle const t = tetrahedral();
    CHECK_FALSE(is_involutive(t));
    // Every column of the tetrahedral quandle fixes its index and 3-cycles
    // the rest.
    elem x = 1;
    for (int step = 0; step < 3; ++step) {
      x = t.op(x, 0);
    }
    CHECK(x == 1);
    CHECK(t.op(1, 0) != 1);
  }

  TEST_CASE("build_hom") {
    CHECK_NOTHROW(fixtures::f4());
    CHECK_NOTHROW(fixtures::g5());
    try {
      build_hom(fixtures::A4(), fixtures::B2(), {0, 1, 0, 0});
      FAIL("expected NotAHomomorphism");
    } catch (NotAHomomorphism const& e) {
      CHECK(e.j == 3);
    }
    CHECK_THROWS_AS(build_hom(fixtures::A4(), fixtures::B2(), {0, 0, 0}), ShapeError);
    CHECK_THROWS_AS(build_hom(fixtures::A4(), fixtures::B2(), {0, 0, 0, 2}), ShapeError);
  }

  TEST_CASE("is_surjective_hom") {
    CHECK(is_surjective_hom(fixtures::f4()));
    CHECK_FALSE(is_surjective_hom(fixtures::s4()));
    CHECK(is_surjective_hom(identity_hom(fixtures::R3())));
  }

  TEST_CASE("compose_homs") {
    Hom const fg = compose_homs(fixtures::f5(), fixtures::g5());
    CHECK(std::ranges::equal(fg.map(), std::vector<elem>{0, 0, 1, 2, 2}));
    CHECK(compose_homs(fixtures::f4(), fixtures::s4()) == identity_hom(fixtures::B2()));
    CHECK(compose_homs(identity_hom(fixtures::B2()), fixtures::f4()) == fixtures::f4());
    CHECK_THROWS_AS(compose_homs(fixtures::f4(), fixtures::f4()), DomainMismatch);
  }

  TEST_CASE("relabel is an isomorphism") {
    Quandle const     a4 = fixtures::A4();
    std::vector<elem> sigma{3, 0, 2, 1};
    Quandle const     r  = relabel(a4, sigma);
    CHECK_NOTHROW(build_hom(a4, r, sigma));
  }

  TEST_CASE("build_quandle agrees with the naive axiom checker on random tables") {
    std::mt19937_64 rng(20240611);
    std::size_t     accepted = 0;
    for (int trial = 0; trial < 4000; ++trial) {
      std::size_t const n = 1 + trial % 4;
      oracle::Table     t(n * n);
      if (trial % 3 == 0) {
        // Arbitrary entries.
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        for (auto& x : t) {
          x = d(rng);
        }
      } else {
        // Columns are permutations fixing the diagonal.
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<std::size_t> rest;
          for (std::size_t i = 0; i < n; ++i) {
            if (i != j) {
              rest.push_back(i);
            }
          }
          std::shuffle(rest.begin(), rest.end(), rng);
          std::size_t r = 0;
          for (std::size_t i = 0; i < n; ++i) {
            t[i * n + j] = (i == j) ? j : rest[r++];
          }
        }
      }
      bool const expected = oracle::satisfies_axioms(n, t);
      bool       ok       = true;
      try {
        Quandle const q = build_quandle_flat(n, t);
        // (A2) round trip on accepted tables.
        for (elem i = 0; i < n; ++i) {
          for (elem j = 0; j < n; ++j) {
            CHECK(q.inv(q.op(i, j), j) == i);
            CHECK(q.op(q.inv(i, j), j) == i);
          }
        }
      } catch (AxiomViolation const&) {
        ok = false;
      }
      CHECK(ok == expected);
      accepted += ok;
    }
    CHECK(accepted > 0);
  }
}
