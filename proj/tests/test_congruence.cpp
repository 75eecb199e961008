#include <doctest.h>

#include <random>

#include "qnd/congruence.hpp"
#include "qnd/enumeration.hpp"
#include "qnd/io.hpp"

using namespace qnd;

namespace {
  Partition labels(std::vector<int> const& l) {
    return Partition::from_labels(l);
  }

  // Compatibility checked on pairs directly, without the library's routine.
  bool naive_congruence(Quandle const& q, Partition const& p) {
    std::size_t const n = q.order();
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        if (!p.same(a, b)) {
          continue;
        }
        for (elem c = 0; c < n; ++c) {
          for (elem d = 0; d < n; ++d) {
            if (p.same(c, d) && (!p.same(q.op(a, c), q.op(b, d)) || !p.same(q.inv(a, c), q.inv(b, d)))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  Congruence eq_f4() {
    return kernel_congruence(fixtures::f4());
  }
}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("partitions") {
    Partition const p = labels({7, 7, 3, 7});
    CHECK(p.to_string() == "{0,1,3|2}");
    CHECK(p.num_blocks() == 2);
    CHECK(p.block_index(2) == 1);
    CHECK(p.rep(3) == 0);
    CHECK(Partition::discrete(4).refines(p));
    CHECK(p.refines(Partition::total(4)));
    CHECK_FALSE(Partition::total(4).refines(p));
    std::size_t const bell[] = {1, 1, 2, 5, 15, 52};
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(set_partitions(n).size() == bell[n]);
    }
  }

  TEST_CASE("is_congruence on A4 and trivial quandles") {
    Quandle const a4 = fixtures::A4();
    CHECK(is_congruence(a4, labels({0, 0, 1, 2})));
    CHECK_FALSE(is_congruence(a4, labels({0, 1, 0, 2})));
    for (Partition const& p : set_partitions(4)) {
      CHECK(is_congruence(trivial_quandle(4), p));
    }
    CHECK(congruences(trivial_quandle(3)).size() == 5);
    CHECK(congruences(fixtures::R3()).size() == 2);
    CHECK_THROWS_AS(Congruence(a4, labels({0, 1, 0, 2})), NotACongruence);
  }

  TEST_CASE("is_congruence agrees with the pairwise check") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (Quandle const& q : enumerate_quandles(n, true)) {
        for (Partition const& p : set_partitions(n)) {
          bool const c = is_congruence(q, p);
          CHECK(c == naive_congruence(q, p));
          if (c) {
            CHECK(Relation::of_partition(q, p).is_subquandle());
          }
        }
      }
    }
  }

  TEST_CASE("kernel congruences") {
    CHECK(eq_f4().partition().to_string() == "{0,1,2|3}");
    CHECK(kernel_congruence(fixtures::g5()).partition().to_string() == "{0,1|2|3|4}");
    CHECK(kernel_congruence(identity_hom(fixtures::A5())) == Congruence::diagonal(fixtures::A5()));
  }

  TEST_CASE("orbit congruences") {
    Quandle const        a4 = fixtures::A4();
    OrbitEquivalence const inn = orbit_congruence(a4, inner_group(a4));
    CHECK(inn.is_congruence);
    CHECK(inn.partition.to_string() == "{0,1|2|3}");
    CHECK(inn_congruence(a4).partition() == inn.partition);

    Quandle const a5 = fixtures::A5();
    OrbitEquivalence const id = orbit_congruence(a5, PermGroup::generated_by(5, {}));
    CHECK(id.is_congruence);
    CHECK(id.partition.is_discrete());

    Quandle const          r3 = fixtures::R3();
    OrbitEquivalence const c2 = orbit_congruence(r3, PermGroup::generated_by(3, {Permutation({1, 0, 2})}));
    CHECK_FALSE(c2.is_congruence);
    CHECK(c2.partition.to_string() == "{0,1|2}");
    CHECK_THROWS_AS(c2.congruence(r3), NotACongruence);

    CHECK_THROWS_AS(orbit_congruence(a4, PermGroup::generated_by(4, {Permutation({0, 1, 3, 2})})),
                    NotASubgroupOfInn);
  }

  TEST_CASE("orbit relation is a congruence exactly for normal subgroups") {
    std::size_t normal = 0, other = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (Quandle const& q : enumerate_quandles(n, true)) {
        PermGroup const inn = inner_group(q);
        for (PermGroup const& h : subgroups(inn)) {
          OrbitEquivalence const o = orbit_congruence(q, h);
          CHECK(o.is_congruence == is_normal_subgroup(h, inn));
          CHECK(o.is_congruence == naive_congruence(q, o.partition));
          (o.is_congruence ? normal : other) += 1;
        }
      }
    }
    CHECK(normal > 0);
    CHECK(other > 0);
  }

  TEST_CASE("relational composition on T3") {
    Quandle const  t3 = trivial_quandle(3);
    Relation const r  = Relation::of_partition(t3, labels({0, 0, 1}));
    Relation const s  = Relation::of_partition(t3, labels({0, 1, 1}));
    CHECK(compose_relations(s, r).contains(0, 2));
    CHECK_FALSE(compose_relations(r, s).contains(0, 2));
    CHECK_FALSE(relations_permute(r, s));
    CHECK(compose_relations(s, r).is_reflexive());
    CHECK_FALSE(compose_relations(s, r).is_symmetric());
    CHECK(compose_relations(r, Relation::diagonal(t3)) == r);
    CHECK(relations_permute(r, Relation::diagonal(t3)));
  }

  TEST_CASE("Eq(f4) permutes with the orbit congruence of Inn(A4)") {
    Relation const e   = eq_f4().relation();
    Relation const inn = inn_congruence(fixtures::A4()).relation();
    CHECK(compose_relations(inn, e) == compose_relations(e, inn));
    CHECK(relations_permute(e, inn));
  }

  TEST_CASE("every congruence permutes with every normal orbit congruence") {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (Quandle const& q : enumerate_quandles(n, true)) {
        PermGroup const inn = inner_group(q);
        for (PermGroup const& h : subgroups(inn, true)) {
          Relation const o = orbit_congruence(q, h).relation(q);
          for (Congruence const& r : congruences(q)) {
            CHECK(relations_permute(r.relation(), o));
            ++checked;
          }
        }
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("composites of congruences are reflexive subquandles") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (Quandle const& q : enumerate_quandles(n, true)) {
        auto const cs = congruences(q);
        for (auto const& r : cs) {
          for (auto const& s : cs) {
            Relation const sr = compose_relations(s.relation(), r.relation());
            CHECK(sr.is_reflexive());
            CHECK(sr.is_subquandle());
            // The converse of S∘R is R∘S, so symmetry is exactly permutability.
            CHECK(sr.is_symmetric() == relations_permute(r.relation(), s.relation()));
          }
        }
      }
    }
  }

  TEST_CASE("meet and join on the examples") {
    Quandle const    a4  = fixtures::A4();
    Congruence const e   = eq_f4();
    Congruence const inn = inn_congruence(a4);
    Congruence const d   = Congruence::diagonal(a4);
    CHECK(meet(e, inn).partition().to_string() == "{0,1|2|3}");
    CHECK(meet(e, d) == d);
    CHECK(join(e, inn).partition().to_string() == "{0,1,2|3}");
    CHECK(join(e, d) == e);

    Congruence const g = kernel_congruence(fixtures::g5());
    CHECK(meet(g, inn_congruence(fixtures::A5())) == g);
    Congruence const eta = kernel_congruence(pi0(fixtures::A5()).unit);
    CHECK(join(g, eta) == eta);
    CHECK(eta.partition().to_string() == "{0,1|2|3,4}");

    CHECK_THROWS_AS(meet(e, g), BaseMismatch);
    CHECK_THROWS_AS(join(e, g), BaseMismatch);
  }

  TEST_CASE("lattice laws on random congruence triples") {
    std::mt19937_64 rng(7);
    std::vector<Quandle> pool;
    for (std::size_t n = 3; n <= 4; ++n) {
      for (Quandle const& q : enumerate_quandles(n, true)) {
        pool.push_back(q);
      }
    }
    pool.push_back(trivial_quandle(5));
    pool.push_back(fixtures::A5());
    for (int trial = 0; trial < 500; ++trial) {
      Quandle const& q  = pool[rng() % pool.size()];
      auto const     cs = congruences(q);
      auto const&    r  = cs[rng() % cs.size()];
      auto const&    s  = cs[rng() % cs.size()];
      auto const&    t  = cs[rng() % cs.size()];
      CHECK(join(r, join(s, t)) == join(join(r, s), t));
      CHECK(meet(r, meet(s, t)) == meet(meet(r, s), t));
      CHECK(join(r, s) == join(s, r));
      CHECK(meet(r, s) == meet(s, r));
      CHECK(join(r, r) == r);
      CHECK(meet(r, r) == r);
      CHECK(join(r, meet(r, s)) == r);
      CHECK(meet(r, join(r, s)) == r);
      CHECK(r.partition().refines(join(r, s).partition()));
      CHECK(meet(r, s).partition().refines(s.partition()));
    }
  }

  TEST_CASE("quotients") {
    Quandle const a4 = fixtures::A4();
    Quotient const qa = quotient(a4, inn_congruence(a4));
    CHECK(qa.quandle == trivial_quandle(3));
    CHECK(qa.projection == pi0(a4).unit);

    Quotient const qd = quotient(fixtures::R3(), Congruence::diagonal(fixtures::R3()));
    CHECK(qd.quandle == fixtures::R3());
    CHECK(qd.projection == identity_hom(fixtures::R3()));

    Congruence const eta = kernel_congruence(pi0(fixtures::A5()).unit);
    CHECK(quotient(fixtures::A5(), eta).quandle == fixtures::M3());

    for (std::size_t n = 1; n <= 4; ++n) {
      for (Quandle const& q : enumerate_quandles(n, true)) {
        for (Congruence const& r : congruences(q)) {
          Quotient const p = quotient(q, r);
          CHECK(is_surjective_hom(p.projection));
          CHECK(kernel_congruence(p.projection) == r);
        }
      }
    }
  }

  TEST_CASE("direct images") {
    Hom const f4 = fixtures::f4();
    CHECK(direct_image(f4, Relation::diagonal(fixtures::A4())) == Relation::diagonal(fixtures::B2()));
    Relation const r = eq_f4().relation();
    CHECK(direct_image(identity_hom(fixtures::A4()), r) == r);

    // The meet quotient of g5 carries the orbit congruence of A5 onto its own.
    Quandle const    a5 = fixtures::A5();
    Congruence const m  = meet(kernel_congruence(fixtures::g5()), inn_congruence(a5));
    Quotient const   p  = quotient(a5, m);
    CHECK(direct_image(p.projection, inn_congruence(a5).relation())
          == inn_congruence(p.quandle).relation());
  }

  TEST_CASE("surjections carry the orbit congruence onto the orbit congruence") {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (Quandle const& a : enumerate_quandles(n, true)) {
        for (std::size_t k = 1; k <= n; ++k) {
          for (Quandle const& b : enumerate_quandles(k, true)) {
            for (Hom const& f : enumerate_surjective_homs(a, b)) {
              CHECK(direct_image(f, inn_congruence(a).relation()) == inn_congruence(b).relation());
              ++checked;
            }
          }
        }
      }
    }
    CHECK(checked > 50);
  }
}
