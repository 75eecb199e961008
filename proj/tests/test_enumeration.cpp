#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "qnd/enumeration.hpp"
#include "qnd/io.hpp"

using namespace qnd;

namespace {
  std::set<oracle::Table> as_tables(std::vector<Quandle> const& qs) {
    std::set<oracle::Table> out;
    for (Quandle const& q : qs) {
      out.emplace(q.table().begin(), q.table().end());
    }
    return out;
  }

  std::size_t count_raw(std::size_t n, EnumerateOptions const& opts = {}) {
    std::size_t c = 0;
    for_each_quandle(n, [&](Quandle const&) { ++c; }, opts);
    return c;
  }
}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("raw enumeration matches the all-tables oracle for n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const expected = oracle::all_tables_quandles(n);
      auto const got      = as_tables(enumerate_quandles(n, false));
      CHECK(got.size() == expected.size());
      CHECK(got == std::set<oracle::Table>(expected.begin(), expected.end()));
    }
  }

  TEST_CASE("raw enumeration at n = 4 matches the column oracle") {
    auto const expected = oracle::column_table_quandles(4, false);
    auto const got      = as_tables(enumerate_quandles(4, false));
    CHECK(got == std::set<oracle::Table>(expected.begin(), expected.end()));
  }

  TEST_CASE("isomorphism class counts") {
    std::size_t const expected[] = {0, 1, 1, 3, 7};
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const reps = enumerate_quandles(n, true);
      CHECK(reps.size() == expected[n]);
      CHECK(oracle::class_representatives(n, oracle::column_table_quandles(n, true)).size() == expected[n]);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(canonical_form(reps[i]) == reps[i]);
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          CHECK(reps[i] < reps[j]);
          CHECK(isomorphisms(reps[i], reps[j]).empty());
        }
      }
    }
  }

  TEST_CASE("shuffled candidate order does not change the output") {
    for (std::size_t n = 3; n <= 4; ++n) {
      auto const base = as_tables(enumerate_quandles(n, false));
      for (std::uint64_t seed : {1u, 99u, 12345u}) {
        EnumerateOptions opts;
        opts.shuffle_seed = seed;
        CHECK(as_tables(enumerate_quandles(n, opts)) == base);
      }
    }
  }

  TEST_CASE("shards partition the search") {
    std::size_t const total = count_raw(4);
    std::set<oracle::Table> seen;
    std::size_t             sum = 0;
    for (std::size_t s = 0; s < 3; ++s) {
      EnumerateOptions opts;
      opts.shard_index = s;
      opts.shard_count = 3;
      auto const part  = enumerate_quandles(4, opts);
      sum += part.size();
      auto const tables = as_tables(part);
      seen.insert(tables.begin(), tables.end());
    }
    CHECK(sum == total);
    CHECK(seen.size() == total);
  }

  TEST_CASE("order limits") {
    CHECK_THROWS_AS(enumerate_quandles(6, false), OrderTooLarge);
    EnumerateOptions big;
    big.allow_large = true;
    CHECK_THROWS_AS(enumerate_quandles(7, big), OrderTooLarge);
    CHECK_THROWS_AS(enumerate_quandles(0, false), ShapeError);
  }

  TEST_CASE("canonical form is invariant under relabelling") {
    Quandle const     a4 = fixtures::A4();
    Quandle const     c  = canonical_form(a4);
    std::vector<elem> sigma{0, 1, 2, 3};
    do {
      CHECK(canonical_form(relabel(a4, sigma)) == c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    Quandle const a5 = fixtures::A5();
    std::vector<elem> tau{4, 2, 0, 3, 1};
    CHECK(canonical_form(relabel(a5, tau)) == canonical_form(a5));
  }

  TEST_CASE("isomorphisms") {
    CHECK(isomorphisms(fixtures::R3(), fixtures::R3()).size() == 6);
    CHECK(isomorphisms(fixtures::A4(), fixtures::A4()).size() == 2);
    CHECK(isomorphisms(fixtures::A4(), fixtures::X4()).size() == 2);
    CHECK(isomorphisms(fixtures::A4(), trivial_quandle(4)).empty());
    CHECK(isomorphisms(trivial_quandle(3), trivial_quandle(4)).empty());
  }

  TEST_CASE("hom enumeration matches brute force") {
    std::vector<Quandle> pool;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (Quandle const& q : enumerate_quandles(n, true)) {
        pool.push_back(q);
      }
    }
    pool.push_back(fixtures::A4());
    for (Quandle const& a : pool) {
      for (Quandle const& b : pool) {
        std::size_t const n = a.order(), m = b.order();
        std::size_t       brute = 0, surj = 0;
        std::vector<elem> w(n, 0);
        while (true) {
          bool ok = true;
          for (elem i = 0; i < n && ok; ++i) {
            for (elem j = 0; j < n && ok; ++j) {
              ok = w[a.op(i, j)] == b.op(w[i], w[j]);
            }
          }
          if (ok) {
            ++brute;
            surj += std::set<elem>(w.begin(), w.end()).size() == m;
          }
          std::size_t k = 0;
          while (k < n && ++w[k] == m) {
            w[k++] = 0;
          }
          if (k == n) {
            break;
          }
        }
        CHECK(enumerate_homs(a, b).size() == brute);
        CHECK(enumerate_surjective_homs(a, b).size() == surj);
      }
    }
  }

  TEST_CASE("subgroups") {
    PermGroup const s3 = inner_group(fixtures::R3());
    CHECK(subgroups(s3).size() == 6);
    CHECK(subgroups(s3, true).size() == 3);
    PermGroup const v = inner_group(dihedral_quandle(4));
    CHECK(subgroups(v).size() == 5);
    auto const all = subgroups(inner_group(dihedral_quandle(5)));
    CHECK(all.size() == 8);
    CHECK(all.front().size() == 1);
    CHECK(all.back().size() == 10);
  }

  TEST_CASE("sampling is seeded and yields quandles") {
    std::mt19937_64 r1(5), r2(5);
    for (int k = 0; k < 20; ++k) {
      Quandle const q = sample_quandle(5, r1);
      CHECK(q == sample_quandle(5, r2));
      std::vector<std::size_t> t(q.table().begin(), q.table().end());
      CHECK(oracle::satisfies_axioms(5, t));
    }
  }

  TEST_CASE("sweeps on small orders") {
    auto const claims = registered_claims();
    CHECK(std::ranges::find(claims, "permutability") != claims.end());
    CHECK(std::ranges::find(claims, "cancellation-e1") != claims.end());
    EnumConfig cfg;
    cfg.max_order = 3;
    for (std::string const& c : {"permutability", "factor-em", "factor-rigid", "inclusions",
                                 "cancellation-e", "admissibility", "special-pushout",
                                 "induced-image", "normality", "characterization"}) {
      SweepReport const r = run_sweep(c, cfg);
      CHECK_MESSAGE(r.holds, c);
      CHECK(r.instances_checked > 0);
      CHECK(serialize_report(r) == c + ": holds (" + std::to_string(r.instances_checked) + " instances)\n");
    }
    CHECK_THROWS_AS(run_sweep("no-such-claim", cfg), UnknownClaim);
  }

  TEST_CASE("kernel-pair sweep finds the split epimorphism") {
    EnumConfig cfg;
    cfg.max_order = 4;
    SweepReport const r = run_sweep("kernel-pair", cfg);
    CHECK_FALSE(r.holds);
    bool found = false;
    for (auto const& c : r.counterexamples) {
      Hom const& f = c.maps.at(0);
      found |= f.dom().order() == 4 && f.cod().order() == 2
               && !isomorphisms(f.dom(), fixtures::A4()).empty();
    }
    CHECK(found);
  }

  TEST_CASE("sampled sweeps are deterministic in the seed") {
    EnumConfig cfg;
    cfg.max_order     = 3;
    cfg.sample_budget = 5;
    cfg.seed          = 42;
    auto const a = serialize_report(run_sweep("permutability", cfg));
    auto const b = serialize_report(run_sweep("permutability", cfg));
    CHECK(a == b);
    EnumConfig plain;
    plain.max_order = 3;
    CHECK(run_sweep("permutability", cfg).instances_checked
          > run_sweep("permutability", plain).instances_checked);
  }
}
