#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qnd/congruence.hpp"
#include "qnd/enumeration.hpp"
#include "qnd/factorisation.hpp"
#include "qnd/io.hpp"

namespace qnd {

  namespace {

    // Surjections between census members, with lazily computed class flags.
    struct Surjection {
      Hom                 map;
      std::optional<bool> e, e1;
    };

    class InstanceSpace {
     public:
      explicit InstanceSpace(EnumConfig const& cfg) : cfg_(cfg) {
        EnumerateOptions opts;
        opts.up_to_iso   = cfg.up_to_iso;
        opts.max_order   = std::max<std::size_t>(cfg.max_order, 5);
        opts.allow_large = cfg.max_order > 5;
        for (std::size_t k = 1; k <= cfg.max_order; ++k) {
          for (auto& q : enumerate_quandles(k, opts)) {
            census_.push_back(std::move(q));
          }
        }
        domains_ = census_;
        if (cfg.sample_budget > 0) {
          std::mt19937_64 rng(cfg.seed);
          for (std::size_t s = 0; s < cfg.sample_budget; ++s) {
            domains_.push_back(sample_quandle(cfg.max_order + 1, rng));
          }
        }
      }

      std::vector<Quandle> const& census() const {
        return census_;
      }
      // Census followed by the samples.
      std::vector<Quandle> const& domains() const {
        return domains_;
      }

      // Surjections from domains()[i] onto census members of order <= |A|.
      std::vector<Surjection>& surjections_from(std::size_t i) {
        auto it = surj_.find(i);
        if (it == surj_.end()) {
          std::vector<Surjection> out;
          for (auto const& b : census_) {
            if (b.order() > domains_[i].order()) {
              continue;
            }
            for (auto& h : enumerate_surjective_homs(domains_[i], b)) {
              out.push_back(Surjection{std::move(h), std::nullopt, std::nullopt});
            }
          }
          it = surj_.emplace(i, std::move(out)).first;
        }
        return it->second;
      }

      std::size_t census_index(Quandle const& q) const {
        auto it = std::find(census_.begin(), census_.end(), q);
        return static_cast<std::size_t>(it - census_.begin());
      }

      template <typename Fn>
      void for_each_surjection(Fn&& fn) {
        for (std::size_t i = 0; i < domains_.size(); ++i) {
          for (auto& s : surjections_from(i)) {
            fn(s);
          }
        }
      }

     private:
      EnumConfig                                     cfg_;
      std::vector<Quandle>                           census_;
      std::vector<Quandle>                           domains_;
      std::map<std::size_t, std::vector<Surjection>> surj_;
    };

    bool flag_e(Surjection& s) {
      if (!s.e) {
        s.e = in_E_by_congruence(s.map);
      }
      return *s.e;
    }

    bool flag_e1(Surjection& s) {
      if (!s.e1) {
        s.e1 = in_E1(s.map);
      }
      return *s.e1;
    }

    std::string describe(std::string const& claim, std::vector<Hom> const& maps,
                         std::string const& note = {}) {
      std::string line = claim;
      for (std::size_t k = 0; k < maps.size(); ++k) {
        line += " | map" + std::to_string(k) + " dom=" + inline_quandle(maps[k].dom())
                + " cod=" + inline_quandle(maps[k].cod()) + " images=" + inline_map(maps[k]);
      }
      if (!note.empty()) {
        line += " | " + note;
      }
      return line;
    }

    void record(SweepReport& r, std::vector<Hom> maps, std::string const& note = {}) {
      r.holds = false;
      std::string line = describe(r.claim, maps, note);
      r.counterexamples.push_back(Counterexample{std::move(maps), std::move(line)});
    }

    // Runs `check` and records a counterexample when it returns false or
    // throws a library error.
    void check_instance(SweepReport& r, std::vector<Hom> const& maps,
                        std::function<bool()> const& check) {
      ++r.instances_checked;
      try {
        if (!check()) {
          record(r, maps);
        }
      } catch (Error const& e) {
        record(r, maps, std::string("error: ") + e.what());
      }
    }

    using SweepFn = std::function<void(InstanceSpace&, SweepReport&)>;

    void sweep_permutability(InstanceSpace& space, SweepReport& r) {
      for (auto const& q : space.domains()) {
        auto const normals = subgroups(inner_group(q), true);
        auto const congs   = congruences(q);
        for (auto const& n : normals) {
          Relation const orbit
              = Relation::of_partition(q, orbit_partition(n, q.order()));
          for (auto const& c : congs) {
            check_instance(r, {identity_hom(q)}, [&] {
              return relations_permute(c.relation(), orbit);
            });
          }
        }
      }
    }

    void sweep_normality(InstanceSpace& space, SweepReport& r) {
      for (auto const& q : space.domains()) {
        PermGroup const inn = inner_group(q);
        for (auto const& n : subgroups(inn, false)) {
          check_instance(r, {identity_hom(q)}, [&] {
            return is_congruence(q, orbit_partition(n, q.order()))
                   == is_normal_subgroup(n, inn);
          });
        }
      }
    }

    void sweep_induced_image(InstanceSpace& space, SweepReport& r) {
      space.for_each_surjection([&](Surjection& s) {
        check_instance(r, {s.map}, [&] {
          return direct_image(s.map, inn_congruence(s.map.dom()).relation())
                 == inn_congruence(s.map.cod()).relation();
        });
      });
    }

    void sweep_factor_em(InstanceSpace& space, SweepReport& r) {
      space.for_each_surjection([&](Surjection& s) {
        check_instance(r, {s.map}, [&] {
          Factorisation const fac = factor_EM(s.map);
          return compose_homs(fac.second, fac.first) == s.map
                 && is_surjective_hom(fac.first) && is_surjective_hom(fac.second)
                 && in_E_by_congruence(fac.first) && in_M_by_congruence(fac.second);
        });
      });
    }

    void sweep_factor_rigid(InstanceSpace& space, SweepReport& r) {
      space.for_each_surjection([&](Surjection& s) {
        check_instance(r, {s.map}, [&] {
          Factorisation const fac = factor_E1M1(s.map);
          return compose_homs(fac.second, fac.first) == s.map
                 && is_surjective_hom(fac.first) && is_surjective_hom(fac.second)
                 && in_E1(fac.first) && inn_hom(fac.second).is_isomorphism();
        });
      });
    }

    void sweep_inclusions(InstanceSpace& space, SweepReport& r) {
      space.for_each_surjection([&](Surjection& s) {
        check_instance(r, {s.map}, [&] {
          bool const e1 = flag_e1(s), e = flag_e(s);
          bool const m = in_M_by_congruence(s.map), m1 = in_M1(s.map);
          return (!e1 || e) && (!m || m1);
        });
      });
    }

    void sweep_characterization(InstanceSpace& space, SweepReport& r) {
      space.for_each_surjection([&](Surjection& s) {
        check_instance(r, {s.map}, [&] {
          return in_E_by_congruence(s.map) == inverted_by_pi0(s.map)
                 && in_M_by_congruence(s.map) == square_is_pullback(s.map);
        });
      });
    }

    // Pairs g : A -> X, f : X -> M of composable surjections.
    void sweep_cancellation(InstanceSpace& space, SweepReport& r, bool rigid) {
      auto flag = rigid ? flag_e1 : flag_e;
      auto test = rigid ? in_E1 : in_E_by_congruence;
      for (std::size_t i = 0; i < space.domains().size(); ++i) {
        for (auto& g : space.surjections_from(i)) {
          auto& fs = space.surjections_from(space.census_index(g.map.cod()));
          for (auto& f : fs) {
            ++r.instances_checked;
            try {
              if (!flag(f) || !test(compose_homs(f.map, g.map))) {
                continue;
              }
              if (!flag(g)) {
                record(r, {g.map, f.map});
              }
            } catch (Error const& e) {
              record(r, {g.map, f.map}, std::string("error: ") + e.what());
            }
          }
        }
      }
    }

    void sweep_admissibility(InstanceSpace& space, SweepReport& r) {
      std::size_t max_x = 0;
      for (auto const& q : space.census()) {
        max_x = std::max(max_x, q.order());
      }
      for (auto const& b : space.domains()) {
        Pi0Result const pb = pi0(b);
        for (std::size_t m = pb.quotient.order(); m <= max_x; ++m) {
          for (auto const& phi : enumerate_surjective_homs(trivial_quandle(m), pb.quotient)) {
            check_instance(r, {pb.unit, phi},
                           [&] { return check_admissibility_instance(b, phi); });
          }
        }
      }
    }

    void sweep_special_pushout(InstanceSpace& space, SweepReport& r) {
      for (std::size_t i = 0; i < space.domains().size(); ++i) {
        auto& surj = space.surjections_from(i);
        for (auto& f : surj) {
          if (!flag_e1(f)) {
            continue;
          }
          for (auto& g : surj) {
            check_instance(r, {f.map, g.map}, [&] {
              return special_pushout_comparison_surjective(f.map, g.map);
            });
          }
        }
      }
    }

    void sweep_kernel_pair(InstanceSpace& space, SweepReport& r) {
      space.for_each_surjection([&](Surjection& s) {
        check_instance(r, {s.map}, [&] { return pi0_preserves_kernel_pair(s.map); });
      });
    }

    // Counts maps w : B -> C (not necessarily homomorphisms) with
    // w ∘ e = u and m ∘ w = v.
    std::size_t count_fills(Hom const& e, Hom const& m, Hom const& u, Hom const& v,
                            std::vector<elem> const& expected, bool& expected_found) {
      std::size_t const nb = e.cod().order(), nc = m.dom().order();
      std::vector<elem> w(nb, 0);
      std::size_t       count = 0;
      expected_found          = false;
      while (true) {
        bool ok = true;
        for (elem a = 0; a < e.dom().order() && ok; ++a) {
          ok = w[e(a)] == u(a);
        }
        for (elem y = 0; y < nb && ok; ++y) {
          ok = m(w[y]) == v(y);
        }
        if (ok) {
          ++count;
          expected_found = expected_found || w == expected;
        }
        std::size_t pos = 0;
        while (pos < nb && ++w[pos] == nc) {
          w[pos++] = 0;
        }
        if (pos == nb) {
          break;
        }
      }
      return count;
    }

    void sweep_orthogonality(InstanceSpace& space, SweepReport& r) {
      auto const& census = space.census();
      for (std::size_t ia = 0; ia < census.size(); ++ia) {
        for (auto& e : space.surjections_from(ia)) {
          if (!flag_e(e)) {
            continue;
          }
          for (std::size_t ic = 0; ic < census.size(); ++ic) {
            auto const us = enumerate_homs(census[ia], census[ic]);
            for (auto& m : space.surjections_from(ic)) {
              if (!in_M_by_congruence(m.map)) {
                continue;
              }
              auto const vs = enumerate_homs(e.map.cod(), m.map.cod());
              for (auto const& u : us) {
                for (auto const& v : vs) {
                  if (!(compose_homs(v, e.map) == compose_homs(m.map, u))) {
                    continue;
                  }
                  check_instance(r, {e.map, m.map, u, v}, [&] {
                    Hom const         w = orthogonal_fill(e.map, m.map, u, v);
                    std::vector<elem> expected(w.map().begin(), w.map().end());
                    bool              found = false;
                    return count_fills(e.map, m.map, u, v, expected, found) == 1 && found;
                  });
                }
              }
            }
          }
        }
      }
    }

    std::map<std::string, SweepFn> const& registry() {
      static std::map<std::string, SweepFn> const reg = {
          {"permutability", sweep_permutability},
          {"normality", sweep_normality},
          {"induced-image", sweep_induced_image},
          {"factor-em", sweep_factor_em},
          {"factor-rigid", sweep_factor_rigid},
          {"inclusions", sweep_inclusions},
          {"characterization", sweep_characterization},
          {"cancellation-e",
           [](InstanceSpace& s, SweepReport& r) { sweep_cancellation(s, r, false); }},
          {"cancellation-e1",
           [](InstanceSpace& s, SweepReport& r) { sweep_cancellation(s, r, true); }},
          {"admissibility", sweep_admissibility},
          {"special-pushout", sweep_special_pushout},
          {"kernel-pair", sweep_kernel_pair},
          {"orthogonality", sweep_orthogonality},
      };
      return reg;
    }

  }  // namespace

  std::vector<std::string> registered_claims() {
    std::vector<std::string> out;
    for (auto const& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }

  SweepReport run_sweep(std::string const& claim, EnumConfig const& cfg) {
    auto it = registry().find(claim);
    if (it == registry().end()) {
      throw UnknownClaim("unknown claim: " + claim);
    }
    if (cfg.max_order < 1) {
      throw ShapeError("max_order must be at least 1");
    }
    SweepReport   report;
    report.claim = claim;
    InstanceSpace space(cfg);
    it->second(space, report);
    return report;
  }

  std::string serialize_report(SweepReport const& report) {
    std::ostringstream out;
    out << report.claim << ": " << (report.holds ? "holds" : "fails") << " ("
        << report.instances_checked << " instances";
    if (!report.holds) {
      out << ", " << report.counterexamples.size() << " counterexamples";
    }
    out << ")\n";
    for (auto const& c : report.counterexamples) {
      out << c.line << "\n";
    }
    return out.str();
  }

}  // namespace qnd
