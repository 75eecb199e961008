#include "qnd/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qnd {

  namespace {
    constexpr std::size_t kHardOrderLimit = 6;

    void check_order(std::size_t n, EnumerateOptions const& opts) {
      if (n == 0) {
        throw ShapeError("quandle order must be at least 1");
      }
      if (n > kHardOrderLimit || (n > opts.max_order && !opts.allow_large)) {
        throw OrderTooLarge("enumeration of order " + std::to_string(n)
                            + " exceeds the configured bound");
      }
    }

    // Permutations of {0..n-1} fixing `fixed`, in lexicographic order.
    std::vector<std::vector<elem>> column_candidates(std::size_t n, elem fixed) {
      std::vector<std::vector<elem>> out;
      std::vector<elem>              p(n);
      std::iota(p.begin(), p.end(), elem{0});
      do {
        if (p[fixed] == fixed) {
          out.push_back(p);
        }
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }
  }  // namespace

  void for_each_quandle(std::size_t                                n,
                        std::function<void(Quandle const&)> const& visit,
                        EnumerateOptions const&                    opts) {
    check_order(n, opts);
    if (opts.shard_count == 0 || opts.shard_index >= opts.shard_count) {
      throw ShapeError("invalid shard specification");
    }
    std::vector<std::vector<std::vector<elem>>> candidates(n);
    for (elem j = 0; j < n; ++j) {
      candidates[j] = column_candidates(n, j);
      if (opts.shuffle_seed) {
        std::mt19937_64 rng(*opts.shuffle_seed + j);
        std::shuffle(candidates[j].begin(), candidates[j].end(), rng);
      }
    }

    // cols[j][i] = i ◁ j
    std::vector<std::vector<elem> const*> cols(n, nullptr);

    // Self-distributivity restricted to the columns assigned so far, for the
    // pairs (j, k) that involve the newly assigned column c.
    auto consistent = [&](elem c) {
      for (elem j = 0; j <= c; ++j) {
        for (elem k = 0; k <= c; ++k) {
          elem const m = (*cols[k])[j];
          if (m > c || (j != c && k != c && m != c)) {
            continue;
          }
          for (elem i = 0; i < n; ++i) {
            if ((*cols[k])[(*cols[j])[i]] != (*cols[m])[(*cols[k])[i]]) {
              return false;
            }
          }
        }
      }
      return true;
    };

    std::function<void(elem)> extend = [&](elem c) {
      if (c == n) {
        std::vector<elem> t(n * n);
        for (elem i = 0; i < n; ++i) {
          for (elem j = 0; j < n; ++j) {
            t[i * n + j] = (*cols[j])[i];
          }
        }
        visit(build_quandle_flat(n, std::move(t)));
        return;
      }
      auto const& cands = candidates[c];
      for (std::size_t idx = 0; idx < cands.size(); ++idx) {
        if (c == 0 && idx % opts.shard_count != opts.shard_index) {
          continue;
        }
        cols[c] = &cands[idx];
        if (consistent(c)) {
          extend(c + 1);
        }
      }
    };
    extend(0);
  }

  std::vector<Quandle> enumerate_quandles(std::size_t n, EnumerateOptions const& opts) {
    std::vector<Quandle> out;
    if (!opts.up_to_iso) {
      for_each_quandle(n, [&](Quandle const& q) { out.push_back(q); }, opts);
      return out;
    }
    std::set<Quandle> reps;
    for_each_quandle(n, [&](Quandle const& q) { reps.insert(canonical_form(q)); }, opts);
    return {reps.begin(), reps.end()};
  }

  std::vector<Quandle> enumerate_quandles(std::size_t n, bool up_to_iso) {
    EnumerateOptions opts;
    opts.up_to_iso = up_to_iso;
    return enumerate_quandles(n, opts);
  }

  Quandle canonical_form(Quandle const& q) {
    std::size_t const n = q.order();
    std::vector<elem> sigma(n);
    std::iota(sigma.begin(), sigma.end(), elem{0});
    std::vector<elem> best, t(n * n);
    do {
      for (elem i = 0; i < n; ++i) {
        for (elem j = 0; j < n; ++j) {
          t[sigma[i] * n + sigma[j]] = sigma[q.op(i, j)];
        }
      }
      if (best.empty() || t < best) {
        best = t;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return build_quandle_flat(n, std::move(best));
  }

  std::vector<Hom> enumerate_homs(Quandle const& a, Quandle const& b) {
    std::size_t const na = a.order(), nb = b.order();
    std::vector<Hom>  out;
    std::vector<elem> img(na);

    auto consistent = [&](elem c) {
      for (elem i = 0; i <= c; ++i) {
        for (elem j = 0; j <= c; ++j) {
          elem const m = a.op(i, j);
          if (m > c || (i != c && j != c && m != c)) {
            continue;
          }
          if (img[m] != b.op(img[i], img[j])) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<void(elem)> extend = [&](elem c) {
      if (c == na) {
        out.push_back(build_hom(a, b, img));
        return;
      }
      for (elem y = 0; y < nb; ++y) {
        img[c] = y;
        if (consistent(c)) {
          extend(c + 1);
        }
      }
    };
    extend(0);
    return out;
  }

  std::vector<Hom> enumerate_surjective_homs(Quandle const& a, Quandle const& b) {
    if (b.order() > a.order()) {
      return {};
    }
    std::vector<Hom> out;
    for (auto& h : enumerate_homs(a, b)) {
      if (is_surjective_hom(h)) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

  std::vector<std::vector<elem>> isomorphisms(Quandle const& a, Quandle const& b) {
    std::vector<std::vector<elem>> out;
    if (a.order() != b.order()) {
      return out;
    }
    for (auto const& h : enumerate_homs(a, b)) {
      if (is_injective_hom(h)) {
        out.emplace_back(h.map().begin(), h.map().end());
      }
    }
    return out;
  }

  std::vector<PermGroup> subgroups(PermGroup const& g, bool normal_only) {
    auto key_of = [&](PermGroup const& h) {
      std::vector<std::size_t> key;
      for (auto const& x : h.elements()) {
        key.push_back(*g.index_of(x));
      }
      std::sort(key.begin(), key.end());
      return key;
    };

    std::map<std::vector<std::size_t>, PermGroup> found;
    std::vector<PermGroup>                        queue;
    PermGroup trivial = PermGroup::generated_by(g.degree(), {});
    found.emplace(key_of(trivial), trivial);
    queue.push_back(std::move(trivial));

    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto const& x : g.elements()) {
        if (queue[k].contains(x)) {
          continue;
        }
        auto gens = queue[k].generators();
        gens.push_back(x);
        PermGroup bigger = PermGroup::generated_by(g.degree(), std::move(gens), {},
                                                   g.size());
        auto key = key_of(bigger);
        if (found.emplace(key, bigger).second) {
          queue.push_back(std::move(bigger));
        }
      }
    }

    std::vector<std::pair<std::vector<std::size_t>, PermGroup>> sorted(found.begin(),
                                                                       found.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](auto const& x, auto const& y) {
      return x.first.size() < y.first.size();
    });
    std::vector<PermGroup> out;
    for (auto& [key, h] : sorted) {
      if (!normal_only || is_normal_subgroup(h, g)) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

  Quandle sample_quandle(std::size_t n, std::mt19937_64& rng, std::size_t max_attempts) {
    std::vector<std::vector<std::vector<elem>>> candidates(n);
    for (elem j = 0; j < n; ++j) {
      candidates[j] = column_candidates(n, j);
    }
    std::vector<elem> t(n * n);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
      for (elem j = 0; j < n; ++j) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates[j].size() - 1);
        auto const& col = candidates[j][pick(rng)];
        for (elem i = 0; i < n; ++i) {
          t[i * n + j] = col[i];
        }
      }
      bool ok = true;
      for (elem i = 0; i < n && ok; ++i) {
        for (elem j = 0; j < n && ok; ++j) {
          for (elem k = 0; k < n && ok; ++k) {
            ok = t[t[i * n + j] * n + k] == t[t[i * n + k] * n + t[j * n + k]];
          }
        }
      }
      if (ok) {
        return build_quandle_flat(n, t);
      }
    }
    throw InternalError("sample_quandle: attempt budget exhausted");
  }

}  // namespace qnd
