#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qnd/inner_group.hpp"
#include "qnd/quandle.hpp"

namespace qnd {

  struct EnumerateOptions {
    bool up_to_iso = false;
    // Largest order accepted without allow_large.
    std::size_t max_order = 5;
    // Orders up to 6 become available with this set; above 6 is refused.
    bool allow_large = false;
    // Shuffle the per-column candidate lists (the output set must not change).
    std::optional<std::uint64_t> shuffle_seed;
    // Split the search on the choice of column 0: this call only explores
    // candidates whose index is congruent to shard_index modulo shard_count.
    std::size_t shard_index = 0;
    std::size_t shard_count = 1;
  };

  // Calls `visit` on every quandle table of order n, generated column by
  // column from permutations fixing the column index, with (A3) pruning.
  // Raw enumeration only; up_to_iso is ignored here.
  void for_each_quandle(std::size_t                                n,
                        std::function<void(Quandle const&)> const& visit,
                        EnumerateOptions const&                    opts = {});

  // With up_to_iso, one canonical representative per isomorphism class, in
  // increasing order of canonical table.
  std::vector<Quandle> enumerate_quandles(std::size_t n, EnumerateOptions const& opts = {});
  std::vector<Quandle> enumerate_quandles(std::size_t n, bool up_to_iso);

  // Lexicographically minimal relabelling over all n! bijections.
  Quandle canonical_form(Quandle const& q);

  // All isomorphisms a -> b as image arrays, by backtracking.
  std::vector<std::vector<elem>> isomorphisms(Quandle const& a, Quandle const& b);

  // All homomorphisms a -> b, by backtracking over images with pruning.
  std::vector<Hom> enumerate_homs(Quandle const& a, Quandle const& b);
  std::vector<Hom> enumerate_surjective_homs(Quandle const& a, Quandle const& b);

  // Every subgroup of g, obtained by closing subgroups under one extra
  // element at a time; sorted by size, then by element set.
  std::vector<PermGroup> subgroups(PermGroup const& g, bool normal_only = false);

  // Uniform choice of each column among the permutations fixing its index,
  // rejected until (A3) holds. Throws InternalError after `max_attempts`.
  Quandle sample_quandle(std::size_t     n,
                         std::mt19937_64& rng,
                         std::size_t     max_attempts = 100'000'000);

  ////////////////////////////////////////////////////////////////////////
  // Sweeps
  ////////////////////////////////////////////////////////////////////////

  struct EnumConfig {
    std::size_t   max_order     = 4;
    bool          up_to_iso     = true;
    // Extra random quandles of order max_order + 1 used as additional
    // instances (domains for the map-based claims).
    std::size_t   sample_budget = 0;
    std::uint64_t seed          = 0;
  };

  struct Counterexample {
    std::vector<Hom> maps;       // the maps involved, in claim order
    std::string      line;       // serialized form
  };

  struct SweepReport {
    std::string                 claim;
    std::size_t                 instances_checked = 0;
    bool                        holds             = true;
    std::vector<Counterexample> counterexamples;
  };

  std::vector<std::string> registered_claims();

  // Throws UnknownClaim for an unregistered id.
  SweepReport run_sweep(std::string const& claim, EnumConfig const& cfg);

  // Line-oriented text: a summary line, then one line per counterexample.
  std::string serialize_report(SweepReport const& report);

}  // namespace qnd
