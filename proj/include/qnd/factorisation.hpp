#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnd/congruence.hpp"
#include "qnd/inner_group.hpp"
#include "qnd/quandle.hpp"

namespace qnd {

  // Why a surjection (a, b) pair fails the E1 condition: (a, b) ∈ Eq(f)
  // but every inner automorphism sending a to b survives Inn(f).
  struct E1Witness {
    elem                     a, b;
    std::vector<std::string> linking;         // words in Inn(dom), e.g. "rho_2"
    std::vector<std::string> linking_cycles;  // same elements, cycle notation
    std::vector<std::string> images;          // their images in Inn(cod)
    std::vector<std::string> image_cycles;
  };

  struct ClassReport {
    bool in_E  = false;
    bool in_M  = false;
    bool in_E1 = false;
    bool in_M1 = false;
    // Set exactly when the corresponding flag is false.
    std::optional<std::pair<elem, elem>> e_witness;  // in Eq(f), different components
    std::optional<std::pair<elem, elem>> m_witness;  // distinct, in Eq(f) ∩ ~Inn
    std::optional<E1Witness>             e1_witness;
    std::optional<std::string>           m1_witness;  // non-trivial element of Ker(Inn(f))
  };

  struct Factorisation {
    Hom     first;
    Hom     second;
    Quandle middle;
  };

  // The apex carries the matched pairs in lexicographic order.
  struct PullbackResult {
    Quandle                            apex;
    Hom                                p1;
    Hom                                p2;
    std::vector<std::pair<elem, elem>> pairs;

    // Index in the apex of (x, y), if matched.
    std::optional<elem> index_of(elem x, elem y) const;
  };

  struct PushoutResult {
    Quandle    apex;
    Hom        fbar;  // cod(g) -> apex
    Hom        gbar;  // cod(f) -> apex
    Congruence join;  // Eq(f) ∨ Eq(g)
  };

  struct KernelPairReport {
    PullbackResult kernel_pair;         // Eq(f) as a quandle
    Pi0Result      kernel_pair_pi0;     // pi0(Eq(f))
    PullbackResult pi0_kernel_pair;     // Eq(pi0(f))
    Hom            comparison;          // pi0(Eq(f)) -> Eq(pi0(f))
    bool           preserved;           // comparison bijective
  };

  // Class-membership criteria, each through a single route. classify()
  // combines them and cross-checks the pairs that must agree.
  bool in_E_by_congruence(Hom const& f);
  bool inverted_by_pi0(Hom const& f);
  bool in_M_by_congruence(Hom const& f);
  bool in_E1(Hom const& f);
  bool in_M1(Hom const& f);

  ClassReport classify(Hom const& f);

  Factorisation factor_EM(Hom const& f);
  Factorisation factor_E1M1(Hom const& f);

  // Pullback of fbar : C -> D and gbar : B -> D, apex on pairs (c, b).
  PullbackResult pullback(Hom const& fbar, Hom const& gbar);

  // The map a -> (g(a), f(a)) into pullback(fbar, gbar), for a commuting
  // square fbar ∘ g = gbar ∘ f with f : A -> B and g : A -> C.
  Hom comparison_to_pullback(Hom const& f, Hom const& g, Hom const& fbar, Hom const& gbar);

  // Whether the naturality square of f against the unit of pi0 is a
  // pullback, i.e. whether (eta_A, f) : A -> pi0(A) ×_{pi0(B)} B is
  // bijective. square_is_pullback evaluates only that; is_trivial_extension
  // additionally cross-checks it against in_M_by_congruence.
  bool square_is_pullback(Hom const& f);
  bool is_trivial_extension(Hom const& f);

  PushoutResult pushout_of_surjections(Hom const& f, Hom const& g);

  // Requires f ∈ E1; returns whether A -> C ×_D B is surjective for the
  // pushout square of f and g.
  bool special_pushout_comparison_surjective(Hom const& f, Hom const& g);

  // The unique w with w ∘ e = u and m ∘ w = v, given v ∘ e = m ∘ u,
  // e ∈ E, m ∈ M.
  Hom orthogonal_fill(Hom const& e, Hom const& m, Hom const& u, Hom const& v);

  // phi : X -> pi0(B) with X trivial and phi surjective. Returns whether
  // pi0 of the pullback of eta_B along phi maps bijectively onto X.
  bool check_admissibility_instance(Quandle const& b, Hom const& phi);

  KernelPairReport kernel_pair_report(Hom const& f);
  bool             pi0_preserves_kernel_pair(Hom const& f);

  // Sections s of f (f ∘ s = id), found by exhaustive search.
  std::vector<Hom> sections(Hom const& f);

}  // namespace qnd
