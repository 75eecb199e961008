#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnd/partition.hpp"
#include "qnd/quandle.hpp"

namespace qnd {

  class Permutation {
   public:
    Permutation() = default;
    // Throws ShapeError unless `images` is a bijection of {0, ..., n-1}.
    explicit Permutation(std::vector<elem> images);

    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept {
      return images_.size();
    }
    elem operator()(elem x) const noexcept {
      return images_[x];
    }
    std::vector<elem> const& images() const noexcept {
      return images_;
    }

    bool        is_identity() const noexcept;
    Permutation inverse() const;
    // Cycle notation without fixed points, "()" for the identity.
    std::string cycles() const;

    // (a * b)(x) = a(b(x))
    friend Permutation operator*(Permutation const& a, Permutation const& b);

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<elem> images_;
  };

  inline constexpr std::size_t kDefaultGroupCap = 3628800;  // 10!

  // A permutation group materialised as its full element list. elements()[0]
  // is the identity; the rest appear in breadth-first order from the
  // generators. words()[k] lists generator indices g1, ..., gm such that
  // elements()[k] = gen[gm] * ... * gen[g1] (g1 is applied first).
  class PermGroup {
   public:
    PermGroup() = default;

    // Closure of `generators` under composition. `labels` tags each
    // generator (for Inn(Q) the label of rho_b is b); pass an empty vector to
    // label generators by position.
    static PermGroup generated_by(std::size_t               degree,
                                  std::vector<Permutation>  generators,
                                  std::vector<elem>         labels = {},
                                  std::size_t cap = kDefaultGroupCap);

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::vector<Permutation> const& generators() const noexcept {
      return generators_;
    }
    std::vector<elem> const& labels() const noexcept {
      return labels_;
    }
    std::vector<Permutation> const& elements() const noexcept {
      return elements_;
    }
    std::vector<std::vector<std::size_t>> const& words() const noexcept {
      return words_;
    }

    std::optional<std::size_t> index_of(Permutation const& p) const;
    bool contains(Permutation const& p) const {
      return index_of(p).has_value();
    }

    Permutation evaluate(std::vector<std::size_t> const& word) const;

    // e.g. "rho_2*rho_0" (rho_0 applied first), "id" for the empty word.
    std::string word_string(std::size_t element_index) const;

    // Same element set.
    friend bool operator==(PermGroup const& x, PermGroup const& y) {
      return x.degree_ == y.degree_ && x.index_ == y.index_;
    }

   private:
    std::size_t                           degree_ = 0;
    std::vector<Permutation>              generators_;
    std::vector<elem>                     labels_;
    std::vector<Permutation>              elements_;
    std::vector<std::vector<std::size_t>> words_;
    std::map<Permutation, std::size_t>    index_;
  };

  // A homomorphism recorded on every element: images()[k] is the index in
  // cod() of the image of dom().elements()[k].
  class GroupHom {
   public:
    GroupHom(PermGroup dom, PermGroup cod, std::vector<std::size_t> images);

    PermGroup const& dom() const noexcept {
      return dom_;
    }
    PermGroup const& cod() const noexcept {
      return cod_;
    }
    std::vector<std::size_t> const& images() const noexcept {
      return images_;
    }

    Permutation const& image(std::size_t dom_index) const {
      return cod_.elements()[images_[dom_index]];
    }
    Permutation const& operator()(Permutation const& p) const;

    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const {
      return is_injective() && is_surjective();
    }

   private:
    PermGroup                dom_;
    PermGroup                cod_;
    std::vector<std::size_t> images_;
  };

  GroupHom identity_group_hom(PermGroup const& g);
  // psi ∘ phi
  GroupHom compose_group_homs(GroupHom const& psi, GroupHom const& phi);

  struct Pi0Result {
    Partition components;
    Quandle   quotient;
    Hom       unit;
  };

  // Right translation rho_b : a -> a ◁ b.
  Permutation rho(Quandle const& q, elem b);

  PermGroup inner_group(Quandle const& q, std::size_t cap = kDefaultGroupCap);

  Partition orbit_partition(PermGroup const& g, std::size_t n);

  Pi0Result pi0(Quandle const& q);
  bool      is_connected(Quandle const& q);

  // The map induced by f on connected components.
  Hom pi0_map(Hom const& f);

  // Inn(f) for a surjective f, determined on generators by
  // rho_a -> rho_f(a).
  GroupHom inn_hom(Hom const& f);

  PermGroup group_kernel(GroupHom const& phi);

  bool is_normal_subgroup(PermGroup const& n, PermGroup const& g);

}  // namespace qnd
