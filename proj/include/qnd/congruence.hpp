#pragma once

#include <utility>
#include <vector>

#include "qnd/inner_group.hpp"
#include "qnd/partition.hpp"
#include "qnd/quandle.hpp"

namespace qnd {

  // An arbitrary binary relation on the carrier of `base`, stored as an
  // n x n bit matrix.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(Quandle base);
    Relation(Quandle base, std::vector<std::pair<elem, elem>> const& pairs);

    static Relation diagonal(Quandle const& base);
    static Relation of_partition(Quandle const& base, Partition const& p);

    Quandle const& base() const noexcept {
      return base_;
    }
    std::size_t order() const noexcept {
      return base_.order();
    }
    bool contains(elem a, elem b) const noexcept {
      return bits_[a * order() + b] != 0;
    }
    void insert(elem a, elem b) noexcept {
      bits_[a * order() + b] = 1;
    }

    std::vector<std::pair<elem, elem>> pairs() const;
    std::size_t                        size() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    // Closed under ◁ and ◁⁻¹ taken componentwise in base × base.
    bool is_subquandle() const;

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    Quandle           base_;
    std::vector<char> bits_;
  };

  class Congruence {
   public:
    Congruence() = default;
    // Throws NotACongruence unless `partition` is compatible with ◁.
    Congruence(Quandle base, Partition partition);

    static Congruence diagonal(Quandle const& base);

    Quandle const& base() const noexcept {
      return base_;
    }
    Partition const& partition() const noexcept {
      return partition_;
    }
    bool related(elem a, elem b) const noexcept {
      return partition_.same(a, b);
    }
    Relation relation() const {
      return Relation::of_partition(base_, partition_);
    }

    friend bool operator==(Congruence const&, Congruence const&) = default;

   private:
    Quandle   base_;
    Partition partition_;
  };

  bool is_congruence(Quandle const& q, Partition const& p);

  // Every congruence on q, via set partitions filtered by compatibility.
  std::vector<Congruence> congruences(Quandle const& q);

  Congruence kernel_congruence(Hom const& f);

  struct OrbitEquivalence {
    Partition partition;
    // Holds exactly when the subgroup is normal in Inn(Q).
    bool is_congruence;

    Relation   relation(Quandle const& q) const {
      return Relation::of_partition(q, partition);
    }
    // Throws NotACongruence when is_congruence is false.
    Congruence congruence(Quandle const& q) const;
  };

  // The orbit equivalence of a subgroup n of Inn(q). Throws
  // NotASubgroupOfInn if n is not contained in Inn(q).
  OrbitEquivalence orbit_congruence(Quandle const& q, PermGroup const& n);

  // The orbit congruence of Inn(q) itself, i.e. the connected components.
  Congruence inn_congruence(Quandle const& q);

  // S ∘ R = {(a, b) : ∃c, (a, c) ∈ R and (c, b) ∈ S}.
  Relation compose_relations(Relation const& s, Relation const& r);
  bool     relations_permute(Relation const& r, Relation const& s);

  Congruence meet(Congruence const& r, Congruence const& s);
  Congruence join(Congruence const& r, Congruence const& s);

  struct Quotient {
    Quandle quandle;
    Hom     projection;
  };

  // Classes are numbered in increasing order of their minimum element.
  Quotient quotient(Quandle const& q, Congruence const& r);

  // f(R) = {(f(a), f(a')) : (a, a') ∈ R}; the result lives on cod(f).
  Relation direct_image(Hom const& f, Relation const& r);

}  // namespace qnd
