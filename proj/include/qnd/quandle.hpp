#pragma once

#include <span>
#include <vector>

#include "qnd/error.hpp"

namespace qnd {

  // A finite quandle on the carrier {0, ..., n-1}. Only the table of the
  // right action is supplied; the inverse operation is derived columnwise.
  // Instances can only be obtained through build_quandle and the helpers
  // below, so every Quandle in circulation satisfies (A1)-(A3).
  class Quandle {
   public:
    Quandle() = default;

    std::size_t order() const noexcept {
      return n_;
    }

    // i ◁ j
    elem op(elem i, elem j) const noexcept {
      return table_[i * n_ + j];
    }

    // i ◁⁻¹ j
    elem inv(elem i, elem j) const noexcept {
      return inv_table_[i * n_ + j];
    }

    std::span<elem const> table() const noexcept {
      return table_;
    }

    std::span<elem const> inv_table() const noexcept {
      return inv_table_;
    }

    std::vector<std::vector<elem>> rows() const;

    friend bool operator==(Quandle const& x, Quandle const& y) {
      return x.n_ == y.n_ && x.table_ == y.table_;
    }

    friend auto operator<=>(Quandle const& x, Quandle const& y) {
      if (auto c = x.n_ <=> y.n_; c != 0) {
        return c;
      }
      return x.table_ <=> y.table_;
    }

   private:
    friend Quandle build_quandle_flat(std::size_t, std::vector<elem>);

    std::size_t       n_ = 0;
    std::vector<elem> table_;
    std::vector<elem> inv_table_;
  };

  // Validates (A1)-(A3) with the plain triple loop and throws AxiomViolation
  // naming the first failing identity.
  Quandle build_quandle(std::vector<std::vector<elem>> const& table);

  // Same, from a row-major n*n table.
  Quandle build_quandle_flat(std::size_t n, std::vector<elem> table);

  Quandle trivial_quandle(std::size_t n);

  // Dihedral quandle of order n: i ◁ j = 2j - i (mod n).
  Quandle dihedral_quandle(std::size_t n);

  // Carrier index of (i, j) is i * |Q2| + j.
  Quandle product_quandle(Quandle const& q1, Quandle const& q2);

  bool subquandle_check(Quandle const& q, std::span<elem const> subset);

  // Subquandle on `subset` relabelled 0..k-1 in the given order.
  Quandle restrict_to(Quandle const& q, std::span<elem const> subset);

  bool is_involutive(Quandle const& q);
  bool is_trivial(Quandle const& q);

  // q relabelled by the bijection `sigma`: the result has
  // sigma(i) ◁ sigma(j) = sigma(i ◁ j).
  Quandle relabel(Quandle const& q, std::span<elem const> sigma);

  class Hom {
   public:
    Hom() = default;

    Quandle const& dom() const noexcept {
      return dom_;
    }
    Quandle const& cod() const noexcept {
      return cod_;
    }
    std::span<elem const> map() const noexcept {
      return map_;
    }
    elem operator()(elem x) const noexcept {
      return map_[x];
    }

    friend bool operator==(Hom const&, Hom const&) = default;

   private:
    friend Hom build_hom(Quandle const&, Quandle const&, std::vector<elem>);

    Quandle           dom_;
    Quandle           cod_;
    std::vector<elem> map_;
  };

  Hom build_hom(Quandle const& dom, Quandle const& cod, std::vector<elem> map);
  Hom identity_hom(Quandle const& q);

  bool is_surjective_hom(Hom const& h);
  bool is_injective_hom(Hom const& h);
  inline bool is_bijective_hom(Hom const& h) {
    return is_surjective_hom(h) && is_injective_hom(h);
  }

  // g ∘ f
  Hom compose_homs(Hom const& g, Hom const& f);

  // Projections out of product_quandle(q1, q2).
  Hom product_projection_left(Quandle const& q1, Quandle const& q2);
  Hom product_projection_right(Quandle const& q1, Quandle const& q2);

}  // namespace qnd
