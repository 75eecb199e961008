#pragma once

#include <string>
#include <vector>

#include "qnd/error.hpp"

namespace qnd {

  // An equivalence relation on {0, ..., n-1} stored as class_of[i] = the
  // minimum member of the block of i. Blocks are indexed 0, 1, ... in
  // increasing order of that minimum.
  class Partition {
   public:
    Partition() = default;

    // Canonicalizes an arbitrary labelling: i and j share a block iff
    // labels[i] == labels[j].
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& labels);

    static Partition discrete(std::size_t n);
    static Partition total(std::size_t n);

    std::size_t size() const noexcept {
      return class_of_.size();
    }
    std::size_t num_blocks() const noexcept {
      return reps_.size();
    }

    // Minimum member of the block containing i.
    elem rep(elem i) const noexcept {
      return class_of_[i];
    }
    // Index of the block containing i.
    std::size_t block_index(elem i) const noexcept {
      return index_of_[i];
    }
    elem block_rep(std::size_t block) const noexcept {
      return reps_[block];
    }
    bool same(elem i, elem j) const noexcept {
      return class_of_[i] == class_of_[j];
    }

    std::vector<elem> const& class_of() const noexcept {
      return class_of_;
    }
    std::vector<std::vector<elem>> blocks() const;

    // Every block of *this lies inside a block of other.
    bool refines(Partition const& other) const;
    bool is_discrete() const noexcept {
      return num_blocks() == size();
    }

    // e.g. "{0,1|2|3}"
    std::string to_string() const;

    friend bool operator==(Partition const& x, Partition const& y) {
      return x.class_of_ == y.class_of_;
    }

   private:
    explicit Partition(std::vector<elem> class_of);

    std::vector<elem>        class_of_;
    std::vector<std::size_t> index_of_;
    std::vector<elem>        reps_;
  };

  template <typename Label>
  Partition Partition::from_labels(std::vector<Label> const& labels) {
    std::vector<elem> class_of(labels.size());
    for (elem i = 0; i < labels.size(); ++i) {
      class_of[i] = i;
      for (elem j = 0; j < i; ++j) {
        if (labels[j] == labels[i]) {
          class_of[i] = class_of[j];
          break;
        }
      }
    }
    return Partition(std::move(class_of));
  }

  // Restricted-growth enumeration of all set partitions of {0, ..., n-1}.
  std::vector<Partition> set_partitions(std::size_t n);

}  // namespace qnd
