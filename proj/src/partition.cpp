#include "qnd/partition.hpp"

#include <algorithm>
#include <functional>

namespace qnd {

  Partition::Partition(std::vector<elem> class_of)
      : class_of_(std::move(class_of)), index_of_(class_of_.size()) {
    for (elem i = 0; i < class_of_.size(); ++i) {
      if (class_of_[i] == i) {
        index_of_[i] = reps_.size();
        reps_.push_back(i);
      } else {
        index_of_[i] = index_of_[class_of_[i]];
      }
    }
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<elem> c(n);
    for (elem i = 0; i < n; ++i) {
      c[i] = i;
    }
    return Partition(std::move(c));
  }

  Partition Partition::total(std::size_t n) {
    return Partition(std::vector<elem>(n, 0));
  }

  std::vector<std::vector<elem>> Partition::blocks() const {
    std::vector<std::vector<elem>> out(num_blocks());
    for (elem i = 0; i < size(); ++i) {
      out[index_of_[i]].push_back(i);
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    for (elem i = 0; i < size(); ++i) {
      if (!other.same(i, class_of_[i])) {
        return false;
      }
    }
    return true;
  }

  std::string Partition::to_string() const {
    std::string out = "{";
    bool first_block = true;
    for (auto const& block : blocks()) {
      if (!first_block) {
        out += "|";
      }
      first_block = false;
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k > 0) {
          out += ",";
        }
        out += std::to_string(block[k]);
      }
    }
    return out + "}";
  }

  std::vector<Partition> set_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> growth(n, 0);
    std::function<void(std::size_t, std::size_t)> extend
        = [&](std::size_t pos, std::size_t max_used) {
            if (pos == n) {
              out.push_back(Partition::from_labels(growth));
              return;
            }
            for (std::size_t b = 0; b <= max_used + 1; ++b) {
              growth[pos] = b;
              extend(pos + 1, std::max(max_used, b));
            }
          };
    if (n == 0) {
      return out;
    }
    growth[0] = 0;
    extend(1, 0);
    return out;
  }

}  // namespace qnd
