#include "qnd/quandle.hpp"

#include <algorithm>
#include <string>

namespace qnd {

  namespace {
    std::string triple(elem i, elem j, elem k) {
      return "(" + std::to_string(i) + ", " + std::to_string(j) + ", "
             + std::to_string(k) + ")";
    }
  }  // namespace

  std::vector<std::vector<elem>> Quandle::rows() const {
    std::vector<std::vector<elem>> out(n_, std::vector<elem>(n_));
    for (elem i = 0; i < n_; ++i) {
      for (elem j = 0; j < n_; ++j) {
        out[i][j] = op(i, j);
      }
    }
    return out;
  }

  Quandle build_quandle(std::vector<std::vector<elem>> const& table) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw ShapeError("quandle table must have at least one row");
    }
    std::vector<elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw ShapeError("row " + std::to_string(i) + " has "
                         + std::to_string(table[i].size())
                         + " entries, expected " + std::to_string(n));
      }
      flat.insert(flat.end(), table[i].begin(), table[i].end());
    }
    return build_quandle_flat(n, std::move(flat));
  }

  Quandle build_quandle_flat(std::size_t n, std::vector<elem> table) {
    if (n == 0 || table.size() != n * n) {
      throw ShapeError("table is not square");
    }
    for (elem x : table) {
      if (x >= n) {
        throw ShapeError("table entry " + std::to_string(x)
                         + " out of range for order " + std::to_string(n));
      }
    }
    auto at = [&](elem i, elem j) { return table[i * n + j]; };

    for (elem i = 0; i < n; ++i) {
      if (at(i, i) != i) {
        throw AxiomViolation(Axiom::A1, i, i, i,
                             "A1 fails: " + std::to_string(i) + " ◁ "
                                 + std::to_string(i) + " = "
                                 + std::to_string(at(i, i)));
      }
    }

    std::vector<elem> inv(n * n);
    for (elem j = 0; j < n; ++j) {
      std::vector<elem> preimage(n, n);
      for (elem i = 0; i < n; ++i) {
        elem const y = at(i, j);
        if (preimage[y] != n) {
          throw AxiomViolation(
              Axiom::A2, preimage[y], i, j,
              "A2 fails: column " + std::to_string(j) + " sends both "
                  + std::to_string(preimage[y]) + " and " + std::to_string(i)
                  + " to " + std::to_string(y));
        }
        preimage[y] = i;
      }
      for (elem y = 0; y < n; ++y) {
        inv[y * n + j] = preimage[y];
      }
    }

    auto inv_at = [&](elem i, elem j) { return inv[i * n + j]; };
    for (elem i = 0; i < n; ++i) {
      for (elem j = 0; j < n; ++j) {
        for (elem k = 0; k < n; ++k) {
          if (at(at(i, j), k) != at(at(i, k), at(j, k))) {
            throw AxiomViolation(Axiom::A3, i, j, k,
                                 "A3 fails at " + triple(i, j, k));
          }
          if (inv_at(inv_at(i, j), k) != inv_at(inv_at(i, k), inv_at(j, k))) {
            throw AxiomViolation(Axiom::A3, i, j, k,
                                 "A3 (inverse form) fails at "
                                     + triple(i, j, k));
          }
        }
      }
    }

    Quandle q;
    q.n_         = n;
    q.table_     = std::move(table);
    q.inv_table_ = std::move(inv);
    return q;
  }

  Quandle trivial_quandle(std::size_t n) {
    std::vector<elem> t(n * n);
    for (elem i = 0; i < n; ++i) {
      for (elem j = 0; j < n; ++j) {
        t[i * n + j] = i;
      }
    }
    return build_quandle_flat(n, std::move(t));
  }

  Quandle dihedral_quandle(std::size_t n) {
    std::vector<elem> t(n * n);
    for (elem i = 0; i < n; ++i) {
      for (elem j = 0; j < n; ++j) {
        t[i * n + j] = (2 * j + n - i) % n;
      }
    }
    return build_quandle_flat(n, std::move(t));
  }

  Quandle product_quandle(Quandle const& q1, Quandle const& q2) {
    std::size_t const n1 = q1.order(), n2 = q2.order(), n = n1 * n2;
    std::vector<elem> t(n * n);
    for (elem x = 0; x < n; ++x) {
      for (elem y = 0; y < n; ++y) {
        t[x * n + y] = q1.op(x / n2, y / n2) * n2 + q2.op(x % n2, y % n2);
      }
    }
    return build_quandle_flat(n, std::move(t));
  }

  bool subquandle_check(Quandle const& q, std::span<elem const> subset) {
    std::vector<bool> in(q.order(), false);
    for (elem x : subset) {
      in[x] = true;
    }
    for (elem x : subset) {
      for (elem y : subset) {
        if (!in[q.op(x, y)] || !in[q.inv(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  Quandle restrict_to(Quandle const& q, std::span<elem const> subset) {
    std::size_t const  k = subset.size();
    std::vector<elem>  position(q.order(), q.order());
    for (elem idx = 0; idx < k; ++idx) {
      position[subset[idx]] = idx;
    }
    std::vector<elem> t(k * k);
    for (elem a = 0; a < k; ++a) {
      for (elem b = 0; b < k; ++b) {
        elem const p = position[q.op(subset[a], subset[b])];
        if (p == q.order()) {
          throw PreconditionViolated("subset is not closed under ◁");
        }
        t[a * k + b] = p;
      }
    }
    return build_quandle_flat(k, std::move(t));
  }

  bool is_involutive(Quandle const& q) {
    return std::ranges::equal(q.table(), q.inv_table());
  }

  bool is_trivial(Quandle const& q) {
    for (elem i = 0; i < q.order(); ++i) {
      for (elem j = 0; j < q.order(); ++j) {
        if (q.op(i, j) != i) {
          return false;
        }
      }
    }
    return true;
  }

  Quandle relabel(Quandle const& q, std::span<elem const> sigma) {
    std::size_t const n = q.order();
    std::vector<elem> t(n * n);
    for (elem i = 0; i < n; ++i) {
      for (elem j = 0; j < n; ++j) {
        t[sigma[i] * n + sigma[j]] = sigma[q.op(i, j)];
      }
    }
    return build_quandle_flat(n, std::move(t));
  }

  Hom build_hom(Quandle const& dom, Quandle const& cod, std::vector<elem> map) {
    if (map.size() != dom.order()) {
      throw ShapeError("map has length " + std::to_string(map.size())
                       + ", domain has order " + std::to_string(dom.order()));
    }
    for (elem y : map) {
      if (y >= cod.order()) {
        throw ShapeError("image " + std::to_string(y)
                         + " outside codomain of order "
                         + std::to_string(cod.order()));
      }
    }
    for (elem i = 0; i < dom.order(); ++i) {
      for (elem j = 0; j < dom.order(); ++j) {
        if (map[dom.op(i, j)] != cod.op(map[i], map[j])
            || map[dom.inv(i, j)] != cod.inv(map[i], map[j])) {
          throw NotAHomomorphism(i, j,
                                 "map does not preserve the operation at ("
                                     + std::to_string(i) + ", "
                                     + std::to_string(j) + ")");
        }
      }
    }
    Hom h;
    h.dom_ = dom;
    h.cod_ = cod;
    h.map_ = std::move(map);
    return h;
  }

  Hom identity_hom(Quandle const& q) {
    std::vector<elem> m(q.order());
    for (elem i = 0; i < q.order(); ++i) {
      m[i] = i;
    }
    return build_hom(q, q, std::move(m));
  }

  bool is_surjective_hom(Hom const& h) {
    std::vector<bool> hit(h.cod().order(), false);
    for (elem y : h.map()) {
      hit[y] = true;
    }
    return std::ranges::all_of(hit, [](bool b) { return b; });
  }

  bool is_injective_hom(Hom const& h) {
    std::vector<bool> hit(h.cod().order(), false);
    for (elem y : h.map()) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  Hom compose_homs(Hom const& g, Hom const& f) {
    if (!(f.cod() == g.dom())) {
      throw DomainMismatch("compose_homs: codomain of f is not the domain of g");
    }
    std::vector<elem> m(f.dom().order());
    for (elem i = 0; i < m.size(); ++i) {
      m[i] = g(f(i));
    }
    return build_hom(f.dom(), g.cod(), std::move(m));
  }

  Hom product_projection_left(Quandle const& q1, Quandle const& q2) {
    std::vector<elem> m(q1.order() * q2.order());
    for (elem x = 0; x < m.size(); ++x) {
      m[x] = x / q2.order();
    }
    return build_hom(product_quandle(q1, q2), q1, std::move(m));
  }

  Hom product_projection_right(Quandle const& q1, Quandle const& q2) {
    std::vector<elem> m(q1.order() * q2.order());
    for (elem x = 0; x < m.size(); ++x) {
      m[x] = x % q2.order();
    }
    return build_hom(product_quandle(q1, q2), q2, std::move(m));
  }

}  // namespace qnd
