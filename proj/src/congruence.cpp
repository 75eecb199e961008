#include "qnd/congruence.hpp"

#include <algorithm>
#include <numeric>

namespace qnd {

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  Relation::Relation(Quandle base)
      : base_(std::move(base)), bits_(base_.order() * base_.order(), 0) {}

  Relation::Relation(Quandle base, std::vector<std::pair<elem, elem>> const& pairs)
      : Relation(std::move(base)) {
    for (auto [a, b] : pairs) {
      if (a >= order() || b >= order()) {
        throw ShapeError("relation pair out of range");
      }
      insert(a, b);
    }
  }

  Relation Relation::diagonal(Quandle const& base) {
    Relation r(base);
    for (elem a = 0; a < base.order(); ++a) {
      r.insert(a, a);
    }
    return r;
  }

  Relation Relation::of_partition(Quandle const& base, Partition const& p) {
    if (p.size() != base.order()) {
      throw BaseMismatch("partition size does not match the carrier");
    }
    Relation r(base);
    for (elem a = 0; a < base.order(); ++a) {
      for (elem b = 0; b < base.order(); ++b) {
        if (p.same(a, b)) {
          r.insert(a, b);
        }
      }
    }
    return r;
  }

  std::vector<std::pair<elem, elem>> Relation::pairs() const {
    std::vector<std::pair<elem, elem>> out;
    for (elem a = 0; a < order(); ++a) {
      for (elem b = 0; b < order(); ++b) {
        if (contains(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::size_t Relation::size() const {
    return static_cast<std::size_t>(std::ranges::count(bits_, char{1}));
  }

  bool Relation::is_reflexive() const {
    for (elem a = 0; a < order(); ++a) {
      if (!contains(a, a)) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_symmetric() const {
    for (elem a = 0; a < order(); ++a) {
      for (elem b = 0; b < order(); ++b) {
        if (contains(a, b) != contains(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_transitive() const {
    for (elem a = 0; a < order(); ++a) {
      for (elem b = 0; b < order(); ++b) {
        if (!contains(a, b)) {
          continue;
        }
        for (elem c = 0; c < order(); ++c) {
          if (contains(b, c) && !contains(a, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool Relation::is_subquandle() const {
    auto const ps = pairs();
    for (auto [a, b] : ps) {
      for (auto [c, d] : ps) {
        if (!contains(base_.op(a, c), base_.op(b, d))
            || !contains(base_.inv(a, c), base_.inv(b, d))) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  bool is_congruence(Quandle const& q, Partition const& p) {
    if (p.size() != q.order()) {
      throw BaseMismatch("partition size does not match the carrier");
    }
    // Compatibility of ◁ in each argument separately implies compatibility
    // with pairs; ◁⁻¹ is checked alongside.
    for (elem a = 0; a < q.order(); ++a) {
      for (elem b = 0; b < q.order(); ++b) {
        if (!p.same(a, b)) {
          continue;
        }
        for (elem c = 0; c < q.order(); ++c) {
          if (!p.same(q.op(a, c), q.op(b, c)) || !p.same(q.op(c, a), q.op(c, b))
              || !p.same(q.inv(a, c), q.inv(b, c))
              || !p.same(q.inv(c, a), q.inv(c, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Congruence::Congruence(Quandle base, Partition partition)
      : base_(std::move(base)), partition_(std::move(partition)) {
    if (!is_congruence(base_, partition_)) {
      throw NotACongruence(partition_.to_string() + " is not a congruence");
    }
  }

  Congruence Congruence::diagonal(Quandle const& base) {
    return Congruence(base, Partition::discrete(base.order()));
  }

  std::vector<Congruence> congruences(Quandle const& q) {
    std::vector<Congruence> out;
    for (auto& p : set_partitions(q.order())) {
      if (is_congruence(q, p)) {
        out.emplace_back(q, std::move(p));
      }
    }
    return out;
  }

  Congruence kernel_congruence(Hom const& f) {
    std::vector<elem> labels(f.map().begin(), f.map().end());
    return Congruence(f.dom(), Partition::from_labels(labels));
  }

  Congruence OrbitEquivalence::congruence(Quandle const& q) const {
    if (!is_congruence) {
      throw NotACongruence("orbit equivalence " + partition.to_string()
                           + " of a non-normal subgroup");
    }
    return Congruence(q, partition);
  }

  OrbitEquivalence orbit_congruence(Quandle const& q, PermGroup const& n) {
    PermGroup const inn = inner_group(q);
    if (n.degree() != q.order()) {
      throw NotASubgroupOfInn("subgroup degree does not match the carrier");
    }
    for (auto const& x : n.elements()) {
      if (!inn.contains(x)) {
        throw NotASubgroupOfInn(x.cycles() + " is not an inner automorphism");
      }
    }
    Partition  p      = orbit_partition(n, q.order());
    bool const is_con = is_congruence(q, p);
    if (is_con != is_normal_subgroup(n, inn)) {
      throw InternalError("orbit congruence/normality disagreement on "
                          + p.to_string());
    }
    return OrbitEquivalence{std::move(p), is_con};
  }

  Congruence inn_congruence(Quandle const& q) {
    return Congruence(q, pi0(q).components);
  }

  Relation compose_relations(Relation const& s, Relation const& r) {
    if (!(s.base() == r.base())) {
      throw BaseMismatch("compose_relations: relations on different quandles");
    }
    Relation out(r.base());
    std::size_t const n = r.order();
    for (elem a = 0; a < n; ++a) {
      for (elem c = 0; c < n; ++c) {
        if (!r.contains(a, c)) {
          continue;
        }
        for (elem b = 0; b < n; ++b) {
          if (s.contains(c, b)) {
            out.insert(a, b);
          }
        }
      }
    }
    return out;
  }

  bool relations_permute(Relation const& r, Relation const& s) {
    return compose_relations(s, r) == compose_relations(r, s);
  }

  Congruence meet(Congruence const& r, Congruence const& s) {
    if (!(r.base() == s.base())) {
      throw BaseMismatch("meet: congruences on different quandles");
    }
    std::vector<std::pair<elem, elem>> labels;
    for (elem a = 0; a < r.base().order(); ++a) {
      labels.emplace_back(r.partition().rep(a), s.partition().rep(a));
    }
    return Congruence(r.base(), Partition::from_labels(labels));
  }

  Congruence join(Congruence const& r, Congruence const& s) {
    if (!(r.base() == s.base())) {
      throw BaseMismatch("join: congruences on different quandles");
    }
    std::size_t const n = r.base().order();
    std::vector<elem> parent(n);
    std::iota(parent.begin(), parent.end(), elem{0});
    auto find = [&](elem x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    auto unite = [&](elem x, elem y) {
      elem rx = find(x), ry = find(y);
      if (rx != ry) {
        parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    };
    for (elem a = 0; a < n; ++a) {
      unite(a, r.partition().rep(a));
      unite(a, s.partition().rep(a));
    }
    std::vector<elem> labels(n);
    for (elem a = 0; a < n; ++a) {
      labels[a] = find(a);
    }
    Partition p = Partition::from_labels(labels);
    if (!is_congruence(r.base(), p)) {
      throw InternalError("join of congruences is not a congruence");
    }
    Congruence out(r.base(), std::move(p));
    Relation const rr = r.relation(), sr = s.relation();
    if (relations_permute(rr, sr) && !(compose_relations(sr, rr) == out.relation())) {
      throw InternalError("permuting congruences: join differs from S ∘ R");
    }
    return out;
  }

  Quotient quotient(Quandle const& q, Congruence const& r) {
    if (!(r.base() == q)) {
      throw BaseMismatch("quotient: congruence lives on another quandle");
    }
    Partition const&  p = r.partition();
    std::size_t const k = p.num_blocks();
    std::vector<elem> t(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        t[x * k + y] = p.block_index(q.op(p.block_rep(x), p.block_rep(y)));
      }
    }
    Quandle           qq = build_quandle_flat(k, std::move(t));
    std::vector<elem> proj(q.order());
    for (elem a = 0; a < q.order(); ++a) {
      proj[a] = p.block_index(a);
    }
    Hom projection = build_hom(q, qq, std::move(proj));
    return Quotient{std::move(qq), std::move(projection)};
  }

  namespace {
    // Rectangular boolean relation used only to evaluate f ∘ R ∘ f°.
    struct BoolMatrix {
      std::size_t       rows, cols;
      std::vector<char> bits;
      BoolMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}
      char&       at(std::size_t i, std::size_t j) { return bits[i * cols + j]; }
      char        at(std::size_t i, std::size_t j) const { return bits[i * cols + j]; }
    };

    // Relational composite "first x then y".
    BoolMatrix then(BoolMatrix const& x, BoolMatrix const& y) {
      BoolMatrix out(x.rows, y.cols);
      for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t k = 0; k < x.cols; ++k) {
          if (!x.at(i, k)) {
            continue;
          }
          for (std::size_t j = 0; j < y.cols; ++j) {
            if (y.at(k, j)) {
              out.at(i, j) = 1;
            }
          }
        }
      }
      return out;
    }
  }  // namespace

  Relation direct_image(Hom const& f, Relation const& r) {
    if (!(r.base() == f.dom())) {
      throw BaseMismatch("direct_image: relation is not on the domain of f");
    }
    std::size_t const na = f.dom().order(), nb = f.cod().order();
    Relation          out(f.cod());
    for (auto [a, b] : r.pairs()) {
      out.insert(f(a), f(b));
    }

    BoolMatrix graph(na, nb), opposite(nb, na), rel(na, na);
    for (elem a = 0; a < na; ++a) {
      graph.at(a, f(a))    = 1;
      opposite.at(f(a), a) = 1;
    }
    for (auto [a, b] : r.pairs()) {
      rel.at(a, b) = 1;
    }
    BoolMatrix const composite = then(then(opposite, rel), graph);
    for (elem x = 0; x < nb; ++x) {
      for (elem y = 0; y < nb; ++y) {
        if ((composite.at(x, y) != 0) != out.contains(x, y)) {
          throw InternalError("direct image differs from f ∘ R ∘ f°");
        }
      }
    }
    return out;
  }

}  // namespace qnd
