#include "qnd/inner_group.hpp"

#include <algorithm>
#include <numeric>

namespace qnd {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<elem> images)
      : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (elem y : images_) {
      if (y >= images_.size() || seen[y]) {
        throw ShapeError("images do not form a bijection");
      }
      seen[y] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<elem> id(n);
    std::iota(id.begin(), id.end(), elem{0});
    return Permutation(std::move(id));
  }

  bool Permutation::is_identity() const noexcept {
    for (elem i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    std::vector<elem> inv(images_.size());
    for (elem i = 0; i < images_.size(); ++i) {
      inv[images_[i]] = i;
    }
    return Permutation(std::move(inv));
  }

  std::string Permutation::cycles() const {
    std::string       out;
    std::vector<bool> done(degree(), false);
    for (elem start = 0; start < degree(); ++start) {
      if (done[start] || images_[start] == start) {
        continue;
      }
      out += "(";
      elem x = start;
      do {
        if (x != start) {
          out += " ";
        }
        out += std::to_string(x);
        done[x] = true;
        x       = images_[x];
      } while (x != start);
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  Permutation operator*(Permutation const& a, Permutation const& b) {
    std::vector<elem> out(b.degree());
    for (elem x = 0; x < out.size(); ++x) {
      out[x] = a(b(x));
    }
    Permutation p;
    p.images_ = std::move(out);
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  PermGroup PermGroup::generated_by(std::size_t              degree,
                                    std::vector<Permutation> generators,
                                    std::vector<elem>        labels,
                                    std::size_t              cap) {
    PermGroup g;
    g.degree_ = degree;
    if (labels.empty()) {
      labels.resize(generators.size());
      std::iota(labels.begin(), labels.end(), elem{0});
    }
    if (labels.size() != generators.size()) {
      throw ShapeError("one label per generator required");
    }
    for (auto const& p : generators) {
      if (p.degree() != degree) {
        throw ShapeError("generator degree mismatch");
      }
    }
    g.generators_ = std::move(generators);
    g.labels_     = std::move(labels);

    g.elements_.push_back(Permutation::identity(degree));
    g.words_.emplace_back();
    g.index_.emplace(g.elements_.back(), 0);

    for (std::size_t k = 0; k < g.elements_.size(); ++k) {
      for (std::size_t gi = 0; gi < g.generators_.size(); ++gi) {
        Permutation next = g.generators_[gi] * g.elements_[k];
        if (g.index_.contains(next)) {
          continue;
        }
        if (g.elements_.size() >= cap) {
          throw GroupTooLarge("group closure exceeds cap of "
                              + std::to_string(cap) + " elements");
        }
        auto word = g.words_[k];
        word.push_back(gi);
        g.index_.emplace(next, g.elements_.size());
        g.elements_.push_back(std::move(next));
        g.words_.push_back(std::move(word));
      }
    }
    return g;
  }

  std::optional<std::size_t> PermGroup::index_of(Permutation const& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Permutation PermGroup::evaluate(std::vector<std::size_t> const& word) const {
    Permutation out = Permutation::identity(degree_);
    for (std::size_t gi : word) {
      out = generators_[gi] * out;
    }
    return out;
  }

  std::string PermGroup::word_string(std::size_t element_index) const {
    auto const& word = words_[element_index];
    if (word.empty()) {
      return "id";
    }
    std::string out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (!out.empty()) {
        out += "*";
      }
      out += "rho_" + std::to_string(labels_[*it]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupHom
  ////////////////////////////////////////////////////////////////////////

  GroupHom::GroupHom(PermGroup dom, PermGroup cod, std::vector<std::size_t> images)
      : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
    if (images_.size() != dom_.size()) {
      throw ShapeError("group hom needs one image per domain element");
    }
    for (std::size_t y : images_) {
      if (y >= cod_.size()) {
        throw ShapeError("group hom image out of range");
      }
    }
    if (!images_.empty() && images_[0] != 0) {
      throw InternalError("group hom does not preserve the identity");
    }
    for (std::size_t x = 0; x < dom_.size(); ++x) {
      for (std::size_t y = 0; y < dom_.size(); ++y) {
        auto const xy = *dom_.index_of(dom_.elements()[x] * dom_.elements()[y]);
        if (image(xy) != image(x) * image(y)) {
          throw InternalError("group hom is not multiplicative");
        }
      }
    }
  }

  Permutation const& GroupHom::operator()(Permutation const& p) const {
    auto idx = dom_.index_of(p);
    if (!idx) {
      throw PreconditionViolated("permutation is not in the domain group");
    }
    return image(*idx);
  }

  bool GroupHom::is_injective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (std::size_t y : images_) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool GroupHom::is_surjective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (std::size_t y : images_) {
      hit[y] = true;
    }
    return std::ranges::all_of(hit, [](bool b) { return b; });
  }

  GroupHom identity_group_hom(PermGroup const& g) {
    std::vector<std::size_t> images(g.size());
    std::iota(images.begin(), images.end(), std::size_t{0});
    return GroupHom(g, g, std::move(images));
  }

  GroupHom compose_group_homs(GroupHom const& psi, GroupHom const& phi) {
    if (!(phi.cod() == psi.dom())) {
      throw DomainMismatch("compose_group_homs: groups do not match");
    }
    std::vector<std::size_t> images(phi.dom().size());
    for (std::size_t x = 0; x < images.size(); ++x) {
      images[x] = *psi.cod().index_of(psi(phi.image(x)));
    }
    return GroupHom(phi.dom(), psi.cod(), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Inner automorphisms and components
  ////////////////////////////////////////////////////////////////////////

  Permutation rho(Quandle const& q, elem b) {
    std::vector<elem> images(q.order());
    for (elem a = 0; a < q.order(); ++a) {
      images[a] = q.op(a, b);
    }
    return Permutation(std::move(images));
  }

  PermGroup inner_group(Quandle const& q, std::size_t cap) {
    std::vector<Permutation> gens;
    std::vector<elem>        labels;
    for (elem b = 0; b < q.order(); ++b) {
      gens.push_back(rho(q, b));
      labels.push_back(b);
    }
    return PermGroup::generated_by(q.order(), std::move(gens), std::move(labels), cap);
  }

  Partition orbit_partition(PermGroup const& g, std::size_t n) {
    if (g.degree() != n) {
      throw ShapeError("orbit_partition: degree mismatch");
    }
    std::vector<elem> label(n);
    std::iota(label.begin(), label.end(), elem{0});
    for (auto const& p : g.elements()) {
      for (elem i = 0; i < n; ++i) {
        label[p(i)] = std::min(label[p(i)], label[i]);
      }
    }
    // A single pass suffices: for each i the minimum of its orbit m has some
    // element mapping m to i, and label[m] == m is never lowered.
    return Partition::from_labels(label);
  }

  namespace {
    // Orbits of a generating set coincide with the orbits of the group, so
    // components are found without materialising Inn(Q).
    Partition component_partition(Quandle const& q) {
      std::size_t const n = q.order();
      std::vector<elem> parent(n);
      std::iota(parent.begin(), parent.end(), elem{0});
      auto find = [&](elem x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      for (elem a = 0; a < n; ++a) {
        for (elem b = 0; b < n; ++b) {
          elem ra = find(a), rb = find(q.op(a, b));
          if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
          }
        }
      }
      std::vector<elem> label(n);
      for (elem a = 0; a < n; ++a) {
        label[a] = find(a);
      }
      return Partition::from_labels(label);
    }
  }  // namespace

  Pi0Result pi0(Quandle const& q) {
    Partition         comps    = component_partition(q);
    Quandle           quotient = trivial_quandle(comps.num_blocks());
    std::vector<elem> unit(q.order());
    for (elem a = 0; a < q.order(); ++a) {
      unit[a] = comps.block_index(a);
    }
    Hom eta = build_hom(q, quotient, std::move(unit));
    return Pi0Result{std::move(comps), std::move(quotient), std::move(eta)};
  }

  bool is_connected(Quandle const& q) {
    return component_partition(q).num_blocks() == 1;
  }

  Hom pi0_map(Hom const& f) {
    Pi0Result const   src = pi0(f.dom());
    Pi0Result const   dst = pi0(f.cod());
    std::vector<elem> m(src.components.num_blocks());
    for (std::size_t k = 0; k < m.size(); ++k) {
      m[k] = dst.components.block_index(f(src.components.block_rep(k)));
    }
    for (elem a = 0; a < f.dom().order(); ++a) {
      if (m[src.components.block_index(a)] != dst.components.block_index(f(a))) {
        throw InternalError("pi0_map: image of a component is not connected");
      }
    }
    return build_hom(src.quotient, dst.quotient, std::move(m));
  }

  GroupHom inn_hom(Hom const& f) {
    if (!is_surjective_hom(f)) {
      throw NotSurjective("inn_hom requires a surjective homomorphism");
    }
    PermGroup dom = inner_group(f.dom());
    PermGroup cod = inner_group(f.cod());

    std::size_t const        unset = dom.size();
    std::vector<std::size_t> images(dom.size(), unset);
    images[0] = 0;
    // Visit every edge sigma -> rho_a * sigma of the Cayley graph; each
    // element reached a second time must receive the same image.
    for (std::size_t k = 0; k < dom.size(); ++k) {
      Permutation const& sigma_image = cod.elements()[images[k]];
      for (std::size_t gi = 0; gi < dom.generators().size(); ++gi) {
        std::size_t const next = *dom.index_of(dom.generators()[gi] * dom.elements()[k]);
        elem const        a    = dom.labels()[gi];
        std::size_t const proposed
            = *cod.index_of(cod.generators()[f(a)] * sigma_image);
        if (images[next] == unset) {
          images[next] = proposed;
        } else if (images[next] != proposed) {
          throw WordInconsistency("Inn(f) is not well defined on "
                                  + dom.elements()[next].cycles());
        }
      }
    }
    return GroupHom(std::move(dom), std::move(cod), std::move(images));
  }

  PermGroup group_kernel(GroupHom const& phi) {
    std::vector<Permutation> kernel;
    for (std::size_t x = 0; x < phi.dom().size(); ++x) {
      if (phi.image(x).is_identity()) {
        kernel.push_back(phi.dom().elements()[x]);
      }
    }
    std::size_t const count = kernel.size();
    PermGroup k = PermGroup::generated_by(phi.dom().degree(), std::move(kernel));
    if (k.size() != count) {
      throw InternalError("kernel is not closed under composition");
    }
    return k;
  }

  bool is_normal_subgroup(PermGroup const& n, PermGroup const& g) {
    for (auto const& x : n.elements()) {
      if (!g.contains(x)) {
        throw NotASubgroup("is_normal_subgroup: N is not contained in G");
      }
    }
    for (auto const& x : g.elements()) {
      Permutation const x_inv = x.inverse();
      for (auto const& y : n.elements()) {
        if (!n.contains(x * y * x_inv)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace qnd
