#include "qnd/factorisation.hpp"

#include <algorithm>
#include <functional>

namespace qnd {

  namespace {
    void require_surjective(Hom const& f, char const* where) {
      if (!is_surjective_hom(f)) {
        throw NotSurjective(std::string(where) + " requires a surjective homomorphism");
      }
    }

    // The induced map on A/R for a congruence R ⊆ Eq(f).
    Hom induced_from_quotient(Quotient const& quo, Hom const& f) {
      Partition const   p = kernel_congruence(quo.projection).partition();
      std::vector<elem> m(quo.quandle.order());
      for (std::size_t k = 0; k < m.size(); ++k) {
        m[k] = f(p.block_rep(k));
      }
      for (elem a = 0; a < f.dom().order(); ++a) {
        if (m[quo.projection(a)] != f(a)) {
          throw InternalError("congruence is not contained in Eq(f)");
        }
      }
      return build_hom(quo.quandle, f.cod(), std::move(m));
    }

    Congruence rigid_congruence(Hom const& f) {
      PermGroup const kernel = group_kernel(inn_hom(f));
      return orbit_congruence(f.dom(), kernel).congruence(f.dom());
    }
  }  // namespace

  std::optional<elem> PullbackResult::index_of(elem x, elem y) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{x, y});
    if (it == pairs.end() || *it != std::pair{x, y}) {
      return std::nullopt;
    }
    return static_cast<elem>(it - pairs.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Class membership
  ////////////////////////////////////////////////////////////////////////

  bool in_E_by_congruence(Hom const& f) {
    require_surjective(f, "in_E_by_congruence");
    return kernel_congruence(f).partition().refines(pi0(f.dom()).components);
  }

  bool inverted_by_pi0(Hom const& f) {
    require_surjective(f, "inverted_by_pi0");
    return is_bijective_hom(pi0_map(f));
  }

  bool in_M_by_congruence(Hom const& f) {
    require_surjective(f, "in_M_by_congruence");
    return meet(kernel_congruence(f), inn_congruence(f.dom())).partition().is_discrete();
  }

  bool in_E1(Hom const& f) {
    require_surjective(f, "in_E1");
    PermGroup const kernel = group_kernel(inn_hom(f));
    return orbit_partition(kernel, f.dom().order()) == kernel_congruence(f).partition();
  }

  bool in_M1(Hom const& f) {
    require_surjective(f, "in_M1");
    return inn_hom(f).is_isomorphism();
  }

  ClassReport classify(Hom const& f) {
    require_surjective(f, "classify");
    ClassReport       report;
    std::size_t const n     = f.dom().order();
    Partition const   comps = pi0(f.dom()).components;
    Congruence const  eq    = kernel_congruence(f);

    report.in_E = eq.partition().refines(comps);
    if (report.in_E != inverted_by_pi0(f)) {
      throw InternalError("E membership: congruence and pi0 criteria disagree");
    }

    Partition const both = meet(eq, Congruence(f.dom(), comps)).partition();
    report.in_M          = both.is_discrete();

    GroupHom const  phi     = inn_hom(f);
    PermGroup const kernel  = group_kernel(phi);
    Partition const k_orbit = orbit_partition(kernel, n);
    if (!k_orbit.refines(eq.partition())) {
      throw InternalError("orbits of Ker(Inn(f)) are not contained in Eq(f)");
    }
    report.in_E1 = (k_orbit == eq.partition());
    report.in_M1 = phi.is_isomorphism();

    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        if (!report.e_witness && f(a) == f(b) && !comps.same(a, b)) {
          report.e_witness.emplace(a, b);
        }
        if (!report.m_witness && a != b && both.same(a, b)) {
          report.m_witness.emplace(a, b);
        }
        if (!report.e1_witness && f(a) == f(b) && !k_orbit.same(a, b)) {
          E1Witness w{a, b, {}, {}, {}, {}};
          PermGroup const& inn = phi.dom();
          for (std::size_t k = 0; k < inn.size(); ++k) {
            if (inn.elements()[k](a) == b) {
              w.linking.push_back(inn.word_string(k));
              w.linking_cycles.push_back(inn.elements()[k].cycles());
              w.images.push_back(phi.cod().word_string(phi.images()[k]));
              w.image_cycles.push_back(phi.image(k).cycles());
            }
          }
          report.e1_witness = std::move(w);
        }
      }
    }
    if (!report.in_M1) {
      auto const& elems = kernel.elements();
      for (std::size_t k = 1; k < elems.size(); ++k) {
        report.m1_witness = elems[k].cycles();
        break;
      }
      if (!report.m1_witness) {
        report.m1_witness = "Inn(f) not injective";
      }
    }

    if ((report.in_E1 && !report.in_E) || (report.in_M && !report.in_M1)) {
      throw InternalError("class inclusions E1 ⊂ E or M ⊂ M1 violated");
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorisations
  ////////////////////////////////////////////////////////////////////////

  Factorisation factor_EM(Hom const& f) {
    require_surjective(f, "factor_EM");
    Congruence const c   = meet(kernel_congruence(f), inn_congruence(f.dom()));
    Quotient         quo = quotient(f.dom(), c);
    Hom              second = induced_from_quotient(quo, f);
    if (!in_E_by_congruence(quo.projection) || !in_M_by_congruence(second)) {
      throw InternalError("factor_EM produced parts outside (E, M)");
    }
    return Factorisation{std::move(quo.projection), std::move(second),
                         std::move(quo.quandle)};
  }

  Factorisation factor_E1M1(Hom const& f) {
    require_surjective(f, "factor_E1M1");
    Quotient quo    = quotient(f.dom(), rigid_congruence(f));
    Hom      second = induced_from_quotient(quo, f);
    if (!in_M1(second)) {
      throw InternalError("factor_E1M1: second part is not a rigid quotient");
    }
    return Factorisation{std::move(quo.projection), std::move(second),
                         std::move(quo.quandle)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Limits and colimits
  ////////////////////////////////////////////////////////////////////////

  PullbackResult pullback(Hom const& fbar, Hom const& gbar) {
    if (!(fbar.cod() == gbar.cod())) {
      throw CodomainMismatch("pullback: the two maps have different codomains");
    }
    Quandle const& c = fbar.dom();
    Quandle const& b = gbar.dom();
    PullbackResult out;
    for (elem x = 0; x < c.order(); ++x) {
      for (elem y = 0; y < b.order(); ++y) {
        if (fbar(x) == gbar(y)) {
          out.pairs.emplace_back(x, y);
        }
      }
    }
    std::size_t const k = out.pairs.size();
    std::vector<elem> t(k * k);
    for (elem i = 0; i < k; ++i) {
      for (elem j = 0; j < k; ++j) {
        auto [x1, y1] = out.pairs[i];
        auto [x2, y2] = out.pairs[j];
        t[i * k + j]  = *out.index_of(c.op(x1, x2), b.op(y1, y2));
      }
    }
    out.apex = build_quandle_flat(k, std::move(t));
    std::vector<elem> m1(k), m2(k);
    for (elem i = 0; i < k; ++i) {
      m1[i] = out.pairs[i].first;
      m2[i] = out.pairs[i].second;
    }
    out.p1 = build_hom(out.apex, c, std::move(m1));
    out.p2 = build_hom(out.apex, b, std::move(m2));
    return out;
  }

  Hom comparison_to_pullback(Hom const& f, Hom const& g, Hom const& fbar, Hom const& gbar) {
    if (!(f.dom() == g.dom()) || !(fbar.dom() == g.cod()) || !(gbar.dom() == f.cod())
        || !(fbar.cod() == gbar.cod())) {
      throw DomainMismatch("comparison_to_pullback: maps do not form a square");
    }
    for (elem a = 0; a < f.dom().order(); ++a) {
      if (fbar(g(a)) != gbar(f(a))) {
        throw SquareNotCommuting("square does not commute at " + std::to_string(a));
      }
    }
    PullbackResult    pb = pullback(fbar, gbar);
    std::vector<elem> m(f.dom().order());
    for (elem a = 0; a < m.size(); ++a) {
      m[a] = *pb.index_of(g(a), f(a));
    }
    return build_hom(f.dom(), pb.apex, std::move(m));
  }

  bool square_is_pullback(Hom const& f) {
    require_surjective(f, "square_is_pullback");
    Hom const cmp = comparison_to_pullback(f, pi0(f.dom()).unit, pi0_map(f),
                                           pi0(f.cod()).unit);
    return is_bijective_hom(cmp);
  }

  bool is_trivial_extension(Hom const& f) {
    bool const result = square_is_pullback(f);
    if (result != in_M_by_congruence(f)) {
      throw InternalError("M membership: pullback and congruence criteria disagree");
    }
    return result;
  }

  PushoutResult pushout_of_surjections(Hom const& f, Hom const& g) {
    if (!(f.dom() == g.dom())) {
      throw DomainMismatch("pushout_of_surjections: different domains");
    }
    require_surjective(f, "pushout_of_surjections");
    require_surjective(g, "pushout_of_surjections");
    Congruence j   = join(kernel_congruence(f), kernel_congruence(g));
    Quotient   quo = quotient(f.dom(), j);

    std::size_t const n = f.dom().order();
    std::vector<elem> fbar(g.cod().order()), gbar(f.cod().order());
    for (elem a = 0; a < n; ++a) {
      fbar[g(a)] = quo.projection(a);
      gbar[f(a)] = quo.projection(a);
    }
    for (elem a = 0; a < n; ++a) {
      if (fbar[g(a)] != quo.projection(a) || gbar[f(a)] != quo.projection(a)) {
        throw InternalError("pushout legs are not well defined");
      }
    }
    if (!(kernel_congruence(quo.projection) == j)) {
      throw InternalError("Eq of the pushout diagonal differs from the join");
    }
    Hom fb = build_hom(g.cod(), quo.quandle, std::move(fbar));
    Hom gb = build_hom(f.cod(), quo.quandle, std::move(gbar));
    return PushoutResult{std::move(quo.quandle), std::move(fb), std::move(gb), std::move(j)};
  }

  bool special_pushout_comparison_surjective(Hom const& f, Hom const& g) {
    if (!in_E1(f)) {
      throw PreconditionViolated("special pushout requires f in E1");
    }
    PushoutResult const po = pushout_of_surjections(f, g);
    return is_surjective_hom(comparison_to_pullback(f, g, po.fbar, po.gbar));
  }

  ////////////////////////////////////////////////////////////////////////
  // Orthogonality
  ////////////////////////////////////////////////////////////////////////

  Hom orthogonal_fill(Hom const& e, Hom const& m, Hom const& u, Hom const& v) {
    if (!(e.dom() == u.dom()) || !(e.cod() == v.dom()) || !(u.cod() == m.dom())
        || !(m.cod() == v.cod())) {
      throw DomainMismatch("orthogonal_fill: maps do not form a square");
    }
    if (!is_surjective_hom(e) || !is_surjective_hom(m)) {
      throw ClassViolation("orthogonal_fill: e and m must be surjective");
    }
    if (!in_E_by_congruence(e)) {
      throw ClassViolation("orthogonal_fill: e is not in E");
    }
    if (!in_M_by_congruence(m)) {
      throw ClassViolation("orthogonal_fill: m is not in M");
    }
    for (elem a = 0; a < e.dom().order(); ++a) {
      if (v(e(a)) != m(u(a))) {
        throw SquareNotCommuting("v ∘ e != m ∘ u at " + std::to_string(a));
      }
    }

    Quandle const& b = e.cod();
    Quandle const& c = m.dom();
    Pi0Result const pb_b = pi0(b), pc = pi0(c), pd = pi0(m.cod());

    // pi0(e) is invertible because e ∈ E.
    Hom const         pe = pi0_map(e);
    std::vector<elem> pe_inv(pe.cod().order());
    for (elem k = 0; k < pe.dom().order(); ++k) {
      pe_inv[pe(k)] = k;
    }
    Hom const pu = pi0_map(u);

    // The unit square of m is a pullback, so C is identified with
    // pi0(C) ×_{pi0(D)} D through (eta_C, m).
    PullbackResult const square = pullback(pi0_map(m), pd.unit);
    std::vector<elem>    from_square(square.pairs.size(), c.order());
    for (elem x = 0; x < c.order(); ++x) {
      from_square[*square.index_of(pc.unit(x), m(x))] = x;
    }

    std::vector<elem> w(b.order());
    for (elem y = 0; y < b.order(); ++y) {
      elem const component = pu(pe_inv[pb_b.unit(y)]);
      auto const idx       = square.index_of(component, v(y));
      if (!idx || from_square[*idx] == c.order()) {
        throw NoFill("no diagonal through the pullback at " + std::to_string(y));
      }
      w[y] = from_square[*idx];
    }
    Hom fill;
    try {
      fill = build_hom(b, c, std::move(w));
    } catch (NotAHomomorphism const&) {
      throw NoFill("constructed diagonal is not a homomorphism");
    }
    if (!(compose_homs(fill, e) == u) || !(compose_homs(m, fill) == v)) {
      throw NoFill("constructed diagonal does not fill the square");
    }
    return fill;
  }

  ////////////////////////////////////////////////////////////////////////
  // Admissibility and kernel pairs
  ////////////////////////////////////////////////////////////////////////

  bool check_admissibility_instance(Quandle const& b, Hom const& phi) {
    if (!is_trivial(phi.dom())) {
      throw PhiNotTrivialDomain("phi must have a trivial quandle as domain");
    }
    if (!is_surjective_hom(phi)) {
      throw PhiNotSurjective("phi must be surjective");
    }
    Pi0Result const pb_b = pi0(b);
    if (!(phi.cod() == pb_b.quotient)) {
      throw CodomainMismatch("phi must land in pi0(B)");
    }
    PullbackResult const pb = pullback(pb_b.unit, phi);
    Pi0Result const      pp = pi0(pb.apex);

    // pi0 of the trivial quandle X is X itself, so the comparison is pi0(p2).
    std::vector<elem> cmp(pp.components.num_blocks());
    for (std::size_t k = 0; k < cmp.size(); ++k) {
      cmp[k] = pb.p2(pp.components.block_rep(k));
    }
    for (elem i = 0; i < pb.apex.order(); ++i) {
      if (cmp[pp.components.block_index(i)] != pb.p2(i)) {
        throw InternalError("pi0(p2) is not well defined");
      }
    }
    return is_bijective_hom(build_hom(pp.quotient, phi.dom(), std::move(cmp)));
  }

  KernelPairReport kernel_pair_report(Hom const& f) {
    require_surjective(f, "kernel_pair_report");
    PullbackResult kp  = pullback(f, f);
    Pi0Result      pk  = pi0(kp.apex);
    Pi0Result const pa = pi0(f.dom());
    Hom const      pf  = pi0_map(f);
    PullbackResult kq  = pullback(pf, pf);

    auto image_of = [&](elem i) {
      auto [x, y] = kp.pairs[i];
      return *kq.index_of(pa.unit(x), pa.unit(y));
    };
    std::vector<elem> cmp(pk.components.num_blocks());
    for (std::size_t k = 0; k < cmp.size(); ++k) {
      cmp[k] = image_of(pk.components.block_rep(k));
    }
    for (elem i = 0; i < kp.apex.order(); ++i) {
      if (cmp[pk.components.block_index(i)] != image_of(i)) {
        throw InternalError("kernel pair comparison is not well defined");
      }
    }
    Hom        comparison = build_hom(pk.quotient, kq.apex, std::move(cmp));
    bool const preserved  = is_bijective_hom(comparison);
    return KernelPairReport{std::move(kp), std::move(pk), std::move(kq),
                            std::move(comparison), preserved};
  }

  bool pi0_preserves_kernel_pair(Hom const& f) {
    return kernel_pair_report(f).preserved;
  }

  std::vector<Hom> sections(Hom const& f) {
    std::size_t const              nb = f.cod().order();
    std::vector<std::vector<elem>> fibres(nb);
    for (elem a = 0; a < f.dom().order(); ++a) {
      fibres[f(a)].push_back(a);
    }
    std::vector<Hom>  out;
    std::vector<elem> choice(nb);
    std::function<void(elem)> extend = [&](elem y) {
      if (y == nb) {
        try {
          out.push_back(build_hom(f.cod(), f.dom(), choice));
        } catch (NotAHomomorphism const&) {
        }
        return;
      }
      for (elem a : fibres[y]) {
        choice[y] = a;
        extend(y + 1);
      }
    };
    extend(0);
    return out;
  }

}  // namespace qnd
