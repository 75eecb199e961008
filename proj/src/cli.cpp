#include "qnd/cli.hpp"

#include <CLI11.hpp>

#include "qnd/congruence.hpp"
#include "qnd/enumeration.hpp"
#include "qnd/factorisation.hpp"
#include "qnd/io.hpp"

namespace qnd {

  namespace {

    // "@NAME" selects a built-in fixture, anything else is a file path.
    Quandle resolve_quandle(std::string const& arg) {
      if (!arg.empty() && arg[0] == '@') {
        auto q = fixtures::quandle(arg.substr(1));
        if (!q) {
          throw Error("unknown fixture quandle " + arg);
        }
        return *q;
      }
      return load_quandle(arg);
    }

    Hom resolve_hom(std::string const& arg, Quandle const& dom, Quandle const& cod) {
      if (!arg.empty() && arg[0] == '@') {
        auto h = fixtures::hom(arg.substr(1));
        if (!h) {
          throw Error("unknown fixture hom " + arg);
        }
        if (!(h->dom() == dom) || !(h->cod() == cod)) {
          throw ShapeError("fixture " + arg + " does not match the given quandles");
        }
        return *h;
      }
      return load_hom(arg, dom, cod);
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string map_line(Hom const& h) {
      std::string out;
      for (elem x : h.map()) {
        out += (out.empty() ? "" : " ") + std::to_string(x);
      }
      return out;
    }

    void print_report(ClassReport const& r, std::ostream& out) {
      out << "E:" << yes_no(r.in_E) << " E1:" << yes_no(r.in_E1) << " M:" << yes_no(r.in_M)
          << " M1:" << yes_no(r.in_M1) << "\n";
      if (r.e_witness) {
        out << "E witness: (" << r.e_witness->first << "," << r.e_witness->second
            << ") in Eq(f) lie in different components\n";
      }
      if (r.e1_witness) {
        auto const& w = *r.e1_witness;
        out << "E1 witness: (" << w.a << "," << w.b << ") in Eq(f) is linked only by";
        for (std::size_t k = 0; k < w.linking.size(); ++k) {
          out << (k ? "," : "") << " " << w.linking[k] << " = " << w.linking_cycles[k]
              << " with Inn(f)(" << w.linking[k] << ") = " << w.images[k] << " = "
              << w.image_cycles[k];
        }
        out << "; none lies in Ker(Inn(f))\n";
      }
      if (r.m_witness) {
        out << "M witness: (" << r.m_witness->first << "," << r.m_witness->second
            << ") in Eq(f) ∩ ~Inn\n";
      }
      if (r.m1_witness) {
        out << "M1 witness: Ker(Inn(f)) contains " << *r.m1_witness << "\n";
      }
    }

  }  // namespace

  std::vector<ExampleCheck> worked_example_checks() {
    std::vector<ExampleCheck> checks;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
      checks.push_back(ExampleCheck{std::move(name), ok, std::move(detail)});
    };

    // Split epimorphism whose kernel pair pi0 does not preserve.
    Quandle const a4 = fixtures::A4();
    Hom const     f4 = fixtures::f4();
    Hom const     s4 = fixtures::s4();
    add("A4 is involutive", is_involutive(a4));
    add("f4 is a surjective homomorphism", is_surjective_hom(f4));
    add("s4 splits f4", compose_homs(f4, s4) == identity_hom(fixtures::B2()));
    add("|Inn(A4)| = 2", inner_group(a4).size() == 2);
    auto const comps = pi0(a4).components;
    add("pi0(A4) = {a,b|c|d}", comps.to_string() == "{0,1|2|3}", comps.to_string());
    auto const kp = kernel_pair_report(f4);
    add("|pi0(Eq(f4))| = 6", kp.kernel_pair_pi0.quotient.order() == 6,
        std::to_string(kp.kernel_pair_pi0.quotient.order()));
    add("|Eq(pi0(f4))| = 5", kp.pi0_kernel_pair.apex.order() == 5,
        std::to_string(kp.pi0_kernel_pair.apex.order()));
    elem const ab = *kp.kernel_pair.index_of(0, 1);
    elem const aa = *kp.kernel_pair.index_of(0, 0);
    std::size_t const cab = kp.kernel_pair_pi0.components.block_index(ab);
    std::size_t const caa = kp.kernel_pair_pi0.components.block_index(aa);
    add("[(a,b)] != [(a,a)] in pi0(Eq(f4))", cab != caa);
    add("([a],[b]) = ([a],[a]) in Eq(pi0(f4))", kp.comparison(cab) == kp.comparison(caa));
    add("pi0 does not preserve the kernel pair of f4", !kp.preserved);

    // Left cancellation fails for E1.
    Hom const  g5  = fixtures::g5();
    Hom const  f5  = fixtures::f5();
    Hom const  fg  = compose_homs(f5, g5);
    add("f5 ∘ g5 = eta_A5", fg == pi0(fixtures::A5()).unit, map_line(fg));
    add("f5 = eta_X4", f5 == pi0(fixtures::X4()).unit);
    auto const rg = classify(g5);
    add("classify(g5) = E:yes E1:no M:no M1:yes",
        rg.in_E && !rg.in_E1 && !rg.in_M && rg.in_M1);
    bool witness_ok = rg.e1_witness && rg.e1_witness->a == 0 && rg.e1_witness->b == 1
                      && rg.e1_witness->linking == std::vector<std::string>{"rho_2"}
                      && rg.e1_witness->images == std::vector<std::string>{"rho_1"};
    add("E1 witness: (a,b) linked only by rho_c, Inn(g5)(rho_c) = rho_y != id", witness_ok);
    add("f5 in E1", classify(f5).in_E1);
    add("f5 ∘ g5 in E1", classify(fg).in_E1);
    return checks;
  }

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite quandles: invariants, factorisations and verification sweeps", "qnd"};
    app.require_subcommand(1);

    std::string path, dom_arg, cod_arg, hom_arg, system = "em";
    std::string dom1, hom1, dom2, hom2, cod1, cod2;
    std::size_t order = 0, samples = 0;
    std::uint64_t seed = 0;
    bool up_to_iso = false, count_only = false, allow_large = false;
    std::string claim;

    auto* validate = app.add_subcommand("validate", "Check the quandle axioms");
    validate->add_option("file", path, "quandle file or @FIXTURE")->required();

    auto* info = app.add_subcommand("info", "Order, involutivity, connectedness, |Inn|, components");
    info->add_option("file", path)->required();

    auto* pi0_cmd = app.add_subcommand("pi0", "Connected components and the unit map");
    pi0_cmd->add_option("file", path)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Membership in E, E1, M, M1");
    auto* factor_cmd   = app.add_subcommand("factor", "Factorise a surjection");
    for (auto* sub : {classify_cmd, factor_cmd}) {
      sub->add_option("--dom", dom_arg)->required();
      sub->add_option("--cod", cod_arg)->required();
      sub->add_option("--hom", hom_arg)->required();
    }
    factor_cmd->add_option("--system", system, "em or rigid")
        ->check(CLI::IsMember({"em", "rigid"}));

    auto* pullback_cmd = app.add_subcommand("pullback", "Pullback of hom1 : dom1 -> cod and hom2 : dom2 -> cod");
    pullback_cmd->add_option("--dom1", dom1)->required();
    pullback_cmd->add_option("--hom1", hom1)->required();
    pullback_cmd->add_option("--dom2", dom2)->required();
    pullback_cmd->add_option("--hom2", hom2)->required();
    pullback_cmd->add_option("--cod", cod_arg)->required();

    auto* pushout_cmd = app.add_subcommand("pushout", "Pushout of surjections hom1 : dom -> cod1 and hom2 : dom -> cod2");
    pushout_cmd->add_option("--dom", dom_arg)->required();
    pushout_cmd->add_option("--cod1", cod1)->required();
    pushout_cmd->add_option("--hom1", hom1)->required();
    pushout_cmd->add_option("--cod2", cod2)->required();
    pushout_cmd->add_option("--hom2", hom2)->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List quandles of a given order");
    enumerate_cmd->add_option("-n", order)->required();
    enumerate_cmd->add_flag("--up-to-iso", up_to_iso);
    enumerate_cmd->add_flag("--count-only", count_only);
    enumerate_cmd->add_flag("--allow-large", allow_large, "permit order 6");

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("claim", claim)->required()->check(CLI::IsMember(registered_claims()));
    verify->add_option("-n", order)->required();
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples, "random quandles of order n+1 to add");

    auto* examples_cmd = app.add_subcommand("paper-examples", "Reproduce the worked counterexamples");

    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "qnd: " << e.what() << "\n";
      return 2;
    }

    try {
      if (validate->parsed()) {
        try {
          Quandle const q = resolve_quandle(path);
          out << "valid quandle of order " << q.order() << "\n";
          return 0;
        } catch (AxiomViolation const& e) {
          out << "invalid: " << e.what() << "\n";
          return 1;
        }
      }
      if (info->parsed()) {
        Quandle const q = resolve_quandle(path);
        out << "order: " << q.order() << "\n"
            << "involutive: " << yes_no(is_involutive(q)) << "\n"
            << "connected: " << yes_no(is_connected(q)) << "\n"
            << "inner group order: " << inner_group(q).size() << "\n"
            << "components: " << pi0(q).components.to_string() << "\n";
        return 0;
      }
      if (pi0_cmd->parsed()) {
        Quandle const   q = resolve_quandle(path);
        Pi0Result const r = pi0(q);
        out << "components: " << r.components.to_string() << "\n"
            << "unit: " << map_line(r.unit) << "\n"
            << "quotient:\n"
            << serialize_quandle(r.quotient);
        return 0;
      }
      if (classify_cmd->parsed()) {
        Quandle const dom = resolve_quandle(dom_arg);
        Quandle const cod = resolve_quandle(cod_arg);
        print_report(classify(resolve_hom(hom_arg, dom, cod)), out);
        return 0;
      }
      if (factor_cmd->parsed()) {
        Quandle const       dom = resolve_quandle(dom_arg);
        Quandle const       cod = resolve_quandle(cod_arg);
        Hom const           f   = resolve_hom(hom_arg, dom, cod);
        Factorisation const fac = system == "em" ? factor_EM(f) : factor_E1M1(f);
        out << "middle:\n"
            << serialize_quandle(fac.middle) << "first: " << map_line(fac.first) << "\n"
            << "second: " << map_line(fac.second) << "\n";
        return 0;
      }
      if (pullback_cmd->parsed()) {
        Quandle const        d  = resolve_quandle(cod_arg);
        Quandle const        c  = resolve_quandle(dom1);
        Quandle const        b  = resolve_quandle(dom2);
        PullbackResult const pb = pullback(resolve_hom(hom1, c, d), resolve_hom(hom2, b, d));
        out << "apex:\n" << serialize_quandle(pb.apex) << "pairs:";
        for (auto [x, y] : pb.pairs) {
          out << " (" << x << "," << y << ")";
        }
        out << "\np1: " << map_line(pb.p1) << "\np2: " << map_line(pb.p2) << "\n";
        return 0;
      }
      if (pushout_cmd->parsed()) {
        Quandle const       a  = resolve_quandle(dom_arg);
        Quandle const       b  = resolve_quandle(cod1);
        Quandle const       c  = resolve_quandle(cod2);
        PushoutResult const po = pushout_of_surjections(resolve_hom(hom1, a, b),
                                                        resolve_hom(hom2, a, c));
        out << "apex:\n" << serialize_quandle(po.apex) << "join: " << po.join.partition().to_string()
            << "\nleg from cod2: " << map_line(po.fbar) << "\nleg from cod1: " << map_line(po.gbar)
            << "\n";
        return 0;
      }
      if (enumerate_cmd->parsed()) {
        EnumerateOptions opts;
        opts.up_to_iso   = up_to_iso;
        opts.allow_large = allow_large;
        if (count_only && !up_to_iso) {
          std::size_t count = 0;
          for_each_quandle(order, [&](Quandle const&) { ++count; }, opts);
          out << count << "\n";
          return 0;
        }
        auto const qs = enumerate_quandles(order, opts);
        if (count_only) {
          out << qs.size() << "\n";
          return 0;
        }
        for (std::size_t k = 0; k < qs.size(); ++k) {
          out << "# quandle " << k << "\n" << serialize_quandle(qs[k]);
        }
        return 0;
      }
      if (verify->parsed()) {
        EnumConfig cfg;
        cfg.max_order     = order;
        cfg.seed          = seed;
        cfg.sample_budget = samples;
        SweepReport const r = run_sweep(claim, cfg);
        out << serialize_report(r);
        return r.holds ? 0 : 1;
      }
      if (examples_cmd->parsed()) {
        bool all = true;
        for (auto const& c : worked_example_checks()) {
          out << (c.ok ? "[ok]   " : "[FAIL] ") << c.name;
          if (!c.detail.empty()) {
            out << " (" << c.detail << ")";
          }
          out << "\n";
          all = all && c.ok;
        }
        return all ? 0 : 1;
      }
    } catch (Error const& e) {
      err << "qnd: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace qnd
