#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnd/quandle.hpp"

namespace qnd {

  // .qnd: line 1 holds n, the next n lines hold n space-separated 0-based
  // entries each (entry j of row i is i ◁ j). '#' starts a comment; blank
  // lines are ignored; the text must end with a newline.
  Quandle     parse_quandle(std::string_view text);
  std::string serialize_quandle(Quandle const& q);

  // .qhom: line 1 "n_dom n_cod", line 2 the n_dom images.
  struct HomFile {
    std::size_t       dom_order = 0;
    std::size_t       cod_order = 0;
    std::vector<elem> images;
  };

  HomFile     parse_hom_file(std::string_view text);
  Hom         parse_hom(std::string_view text, Quandle const& dom, Quandle const& cod);
  std::string serialize_hom(Hom const& h);

  std::string read_file(std::filesystem::path const& path);
  Quandle     load_quandle(std::filesystem::path const& path);
  Hom         load_hom(std::filesystem::path const& path, Quandle const& dom, Quandle const& cod);

  // Single-line forms used in sweep reports: "3:0,2,1/2,1,0/1,0,2" and
  // "0,0,1".
  std::string inline_quandle(Quandle const& q);
  std::string inline_map(Hom const& h);

  namespace fixtures {
    Quandle A4();  // a◁d = b, b◁d = a, all other actions trivial
    Quandle B2();  // trivial, {x, y}
    Quandle A5();  // rho_c = (a b)(d e), all other actions trivial
    Quandle X4();  // rho_y = (z w), all other actions trivial
    Quandle M3();  // trivial, {α, β, γ}
    Quandle R3();  // dihedral of order 3

    Hom f4();  // A4 -> B2: a, b, c -> x; d -> y
    Hom s4();  // B2 -> A4: x -> c; y -> d
    Hom g5();  // A5 -> X4: a, b -> x; c -> y; d -> z; e -> w
    Hom f5();  // X4 -> M3: x -> α; y -> β; z, w -> γ

    std::vector<std::string> quandle_names();
    std::vector<std::string> hom_names();
    std::optional<Quandle>   quandle(std::string_view name);
    std::optional<Hom>       hom(std::string_view name);
  }  // namespace fixtures

}  // namespace qnd
