#include "qnd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qnd {

  namespace {
    struct Line {
      std::size_t              number;
      std::vector<std::size_t> values;
    };

    // Non-empty lines after comment stripping, tokenized as integers.
    std::vector<Line> tokenize(std::string_view text) {
      if (text.empty() || text.back() != '\n') {
        std::size_t lines = 1;
        for (char ch : text) {
          lines += (ch == '\n');
        }
        throw ParseError(lines, "missing trailing newline");
      }
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       start  = 0;
      while (start < text.size()) {
        std::size_t const end = text.find('\n', start);
        std::string_view  raw = text.substr(start, end - start);
        start                 = end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        Line        line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
          if (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r') {
            ++pos;
            continue;
          }
          std::size_t value = 0;
          auto [ptr, ec]    = std::from_chars(raw.data() + pos, raw.data() + raw.size(), value);
          if (ec != std::errc() || ptr == raw.data() + pos
              || (ptr != raw.data() + raw.size() && *ptr != ' ' && *ptr != '\t'
                  && *ptr != '\r')) {
            throw ParseError(number, "expected a non-negative integer");
          }
          line.values.push_back(value);
          pos = static_cast<std::size_t>(ptr - raw.data());
        }
        if (!line.values.empty()) {
          out.push_back(std::move(line));
        }
      }
      return out;
    }

    std::string join(std::span<elem const> xs, char sep) {
      std::string out;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) {
          out += sep;
        }
        out += std::to_string(xs[k]);
      }
      return out;
    }
  }  // namespace

  Quandle parse_quandle(std::string_view text) {
    auto const lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError(1, "empty quandle file");
    }
    if (lines[0].values.size() != 1 || lines[0].values[0] == 0) {
      throw ParseError(lines[0].number, "first line must hold the order n >= 1");
    }
    std::size_t const n = lines[0].values[0];
    if (lines.size() != n + 1) {
      throw ParseError(lines.back().number, "expected " + std::to_string(n)
                                                + " table rows, found "
                                                + std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<elem>> table;
    for (std::size_t i = 1; i <= n; ++i) {
      if (lines[i].values.size() != n) {
        throw ParseError(lines[i].number, "row must have " + std::to_string(n) + " entries");
      }
      for (auto v : lines[i].values) {
        if (v >= n) {
          throw ParseError(lines[i].number, "entry " + std::to_string(v) + " out of range");
        }
      }
      table.push_back(lines[i].values);
    }
    return build_quandle(table);
  }

  std::string serialize_quandle(Quandle const& q) {
    std::string out = std::to_string(q.order()) + "\n";
    for (elem i = 0; i < q.order(); ++i) {
      out += join(q.table().subspan(i * q.order(), q.order()), ' ') + "\n";
    }
    return out;
  }

  HomFile parse_hom_file(std::string_view text) {
    auto const lines = tokenize(text);
    if (lines.size() != 2) {
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       "hom file needs a header line and an image line");
    }
    if (lines[0].values.size() != 2) {
      throw ParseError(lines[0].number, "header must be \"n_dom n_cod\"");
    }
    HomFile h{lines[0].values[0], lines[0].values[1], lines[1].values};
    if (h.images.size() != h.dom_order) {
      throw ParseError(lines[1].number, "expected " + std::to_string(h.dom_order) + " images");
    }
    for (auto v : h.images) {
      if (v >= h.cod_order) {
        throw ParseError(lines[1].number, "image " + std::to_string(v) + " out of range");
      }
    }
    return h;
  }

  Hom parse_hom(std::string_view text, Quandle const& dom, Quandle const& cod) {
    HomFile h = parse_hom_file(text);
    if (h.dom_order != dom.order() || h.cod_order != cod.order()) {
      throw ShapeError("hom file orders do not match the given quandles");
    }
    return build_hom(dom, cod, std::move(h.images));
  }

  std::string serialize_hom(Hom const& h) {
    return std::to_string(h.dom().order()) + " " + std::to_string(h.cod().order()) + "\n"
           + join(h.map(), ' ') + "\n";
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  Quandle load_quandle(std::filesystem::path const& path) {
    return parse_quandle(read_file(path));
  }

  Hom load_hom(std::filesystem::path const& path, Quandle const& dom, Quandle const& cod) {
    return parse_hom(read_file(path), dom, cod);
  }

  std::string inline_quandle(Quandle const& q) {
    std::string out = std::to_string(q.order()) + ":";
    for (elem i = 0; i < q.order(); ++i) {
      if (i > 0) {
        out += "/";
      }
      out += join(q.table().subspan(i * q.order(), q.order()), ',');
    }
    return out;
  }

  std::string inline_map(Hom const& h) {
    return join(h.map(), ',');
  }

  namespace fixtures {

    Quandle A4() {
      return build_quandle({{0, 0, 0, 1}, {1, 1, 1, 0}, {2, 2, 2, 2}, {3, 3, 3, 3}});
    }
    Quandle B2() {
      return trivial_quandle(2);
    }
    Quandle A5() {
      return build_quandle({{0, 0, 1, 0, 0},
                            {1, 1, 0, 1, 1},
                            {2, 2, 2, 2, 2},
                            {3, 3, 4, 3, 3},
                            {4, 4, 3, 4, 4}});
    }
    Quandle X4() {
      return build_quandle({{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 3, 2, 2}, {3, 2, 3, 3}});
    }
    Quandle M3() {
      return trivial_quandle(3);
    }
    Quandle R3() {
      return dihedral_quandle(3);
    }

    Hom f4() {
      return build_hom(A4(), B2(), {0, 0, 0, 1});
    }
    Hom s4() {
      return build_hom(B2(), A4(), {2, 3});
    }
    Hom g5() {
      return build_hom(A5(), X4(), {0, 0, 1, 2, 3});
    }
    Hom f5() {
      return build_hom(X4(), M3(), {0, 1, 2, 2});
    }

    std::vector<std::string> quandle_names() {
      return {"A4", "B2", "A5", "X4", "M3", "R3"};
    }
    std::vector<std::string> hom_names() {
      return {"f4", "s4", "g5", "f5"};
    }

    std::optional<Quandle> quandle(std::string_view name) {
      if (name == "A4") return A4();
      if (name == "B2") return B2();
      if (name == "A5") return A5();
      if (name == "X4") return X4();
      if (name == "M3") return M3();
      if (name == "R3") return R3();
      return std::nullopt;
    }

    std::optional<Hom> hom(std::string_view name) {
      if (name == "f4") return f4();
      if (name == "s4") return s4();
      if (name == "g5") return g5();
      if (name == "f5") return f5();
      return std::nullopt;
    }

  }  // namespace fixtures

}  // namespace qnd
