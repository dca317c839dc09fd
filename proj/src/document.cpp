#include "vennk/document.hpp"

#include <fstream>
#include <sstream>

namespace vennk {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long parse_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("expected an integer for ") + what + ", got '" + s + "'", line);
}

Rat parse_rat_at(const std::string& s, int line) {
  try {
    return parse_rat(s);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

void expect_words(const Line& l, std::size_t count) {
  if (l.words.size() != count) {
    throw ParseError("'" + l.words[0] + "' takes " + std::to_string(count - 1) + " argument(s)", l.number);
  }
}

void expect_header(const std::vector<Line>& lines, const std::string& magic) {
  if (lines.empty() || lines[0].words[0] != magic) {
    throw ParseError("document must start with '" + magic + " 1'", lines.empty() ? 1 : lines[0].number);
  }
  expect_words(lines[0], 2);
  if (lines[0].words[1] != "1") throw ParseError("unsupported " + magic + " version " + lines[0].words[1], lines[0].number);
}

// Reads a "polygon [label] / x y ... / end" block starting at lines[i].
ConvexPolygon parse_polygon(const std::vector<Line>& lines, std::size_t& i) {
  const Line& head = lines[i];
  if (head.words.size() > 2) throw ParseError("polygon labels may not contain spaces", head.number);
  std::string label = head.words.size() == 2 ? head.words[1] : "";
  std::vector<Point> corners;
  for (++i; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words[0] == "end") {
      expect_words(l, 1);
      try {
        return ConvexPolygon(std::move(corners), std::move(label));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), head.number);
      }
    }
    if (l.words.size() != 2) throw ParseError("expected a corner 'x y' or 'end'", l.number);
    corners.push_back({parse_rat_at(l.words[0], l.number), parse_rat_at(l.words[1], l.number)});
  }
  throw ParseError("polygon block is not closed by 'end'", head.number);
}

void write_polygon(std::ostringstream& out, const ConvexPolygon& p) {
  out << "polygon";
  if (!p.label().empty()) out << ' ' << p.label();
  out << '\n';
  for (const auto& c : p.corners()) out << "  " << format_rat(c.x) << ' ' << format_rat(c.y) << '\n';
  out << "end\n";
}

}  // namespace

PolygonFamily FamilyDocument::family() const {
  if (!symmetry) return PolygonFamily(polygons);
  const auto& sym = *symmetry;
  std::vector<ConvexPolygon> out;
  for (std::size_t j = 0; j < sym.order; ++j) {
    const std::size_t step = (j + sym.order - sym.generator) % sym.order;
    ConvexPolygon p =
        rotate_about_origin(polygons.front(), static_cast<int>(step), static_cast<int>(sym.order), sym.digits);
    p.set_label("C" + std::to_string(j + 1));
    out.push_back(std::move(p));
  }
  return PolygonFamily(std::move(out));
}

FamilyDocument FamilyDocument::parse(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "vennk-family");
  FamilyDocument doc;
  std::optional<long> n;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& key = l.words[0];
    if (key == "n") {
      expect_words(l, 2);
      if (n) throw ParseError("duplicate 'n'", l.number);
      n = parse_int(l.words[1], l.number, "n");
      if (*n < 1 || *n > static_cast<long>(kMaxCurves)) throw ParseError("n out of range", l.number);
    } else if (key == "symmetry") {
      // symmetry generator G order N digits D
      if (l.words.size() != 7 || l.words[1] != "generator" || l.words[3] != "order" || l.words[5] != "digits") {
        throw ParseError("expected 'symmetry generator G order N digits D'", l.number);
      }
      if (doc.symmetry) throw ParseError("duplicate symmetry block", l.number);
      const long g = parse_int(l.words[2], l.number, "generator");
      const long order = parse_int(l.words[4], l.number, "order");
      const long digits = parse_int(l.words[6], l.number, "digits");
      if (order < 1 || order > static_cast<long>(kMaxCurves) || g < 0 || g >= order || digits < 1 || digits > 200) {
        throw ParseError("symmetry block out of range", l.number);
      }
      doc.symmetry = SymmetryBlock{static_cast<std::size_t>(g), static_cast<std::size_t>(order),
                                   static_cast<int>(digits)};
    } else if (key == "polygon") {
      doc.polygons.push_back(parse_polygon(lines, i));
    } else {
      throw ParseError("unknown directive '" + key + "'", l.number);
    }
  }
  if (!n) throw ParseError("missing 'n'");
  doc.n = static_cast<std::size_t>(*n);
  if (doc.symmetry) {
    if (doc.polygons.size() != 1) throw ParseError("a symmetric document lists exactly one generator polygon");
    if (doc.symmetry->order != doc.n) throw ParseError("symmetry order must equal n");
  } else if (doc.polygons.size() != doc.n) {
    throw ParseError("n is " + std::to_string(doc.n) + " but " + std::to_string(doc.polygons.size()) +
                     " polygons are listed");
  }
  return doc;
}

std::string FamilyDocument::serialize() const {
  std::ostringstream out;
  out << "vennk-family " << version << '\n';
  out << "n " << n << '\n';
  if (symmetry) {
    out << "symmetry generator " << symmetry->generator << " order " << symmetry->order << " digits "
        << symmetry->digits << '\n';
  }
  for (const auto& p : polygons) write_polygon(out, p);
  return out.str();
}

FamilyDocument FamilyDocument::from_family(const PolygonFamily& family) {
  FamilyDocument doc;
  doc.n = family.size();
  doc.polygons = family.polygons();
  return doc;
}

FamilyDocument FamilyDocument::symmetric(const ConvexPolygon& generator, std::size_t n, int digits) {
  FamilyDocument doc;
  doc.n = n;
  doc.polygons = {generator};
  doc.symmetry = SymmetryBlock{0, n, digits};
  return doc;
}

FamilyDocument load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return FamilyDocument::parse(text.str());
}

SearchConfig parse_search_config(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "vennk-search");
  SearchConfig cfg;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& key = l.words[0];
    if (key == "polygon") {
      if (cfg.initial) throw ParseError("only one initial generator may be given", l.number);
      cfg.initial = parse_polygon(lines, i);
      continue;
    }
    expect_words(l, 2);
    const std::string& v = l.words[1];
    auto positive = [&](long x) {
      if (x < 1) throw ParseError("'" + key + "' must be positive", l.number);
      return x;
    };
    if (key == "n") {
      cfg.n = static_cast<std::size_t>(positive(parse_int(v, l.number, "n")));
    } else if (key == "k") {
      cfg.k = static_cast<std::size_t>(positive(parse_int(v, l.number, "k")));
    } else if (key == "digits") {
      cfg.digits = static_cast<int>(positive(parse_int(v, l.number, "digits")));
    } else if (key == "target") {
      try {
        cfg.target = parse_target(v);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), l.number);
      }
    } else if (key == "seed") {
      try {
        cfg.seed = std::stoull(v);
      } catch (const std::exception&) {
        throw ParseError("seed must be a non-negative integer", l.number);
      }
    } else if (key == "max-iterations") {
      cfg.max_iterations = positive(parse_int(v, l.number, key.c_str()));
    } else if (key == "jitter-initial") {
      cfg.jitter_initial = parse_rat_at(v, l.number);
    } else if (key == "jitter-final") {
      cfg.jitter_final = parse_rat_at(v, l.number);
    } else if (key == "jitter-grid") {
      cfg.jitter_grid = parse_rat_at(v, l.number);
    } else if (key == "temperature-initial") {
      cfg.temperature_initial = to_double(parse_rat_at(v, l.number));
    } else if (key == "temperature-final") {
      cfg.temperature_final = to_double(parse_rat_at(v, l.number));
    } else if (key == "walkers") {
      cfg.walkers = static_cast<std::size_t>(positive(parse_int(v, l.number, "walkers")));
    } else if (key == "progress-interval") {
      cfg.progress_interval = parse_int(v, l.number, key.c_str());
    } else {
      throw ParseError("unknown search setting '" + key + "'", l.number);
    }
  }
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return cfg;
}

std::string serialize_search_config(const SearchConfig& c) {
  std::ostringstream out;
  out << "vennk-search 1\n"
      << "n " << c.n << '\n'
      << "k " << c.k << '\n'
      << "digits " << c.digits << '\n'
      << "target " << to_string(c.target) << '\n'
      << "seed " << c.seed << '\n'
      << "max-iterations " << c.max_iterations << '\n'
      << "jitter-initial " << format_rat(c.jitter_initial) << '\n'
      << "jitter-final " << format_rat(c.jitter_final) << '\n'
      << "jitter-grid " << format_rat(c.jitter_grid) << '\n'
      << "temperature-initial " << format_rat(Rat(c.temperature_initial)) << '\n'
      << "temperature-final " << format_rat(Rat(c.temperature_final)) << '\n'
      << "walkers " << c.walkers << '\n'
      << "progress-interval " << c.progress_interval << '\n';
  if (c.initial) write_polygon(out, *c.initial);
  return out.str();
}

}  // namespace vennk
