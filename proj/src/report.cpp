#include "vennk/report.hpp"

#include <iomanip>
#include <sstream>

namespace vennk {

using nlohmann::json;

namespace {

std::uint64_t to_u64(const mpz_class& z) { return static_cast<std::uint64_t>(z.get_ui()); }

json sizes_to_json(const std::map<std::size_t, std::size_t>& m) {
  json j = json::object();
  for (const auto& [key, value] : m) j[std::to_string(key)] = value;
  return j;
}

std::map<std::size_t, std::size_t> sizes_from_json(const json& j) {
  std::map<std::size_t, std::size_t> m;
  for (const auto& [key, value] : j.items()) m[std::stoul(key)] = value.get<std::size_t>();
  return m;
}

json bools_to_json(const std::vector<bool>& v) {
  json j = json::array();
  for (bool b : v) j.push_back(b);
  return j;
}

json point_json(const Point& p) { return json::array({to_double(p.x), to_double(p.y)}); }

}  // namespace

ReportDocument make_report_document(const PolygonFamily& family, bool with_audit) {
  ReportDocument doc;
  doc.report = verify(family);
  const auto& r = doc.report;
  if (r.n >= 3 && r.k >= 3) {
    BoundsComparison b;
    b.n = r.n;
    b.k = r.k;
    const long n = static_cast<long>(r.n);
    const long k = static_cast<long>(r.k);
    b.lemma1_max_vertices = to_u64(lemma1_max_vertices(n, k));
    b.theorem_vertex_cap = to_u64(theorem_vertex_cap(n, k));
    b.theorem_min_k = to_u64(theorem_min_k(n));
    b.simple_vertex_count = to_u64(simple_venn_vertices(n));
    b.k_meets_lower_bound = r.k >= b.theorem_min_k;
    b.vertices_within_caps = r.vertices <= std::min(b.lemma1_max_vertices, b.theorem_vertex_cap);
    doc.bounds = b;
  }
  if (with_audit) {
    if (r.is_venn) {
      doc.audit = theorem_audit(family);
    } else {
      doc.audit_skipped = "not a Venn diagram";
    }
  }
  return doc;
}

json audit_to_json(const TheoremAudit& a) {
  return json{
      {"n", a.n},
      {"k", a.k},
      {"outer_corners", a.outer_corners},
      {"inner_corners", a.inner_corners},
      {"outer_corners_contiguous", bools_to_json(a.outer_corners_contiguous)},
      {"pairs_checked", a.pairs_checked},
      {"pairs_summing_to_k", a.pairs_summing_to_k},
      {"pairs_balanced", a.pairs_balanced},
      {"ee_sum", a.ee_sum},
      {"outer_rhs", a.outer_rhs},
      {"inner_lhs", a.inner_lhs},
      {"inner_rhs", a.inner_rhs},
      {"crossing_sides", a.crossing_sides},
      {"pair_crossings", a.pair_crossings},
      {"vertices", a.vertices},
      {"vertex_cap", a.vertex_cap},
      {"checks",
       {{"corner_sums", a.corner_sums_hold()},
        {"transitions_balanced", a.transitions_balanced()},
        {"outer_corners_contiguous", a.contiguity_holds()},
        {"outer_inequality", a.outer_inequality_holds()},
        {"inner_inequality", a.inner_inequality_holds()},
        {"crossing_identity", a.crossing_identity_holds()},
        {"vertex_cap", a.vertex_cap_holds()}}},
      {"margins",
       {{"outer_inequality", a.ee_sum - a.outer_rhs},
        {"inner_inequality", a.inner_lhs - a.inner_rhs},
        {"vertex_cap", a.vertex_cap - a.vertices}}},
      {"passed", a.passed()},
  };
}

TheoremAudit audit_from_json(const json& j) {
  TheoremAudit a;
  a.n = j.at("n");
  a.k = j.at("k");
  a.outer_corners = j.at("outer_corners").get<std::vector<std::size_t>>();
  a.inner_corners = j.at("inner_corners").get<std::vector<std::size_t>>();
  for (const auto& b : j.at("outer_corners_contiguous")) a.outer_corners_contiguous.push_back(b.get<bool>());
  a.pairs_checked = j.at("pairs_checked");
  a.pairs_summing_to_k = j.at("pairs_summing_to_k");
  a.pairs_balanced = j.at("pairs_balanced");
  a.ee_sum = j.at("ee_sum");
  a.outer_rhs = j.at("outer_rhs");
  a.inner_lhs = j.at("inner_lhs");
  a.inner_rhs = j.at("inner_rhs");
  a.crossing_sides = j.at("crossing_sides");
  a.pair_crossings = j.at("pair_crossings");
  a.vertices = j.at("vertices");
  a.vertex_cap = j.at("vertex_cap");
  return a;
}

json to_json(const ReportDocument& doc) {
  const VennReport& r = doc.report;
  json missing = json::array();
  for (const auto& s : r.missing) missing.push_back(s.str());
  json duplicated = json::object();
  for (const auto& [s, count] : r.duplicated) duplicated[s.str()] = count;
  json outer = json::object();
  for (const auto& [curve, count] : r.outer_face_edges) outer[std::to_string(curve)] = count;

  json j{
      {"format", "vennk-report"},
      {"version", 1},
      {"n", r.n},
      {"k", r.k},
      {"vertices", r.vertices},
      {"edges", r.edges},
      {"faces", r.faces},
      {"is_fisc", r.is_fisc},
      {"is_independent_family", r.is_independent_family},
      {"is_venn", r.is_venn},
      {"is_simple", r.is_simple},
      {"degree_histogram", sizes_to_json(r.degree_histogram)},
      {"outer_face_edges", outer},
      {"census",
       {{"regions_expected", std::uint64_t{1} << r.n},
        {"regions_present", r.regions_present},
        {"missing", missing},
        {"duplicated", duplicated}}},
      {"diagnostics", r.diagnostics},
  };
  if (doc.bounds) {
    const auto& b = *doc.bounds;
    j["bounds"] = {{"n", b.n},
                   {"k", b.k},
                   {"lemma1_max_vertices", b.lemma1_max_vertices},
                   {"theorem_vertex_cap", b.theorem_vertex_cap},
                   {"theorem_min_k", b.theorem_min_k},
                   {"simple_vertex_count", b.simple_vertex_count},
                   {"k_meets_lower_bound", b.k_meets_lower_bound},
                   {"vertices_within_caps", b.vertices_within_caps}};
  }
  if (doc.audit) j["audit"] = audit_to_json(*doc.audit);
  if (doc.audit_skipped) j["audit_skipped"] = *doc.audit_skipped;
  return j;
}

ReportDocument report_from_json(const json& j) {
  if (j.value("format", "") != "vennk-report") throw ParseError("not a vennk-report document");
  ReportDocument doc;
  VennReport& r = doc.report;
  r.n = j.at("n");
  r.k = j.at("k");
  r.vertices = j.at("vertices");
  r.edges = j.at("edges");
  r.faces = j.at("faces");
  r.is_fisc = j.at("is_fisc");
  r.is_independent_family = j.at("is_independent_family");
  r.is_venn = j.at("is_venn");
  r.is_simple = j.at("is_simple");
  r.degree_histogram = sizes_from_json(j.at("degree_histogram"));
  r.outer_face_edges = sizes_from_json(j.at("outer_face_edges"));
  const json& c = j.at("census");
  r.regions_present = c.at("regions_present");
  for (const auto& s : c.at("missing")) r.missing.push_back(SignVector::from_string(s.get<std::string>()));
  for (const auto& [s, count] : c.at("duplicated").items()) {
    r.duplicated[SignVector::from_string(s)] = count.get<std::size_t>();
  }
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    doc.bounds = BoundsComparison{b.at("n"),
                                  b.at("k"),
                                  b.at("lemma1_max_vertices"),
                                  b.at("theorem_vertex_cap"),
                                  b.at("theorem_min_k"),
                                  b.at("simple_vertex_count"),
                                  b.at("k_meets_lower_bound"),
                                  b.at("vertices_within_caps")};
  }
  if (j.contains("audit")) doc.audit = audit_from_json(j["audit"]);
  if (j.contains("audit_skipped")) doc.audit_skipped = j["audit_skipped"].get<std::string>();
  return doc;
}

json geometry_json(const Arrangement& arr) {
  json vertices = json::array();
  for (const auto& v : arr.vertices()) vertices.push_back({{"at", point_json(v.at)}, {"degree", v.degree()}});
  json edges = json::array();
  for (const auto& e : arr.edges()) {
    json path = json::array();
    for (const auto& p : e.path) path.push_back(point_json(p));
    const auto& fwd = arr.half_edges()[e.forward_half];
    edges.push_back({{"curve", e.curve},
                     {"path", path},
                     {"inside_sign", arr.faces()[fwd.face].sign.str()},
                     {"outside_sign", arr.faces()[arr.half_edges()[fwd.twin].face].sign.str()}});
  }
  return json{{"vertices", vertices}, {"edges", edges}};
}

json bounds_json(const std::vector<BoundsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"lemma2_min_k", to_u64(r.lemma2_min_k)},
                   {"theorem_min_k", to_u64(r.theorem_min_k)},
                   {"upper_k", to_u64(r.upper_k)}});
  }
  return out;
}

std::string bounds_text(const std::vector<BoundsRow>& rows) {
  std::vector<std::string> ns{"n"}, lows{"k >="}, highs{"k <="};
  for (const auto& r : rows) {
    ns.push_back(std::to_string(r.n));
    lows.push_back(r.theorem_min_k.get_str());
    highs.push_back(r.upper_k.get_str());
  }
  std::vector<std::size_t> width(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) width[i] = std::max({ns[i].size(), lows[i].size(), highs[i].size()});
  std::ostringstream out;
  for (const auto* row : {&ns, &lows, &highs}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      if (i > 0) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << (*row)[i];
    }
    out << '\n';
  }
  return out.str();
}

json split_report_json(const SplitReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"curve", s.translation.curve},
                     {"by", {format_rat(s.translation.by.x), format_rat(s.translation.by.y)}},
                     {"vertex_degree", s.vertex_degree},
                     {"faces_before", s.faces_before},
                     {"faces_after", s.faces_after}});
  }
  return json{{"histogram_before", sizes_to_json(r.histogram_before)},
              {"histogram_after", sizes_to_json(r.histogram_after)},
              {"faces_before", r.faces_before},
              {"faces_after", r.faces_after},
              {"input_was_venn", r.input_was_venn},
              {"still_independent_family", r.still_independent_family},
              {"steps", steps}};
}

json search_result_json(const SearchResult& r) {
  json improvements = json::array();
  for (const auto& [it, d] : r.improvements) improvements.push_back({it, d});
  json corners = json::array();
  for (const auto& c : r.best.generator.corners()) corners.push_back({format_rat(c.x), format_rat(c.y)});
  return json{{"deficiency", r.best.deficiency},
              {"iteration", r.best.iteration},
              {"iterations_run", r.iterations_run},
              {"walker", r.walker},
              {"cancelled", r.cancelled},
              {"generator", corners},
              {"improvements", improvements}};
}

json search_progress_json(const SearchProgress& p) {
  json corners = json::array();
  for (const auto& c : p.best_generator.corners()) corners.push_back({format_rat(c.x), format_rat(c.y)});
  return json{{"walker", p.walker},
              {"iteration", p.iteration},
              {"deficiency", p.current_deficiency},
              {"best_deficiency", p.best_deficiency},
              {"best_generator", corners}};
}

json error_json(const std::exception& e) {
  json j{{"message", e.what()}};
  if (const auto* err = dynamic_cast<const Error*>(&e)) j["code"] = static_cast<int>(err->code());
  if (const auto* d = dynamic_cast<const DegeneracyError*>(&e)) {
    j["kind"] = to_string(d->kind());
    j["curves"] = {d->first(), d->second()};
    j["at"] = {format_rat(d->where().x), format_rat(d->where().y)};
  }
  return j;
}

}  // namespace vennk
