#include "vennk/classify.hpp"

#include <algorithm>

#include "vennk/bounds.hpp"

namespace vennk {

std::size_t RegionCensus::face_total() const {
  std::size_t total = 0;
  for (const auto& [sign, faces] : faces_by_sign) total += faces.size();
  return total;
}

std::size_t RegionCensus::multiplicity(const SignVector& s) const {
  auto it = faces_by_sign.find(s);
  return it == faces_by_sign.end() ? 0 : it->second.size();
}

std::vector<SignVector> RegionCensus::missing() const {
  std::vector<SignVector> out;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    SignVector s(bits, n);
    if (!faces_by_sign.contains(s)) out.push_back(s);
  }
  return out;
}

std::vector<SignVector> RegionCensus::duplicated() const {
  std::vector<SignVector> out;
  for (const auto& [sign, faces] : faces_by_sign) {
    if (faces.size() > 1) out.push_back(sign);
  }
  return out;
}

RegionCensus census(const Arrangement& arr) {
  RegionCensus c;
  c.n = arr.curve_count();
  for (const auto& f : arr.faces()) c.faces_by_sign[f.sign].push_back(f.id);
  return c;
}

VennReport report_for(const Arrangement& arr, const PolygonFamily& family) {
  VennReport r;
  r.n = family.size();
  r.k = family.max_corners();
  r.vertices = arr.vertex_count();
  r.edges = arr.edge_count();
  r.faces = arr.face_count();
  r.degree_histogram = degree_histogram(arr);
  r.outer_face_edges = outer_face_curve_edges(arr);

  const RegionCensus c = census(arr);
  r.regions_present = c.faces_by_sign.size();
  r.missing = c.missing();
  for (const auto& s : c.duplicated()) r.duplicated[s] = c.multiplicity(s);

  r.is_fisc = c.multiplicity(SignVector::ones(r.n)) > 0;
  r.is_independent_family = r.missing.empty();
  r.is_venn = r.is_independent_family && r.duplicated.empty();
  r.is_simple = std::all_of(r.degree_histogram.begin(), r.degree_histogram.end(),
                            [](const auto& entry) { return entry.first == 4; });

  if (!r.is_fisc) r.diagnostics.push_back("curves have no common interior point");
  if (!r.missing.empty()) {
    r.diagnostics.push_back(std::to_string(r.missing.size()) + " of " + std::to_string(1ULL << r.n) +
                            " regions are missing");
  }
  for (const auto& [sign, count] : r.duplicated) {
    r.diagnostics.push_back("region " + sign.str() + " splits into " + std::to_string(count) + " faces");
  }
  for (const auto& [degree, count] : r.degree_histogram) {
    if (degree > 4) {
      r.diagnostics.push_back(std::to_string(count) + " vertices of degree " + std::to_string(degree));
    }
  }
  return r;
}

VennReport verify(const PolygonFamily& family) { return report_for(Arrangement::build(family), family); }

namespace {

enum class Label { exterior, interior };

Label label_corner(const PolygonFamily& family, CurveId i, std::size_t corner, CurveId j) {
  const Point& p = family[i].corner(corner);
  switch (point_in_polygon(p, family[j])) {
    case Location::inside:
      return Label::interior;
    case Location::outside:
      return Label::exterior;
    case Location::boundary:
      break;
  }
  throw DegeneracyError(DegeneracyError::Kind::corner_incidence, i, j, p,
                        "corner " + std::to_string(corner) + " of curve " + std::to_string(i) +
                            " lies on the boundary of curve " + std::to_string(j));
}

std::size_t side_crossings(const PolygonFamily& family, CurveId i, std::size_t side, CurveId j) {
  const Segment s = family[i].side(side);
  std::size_t count = 0;
  for (std::size_t b = 0; b < family[j].size(); ++b) {
    const auto hit = segment_intersection(s, family[j].side(b));
    if (hit.kind == SegmentIntersection::Kind::empty) continue;
    if (!hit.proper()) {
      throw DegeneracyError(DegeneracyError::Kind::corner_incidence, i, j,
                            hit.kind == SegmentIntersection::Kind::point ? hit.at : s.a,
                            "side " + std::to_string(side) + " of curve " + std::to_string(i) +
                                " meets curve " + std::to_string(j) + " at a corner or along a segment");
    }
    ++count;
  }
  return count;
}

CornerProfile profile(const PolygonFamily& family, CurveId i, CurveId j) {
  CornerProfile p;
  p.i = i;
  p.j = j;
  p.k = family[i].size();
  std::vector<Label> labels;
  for (std::size_t c = 0; c < p.k; ++c) labels.push_back(label_corner(family, i, c, j));

  for (std::size_t s = 0; s < p.k; ++s) {
    const Label from = labels[s];
    const Label to = labels[(s + 1) % p.k];
    const std::size_t hits = side_crossings(family, i, s, j);
    p.crossings += hits;
    auto expect = [&](std::size_t wanted) {
      if (hits != wanted) {
        throw Error(ErrorCode::internal, "side " + std::to_string(s) + " of curve " + std::to_string(i) +
                                             " crosses curve " + std::to_string(j) + " " +
                                             std::to_string(hits) + " times");
      }
    };
    if (from == Label::exterior && to == Label::interior) {
      expect(1);
      ++p.ei;
    } else if (from == Label::interior && to == Label::exterior) {
      expect(1);
      ++p.ie;
    } else if (from == Label::interior) {
      expect(0);
      ++p.ii;
    } else if (hits == 0) {
      ++p.ee;
    } else if (hits == 2) {
      ++p.ee_crossed;
    } else {
      throw DegeneracyError(DegeneracyError::Kind::tangency, i, j, family[i].corner(s),
                            "side " + std::to_string(s) + " of curve " + std::to_string(i) +
                                " touches curve " + std::to_string(j) + " without crossing");
    }
  }
  return p;
}

}  // namespace

std::vector<CornerProfile> corner_profiles(const PolygonFamily& family) {
  std::vector<CornerProfile> out;
  for (CurveId i = 0; i < family.size(); ++i) {
    for (CurveId j = 0; j < family.size(); ++j) {
      if (i != j) out.push_back(profile(family, i, j));
    }
  }
  return out;
}

bool TheoremAudit::contiguity_holds() const {
  return std::all_of(outer_corners_contiguous.begin(), outer_corners_contiguous.end(), [](bool b) { return b; });
}

bool TheoremAudit::passed() const {
  return corner_sums_hold() && transitions_balanced() && contiguity_holds() && outer_inequality_holds() &&
         inner_inequality_holds() && crossing_identity_holds() && vertex_cap_holds();
}

TheoremAudit theorem_audit(const PolygonFamily& family) {
  const Arrangement arr = Arrangement::build(family);
  const VennReport report = report_for(arr, family);
  if (!report.is_venn) throw Error(ErrorCode::not_venn, "theorem audit requires a Venn diagram");

  TheoremAudit a;
  a.n = family.size();
  a.k = family.max_corners();

  for (CurveId i = 0; i < a.n; ++i) {
    const std::size_t k = family[i].size();
    std::vector<bool> outer(k, true);
    for (std::size_t c = 0; c < k; ++c) {
      for (CurveId j = 0; j < a.n && outer[c]; ++j) {
        if (j != i && label_corner(family, i, c, j) == Label::interior) outer[c] = false;
      }
    }
    const auto e = static_cast<std::size_t>(std::count(outer.begin(), outer.end(), true));
    a.outer_corners.push_back(e);
    a.inner_corners.push_back(k - e);
    std::size_t runs = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (outer[c] && !outer[(c + k - 1) % k]) ++runs;
    }
    a.outer_corners_contiguous.push_back(runs <= 1);
    a.outer_rhs += static_cast<long>(e) - 1;
    a.inner_rhs += static_cast<long>(k - e);
  }

  for (const auto& p : corner_profiles(family)) {
    ++a.pairs_checked;
    if (p.sums_to_k()) ++a.pairs_summing_to_k;
    if (p.ei == p.ie) ++a.pairs_balanced;
    a.ee_sum += static_cast<long>(p.ee);
    a.inner_lhs += static_cast<long>(p.ii + p.ie);
    a.crossing_sides += static_cast<long>(p.ei + p.ie + 2 * p.ee_crossed);
  }
  a.pair_crossings = static_cast<long>(pairwise_crossings(arr));
  a.vertices = static_cast<long>(arr.vertex_count());
  a.vertex_cap = vertex_cap_formula(a.n, a.k);
  return a;
}

}  // namespace vennk
