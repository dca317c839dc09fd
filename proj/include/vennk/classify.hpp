#pragma once

#include <map>
#include <string>
#include <vector>

#include "vennk/arrangement.hpp"

namespace vennk {

/// Faces grouped by sign vector.
struct RegionCensus {
  std::size_t n = 0;
  std::map<SignVector, std::vector<FaceId>> faces_by_sign;

  std::size_t face_total() const;
  std::size_t multiplicity(const SignVector& s) const;
  std::vector<SignVector> missing() const;
  /// Sign vectors carried by two or more faces.
  std::vector<SignVector> duplicated() const;
};

RegionCensus census(const Arrangement& arr);

struct VennReport {
  std::size_t n = 0;
  std::size_t k = 0;  // largest corner count
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;

  bool is_fisc = false;
  bool is_independent_family = false;
  bool is_venn = false;
  bool is_simple = false;

  std::map<std::size_t, std::size_t> degree_histogram;
  std::map<CurveId, std::size_t> outer_face_edges;
  std::size_t regions_present = 0;
  std::vector<SignVector> missing;
  std::map<SignVector, std::size_t> duplicated;  // vector -> face count
  std::vector<std::string> diagnostics;

  friend bool operator==(const VennReport&, const VennReport&) = default;
};

VennReport report_for(const Arrangement& arr, const PolygonFamily& family);

/// Builds the arrangement and classifies it. Degeneracy errors propagate.
VennReport verify(const PolygonFamily& family);

/// Corner transitions of curve i measured against curve j, walking C_i
/// counter-clockwise. `ee_crossed` is the E->E side crossed twice by C_j.
struct CornerProfile {
  CurveId i = 0;
  CurveId j = 0;
  std::size_t k = 0;
  std::size_t ei = 0;
  std::size_t ie = 0;
  std::size_t ii = 0;
  std::size_t ee = 0;
  std::size_t ee_crossed = 0;
  std::size_t crossings = 0;  // boundary crossings of C_i and C_j found on C_i's sides

  bool sums_to_k() const { return ei + ie + ii + ee + ee_crossed == k; }

  friend bool operator==(const CornerProfile&, const CornerProfile&) = default;
};

/// One profile per ordered pair (i, j), i != j, in row-major order.
/// Throws DegeneracyError when a corner sits on the other boundary or a side
/// touches the other curve exactly once.
std::vector<CornerProfile> corner_profiles(const PolygonFamily& family);

struct TheoremAudit {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::size_t> outer_corners;  // E_i: corners exterior to every other curve
  std::vector<std::size_t> inner_corners;  // I_i
  std::vector<bool> outer_corners_contiguous;

  std::size_t pairs_checked = 0;
  std::size_t pairs_summing_to_k = 0;
  std::size_t pairs_balanced = 0;  // EI == IE

  long ee_sum = 0;           // sum over ordered pairs of EE_ij
  long outer_rhs = 0;        // sum over curves of (E_i - 1)
  long inner_lhs = 0;        // sum over ordered pairs of II_ij + IE_ij
  long inner_rhs = 0;        // sum over curves of I_i
  long crossing_sides = 0;   // sum over ordered pairs of EI + IE + 2 EE'
  long pair_crossings = 0;   // curve pairs meeting at vertices, summed over vertices

  long vertices = 0;
  long vertex_cap = 0;       // 2k C(n,2) - n(k-1)

  bool corner_sums_hold() const { return pairs_summing_to_k == pairs_checked; }
  bool transitions_balanced() const { return pairs_balanced == pairs_checked; }
  bool contiguity_holds() const;
  bool outer_inequality_holds() const { return ee_sum >= outer_rhs; }
  bool inner_inequality_holds() const { return inner_lhs >= inner_rhs; }
  bool crossing_identity_holds() const { return crossing_sides == 2 * pair_crossings; }
  bool vertex_cap_holds() const { return vertices <= vertex_cap; }
  bool passed() const;

  friend bool operator==(const TheoremAudit&, const TheoremAudit&) = default;
};

/// Corner-calculus audit of a verified Venn diagram. Throws
/// Error(ErrorCode::not_venn) if the family is not a Venn diagram.
TheoremAudit theorem_audit(const PolygonFamily& family);

}  // namespace vennk
