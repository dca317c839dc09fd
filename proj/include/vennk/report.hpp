#pragma once

// JSON documents exchanged by the CLI, the C API and the HTTP service.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vennk/bounds.hpp"
#include "vennk/classify.hpp"
#include "vennk/search.hpp"
#include "vennk/transform.hpp"

namespace vennk {

/// How a family's measured vertex count and k sit against the closed-form bounds.
struct BoundsComparison {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t lemma1_max_vertices = 0;
  std::uint64_t theorem_vertex_cap = 0;
  std::uint64_t theorem_min_k = 0;
  std::uint64_t simple_vertex_count = 0;  // 2^n - 2
  bool k_meets_lower_bound = false;
  bool vertices_within_caps = false;

  friend bool operator==(const BoundsComparison&, const BoundsComparison&) = default;
};

struct ReportDocument {
  VennReport report;
  std::optional<BoundsComparison> bounds;  // present when n >= 3 and k >= 3
  std::optional<TheoremAudit> audit;
  std::optional<std::string> audit_skipped;  // why --audit produced no audit

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Verifies the family (and audits it when asked and it is a Venn diagram).
/// Degeneracy errors propagate.
ReportDocument make_report_document(const PolygonFamily& family, bool with_audit);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

nlohmann::json audit_to_json(const TheoremAudit& a);
TheoremAudit audit_from_json(const nlohmann::json& j);

/// Vertex and edge coordinates (as decimal doubles) for drawing clients.
nlohmann::json geometry_json(const Arrangement& arr);

nlohmann::json bounds_json(const std::vector<BoundsRow>& rows);
/// Aligned three-row table in the layout n / k >= / k <=.
std::string bounds_text(const std::vector<BoundsRow>& rows);

nlohmann::json split_report_json(const SplitReport& r);
nlohmann::json search_result_json(const SearchResult& r);
nlohmann::json search_progress_json(const SearchProgress& p);

/// Structured description of an exception thrown by the library.
nlohmann::json error_json(const std::exception& e);

}  // namespace vennk
