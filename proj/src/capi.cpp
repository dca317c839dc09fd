#include "vennk/vennk.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <thread>

#include "vennk/document.hpp"
#include "vennk/render.hpp"
#include "vennk/report.hpp"

struct vennk_family {
  vennk::FamilyDocument document;
  vennk::PolygonFamily family;
};

struct vennk_search {
  vennk::SearchConfig config;
  std::atomic<bool> cancel{false};
  std::mutex mutex;
  std::string state = "running";
  nlohmann::json last_progress;
  nlohmann::json result;
  std::string family_text;
  nlohmann::json error;
  std::thread worker;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_json = "{}";

void clear_error() {
  last_error.clear();
  last_error_json = "{}";
}

vennk_status status_of(vennk::ErrorCode code) {
  switch (code) {
    case vennk::ErrorCode::parse:
      return VENNK_ERR_PARSE;
    case vennk::ErrorCode::degenerate:
      return VENNK_ERR_DEGENERATE;
    case vennk::ErrorCode::domain:
      return VENNK_ERR_DOMAIN;
    case vennk::ErrorCode::not_venn:
      return VENNK_ERR_NOT_VENN;
    case vennk::ErrorCode::retries_exhausted:
      return VENNK_ERR_RETRIES;
    case vennk::ErrorCode::epsilon_too_large:
      return VENNK_ERR_EPSILON;
    case vennk::ErrorCode::cancelled:
      return VENNK_ERR_CANCELLED;
    case vennk::ErrorCode::internal:
      break;
  }
  return VENNK_ERR_INTERNAL;
}

vennk_status fail(const std::exception& e) {
  last_error = e.what();
  last_error_json = vennk::error_json(e).dump();
  if (const auto* err = dynamic_cast<const vennk::Error*>(&e)) return status_of(err->code());
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return VENNK_ERR_PARSE;
  return VENNK_ERR_INTERNAL;
}

vennk_status bad_argument(const char* what) {
  last_error = what;
  last_error_json = nlohmann::json{{"message", what}, {"code", VENNK_ERR_ARGUMENT}}.dump();
  return VENNK_ERR_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

template <class Fn>
vennk_status guarded(Fn&& fn) {
  clear_error();
  try {
    fn();
    return VENNK_OK;
  } catch (const std::exception& e) {
    return fail(e);
  } catch (...) {
    last_error = "unknown exception";
    return VENNK_ERR_INTERNAL;
  }
}

vennk_family* make_family(vennk::FamilyDocument doc) {
  auto family = doc.family();
  return new vennk_family{std::move(doc), std::move(family)};
}

}  // namespace

extern "C" {

const char* vennk_version(void) { return "1.0.0"; }
const char* vennk_last_error(void) { return last_error.c_str(); }
const char* vennk_last_error_json(void) { return last_error_json.c_str(); }
void vennk_string_free(char* s) { std::free(s); }

vennk_status vennk_family_parse(const char* text, vennk_family** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = make_family(vennk::FamilyDocument::parse(text)); });
}

vennk_status vennk_family_load(const char* path, vennk_family** out) {
  if (!path || !out) return bad_argument("null argument");
  return guarded([&] { *out = make_family(vennk::load_family_file(path)); });
}

vennk_status vennk_family_serialize(const vennk_family* family, char** out_text) {
  if (!family || !out_text) return bad_argument("null argument");
  return guarded([&] { *out_text = copy_out(family->document.serialize()); });
}

size_t vennk_family_size(const vennk_family* family) { return family ? family->family.size() : 0; }

void vennk_family_free(vennk_family* family) { delete family; }

vennk_status vennk_verify(const vennk_family* family, int with_audit, char** out_report_json, int* is_venn) {
  if (!family || !out_report_json) return bad_argument("null argument");
  return guarded([&] {
    const auto doc = vennk::make_report_document(family->family, with_audit != 0);
    *out_report_json = copy_out(vennk::to_json(doc).dump(2));
    if (is_venn) *is_venn = doc.report.is_venn ? 1 : 0;
  });
}

vennk_status vennk_verify_with_geometry(const vennk_family* family, int with_audit, char** out_json) {
  if (!family || !out_json) return bad_argument("null argument");
  return guarded([&] {
    const auto doc = vennk::make_report_document(family->family, with_audit != 0);
    const auto arr = vennk::Arrangement::build(family->family);
    nlohmann::json j{{"report", vennk::to_json(doc)}, {"geometry", vennk::geometry_json(arr)}};
    *out_json = copy_out(j.dump());
  });
}

vennk_status vennk_audit(const vennk_family* family, char** out_audit_json) {
  if (!family || !out_audit_json) return bad_argument("null argument");
  return guarded([&] { *out_audit_json = copy_out(vennk::audit_to_json(vennk::theorem_audit(family->family)).dump(2)); });
}

vennk_status vennk_bounds_json(int n_min, int n_max, char** out_json) {
  if (!out_json) return bad_argument("null argument");
  return guarded([&] { *out_json = copy_out(vennk::bounds_json(vennk::bounds_table(n_min, n_max)).dump(2)); });
}

vennk_status vennk_bounds_text(int n_min, int n_max, char** out_text) {
  if (!out_text) return bad_argument("null argument");
  return guarded([&] { *out_text = copy_out(vennk::bounds_text(vennk::bounds_table(n_min, n_max))); });
}

vennk_status vennk_perturb(const vennk_family* family, const char* epsilon, uint64_t seed, vennk_family** out) {
  if (!family || !epsilon || !out) return bad_argument("null argument");
  return guarded([&] {
    auto moved = vennk::perturb(family->family, vennk::parse_rat(epsilon), seed);
    *out = make_family(vennk::FamilyDocument::from_family(moved));
  });
}

vennk_status vennk_split(const vennk_family* family, const char* epsilon, uint64_t seed, vennk_family** out,
                         char** out_report_json) {
  if (!family || !epsilon || !out) return bad_argument("null argument");
  return guarded([&] {
    auto [split, report] = vennk::split_to_simple(family->family, vennk::parse_rat(epsilon), seed);
    std::string json = vennk::split_report_json(report).dump(2);
    *out = make_family(vennk::FamilyDocument::from_family(split));
    if (out_report_json) *out_report_json = copy_out(json);
  });
}

vennk_status vennk_render_svg(const vennk_family* family, int shade_faces, char** out_svg) {
  if (!family || !out_svg) return bad_argument("null argument");
  return guarded([&] {
    vennk::RenderOptions options;
    options.shade_faces = shade_faces != 0;
    *out_svg = copy_out(vennk::render_svg(family->family, options));
  });
}

vennk_status vennk_search_run(const char* config_text, vennk_progress_fn progress, void* user,
                              char** out_family_text, char** out_result_json) {
  if (!config_text) return bad_argument("null argument");
  return guarded([&] {
    const auto config = vennk::parse_search_config(config_text);
    vennk::ProgressCallback callback;
    if (progress) {
      callback = [&](const vennk::SearchProgress& p) { progress(vennk::search_progress_json(p).dump().c_str(), user); };
    }
    const auto result = vennk::anneal(config, callback);
    const auto doc = vennk::FamilyDocument::symmetric(result.best.generator, config.n, config.digits);
    if (out_family_text) *out_family_text = copy_out(doc.serialize());
    if (out_result_json) *out_result_json = copy_out(vennk::search_result_json(result).dump(2));
  });
}

vennk_status vennk_search_start(const char* config_text, vennk_search** out) {
  if (!config_text || !out) return bad_argument("null argument");
  return guarded([&] {
    auto job = std::make_unique<vennk_search>();
    job->config = vennk::parse_search_config(config_text);
    vennk_search* raw = job.get();
    raw->worker = std::thread([raw] {
      try {
        auto result = vennk::anneal(
            raw->config,
            [raw](const vennk::SearchProgress& p) {
              std::lock_guard lock(raw->mutex);
              raw->last_progress = vennk::search_progress_json(p);
            },
            &raw->cancel);
        auto text = vennk::FamilyDocument::symmetric(result.best.generator, raw->config.n, raw->config.digits)
                        .serialize();
        std::lock_guard lock(raw->mutex);
        raw->result = vennk::search_result_json(result);
        raw->family_text = std::move(text);
        raw->state = result.cancelled ? "cancelled" : "done";
      } catch (const std::exception& e) {
        std::lock_guard lock(raw->mutex);
        raw->error = vennk::error_json(e);
        raw->state = "failed";
      }
    });
    *out = job.release();
  });
}

vennk_status vennk_search_status(vennk_search* job, char** out_status_json) {
  if (!job || !out_status_json) return bad_argument("null argument");
  return guarded([&] {
    std::lock_guard lock(job->mutex);
    nlohmann::json j{{"state", job->state}};
    if (!job->last_progress.is_null()) {
      j["iteration"] = job->last_progress["iteration"];
      j["best_deficiency"] = job->last_progress["best_deficiency"];
      j["progress"] = job->last_progress;
    }
    if (!job->result.is_null()) {
      j["result"] = job->result;
      j["best_deficiency"] = job->result["deficiency"];
      j["family"] = job->family_text;
    }
    if (!job->error.is_null()) j["error"] = job->error;
    *out_status_json = copy_out(j.dump());
  });
}

void vennk_search_cancel(vennk_search* job) {
  if (job) job->cancel = true;
}

void vennk_search_free(vennk_search* job) {
  if (!job) return;
  job->cancel = true;
  if (job->worker.joinable()) job->worker.join();
  delete job;
}

}  // extern "C"
