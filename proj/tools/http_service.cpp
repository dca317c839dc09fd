#include "http_service.hpp"

#include <chrono>
#include <thread>

#include "json.hpp"

namespace vennk::service {

namespace {

using nlohmann::json;

constexpr const char* kJson = "application/json";

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { vennk_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedFamily {
  vennk_family* ptr = nullptr;
  ~OwnedFamily() { vennk_family_free(ptr); }
};

int http_status_for(vennk_status s) {
  switch (s) {
    case VENNK_OK:
      return 200;
    case VENNK_ERR_PARSE:
    case VENNK_ERR_ARGUMENT:
    case VENNK_ERR_DOMAIN:
      return 400;
    case VENNK_ERR_DEGENERATE:
    case VENNK_ERR_NOT_VENN:
      return 422;
    default:
      return 500;
  }
}

void send_error(httplib::Response& res, vennk_status s) {
  res.status = http_status_for(s);
  json body{{"error", json::parse(vennk_last_error_json(), nullptr, false)}, {"status", static_cast<int>(s)}};
  res.set_content(body.dump(), kJson);
}

bool parse_family(const httplib::Request& req, httplib::Response& res, OwnedFamily& family) {
  const vennk_status s = vennk_family_parse(req.body.c_str(), &family.ptr);
  if (s != VENNK_OK) {
    send_error(res, s);
    return false;
  }
  return true;
}

}  // namespace

SearchRegistry::~SearchRegistry() {
  std::lock_guard lock(mutex_);
  jobs_.clear();
}

std::string SearchRegistry::start(const std::string& config_text, vennk_status& status) {
  vennk_search* job = nullptr;
  status = vennk_search_start(config_text.c_str(), &job);
  if (status != VENNK_OK) return {};
  std::lock_guard lock(mutex_);
  std::string id = "job-" + std::to_string(next_id_++);
  jobs_.emplace(id, std::unique_ptr<vennk_search, JobDeleter>(job));
  return id;
}

bool SearchRegistry::status(const std::string& id, std::string& json_out) {
  std::lock_guard lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return false;
  OwnedString s;
  if (vennk_search_status(it->second.get(), &s.ptr) != VENNK_OK) return false;
  json_out = s.str();
  return true;
}

bool SearchRegistry::remove(const std::string& id, std::string& final_json_out) {
  std::unique_ptr<vennk_search, JobDeleter> job;
  {
    std::lock_guard lock(mutex_);
    auto it = jobs_.find(id);
    if (it == jobs_.end()) return false;
    job = std::move(it->second);
    jobs_.erase(it);
  }
  vennk_search_cancel(job.get());
  json final_state;
  for (;;) {
    OwnedString s;
    if (vennk_search_status(job.get(), &s.ptr) != VENNK_OK) break;
    final_state = json::parse(s.str());
    if (final_state.value("state", "") != "running") break;
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  job.reset();
  final_state["id"] = id;
  final_json_out = final_state.dump();
  return true;
}

void install_routes(httplib::Server& server, SearchRegistry& registry) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/api/verify", [](const httplib::Request& req, httplib::Response& res) {
    OwnedFamily family;
    if (!parse_family(req, res, family)) return;
    OwnedString out;
    const vennk_status s = vennk_verify_with_geometry(family.ptr, 0, &out.ptr);
    if (s != VENNK_OK) return send_error(res, s);
    res.set_content(out.str(), kJson);
  });

  server.Post("/api/audit", [](const httplib::Request& req, httplib::Response& res) {
    OwnedFamily family;
    if (!parse_family(req, res, family)) return;
    OwnedString out;
    const vennk_status s = vennk_verify(family.ptr, 1, &out.ptr, nullptr);
    if (s != VENNK_OK) return send_error(res, s);
    res.set_content(out.str(), kJson);
  });

  server.Post("/api/render", [](const httplib::Request& req, httplib::Response& res) {
    OwnedFamily family;
    if (!parse_family(req, res, family)) return;
    OwnedString out;
    const bool shade = req.has_param("shade") && req.get_param_value("shade") != "0";
    const vennk_status s = vennk_render_svg(family.ptr, shade ? 1 : 0, &out.ptr);
    if (s != VENNK_OK) return send_error(res, s);
    res.set_content(out.str(), "image/svg+xml");
  });

  server.Get("/api/bounds", [](const httplib::Request& req, httplib::Response& res) {
    int lo = 3;
    int hi = 14;
    try {
      if (req.has_param("min")) lo = std::stoi(req.get_param_value("min"));
      if (req.has_param("max")) hi = std::stoi(req.get_param_value("max"));
    } catch (const std::exception&) {
      res.status = 400;
      res.set_content(json{{"error", {{"message", "min and max must be integers"}}}}.dump(), kJson);
      return;
    }
    OwnedString out;
    const vennk_status s = vennk_bounds_json(lo, hi, &out.ptr);
    if (s != VENNK_OK) return send_error(res, s);
    res.set_content(out.str(), kJson);
  });

  server.Post("/api/search/start", [&registry](const httplib::Request& req, httplib::Response& res) {
    vennk_status s = VENNK_OK;
    const std::string id = registry.start(req.body, s);
    if (s != VENNK_OK) return send_error(res, s);
    res.set_content(json{{"id", id}}.dump(), kJson);
  });

  server.Get(R"(/api/search/([A-Za-z0-9_-]+))", [&registry](const httplib::Request& req, httplib::Response& res) {
    std::string body;
    if (!registry.status(req.matches[1], body)) {
      res.status = 404;
      res.set_content(json{{"error", {{"message", "unknown search job"}}}}.dump(), kJson);
      return;
    }
    res.set_content(body, kJson);
  });

  server.Delete(R"(/api/search/([A-Za-z0-9_-]+))", [&registry](const httplib::Request& req, httplib::Response& res) {
    std::string body;
    if (!registry.remove(req.matches[1], body)) {
      res.status = 404;
      res.set_content(json{{"error", {{"message", "unknown search job"}}}}.dump(), kJson);
      return;
    }
    res.set_content(body, kJson);
  });
}

}  // namespace vennk::service
