#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "httplib.h"
#include "vennk/vennk.h"

namespace vennk::service {

/// Registry of background search jobs keyed by id. All access goes through
/// one mutex.
class SearchRegistry {
 public:
  SearchRegistry() = default;
  SearchRegistry(const SearchRegistry&) = delete;
  SearchRegistry& operator=(const SearchRegistry&) = delete;
  ~SearchRegistry();

  /// Returns the new job id; on failure `status` is set and the id is empty.
  std::string start(const std::string& config_text, vennk_status& status);
  /// False when the id is unknown.
  bool status(const std::string& id, std::string& json_out);
  bool remove(const std::string& id, std::string& final_json_out);

 private:
  struct JobDeleter {
    void operator()(vennk_search* job) const { vennk_search_free(job); }
  };
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<vennk_search, JobDeleter>> jobs_;
  unsigned long next_id_ = 1;
};

/// Installs the /api routes on `server`. `registry` must outlive it.
void install_routes(httplib::Server& server, SearchRegistry& registry);

}  // namespace vennk::service
