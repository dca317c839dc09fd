#include <chrono>
#include <string>
#include <thread>

#include "doctest.h"
#include "json.hpp"
#include "vennk/vennk.h"

using nlohmann::json;

namespace {

std::string data_path(const std::string& name) { return std::string(VENNK_DATA_DIR) + "/" + name; }

struct Family {
  vennk_family* ptr = nullptr;
  ~Family() { vennk_family_free(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  vennk_string_free(s);
  return out;
}

const char* kTwoSquares =
    "vennk-family 1\nn 2\npolygon A\n0 0\n2 0\n2 2\n0 2\nend\npolygon B\n1 1\n3 1\n3 3\n1 3\nend\n";

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(vennk_version()) == "1.0.0");
  Family f;
  CHECK(vennk_family_parse("not a family", &f.ptr) == VENNK_ERR_PARSE);
  CHECK(f.ptr == nullptr);
  CHECK(std::string(vennk_last_error()).size() > 0);
  CHECK(json::parse(vennk_last_error_json())["code"] == 2);
  CHECK(vennk_family_parse(kTwoSquares, &f.ptr) == VENNK_OK);
  CHECK(std::string(vennk_last_error()).empty());
}

TEST_CASE("null arguments are rejected") {
  CHECK(vennk_family_parse(nullptr, nullptr) == VENNK_ERR_ARGUMENT);
  CHECK(vennk_verify(nullptr, 0, nullptr, nullptr) == VENNK_ERR_ARGUMENT);
  CHECK(vennk_family_size(nullptr) == 0);
  vennk_family_free(nullptr);
  vennk_search_free(nullptr);
  vennk_string_free(nullptr);
}

TEST_CASE("verify through the C API") {
  Family f;
  REQUIRE(vennk_family_load(data_path("table2.family").c_str(), &f.ptr) == VENNK_OK);
  CHECK(vennk_family_size(f.ptr) == 7);
  char* out = nullptr;
  int is_venn = -1;
  REQUIRE(vennk_verify(f.ptr, 1, &out, &is_venn) == VENNK_OK);
  const auto report = json::parse(take(out));
  CHECK(is_venn == 1);
  CHECK(report["vertices"] == 126);
  CHECK(report["audit"]["passed"] == true);
  CHECK(report["audit"]["vertex_cap"] == 147);

  REQUIRE(vennk_verify_with_geometry(f.ptr, 0, &out) == VENNK_OK);
  const auto both = json::parse(take(out));
  CHECK(both["geometry"]["vertices"].size() == 126);
  CHECK(both["geometry"]["edges"].size() == 252);
  CHECK(both["report"]["is_simple"] == true);
}

TEST_CASE("degeneracies map to their status code") {
  Family f;
  REQUIRE(vennk_family_load(data_path("degenerate.family").c_str(), &f.ptr) == VENNK_OK);
  char* out = nullptr;
  CHECK(vennk_verify(f.ptr, 0, &out, nullptr) == VENNK_ERR_DEGENERATE);
  CHECK(out == nullptr);
  const auto err = json::parse(vennk_last_error_json());
  CHECK(err["kind"] == "corner_incidence");
  CHECK(err["curves"] == json::array({0, 1}));
}

TEST_CASE("audit refuses non-Venn input") {
  Family f;
  REQUIRE(vennk_family_load(data_path("disjoint_squares.family").c_str(), &f.ptr) == VENNK_OK);
  char* out = nullptr;
  CHECK(vennk_audit(f.ptr, &out) == VENNK_ERR_NOT_VENN);
}

TEST_CASE("bounds through the C API") {
  char* out = nullptr;
  REQUIRE(vennk_bounds_json(8, 8, &out) == VENNK_OK);
  const auto rows = json::parse(take(out));
  CHECK(rows[0]["theorem_min_k"] == 6);
  CHECK(rows[0]["upper_k"] == 64);
  CHECK(vennk_bounds_text(2, 4, &out) == VENNK_ERR_DOMAIN);
}

TEST_CASE("perturb, split, serialize and render") {
  Family degenerate;
  REQUIRE(vennk_family_load(data_path("degenerate.family").c_str(), &degenerate.ptr) == VENNK_OK);
  Family moved;
  REQUIRE(vennk_perturb(degenerate.ptr, "0.01", 5, &moved.ptr) == VENNK_OK);
  char* out = nullptr;
  CHECK(vennk_verify(moved.ptr, 0, &out, nullptr) == VENNK_OK);
  take(out);
  CHECK(vennk_perturb(degenerate.ptr, "-1", 5, &moved.ptr) == VENNK_ERR_DOMAIN);
  CHECK(vennk_perturb(degenerate.ptr, "x", 5, &moved.ptr) == VENNK_ERR_PARSE);

  Family triple;
  REQUIRE(vennk_family_load(data_path("triple_point.family").c_str(), &triple.ptr) == VENNK_OK);
  Family split;
  REQUIRE(vennk_split(triple.ptr, "1/100", 3, &split.ptr, &out) == VENNK_OK);
  const auto report = json::parse(take(out));
  CHECK(report["faces_after"].get<int>() > report["faces_before"].get<int>());

  REQUIRE(vennk_family_serialize(split.ptr, &out) == VENNK_OK);
  const std::string text = take(out);
  Family again;
  REQUIRE(vennk_family_parse(text.c_str(), &again.ptr) == VENNK_OK);
  REQUIRE(vennk_family_serialize(again.ptr, &out) == VENNK_OK);
  CHECK(take(out) == text);

  REQUIRE(vennk_render_svg(again.ptr, 1, &out) == VENNK_OK);
  CHECK(take(out).find("<svg") != std::string::npos);
}

TEST_CASE("search_run reports progress and returns a family") {
  const std::string config =
      "vennk-search 1\nn 7\nk 4\ntarget simple_venn\nmax-iterations 5\npolygon\n"
      "-0.446 0\n-0.123 -0.433\n0.699 0.061\n-0.081 0.451\nend\n";
  char* family = nullptr;
  char* result = nullptr;
  REQUIRE(vennk_search_run(config.c_str(), nullptr, nullptr, &family, &result) == VENNK_OK);
  CHECK(json::parse(take(result))["deficiency"] == 0);
  Family f;
  CHECK(vennk_family_parse(take(family).c_str(), &f.ptr) == VENNK_OK);
  CHECK(vennk_family_size(f.ptr) == 7);
  CHECK(vennk_search_run("vennk-search 1\nn 1\n", nullptr, nullptr, &family, &result) == VENNK_ERR_PARSE);
}

TEST_CASE("background search can be polled and cancelled") {
  vennk_search* job = nullptr;
  const std::string config = "vennk-search 1\nn 7\nk 4\nseed 5\nmax-iterations 100000\nprogress-interval 1\n";
  REQUIRE(vennk_search_start(config.c_str(), &job) == VENNK_OK);
  char* out = nullptr;
  REQUIRE(vennk_search_status(job, &out) == VENNK_OK);
  CHECK(json::parse(take(out))["state"] == "running");
  vennk_search_cancel(job);
  std::string state = "running";
  for (int i = 0; i < 500 && state == "running"; ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
    REQUIRE(vennk_search_status(job, &out) == VENNK_OK);
    state = json::parse(take(out))["state"];
  }
  CHECK(state == "cancelled");
  vennk_search_free(job);
}
