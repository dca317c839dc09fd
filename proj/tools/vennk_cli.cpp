// vennk command-line tool. Talks to the library only through the C API.

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "http_service.hpp"
#include "json.hpp"
#include "vennk/vennk.h"

namespace {

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { vennk_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedFamily {
  vennk_family* ptr = nullptr;
  ~OwnedFamily() { vennk_family_free(ptr); }
};

int report_failure(vennk_status s) {
  std::cerr << "vennk: " << vennk_last_error() << '\n';
  return static_cast<int>(s);
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path);
  ok = static_cast<bool>(in);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int cmd_verify(const std::string& path, bool audit) {
  OwnedFamily family;
  if (auto s = vennk_family_load(path.c_str(), &family.ptr); s != VENNK_OK) return report_failure(s);
  OwnedString report;
  int is_venn = 0;
  if (auto s = vennk_verify(family.ptr, audit ? 1 : 0, &report.ptr, &is_venn); s != VENNK_OK) {
    return report_failure(s);
  }
  std::cout << report.str() << '\n';
  return is_venn ? 0 : 1;
}

int cmd_bounds(int lo, int hi, bool as_json) {
  OwnedString out;
  const vennk_status s = as_json ? vennk_bounds_json(lo, hi, &out.ptr) : vennk_bounds_text(lo, hi, &out.ptr);
  if (s != VENNK_OK) return report_failure(s);
  std::cout << out.str();
  if (as_json) std::cout << '\n';
  return 0;
}

int cmd_split(const std::string& path, const std::string& epsilon, std::uint64_t seed, const std::string& output,
              const std::string& report_path) {
  OwnedFamily family;
  if (auto s = vennk_family_load(path.c_str(), &family.ptr); s != VENNK_OK) return report_failure(s);
  OwnedFamily split;
  OwnedString report;
  if (auto s = vennk_split(family.ptr, epsilon.c_str(), seed, &split.ptr, &report.ptr); s != VENNK_OK) {
    return report_failure(s);
  }
  OwnedString text;
  if (auto s = vennk_family_serialize(split.ptr, &text.ptr); s != VENNK_OK) return report_failure(s);
  if (!write_output(output, text.str())) {
    std::cerr << "vennk: cannot write " << output << '\n';
    return 1;
  }
  if (report_path.empty()) {
    std::cerr << report.str() << '\n';
  } else if (!write_output(report_path, report.str() + "\n")) {
    std::cerr << "vennk: cannot write " << report_path << '\n';
    return 1;
  }
  return 0;
}

void print_progress(const char* json, void*) { std::cerr << json << '\n'; }

int cmd_search(const std::string& config_path, const std::string& output, const std::string& result_path,
               bool quiet) {
  bool ok = false;
  const std::string config = read_file(config_path, ok);
  if (!ok) {
    std::cerr << "vennk: cannot open " << config_path << '\n';
    return VENNK_ERR_PARSE;
  }
  OwnedString family_text;
  OwnedString result;
  const vennk_status s =
      vennk_search_run(config.c_str(), quiet ? nullptr : print_progress, nullptr, &family_text.ptr, &result.ptr);
  if (s != VENNK_OK) return report_failure(s);
  if (!write_output(output, family_text.str())) {
    std::cerr << "vennk: cannot write " << output << '\n';
    return 1;
  }
  if (!result_path.empty()) write_output(result_path, result.str() + "\n");
  if (!quiet) std::cerr << result.str() << '\n';
  const auto parsed = nlohmann::json::parse(result.str());
  return parsed.at("deficiency").get<int>() == 0 ? 0 : 1;
}

int cmd_render(const std::string& path, bool shade, const std::string& output) {
  OwnedFamily family;
  if (auto s = vennk_family_load(path.c_str(), &family.ptr); s != VENNK_OK) return report_failure(s);
  OwnedString svg;
  if (auto s = vennk_render_svg(family.ptr, shade ? 1 : 0, &svg.ptr); s != VENNK_OK) return report_failure(s);
  return write_output(output, svg.str()) ? 0 : 1;
}

httplib::Server* running_server = nullptr;

int cmd_serve(const std::string& host, int port) {
  vennk::service::SearchRegistry registry;
  httplib::Server server;
  vennk::service::install_routes(server, registry);
  running_server = &server;
  std::signal(SIGINT, [](int) {
    if (running_server) running_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (running_server) running_server->stop();
  });
  std::cerr << "vennk: serving on http://" << host << ':' << port << '\n';
  const bool ok = server.listen(host, port);
  running_server = nullptr;
  if (!ok) {
    std::cerr << "vennk: could not listen on " << host << ':' << port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vennk: exact verification and search for Venn diagrams of convex polygons"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vennk_version()));

  std::string file;
  bool audit = false;
  auto* verify = app.add_subcommand("verify", "Classify a family; exit 0 iff it is a Venn diagram");
  verify->add_option("family", file, "family document")->required();
  verify->add_flag("--audit", audit, "add the corner-calculus audit");

  int n_min = 3;
  int n_max = 14;
  bool as_json = false;
  auto* bounds = app.add_subcommand("bounds", "Tabulate the bounds on k");
  bounds->add_option("--n-min", n_min, "smallest n")->check(CLI::Range(3, 64));
  bounds->add_option("--n-max", n_max, "largest n")->check(CLI::Range(3, 64));
  bounds->add_flag("--json", as_json, "machine-readable rows");

  std::string epsilon = "1/1000";
  std::uint64_t seed = 1;
  std::string output;
  std::string report_path;
  auto* split = app.add_subcommand("split", "Split vertices of degree > 4 by small translations");
  split->add_option("family", file, "family document")->required();
  split->add_option("--epsilon", epsilon, "largest translation (decimal or p/q)");
  split->add_option("--seed", seed, "random seed");
  split->add_option("-o,--output", output, "where to write the split family (default stdout)");
  split->add_option("--report", report_path, "where to write the split report (default stderr)");

  std::string config;
  std::string result_path;
  bool quiet = false;
  auto* search = app.add_subcommand("search", "Anneal a rotationally symmetric family");
  search->add_option("--config", config, "search configuration")->required();
  search->add_option("-o,--output", output, "where to write the best family (default stdout)");
  search->add_option("--result", result_path, "where to write the result JSON");
  search->add_flag("-q,--quiet", quiet, "no progress on stderr");

  bool shade = false;
  auto* render = app.add_subcommand("render", "Draw a family as SVG");
  render->add_option("family", file, "family document")->required();
  render->add_flag("--shade", shade, "shade faces by sign-vector weight");
  render->add_option("-o,--output", output, "output file (default stdout)");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port")->check(CLI::Range(0, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*verify) return cmd_verify(file, audit);
  if (*bounds) return cmd_bounds(n_min, n_max, as_json);
  if (*split) return cmd_split(file, epsilon, seed, output, report_path);
  if (*search) return cmd_search(config, output, result_path, quiet);
  if (*render) return cmd_render(file, shade, output);
  if (*serve) return cmd_serve(host, port);
  return 2;
}
