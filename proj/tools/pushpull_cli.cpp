// pushpull: command-line front end over the C interface.
#include "pushpull/pushpull.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

constexpr int kInputError = 2;

struct Options {
  std::string input;
  std::string output;
  int max_degree = -1;
  bool fail_fast = false;
  unsigned samples = 0;
  unsigned long long seed = 12132;
};

struct Owned {
  char* s = nullptr;
  ~Owned() { pp_string_free(s); }
};

struct PolytopeHandle {
  pp_polytope* p = nullptr;
  ~PolytopeHandle() { pp_polytope_free(p); }
};

bool read_input(const std::string& path, std::string& text) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pushpull: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

// Writes through a temporary file so a failed run never leaves a partial report.
bool write_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    if (!out.good()) return false;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  return !ec;
}

bool emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return true;
  }
  if (!write_atomic(path, text + "\n")) {
    std::cerr << "pushpull: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int finish(pp_status st, const char* out, const Options& o) {
  if (out && !emit(o.output, out)) return kInputError;
  if (st != PP_OK) std::cerr << "pushpull: " << pp_last_error() << "\n";
  return static_cast<int>(st);
}

template <class Call>
int with_polytope(const Options& o, Call call) {
  std::string text;
  if (!read_input(o.input, text)) return kInputError;
  PolytopeHandle h;
  pp_status st = pp_polytope_from_json(text.c_str(), &h.p);
  if (st != PP_OK) {
    std::cerr << "pushpull: " << pp_last_error() << "\n";
    return static_cast<int>(st);
  }
  Owned out;
  st = call(h.p, &out.s);
  return finish(st, out.s, o);
}

template <class Call>
int with_text(const Options& o, Call call) {
  std::string text;
  if (!read_input(o.input, text)) return kInputError;
  Owned out;
  pp_status st = call(text.c_str(), &out.s);
  return finish(st, out.s, o);
}

int run_figures(const Options& o) {
  Owned out;
  pp_status st = pp_figures(&out.s);
  if (!out.s) return finish(st, nullptr, o);
  auto report = nlohmann::ordered_json::parse(out.s);
  fs::path dir = o.output.empty() ? fs::path("figures") : fs::path(o.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    std::cerr << "pushpull: cannot create " << dir << "\n";
    return kInputError;
  }
  // the summary lists the written files instead of their contents
  for (auto& fig : report["figures"]) {
    nlohmann::ordered_json written = nlohmann::ordered_json::array();
    for (auto& [name, body] : fig["files"].items()) {
      if (!write_atomic(dir / name, body.get<std::string>())) {
        std::cerr << "pushpull: cannot write " << (dir / name) << "\n";
        return kInputError;
      }
      written.push_back((dir / name).string());
    }
    fig["files"] = written;
  }
  std::string summary = report.dump(2);
  if (!write_atomic(dir / "figures.json", summary + "\n")) return kInputError;
  std::cout << summary << "\n";
  if (st != PP_OK) std::cerr << "pushpull: " << pp_last_error() << "\n";
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polytope families, their volume rings and push-pull checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pp_version()));
  Options o;

  auto io = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("-i,--input", o.input, "input JSON file (default: stdin)");
    sub->add_option("-o,--output", o.output, "output file (default: stdout)");
  };

  auto* build = app.add_subcommand("build", "canonicalize a polytope family");
  io(build, true);
  auto* volume = app.add_subcommand("volume", "volume polynomial of a family");
  io(volume, true);
  auto* ring = app.add_subcommand("ring", "presentation and Hilbert function of the volume ring");
  io(ring, true);
  ring->add_option("--max-degree", o.max_degree, "highest degree of listed relations (default: all)");
  auto* verify = app.add_subcommand("pushpull-verify", "push-pull checks for a truncation spec");
  io(verify, true);
  verify->add_flag("--fail-fast", o.fail_fast, "stop at the first failing check");
  auto* gk = app.add_subcommand("gk", "Grossberg-Karshon cube checks");
  io(gk, true);
  gk->add_option("--samples", o.samples, "random instances for the property sweep")->default_val(20);
  gk->add_option("--seed", o.seed, "sampler seed")->default_val(12132);
  auto* fflv = app.add_subcommand("fflv", "FFLV polytope of a weight");
  io(fflv, true);
  auto* tower = app.add_subcommand("tower", "five-step Bott-Samelson tower");
  io(tower, false);
  tower->add_option("--samples", o.samples, "random points for the Minkowski check (at least 3)")->default_val(3);
  tower->add_option("--seed", o.seed, "sampler seed")->default_val(12132);
  auto* figures = app.add_subcommand("figures", "SVG and OFF pictures of the Cayley sum examples");
  figures->add_option("-o,--output", o.output, "output directory (default: figures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*build) return with_polytope(o, [](pp_polytope* p, char** out) { return pp_polytope_canonical_json(p, out); });
  if (*volume) return with_polytope(o, [](pp_polytope* p, char** out) { return pp_polytope_volume_json(p, out); });
  if (*ring) {
    return with_polytope(o, [&](pp_polytope* p, char** out) { return pp_polytope_ring_json(p, o.max_degree, out); });
  }
  if (*verify) {
    return with_text(o, [&](const char* in, char** out) { return pp_pushpull_verify(in, o.fail_fast ? 1 : 0, out); });
  }
  if (*gk) return with_text(o, [&](const char* in, char** out) { return pp_gk_report(in, o.samples, o.seed, out); });
  if (*fflv) return with_text(o, [](const char* in, char** out) { return pp_fflv_report(in, out); });
  if (*tower) {
    Owned out;
    pp_status st = pp_tower_report(o.samples, o.seed, &out.s);
    return finish(st, out.s, o);
  }
  return run_figures(o);
}
