// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcond.h"

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kInternal = 2 };

int exit_for(hcond_status st) {
  if (st == HCOND_OK) return kOk;
  return st == HCOND_E_INTERNAL ? kInternal : kInvalid;
}

// Owns a library string.
struct LibString {
  char* p = nullptr;
  ~LibString() { hcond_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Handles {
  hcond_instance* inst = nullptr;
  hcond_analysis* analysis = nullptr;
  ~Handles() {
    hcond_analysis_free(analysis);
    hcond_instance_free(inst);
  }
};

struct Outcome {
  hcond_status status = HCOND_OK;
  std::string code;
  std::string message;
};

Outcome run_one(const std::string& path, unsigned flags, Handles& h) {
  hcond_status st = hcond_instance_load(path.c_str(), &h.inst);
  if (st == HCOND_OK) st = hcond_analyze(h.inst, flags, &h.analysis);
  if (st != HCOND_OK) return {st, hcond_last_error_code(), hcond_last_error()};
  return {};
}

bool write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  return static_cast<bool>(out);
}

int cmd_analyze(const std::string& file, const std::string& format, const std::string& dot_dir, unsigned flags) {
  Handles h;
  const Outcome o = run_one(file, flags, h);
  if (o.status != HCOND_OK) {
    std::cerr << "error: " << file << ": " << o.message << "\n";
    return exit_for(o.status);
  }
  for (size_t k = 0; k < hcond_analysis_warning_count(h.analysis); ++k)
    std::cerr << "warning: " << hcond_analysis_warning(h.analysis, k) << "\n";

  LibString report;
  const hcond_status st = format == "json" ? hcond_analysis_json(h.analysis, 2, &report.p)
                                           : hcond_analysis_text(h.analysis, &report.p);
  if (st != HCOND_OK) {
    std::cerr << "error: " << hcond_last_error() << "\n";
    return exit_for(st);
  }
  std::cout << report.str();
  if (format == "json") std::cout << "\n";

  if (!dot_dir.empty()) {
    std::error_code ec;
    fs::create_directories(dot_dir, ec);
    const std::pair<hcond_graph, const char*> graphs[] = {
        {HCOND_GRAPH_TB, "t_b.dot"}, {HCOND_GRAPH_TY, "t_y.dot"}, {HCOND_GRAPH_TX, "t_x.dot"}};
    for (const auto& [which, name] : graphs) {
      LibString dot;
      if (hcond_analysis_dot(h.analysis, which, &dot.p) != HCOND_OK) {
        std::cerr << "error: " << hcond_last_error() << "\n";
        return kInternal;
      }
      if (!write_file(fs::path(dot_dir) / name, dot.str())) {
        std::cerr << "error: cannot write " << (fs::path(dot_dir) / name).string() << "\n";
        return kInvalid;
      }
    }
  }
  return kOk;
}

int cmd_batch(const std::string& dir, unsigned flags, unsigned jobs) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".json") files.push_back(it->path());
  }
  if (ec) {
    std::cerr << "error: cannot read directory " << dir << ": " << ec.message() << "\n";
    return kInvalid;
  }
  if (files.empty()) {
    std::cerr << "error: no instances found in " << dir << "\n";
    return kInvalid;
  }
  std::sort(files.begin(), files.end());

  std::vector<std::string> lines(files.size());
  std::vector<hcond_status> status(files.size(), HCOND_OK);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < files.size(); k = next++) {
      Handles h;
      const Outcome o = run_one(files[k].string(), flags, h);
      const std::string name = nlohmann::json(files[k].filename().string()).dump();
      status[k] = o.status;
      if (o.status != HCOND_OK) {
        nlohmann::ordered_json err;
        err["file"] = files[k].filename().string();
        err["status"] = o.status == HCOND_E_INTERNAL ? "internal_error" : "invalid_input";
        err["code"] = o.code;
        err["error"] = o.message;
        lines[k] = err.dump();
        continue;
      }
      LibString report;
      status[k] = hcond_analysis_json(h.analysis, -1, &report.p);
      const std::string body = report.str();
      lines[k] = "{\"file\":" + name + (body.size() > 2 ? "," + body.substr(1) : "}");
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(files.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  size_t ok = 0, invalid = 0, internal = 0;
  for (size_t k = 0; k < files.size(); ++k) {
    std::cout << lines[k] << "\n";
    if (status[k] == HCOND_OK) ++ok;
    else if (status[k] == HCOND_E_INTERNAL) ++internal;
    else ++invalid;
  }
  std::cout.flush();
  std::cerr << "batch: " << files.size() << " instances, " << ok << " ok, " << invalid << " invalid, "
            << internal << " internal errors\n";
  if (internal) return kInternal;
  return invalid ? kInvalid : kOk;
}

int cmd_fuzz(std::uint64_t trials, std::uint64_t seed) {
  LibString summary;
  const hcond_status st = hcond_fuzz(trials, seed, &summary.p);
  if (summary.p) std::cout << summary.str() << "\n";
  if (st != HCOND_OK) std::cerr << "error: " << hcond_last_error() << "\n";
  return exit_for(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hcond: conductor and discriminant of hyperelliptic curves with split roots"};
  app.set_version_flag("--version", std::string("hcond ") + hcond_version());
  app.require_subcommand(1);

  std::string file, format = "text", dot_dir;
  bool strict = false, small = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze one instance file");
  analyze->add_option("input-file", file, "Instance JSON")->required();
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--dot-dir", dot_dir, "Write t_b.dot, t_y.dot and t_x.dot here");
  analyze->add_flag("--strict", strict, "Treat warnings as errors");
  analyze->add_flag("--allow-small-genus", small, "Accept 2 or 4 roots");

  std::string dir, batch_format = "jsonl";
  unsigned jobs = 0;
  bool batch_strict = false, batch_small = false;
  auto* batch = app.add_subcommand("batch", "Analyze every .json file in a directory, one JSON line each");
  batch->add_option("directory", dir, "Directory of instance files")->required();
  batch->add_option("--format", batch_format, "Output format")->check(CLI::IsMember({"jsonl"}));
  batch->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  batch->add_flag("--strict", batch_strict, "Treat warnings as errors");
  batch->add_flag("--allow-small-genus", batch_small, "Accept 2 or 4 roots");

  std::uint64_t trials = 1000, seed = 1;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized identity suite");
  fuzz->group("");
  fuzz->add_option("--trials", trials);
  fuzz->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  auto flags = [](bool st, bool sm) {
    return (st ? HCOND_STRICT : 0u) | (sm ? HCOND_ALLOW_SMALL_GENUS : 0u);
  };
  if (*analyze) return cmd_analyze(file, format, dot_dir, flags(strict, small));
  if (*batch) return cmd_batch(dir, flags(batch_strict, batch_small), jobs);
  if (*fuzz) return cmd_fuzz(trials, seed);
  return kInvalid;
}
