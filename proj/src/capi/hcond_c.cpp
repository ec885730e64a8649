// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hcond/conductor.hpp"
#include "hcond/error.hpp"
#include "hcond/harness.hpp"
#include "hcond/instance_file.hpp"
#include "hcond/report_io.hpp"

struct hcond_instance {
  hcond::InstanceFile file;
};

struct hcond_analysis {
  hcond::Analysis analysis;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_code = "OK";

hcond_status set_error(hcond_status st, const char* code, const std::string& msg) {
  g_code = code;
  g_error = msg;
  return st;
}

hcond_status clear() {
  g_code = "OK";
  g_error.clear();
  return HCOND_OK;
}

// Maps exceptions thrown by the core onto status codes.
template <class F>
hcond_status guarded(F&& body) {
  try {
    body();
    return clear();
  } catch (const hcond::Error& e) {
    return set_error(e.internal() ? HCOND_E_INTERNAL : HCOND_E_INVALID_INPUT,
                     hcond::error_code_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HCOND_E_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return set_error(HCOND_E_INTERNAL, "Unexpected", e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* hcond_version(void) { return "0.1.0"; }

const char* hcond_last_error(void) { return g_error.c_str(); }

const char* hcond_last_error_code(void) { return g_code.c_str(); }

hcond_status hcond_instance_parse(const char* json, size_t len, hcond_instance** out) {
  if (!json || !out) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* inst = new hcond_instance{hcond::parse_instance(std::string_view(json, len))};
    *out = inst;
  });
}

hcond_status hcond_instance_load(const char* path, hcond_instance** out) {
  if (!path || !out) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  *out = nullptr;
  FILE* probe = std::fopen(path, "rb");
  if (!probe) return set_error(HCOND_E_IO, "Io", std::string("cannot open ") + path);
  std::fclose(probe);
  return guarded([&] { *out = new hcond_instance{hcond::load_instance(path)}; });
}

void hcond_instance_free(hcond_instance* inst) { delete inst; }

const char* hcond_instance_label(const hcond_instance* inst) {
  return inst ? inst->file.label.c_str() : "";
}

hcond_status hcond_analyze(const hcond_instance* inst, unsigned flags, hcond_analysis** out) {
  if (!inst || !out) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  *out = nullptr;
  return guarded([&] {
    hcond::AnalyzeOptions opts;
    opts.allow_small_genus = (flags & HCOND_ALLOW_SMALL_GENUS) != 0;
    opts.strict = (flags & HCOND_STRICT) != 0;
    *out = new hcond_analysis{hcond::analyze(inst->file.input, opts, inst->file.label)};
  });
}

void hcond_analysis_free(hcond_analysis* a) { delete a; }

hcond_status hcond_analysis_summary(const hcond_analysis* a, hcond_summary* out) {
  if (!a || !out) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  const hcond::Report& r = a->analysis.report;
  out->genus = r.genus;
  out->nu_df = r.nu_df;
  out->artin_direct = r.artin_direct;
  out->artin_local = r.artin_local;
  out->n_components = r.n_X;
  out->f_tilde = r.f_tilde;
  out->inequality_holds = r.inequality_holds;
  out->equality_holds = r.equality_holds;
  out->x_minimal = r.x_minimal;
  out->component_bound_ok = r.component_bound_ok;
  return clear();
}

size_t hcond_analysis_warning_count(const hcond_analysis* a) {
  return a ? a->analysis.report.warnings.size() : 0;
}

const char* hcond_analysis_warning(const hcond_analysis* a, size_t index) {
  if (!a || index >= a->analysis.report.warnings.size()) return nullptr;
  return a->analysis.report.warnings[index].c_str();
}

hcond_status hcond_analysis_json(const hcond_analysis* a, int indent, char** out) {
  if (!a || !out) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup_string(hcond::report_to_json(a->analysis).dump(indent < 0 ? -1 : indent)); });
}

hcond_status hcond_analysis_text(const hcond_analysis* a, char** out) {
  if (!a || !out) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup_string(hcond::report_to_text(a->analysis)); });
}

hcond_status hcond_analysis_dot(const hcond_analysis* a, hcond_graph which, char** out) {
  if (!a || !out) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  *out = nullptr;
  switch (which) {
    case HCOND_GRAPH_TB: return guarded([&] { *out = dup_string(hcond::dot_tb(a->analysis)); });
    case HCOND_GRAPH_TY: return guarded([&] { *out = dup_string(hcond::dot_ty(a->analysis)); });
    case HCOND_GRAPH_TX: return guarded([&] { *out = dup_string(hcond::dot_tx(a->analysis)); });
  }
  return set_error(HCOND_E_ARGUMENT, "Argument", "unknown graph selector");
}

hcond_status hcond_fuzz(uint64_t trials, uint64_t seed, char** summary) {
  if (!summary) return set_error(HCOND_E_ARGUMENT, "Argument", "null argument");
  *summary = nullptr;
  bool ok = true;
  hcond_status st = guarded([&] {
    hcond::SuiteOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    const hcond::SuiteStats stats = hcond::run_suite(opts);
    ok = stats.ok();
    *summary = dup_string(hcond::suite_summary_json(stats));
  });
  if (st == HCOND_OK && !ok) return set_error(HCOND_E_INTERNAL, "InternalInvariant", "randomized suite reported failures");
  return st;
}

void hcond_string_free(char* s) { std::free(s); }

}  // extern "C"
