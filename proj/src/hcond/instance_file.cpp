// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/instance_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hcond/error.hpp"

namespace hcond {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void only_fields(const json& doc, const std::set<std::string>& allowed, const std::string& mode) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key))
      fail(ErrorCode::MalformedFile, "unexpected field \"" + key + "\" in " + mode + "-mode instance");
  }
}

const json& required(const json& doc, const char* key, const std::string& mode) {
  auto it = doc.find(key);
  if (it == doc.end())
    fail(ErrorCode::MalformedFile, mode + "-mode instance is missing \"" + key + "\"");
  return *it;
}

BigInt parse_prime(const json& p) {
  std::string digits;
  if (p.is_number_unsigned()) {
    digits = std::to_string(p.get<std::uint64_t>());
  } else if (p.is_string()) {
    digits = p.get<std::string>();
  } else {
    fail(ErrorCode::MalformedFile, "\"p\" must be a positive integer or a decimal string");
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::MalformedFile, "\"p\" must be a positive integer, got \"" + digits + "\"");
  return BigInt(digits, 10);
}

RootsInstance parse_roots_mode(const json& doc) {
  only_fields(doc, {"mode", "p", "roots", "label"}, "roots");
  RootsInstance inst;
  inst.p = parse_prime(required(doc, "p", "roots"));
  const json& roots = required(doc, "roots", "roots");
  if (!roots.is_array()) fail(ErrorCode::MalformedFile, "\"roots\" must be an array of decimal strings");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].is_string())
      fail(ErrorCode::MalformedFile, "root " + std::to_string(i) + " must be a decimal string such as \"12\" or \"3/7\"");
    inst.roots.push_back(parse_rational(roots[i].get<std::string>()));
  }
  return inst;
}

ValuationMatrix parse_matrix_mode(const json& doc) {
  only_fields(doc, {"mode", "valuations", "label"}, "matrix");
  const json& rows = required(doc, "valuations", "matrix");
  if (!rows.is_array()) fail(ErrorCode::MalformedMatrix, "\"valuations\" must be an array of rows");
  const std::size_t n = rows.size();
  std::vector<std::vector<ExtInt>> raw(n, std::vector<ExtInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      fail(ErrorCode::MalformedMatrix, "row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = rows[i][j];
      if (i == j) {
        if (!e.is_null())
          fail(ErrorCode::MalformedMatrix, "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") must be null");
        raw[i][j] = ExtInt::infinity();
        continue;
      }
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
        fail(ErrorCode::MalformedMatrix, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") must be a nonnegative integer");
      raw[i][j] = ExtInt(e.get<std::int64_t>());
    }
  }
  ValuationMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(raw[i][j] == raw[j][i]))
        fail(ErrorCode::MalformedMatrix, "matrix is not symmetric at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
      m.set(i, j, raw[i][j]);
    }
  }
  return m;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::MalformedFile, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::MalformedFile, "instance must be a JSON object");
  auto mode_it = doc.find("mode");
  if (mode_it == doc.end() || !mode_it->is_string())
    fail(ErrorCode::MalformedFile, "instance needs \"mode\": \"roots\" or \"matrix\"");
  InstanceFile out;
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) fail(ErrorCode::MalformedFile, "\"label\" must be a string");
    out.label = it->get<std::string>();
  }
  const std::string mode = mode_it->get<std::string>();
  if (mode == "roots") {
    out.input = parse_roots_mode(doc);
  } else if (mode == "matrix") {
    out.input = parse_matrix_mode(doc);
  } else {
    fail(ErrorCode::MalformedFile, "unknown mode \"" + mode + "\" (expected \"roots\" or \"matrix\")");
  }
  return out;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MalformedFile, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string instance_to_json(const InstanceFile& f) {
  ordered_json doc;
  if (const auto* inst = std::get_if<RootsInstance>(&f.input)) {
    doc["mode"] = "roots";
    doc["p"] = inst->p.get_str();
    doc["roots"] = ordered_json::array();
    for (const auto& q : inst->roots) doc["roots"].push_back(q.get_str());
  } else {
    const auto& m = std::get<ValuationMatrix>(f.input);
    doc["mode"] = "matrix";
    doc["valuations"] = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i == j)
          row.push_back(nullptr);
        else
          row.push_back(m.at(i, j).value());
      }
      doc["valuations"].push_back(std::move(row));
    }
  }
  if (!f.label.empty()) doc["label"] = f.label;
  return doc.dump();
}

}  // namespace hcond
