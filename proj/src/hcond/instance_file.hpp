// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "hcond/conductor.hpp"

namespace hcond {

// {"mode": "roots", "p": 5, "roots": ["0", "5", "1/2", ...], "label": "..."}
// {"mode": "matrix", "valuations": [[null, 1, ...], ...], "label": "..."}
struct InstanceFile {
  std::string label;
  Input input;
};

// Throws MalformedFile / MalformedMatrix.
InstanceFile parse_instance(std::string_view text);
InstanceFile load_instance(const std::string& path);

std::string instance_to_json(const InstanceFile& f);

}  // namespace hcond
