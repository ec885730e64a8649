// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "hcond/conductor.hpp"

namespace hcond {

// Field order is fixed, so dumping, parsing and re-dumping is byte-identical.
nlohmann::ordered_json report_to_json(const Analysis& a);

// Indented outline of the blow-up tree with the per-vertex ledger.
std::string report_to_text(const Analysis& a);

std::string dot_tb(const Analysis& a);
std::string dot_ty(const Analysis& a);
std::string dot_tx(const Analysis& a);

}  // namespace hcond
