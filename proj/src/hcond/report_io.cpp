// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace hcond {

using nlohmann::ordered_json;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

void outline(const Analysis& a, int id, int indent, std::ostringstream& os) {
  const ClusterVertex& v = a.tree[id];
  const VertexLedger& led = a.report.ledgers[static_cast<std::size_t>(id)];
  std::ostringstream head;
  head << std::string(static_cast<std::size_t>(indent) * 2, ' ') << "v" << v.id;
  os << std::left << std::setw(24) << head.str() << std::right
     << std::setw(5) << v.depth << std::setw(5) << v.wt << std::setw(7) << parity_name(v.parity)
     << std::setw(4) << v.l_prime << std::setw(4) << v.r << std::setw(4) << v.s << std::setw(4) << v.l
     << std::setw(6) << led.d << std::setw(6) << led.D << std::setw(6) << led.E << std::setw(6) << led.Dp
     << std::setw(6) << led.Dpp << "  " << (led.equality ? "=" : "<") << "  "
     << equality_reason_name(led.reason) << "\n";
  for (int c : v.children) outline(a, c, indent + 1, os);
}

}  // namespace

ordered_json report_to_json(const Analysis& a) {
  const Report& r = a.report;
  ordered_json j;
  j["label"] = r.label;
  j["genus"] = r.genus;
  j["num_roots"] = r.num_roots;
  j["nu_df"] = r.nu_df;
  j["artin_conductor"] = r.artin_direct;
  j["artin_local_sum"] = r.artin_local;
  j["n_components"] = r.n_X;
  j["f_tilde"] = r.f_tilde;
  j["inequality_holds"] = r.inequality_holds;
  j["equality_holds"] = r.equality_holds;
  j["x_minimal"] = r.x_minimal;
  j["component_bound_ok"] = r.component_bound_ok;
  j["nonminimal_vertices"] = r.nonminimal_vertices;
  j["euler_characteristic_special_fiber"] = r.euler_special_fiber;
  j["genus_check"] = r.genus_check;
  j["cycle_rank"] = r.cycle_rank;
  j["warnings"] = r.warnings;

  ordered_json verts = ordered_json::array();
  for (const auto& v : a.tree.vertices) {
    const VertexLedger& led = r.ledgers[static_cast<std::size_t>(v.id)];
    ordered_json o;
    o["id"] = v.id;
    o["depth"] = v.depth;
    o["parent"] = v.parent ? ordered_json(*v.parent) : ordered_json(nullptr);
    o["members"] = v.members;
    o["wt"] = v.wt;
    o["l_prime"] = v.l_prime;
    o["r"] = v.r;
    o["s"] = v.s;
    o["l"] = v.l;
    o["f_val"] = v.f_val;
    o["parity"] = parity_name(v.parity);
    o["d"] = led.d;
    o["D"] = led.D;
    o["E"] = led.E;
    o["D_prime"] = led.Dp;
    o["D_double_prime"] = led.Dpp;
    o["L_count"] = led.L_count;
    o["equality"] = led.equality;
    o["reason"] = equality_reason_name(led.reason);
    o["defect"] = led.defect;
    verts.push_back(std::move(o));
  }
  j["vertices"] = std::move(verts);

  ordered_json comps = ordered_json::array();
  for (const auto& c : a.x.components) {
    ordered_json o;
    o["id"] = c.id;
    o["over"] = c.over;
    o["kind"] = ykind_name(a.y[c.over].kind);
    o["sheet"] = c.sheet;
    o["cluster"] = c.cluster;
    o["m"] = c.m;
    o["chi"] = c.chi;
    o["self_intersection"] = a.self_int[static_cast<std::size_t>(c.id)];
    comps.push_back(std::move(o));
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : a.x.edges) edges.push_back({{"a", e.upper}, {"b", e.lower}, {"weight", e.weight}});
  j["components"] = std::move(comps);
  j["edges"] = std::move(edges);
  return j;
}

std::string report_to_text(const Analysis& a) {
  const Report& r = a.report;
  std::ostringstream os;
  if (!r.label.empty()) os << "instance: " << r.label << "\n";
  os << "genus " << r.genus << ", " << r.num_roots << " roots\n";
  os << "equation discriminant nu(d_f): " << r.nu_df
     << "  (= minimal discriminant iff the input equation is minimal)\n";
  os << "Artin conductor -Art(X/S): " << r.artin_direct << " from the model graph, " << r.artin_local
     << " from local terms\n";
  os << "components n(X): " << r.n_X << "   f~ = -Art - n(X) + 1 = " << r.f_tilde << "\n";
  os << "chi(X_s): " << r.euler_special_fiber << "   adjunction 2g-2: " << r.genus_check
     << "   cycle rank: " << r.cycle_rank << "\n";
  os << "inequality -Art <= nu(d_f): " << (r.inequality_holds ? "holds" : "FAILS")
     << "   equality: " << yes_no(r.equality_holds) << "\n";
  os << "X minimal: " << yes_no(r.x_minimal);
  if (!r.x_minimal) {
    os << " (contractible (-1)-curve over";
    for (int v : r.nonminimal_vertices) os << " v" << v;
    os << ")";
  }
  os << "\n";
  os << "n(X) <= -Art + 1: " << yes_no(r.component_bound_ok) << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  os << "\n";
  os << std::left << std::setw(24) << "vertex" << std::right << std::setw(5) << "depth" << std::setw(5)
     << "wt" << std::setw(7) << "parity" << std::setw(4) << "l'" << std::setw(4) << "r" << std::setw(4)
     << "s" << std::setw(4) << "l" << std::setw(6) << "d" << std::setw(6) << "D" << std::setw(6) << "E"
     << std::setw(6) << "D'" << std::setw(6) << "D''" << "  =?\n";
  outline(a, 0, 0, os);
  return os.str();
}

std::string dot_tb(const Analysis& a) {
  std::ostringstream os;
  os << "digraph T_B {\n  node [shape=ellipse];\n";
  for (const auto& v : a.tree.vertices)
    os << "  v" << v.id << " [label=\"wt=" << v.wt << "/" << parity_name(v.parity) << "\"];\n";
  for (const auto& v : a.tree.vertices)
    for (int c : v.children) os << "  v" << v.id << " -> v" << c << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_ty(const Analysis& a) {
  std::ostringstream os;
  os << "digraph T_Y {\n  node [shape=ellipse];\n";
  for (const auto& v : a.y.vertices) {
    os << "  y" << v.id << " [label=\"" << ykind_name(v.kind) << " v" << v.cluster << "/"
       << parity_name(v.parity);
    if (!v.attached_roots.empty()) os << "\\nroots " << join(v.attached_roots);
    os << "\"";
    if (v.odd()) os << ", style=bold";
    os << "];\n";
  }
  for (const auto& v : a.y.vertices)
    for (int c : v.children) os << "  y" << v.id << " -> y" << c << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_tx(const Analysis& a) {
  std::ostringstream os;
  os << "graph T_X {\n  node [shape=ellipse];\n";
  for (const auto& c : a.x.components)
    os << "  x" << c.id << " [label=\"m=" << c.m << ", \xCF\x87=" << c.chi << "\"];\n";
  for (const auto& e : a.x.edges)
    for (int k = 0; k < e.weight; ++k) os << "  x" << e.upper << " -- x" << e.lower << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hcond
