// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/cluster_tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "hcond/error.hpp"

namespace hcond {

namespace {

struct Draft {
  std::int64_t depth = 0;
  std::vector<std::size_t> members;
  int parent = -1;      // draft index
  bool split = true;    // false for chain interiors, whose only class is the next link
};

[[noreturn]] void broken(const ClusterVertex& v, const std::string& what) {
  fail(ErrorCode::InternalInvariant,
       "cluster vertex " + std::to_string(v.id) + " (depth " + std::to_string(v.depth) + "): " + what);
}

// Splits `members` into classes of the relation m[i][j] >= level. The
// relation is an equivalence on ultrametric input.
std::vector<std::vector<std::size_t>> classes_at(const ValuationMatrix& m,
                                                 const std::vector<std::size_t>& members,
                                                 std::int64_t level) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> taken(members.size(), false);
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (taken[a]) continue;
    std::vector<std::size_t> cls{members[a]};
    taken[a] = true;
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!taken[b] && m.at(members[a], members[b]) >= ExtInt(level)) {
        cls.push_back(members[b]);
        taken[b] = true;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::int64_t min_pairwise(const ValuationMatrix& m, const std::vector<std::size_t>& cls) {
  ExtInt best = ExtInt::infinity();
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = a + 1; b < cls.size(); ++b) best = min(best, m.at(cls[a], cls[b]));
  return best.value();
}

void annotate(ClusterTree& tree) {
  for (auto& v : tree.vertices) {
    v.wt = static_cast<std::int64_t>(v.members.size());
    v.r = 0;
    v.s = 0;
    for (int c : v.children) {
      if (tree.vertices[static_cast<std::size_t>(c)].members.size() % 2 == 1)
        ++v.r;
      else
        ++v.s;
    }
    v.l = v.l_prime + v.r;
  }
  // Parents precede children in id order.
  for (auto& v : tree.vertices) {
    v.f_val = v.parent ? tree.vertices[static_cast<std::size_t>(*v.parent)].f_val + v.wt : 0;
    v.parity = v.f_val % 2 == 0 ? Parity::Even : Parity::Odd;
  }
}

}  // namespace

std::vector<std::size_t> ClusterTree::separating_roots(int id) const {
  const ClusterVertex& v = (*this)[id];
  std::vector<std::size_t> out;
  for (std::size_t idx : v.members) {
    bool in_child = std::any_of(v.children.begin(), v.children.end(), [&](int c) {
      const auto& cm = (*this)[c].members;
      return std::binary_search(cm.begin(), cm.end(), idx);
    });
    if (!in_child) out.push_back(idx);
  }
  return out;
}

bool ClusterTree::parent_odd(int id) const {
  const ClusterVertex& v = (*this)[id];
  return v.parent && (*this)[*v.parent].odd();
}

ClusterTree build_cluster_tree(const ValuationMatrix& m) {
  if (auto verdict = validate_ultrametric(m); !verdict.ok()) {
    const auto& t = verdict.violations.front();
    fail(ErrorCode::UltrametricViolation,
         "valuation matrix is not ultrametric at triple (" + std::to_string(t[0]) + "," +
             std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }

  std::vector<Draft> drafts;
  Draft root;
  root.members.resize(m.size());
  std::iota(root.members.begin(), root.members.end(), std::size_t{0});
  drafts.push_back(std::move(root));

  // drafts grows while we walk it.
  for (std::size_t cur = 0; cur < drafts.size(); ++cur) {
    if (!drafts[cur].split) continue;
    const std::int64_t depth = drafts[cur].depth;
    for (auto& cls : classes_at(m, drafts[cur].members, depth + 1)) {
      if (cls.size() < 2) continue;
      // A class stays whole down to its smallest pairwise valuation; each
      // generation in between is its own vertex.
      const std::int64_t bottom = min_pairwise(m, cls);
      int parent = static_cast<int>(cur);
      for (std::int64_t d = depth + 1; d <= bottom; ++d) {
        Draft next;
        next.depth = d;
        next.members = cls;
        next.parent = parent;
        next.split = d == bottom;
        drafts.push_back(std::move(next));
        parent = static_cast<int>(drafts.size() - 1);
      }
    }
  }

  std::vector<std::size_t> order(drafts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(drafts[a].depth, drafts[a].members.front()) <
           std::tie(drafts[b].depth, drafts[b].members.front());
  });
  std::vector<int> new_id(drafts.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = static_cast<int>(k);

  ClusterTree tree;
  tree.num_roots = m.size();
  tree.vertices.resize(drafts.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Draft& d = drafts[order[k]];
    ClusterVertex& v = tree.vertices[k];
    v.id = static_cast<int>(k);
    v.depth = d.depth;
    v.members = d.members;
    std::sort(v.members.begin(), v.members.end());
    if (d.parent >= 0) v.parent = new_id[static_cast<std::size_t>(d.parent)];
  }
  for (const auto& v : tree.vertices)
    if (v.parent) tree.vertices[static_cast<std::size_t>(*v.parent)].children.push_back(v.id);
  for (auto& v : tree.vertices) {
    std::sort(v.children.begin(), v.children.end());
    std::int64_t covered = 0;
    for (int c : v.children) covered += static_cast<std::int64_t>(tree[c].members.size());
    v.l_prime = static_cast<std::int64_t>(v.members.size()) - covered;
  }
  annotate(tree);
  check_tree_invariants(tree);
  return tree;
}

void check_tree_invariants(const ClusterTree& tree) {
  if (tree.vertices.empty()) fail(ErrorCode::InternalInvariant, "cluster tree is empty");
  const ClusterVertex& root = tree.root();
  if (root.parent || root.depth != 0 || root.wt != static_cast<std::int64_t>(tree.num_roots))
    broken(root, "root must have depth 0, no parent and weight n");
  if (root.odd()) broken(root, "root must be even");
  if (root.l % 2 != 0) broken(root, "root must have even l");

  for (const auto& v : tree.vertices) {
    if (v.wt != static_cast<std::int64_t>(v.members.size())) broken(v, "wt != |members|");
    if (v.wt < 2 && v.parent) broken(v, "non-root vertex with weight < 2");
    std::int64_t child_wt = 0;
    std::vector<std::size_t> seen;
    for (int c : v.children) {
      const ClusterVertex& w = tree[c];
      if (!w.parent || *w.parent != v.id) broken(w, "child/parent links disagree");
      if (w.depth != v.depth + 1) broken(w, "child depth is not parent depth + 1");
      child_wt += w.wt;
      if (!std::includes(v.members.begin(), v.members.end(), w.members.begin(), w.members.end()))
        broken(w, "members not contained in parent");
      seen.insert(seen.end(), w.members.begin(), w.members.end());
      if (w.f_val - v.f_val != w.wt) broken(w, "f_val(child) != f_val(parent) + wt(child)");
      // Parity table: even parent -> child odd iff wt odd; odd parent -> child odd iff wt even.
      const bool expect_odd = v.even() ? (w.wt % 2 == 1) : (w.wt % 2 == 0);
      if (w.odd() != expect_odd) broken(w, "parity disagrees with the weight rule");
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      broken(v, "children share members");
    if (v.wt != v.l_prime + child_wt) broken(v, "wt != l' + sum of child weights");
    if (v.l != v.l_prime + v.r) broken(v, "l != l' + r");
    if (v.r + v.s != static_cast<std::int64_t>(v.children.size())) broken(v, "r + s != #children");
    if ((v.f_val % 2 == 1) != v.odd()) broken(v, "parity != f_val mod 2");
    if (v.wt < v.l_prime + 3 * v.r + 2 * v.s) broken(v, "wt < l' + 3r + 2s");
    if (v.r == 0 && v.s == 0 && v.wt != v.l_prime) broken(v, "leaf with wt != l'");
    if (v.even()) {
      const bool odd_parent = tree.parent_odd(v.id);
      if ((v.l % 2 == 1) != odd_parent) broken(v, "even vertex: l odd must match an odd parent");
    }
  }
}

std::int64_t local_d(const ClusterVertex& v, const ClusterTree& tree) {
  std::int64_t d = 0;
  for (int c : v.children) d += tree[c].wt * (tree[c].wt - 1);
  return d;
}

std::int64_t equation_discriminant(const ValuationMatrix& m) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) sum += m.at(i, j).value();
  return 2 * sum;
}

}  // namespace hcond
