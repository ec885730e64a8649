// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hcond/conductor.hpp"
#include "hcond/error.hpp"

namespace hcond {

namespace {

BigInt power(const BigInt& p, int e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

class Realizer {
 public:
  Realizer(const GenSpec& spec, std::mt19937_64& rng) : spec_(spec), rng_(rng), p_(spec.p) {}

  void run(int n, const BigInt& base, int depth, std::vector<BigInt>& out) {
    const bool deeper = depth + 1 <= spec_.max_depth;
    std::vector<int> group_of(static_cast<std::size_t>(n));
    int groups = 0;
    if (!deeper || n == 1) {
      groups = std::min(n, spec_.p);
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng_);
      for (int k = 0; k < n; ++k) group_of[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k % groups;
    } else {
      std::bernoulli_distribution join(spec_.branching_bias);
      for (int k = 0; k < n; ++k) {
        const bool must_join = groups == spec_.p;
        if (groups > 0 && (must_join || join(rng_))) {
          group_of[static_cast<std::size_t>(k)] = std::uniform_int_distribution<int>(0, groups - 1)(rng_);
        } else {
          group_of[static_cast<std::size_t>(k)] = groups++;
        }
      }
    }

    std::vector<int> digits(static_cast<std::size_t>(spec_.p));
    std::iota(digits.begin(), digits.end(), 0);
    std::shuffle(digits.begin(), digits.end(), rng_);
    const BigInt scale = power(p_, depth);
    for (int g = 0; g < groups; ++g) {
      const int size = static_cast<int>(std::count(group_of.begin(), group_of.end(), g));
      const BigInt next = base + digits[static_cast<std::size_t>(g)] * scale;
      if (size == 1) {
        const int noise = std::uniform_int_distribution<int>(0, spec_.p * spec_.p)(rng_);
        out.push_back(next + noise * scale * p_);
        continue;
      }
      int extra = 0;
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const double roll = u(rng_);
      if (deeper && roll < 0.10)
        extra = 2;
      else if (deeper && roll < 0.30)
        extra = 1;
      run(size, next, depth + 1 + extra, out);
    }
  }

 private:
  const GenSpec& spec_;
  std::mt19937_64& rng_;
  BigInt p_;
};

// Fills wt, l', r, s, l, f_val and parity from members and links only.
void annotate_naive(ClusterTree& t) {
  std::function<void(int, std::int64_t)> walk = [&](int id, std::int64_t parent_f) {
    ClusterVertex& v = t.vertices[static_cast<std::size_t>(id)];
    v.wt = static_cast<std::int64_t>(v.members.size());
    v.f_val = v.parent ? parent_f + v.wt : 0;
    v.parity = (v.f_val & 1) ? Parity::Odd : Parity::Even;
    std::int64_t in_children = 0;
    v.r = v.s = 0;
    for (int c : v.children) {
      const std::int64_t w = static_cast<std::int64_t>(t.vertices[static_cast<std::size_t>(c)].members.size());
      in_children += w;
      (w % 2 ? v.r : v.s) += 1;
    }
    v.l_prime = v.wt - in_children;
    v.l = v.l_prime + v.r;
    const std::int64_t f = v.f_val;
    const std::vector<int> kids = v.children;
    for (int c : kids) walk(c, f);
  };
  walk(0, 0);
}

int add_vertex(ClusterTree& t, std::int64_t depth, std::vector<std::size_t> members, int parent) {
  ClusterVertex v;
  v.id = static_cast<int>(t.vertices.size());
  v.depth = depth;
  std::sort(members.begin(), members.end());
  v.members = std::move(members);
  if (parent >= 0) {
    v.parent = parent;
    t.vertices[static_cast<std::size_t>(parent)].children.push_back(v.id);
  }
  t.vertices.push_back(std::move(v));
  return t.vertices.back().id;
}

using Local = std::vector<std::vector<std::int64_t>>;

void refine_matrix(ClusterTree& t, int node, const std::vector<std::size_t>& members, const Local& local,
                   std::int64_t depth) {
  const std::size_t k = members.size();
  std::vector<int> comp(k, -1);
  int comps = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < k; ++b) {
        if (b != a && comp[b] < 0 && local[a][b] >= 1) {
          comp[b] = comps;
          stack.push_back(b);
        }
      }
    }
    ++comps;
  }
  for (int c = 0; c < comps; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < k; ++a)
      if (comp[a] == c) idx.push_back(a);
    if (idx.size() < 2) continue;
    std::vector<std::size_t> sub_members;
    Local sub(idx.size(), std::vector<std::int64_t>(idx.size(), 0));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      sub_members.push_back(members[idx[a]]);
      for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = local[idx[a]][idx[b]] - 1;
    }
    const int child = add_vertex(t, depth + 1, sub_members, node);
    refine_matrix(t, child, sub_members, sub, depth + 1);
  }
}

BigInt residue(const Rational& q, const BigInt& p) {
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t());
  BigInt r = (q.get_num() * inv) % p;
  if (r < 0) r += p;
  return r;
}

void refine_roots(ClusterTree& t, int node, const std::vector<std::size_t>& members,
                  const std::vector<Rational>& values, const BigInt& p, std::int64_t depth) {
  std::map<BigInt, std::vector<std::size_t>> by_residue;
  for (std::size_t a = 0; a < members.size(); ++a) by_residue[residue(values[a], p)].push_back(a);
  for (const auto& [res, idx] : by_residue) {
    if (idx.size() < 2) continue;
    std::vector<std::size_t> sub_members;
    std::vector<Rational> sub_values;
    for (std::size_t a : idx) {
      sub_members.push_back(members[a]);
      Rational shifted = (values[a] - Rational(res)) / Rational(p);
      shifted.canonicalize();
      sub_values.push_back(shifted);
    }
    const int child = add_vertex(t, depth + 1, sub_members, node);
    refine_roots(t, child, sub_members, sub_values, p, depth + 1);
  }
}

std::string describe(const RootsInstance& inst) {
  std::string s = "p=" + inst.p.get_str() + " roots=";
  for (std::size_t i = 0; i < inst.roots.size(); ++i) s += (i ? "," : "") + inst.roots[i].get_str();
  return s;
}

}  // namespace

RootsInstance gen_instance(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const int n = 2 * spec.genus + 2;
  RootsInstance inst;
  inst.p = spec.p;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<BigInt> raw;
    Realizer(spec, rng).run(n, BigInt(0), 0, raw);
    // A unit scale and a shift leave every pairwise valuation unchanged.
    int unit = std::uniform_int_distribution<int>(1, 4 * spec.p)(rng);
    if (unit % spec.p == 0) ++unit;
    const BigInt shift = std::uniform_int_distribution<int>(0, 1000)(rng);
    std::shuffle(raw.begin(), raw.end(), rng);
    inst.roots.clear();
    for (const auto& b : raw) inst.roots.emplace_back(b * unit + shift);
    std::vector<Rational> sorted = inst.roots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return inst;
  }
  fail(ErrorCode::InternalInvariant, "generator could not produce distinct roots");
}

ClusterTree naive_tree_oracle(const ValuationMatrix& m) {
  ClusterTree t;
  t.num_roots = m.size();
  std::vector<std::size_t> all(m.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  Local local(m.size(), std::vector<std::int64_t>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) local[i][j] = m.at(i, j).value();
  const int root = add_vertex(t, 0, all, -1);
  refine_matrix(t, root, all, local, 0);
  annotate_naive(t);
  return t;
}

ClusterTree naive_tree_from_roots(const RootsInstance& inst) {
  ClusterTree t;
  t.num_roots = inst.roots.size();
  std::vector<std::size_t> all(inst.roots.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const int root = add_vertex(t, 0, all, -1);
  refine_roots(t, root, all, inst.roots, inst.p, 0);
  annotate_naive(t);
  return t;
}

std::int64_t disc_oracle(const RootsInstance& inst) {
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < inst.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.roots.size(); ++j) {
      Rational diff = inst.roots[i] - inst.roots[j];
      diff.canonicalize();
      num *= diff.get_num() * diff.get_num();
      den *= diff.get_den() * diff.get_den();
    }
  }
  auto strip = [&](BigInt z) {
    std::int64_t k = 0;
    if (z == 0) return k;
    while (z % inst.p == 0) {
      z /= inst.p;
      ++k;
    }
    return k;
  };
  return strip(num) - strip(den);
}

bool trees_isomorphic(const ClusterTree& a, const ClusterTree& b, std::string* why) {
  auto say = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (a.size() != b.size())
    return say("vertex counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  using Key = std::pair<std::int64_t, std::vector<std::size_t>>;
  std::map<Key, const ClusterVertex*> index;
  for (const auto& v : b.vertices) index[{v.depth, v.members}] = &v;
  for (const auto& v : a.vertices) {
    auto it = index.find({v.depth, v.members});
    if (it == index.end()) return say("vertex " + std::to_string(v.id) + " has no counterpart");
    const ClusterVertex& w = *it->second;
    const std::string at = "vertex " + std::to_string(v.id) + ": ";
    if (v.parent.has_value() != w.parent.has_value()) return say(at + "root mismatch");
    if (v.parent && a[*v.parent].members != b[*w.parent].members) return say(at + "parent differs");
    if (v.children.size() != w.children.size()) return say(at + "child count differs");
    if (v.wt != w.wt || v.l_prime != w.l_prime || v.r != w.r || v.s != w.s || v.l != w.l)
      return say(at + "weight statistics differ");
    if (v.f_val != w.f_val || v.parity != w.parity) return say(at + "parity data differs");
  }
  return true;
}

SuiteStats run_suite(const SuiteOptions& opts) {
  SuiteStats st;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 master(opts.seed);
  for (std::uint64_t t = 0; t < opts.trials; ++t) {
    ++st.trials;
    GenSpec spec;
    spec.seed = master();
    spec.p = opts.primes[master() % opts.primes.size()];
    spec.genus = opts.min_genus + static_cast<int>(master() % static_cast<std::uint64_t>(opts.max_genus - opts.min_genus + 1));
    spec.max_depth = static_cast<int>(master() % static_cast<std::uint64_t>(opts.max_depth + 1));
    spec.branching_bias = 0.2 + 0.7 * static_cast<double>(master() % 1000) / 1000.0;
    const std::uint64_t mutation_pick = master();

    RootsInstance inst;
    std::string where = "trial " + std::to_string(t) + " (seed " + std::to_string(spec.seed) + ")";
    std::vector<std::string> problems;
    auto check = [&](bool ok, const std::string& what) {
      if (!ok) problems.push_back(what);
    };
    try {
      inst = gen_instance(spec);
      where += " " + describe(inst);
      const Analysis a = analyze(inst);
      const Report& r = a.report;

      check(disc_oracle(inst) == r.nu_df, "disc_oracle != nu_df");
      check(equation_discriminant(a.matrix) == r.nu_df, "equation_discriminant != nu_df");
      std::int64_t sum_d = 0, sum_D = 0, sum_E = 0, sum_Dp = 0, sum_Dpp = 0;
      for (const auto& led : r.ledgers) {
        sum_d += led.d;
        sum_D += led.D;
        sum_E += led.E;
        sum_Dp += led.Dp;
        sum_Dpp += led.Dpp;
        check(led.Dpp <= led.d, "D'' > d at vertex " + std::to_string(led.id));
      }
      check(sum_d == r.nu_df, "sum d != nu_df");
      check(sum_D == artin_direct(a.x), "sum D != artin_direct");
      check(sum_E == 0, "sum E != 0");
      check(sum_Dpp == sum_Dp, "sum D'' != sum D'");
      check(r.artin_direct <= r.nu_df, "artin > nu_df");
      check(genus_check(a.x) == 2 * spec.genus - 2, "genus check");
      check(r.f_tilde >= 0, "f_tilde < 0");
      check(r.n_X <= r.artin_direct + 1, "n_X > artin + 1");

      std::string why;
      check(trees_isomorphic(naive_tree_oracle(a.matrix), a.tree, &why), "matrix oracle: " + why);
      check(trees_isomorphic(naive_tree_from_roots(inst), a.tree, &why), "residue oracle: " + why);

      // Equality clauses, restated from the tree alone.
      for (const auto& v : a.tree.vertices) {
        const VertexLedger& led = r.ledgers[static_cast<std::size_t>(v.id)];
        bool clause = false;
        if (v.even()) {
          clause = std::all_of(v.children.begin(), v.children.end(),
                               [&](int c) { return a.tree[c].odd() || a.tree[c].wt == 2; });
        } else {
          const bool no_even_children = std::none_of(v.children.begin(), v.children.end(),
                                                     [&](int c) { return a.tree[c].even(); });
          clause = v.wt == 2 || (v.wt == 3 && no_even_children);
        }
        check(clause == led.equality, "equality clause mismatch at vertex " + std::to_string(v.id));
        st.reason_counts[static_cast<int>(led.reason)] += 1;
        if (v.odd()) ++st.odd_vertices;
      }
      for (const auto& y : a.y.vertices)
        if (y.kind == YKind::ChainInsert) ++st.chain_inserts;
      for (const auto& c : a.x.components)
        if (c.sheet_count == 2) ++st.split_components;

      if (spec.max_depth == 0 && 2 * spec.genus + 2 <= spec.p) {
        check(r.nu_df == 0 && r.n_X == 1, "depth-0 instance is not of good reduction");
        ++st.depth0_good_reduction;
      }

      if (r.equality_holds) ++st.equality_instances;
      else ++st.strict_instances;
      if (!r.x_minimal) ++st.nonminimal_instances;

      // Bump one entry and see whether the validator notices.
      const std::size_t n = a.matrix.size();
      const std::size_t i = mutation_pick % n;
      const std::size_t j = (i + 1 + (mutation_pick / n) % (n - 1)) % n;
      ValuationMatrix bumped = a.matrix;
      bumped.set(i, j, a.matrix.at(i, j) + ExtInt(1));
      if (validate_ultrametric(bumped).ok()) {
        ++st.mutations_still_ultrametric;
        analyze(bumped);
      } else {
        ++st.mutations_flagged;
        bool rejected = false;
        try {
          build_cluster_tree(bumped);
        } catch (const Error& e) {
          rejected = e.code() == ErrorCode::UltrametricViolation;
        }
        check(rejected, "perturbed matrix was not rejected by the tree builder");
      }
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    if (problems.empty()) {
      ++st.passed;
    } else {
      std::string msg = where + ":";
      for (const auto& p : problems) msg += " [" + p + "]";
      st.failures.push_back(std::move(msg));
    }
  }
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return st;
}

std::string suite_summary_json(const SuiteStats& s) {
  nlohmann::ordered_json j;
  j["trials"] = s.trials;
  j["passed"] = s.passed;
  j["ok"] = s.ok();
  j["strict_instances"] = s.strict_instances;
  j["equality_instances"] = s.equality_instances;
  j["nonminimal_instances"] = s.nonminimal_instances;
  j["odd_vertices"] = s.odd_vertices;
  j["chain_inserts"] = s.chain_inserts;
  j["split_components"] = s.split_components;
  nlohmann::ordered_json reasons;
  for (int k = 0; k < 4; ++k) reasons[equality_reason_name(static_cast<EqualityReason>(k))] = s.reason_counts[k];
  j["reasons"] = reasons;
  j["mutations_flagged"] = s.mutations_flagged;
  j["mutations_still_ultrametric"] = s.mutations_still_ultrametric;
  j["depth0_good_reduction"] = s.depth0_good_reduction;
  j["seconds"] = s.seconds;
  j["failures"] = s.failures;
  return j.dump();
}

}  // namespace hcond
