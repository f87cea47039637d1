#include "rotsys/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <map>
#include <memory>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rotsys/base.hpp"
#include "rotsys/constructions.hpp"
#include "rotsys/map.hpp"

namespace rotsys {

namespace {

// Edge-by-edge construction: stage k decides edge k's crossings with the earlier edges (which
// independent partners, their order along edge k, the insertion point into each partner's
// schedule, and an interleave per crossing). Every finished configuration is reached by exactly
// one decision sequence, so uncanonicalized enumeration is duplicate-free. Deleting the undecided
// edges from any completion yields the current partial drawing, whose planarized genus therefore
// lower-bounds every completion.
struct engine {
  RotationSystem sys;
  SearchConfig cfg;
  Drawing base;
  int m = 0;
  std::vector<Drawing> kbase;            // skeleton restricted to edge rows < k
  std::vector<std::vector<char>> indep;
  std::map<std::string, int> edge_row;

  bool have_ell = false;
  int ell = 0;
  std::map<std::pair<int, int>, int> slot_pair;  // (rowmin,rowmax) -> canonical pair index
  std::vector<std::array<int, 2>> pair_close;    // per pair: the two slots' later rows

  std::vector<std::vector<int>> auto_rows;       // row permutations from system automorphisms
  int dedupe_max_k = -1;
  std::vector<std::set<std::string>> seen;

  std::atomic<long long> explored{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> truncated{false};
  std::atomic<int> shared_best{INT_MAX};
  bool use_shared = false;

  std::function<void(Drawing&&, int, int, long long)> on_final;

  struct state {
    std::vector<CrossingRecord> recs;
    std::vector<std::vector<int>> sched;  // per edge row: record indices in traversal order
    std::vector<int> cnt;                 // decided crossings per canonical pair
    int crossings = 0;
  };

  engine(const RotationSystem& s, const SearchConfig& c) : sys(s), cfg(c) {
    validate_system(sys);
    base = zero_drawing_embedding(sys);
    m = static_cast<int>(base.edges.size());
    if (!cfg.max_crossings && m > 10)
      throw resource_error("uncapped search needs at most 10 edges; set max_crossings");
    for (int r = 0; r < m; ++r) edge_row[base.edges[r].id] = r;

    indep.assign(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const DrawingEdge &ea = base.edges[a], &eb = base.edges[b];
        indep[a][b] = a != b && ea.end1 != eb.end1 && ea.end1 != eb.end2 &&
                      ea.end2 != eb.end1 && ea.end2 != eb.end2;
      }

    kbase.resize(m + 1);
    for (int k = 0; k <= m; ++k) {
      Drawing d;
      d.vertices = base.vertices;
      for (int r = 0; r < k; ++r) d.edges.push_back(base.edges[r]);
      std::set<std::string> live;
      for (const DrawingEdge& e : d.edges) live.insert(e.id);
      for (const auto& [v, rot] : base.rotations) {
        std::vector<std::string> f;
        for (const std::string& eid : rot)
          if (live.count(eid)) f.push_back(eid);
        d.rotations[v] = f;
      }
      kbase[k] = std::move(d);
    }
    setup_ell();
    setup_canon();
    seen.resize(m + 2);
  }

  void setup_ell() {
    if (!cfg.ell) return;
    if (*cfg.ell < 0) throw input_error("ell must be nonnegative");
    have_ell = true;
    ell = *cfg.ell;
    std::set<std::string> elems(sys.elements.begin(), sys.elements.end());
    if (!elems.count("b") || !elems.count("r"))
      throw input_error("the ell filter needs a hub system (elements b, r, 1..n)");
    int n = static_cast<int>(sys.elements.size()) - 2;
    std::vector<int> brow(n + 1, -1), rrow(n + 1, -1);
    for (int i = 1; i <= n; ++i) {
      std::string si = std::to_string(i);
      if (!elems.count(si)) throw input_error("the ell filter needs elements 1..n");
      auto bi = edge_row.find("b-" + si), ri = edge_row.find("r-" + si);
      if (bi == edge_row.end() || ri == edge_row.end())
        throw input_error("the ell filter needs every spoke b-i and r-i");
      brow[i] = bi->second;
      rrow[i] = ri->second;
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int a1 = std::min(brow[i], rrow[j]), b1 = std::max(brow[i], rrow[j]);
        int a2 = std::min(brow[j], rrow[i]), b2 = std::max(brow[j], rrow[i]);
        slot_pair[{a1, b1}] = static_cast<int>(pair_close.size());
        slot_pair[{a2, b2}] = static_cast<int>(pair_close.size());
        pair_close.push_back({b1, b2});
      }
  }

  void setup_canon() {
    if (!cfg.canonicalize) return;
    for (const auto& sigma : automorphisms(sys)) {
      std::vector<int> rm(m);
      for (int r = 0; r < m; ++r) {
        std::string u = sigma.at(base.edges[r].end1), v = sigma.at(base.edges[r].end2);
        auto it = edge_row.find(u + "-" + v);
        if (it == edge_row.end()) it = edge_row.find(v + "-" + u);
        rm[r] = it->second;
      }
      auto_rows.push_back(std::move(rm));
    }
    if (auto_rows.size() <= 1) auto_rows.clear();
  }

  state initial() const {
    state st;
    st.sched.resize(m);
    st.cnt.assign(pair_close.size(), 0);
    return st;
  }

  Drawing materialize(const state& st, int upto) const {
    Drawing d = kbase[upto];
    d.crossings = st.recs;
    for (int r = 0; r < upto; ++r) {
      if (st.sched[r].empty()) continue;
      std::vector<std::string>& ids = d.schedule[base.edges[r].id];
      for (int ri : st.sched[r]) ids.push_back(st.recs[ri].id);
    }
    return d;
  }

  bool ell_ok(const state& st, int k) const {
    for (size_t c = 0; c < pair_close.size(); ++c) {
      int open = (pair_close[c][0] >= k ? 1 : 0) + (pair_close[c][1] >= k ? 1 : 0);
      if (st.cnt[c] > ell || st.cnt[c] + open < ell) return false;
    }
    return true;
  }

  int current_limit() const {
    int lim = cfg.genus_budget ? *cfg.genus_budget : INT_MAX;
    if (use_shared) lim = std::min(lim, shared_best.load(std::memory_order_relaxed));
    return lim;
  }

  std::string sig_under(const state& st, int k, const std::vector<int>& rm) const {
    for (int r = 0; r < k; ++r)
      if (rm[r] >= k) return {};
    std::vector<int> inv(k);
    for (int r = 0; r < k; ++r) inv[rm[r]] = r;
    std::string out;
    for (int rp = 0; rp < k; ++rp) {
      int r = inv[rp];
      out += '|';
      for (int ri : st.sched[r]) {
        const CrossingRecord& rec = st.recs[ri];
        int ra = edge_row.at(rec.edge_a), rb = edge_row.at(rec.edge_b);
        int other = ra == r ? rb : ra;
        // Records store the earlier row as edge_a; re-normalizing after the relabel flips the tag.
        bool neg = (rec.interleave == Interleave::NEG) != (rm[ra] > rm[rb]);
        out += std::to_string(rm[other]);
        out += neg ? "n;" : "p;";
      }
    }
    return out;
  }

  // Entry admissibility for a state about to decide edge k. Counts the node, enforces the node
  // cap, the ell slot bounds, the genus limit, and (serial phases only) automorphism dedupe.
  bool entry_check(const state& st, int k) {
    long long e = explored.fetch_add(1, std::memory_order_relaxed) + 1;
    if (cfg.max_nodes && e > *cfg.max_nodes) {
      truncated = true;
      stop = true;
      return false;
    }
    if (have_ell && !ell_ok(st, k)) return false;
    int limit = current_limit();
    if (limit != INT_MAX && k >= 2 && k < m) {
      if (euler_genus(planarize(materialize(st, k))) > limit) return false;
    }
    if (k >= 1 && k <= dedupe_max_k && !auto_rows.empty()) {
      std::string best;
      for (const auto& rm : auto_rows) {
        std::string s = sig_under(st, k, rm);
        if (!s.empty() && (best.empty() || s < best)) best = std::move(s);
      }
      if (!seen[k].insert(best).second) return false;
    }
    return true;
  }

  void apply(state& st, int k, const std::vector<int>& partners, const std::vector<int>& perm,
             const std::vector<int>& pos, unsigned tmask) const {
    int b = static_cast<int>(st.recs.size()), c = static_cast<int>(partners.size());
    for (int t = 0; t < c; ++t) {
      int p = partners[t];
      st.recs.push_back({"x_" + base.edges[p].id + "_" + base.edges[k].id, base.edges[p].id,
                         base.edges[k].id,
                         (tmask >> t) & 1u ? Interleave::NEG : Interleave::POS});
      auto it = slot_pair.find({p, k});
      if (it != slot_pair.end()) ++st.cnt[it->second];
    }
    for (int q : perm) {
      int t = static_cast<int>(std::lower_bound(partners.begin(), partners.end(), q) -
                               partners.begin());
      st.sched[k].push_back(b + t);
    }
    for (int t = 0; t < c; ++t)
      st.sched[partners[t]].insert(st.sched[partners[t]].begin() + pos[t], b + t);
    st.crossings += c;
  }

  void undo(state& st, int k, const std::vector<int>& partners, const std::vector<int>& pos) const {
    int c = static_cast<int>(partners.size());
    for (int t = 0; t < c; ++t) {
      std::vector<int>& v = st.sched[partners[t]];
      v.erase(v.begin() + pos[t]);
      auto it = slot_pair.find({partners[t], k});
      if (it != slot_pair.end()) --st.cnt[it->second];
    }
    st.sched[k].clear();
    st.recs.resize(st.recs.size() - c);
    st.crossings -= c;
  }

  // Deterministic stage order: partner subsets by size then lexicographically, edge-k schedule
  // permutations lexicographically, insertion offsets as a little-endian counter, interleave
  // masks ascending (POS first).
  void for_each_choice(state& st, int k, const std::function<void(state&)>& fn) {
    std::vector<int> cands;
    for (int p = 0; p < k; ++p)
      if (indep[p][k]) cands.push_back(p);
    int maxc = static_cast<int>(cands.size());
    if (cfg.max_crossings) maxc = std::min(maxc, *cfg.max_crossings - st.crossings);
    for (int size = 0; size <= maxc && !stop; ++size) {
      std::vector<int> idx(size);
      for (int t = 0; t < size; ++t) idx[t] = t;
      while (!stop) {
        std::vector<int> partners(size);
        for (int t = 0; t < size; ++t) partners[t] = cands[idx[t]];
        std::vector<int> perm = partners;
        do {
          std::vector<int> pos(size, 0), lim(size);
          for (int t = 0; t < size; ++t)
            lim[t] = static_cast<int>(st.sched[partners[t]].size()) + 1;
          while (!stop) {
            for (unsigned tmask = 0; tmask < (1u << size) && !stop; ++tmask) {
              apply(st, k, partners, perm, pos, tmask);
              fn(st);
              undo(st, k, partners, pos);
            }
            int t = 0;
            while (t < size && ++pos[t] == lim[t]) pos[t++] = 0;
            if (t == size) break;
          }
        } while (std::next_permutation(perm.begin(), perm.end()) && !stop);
        int t = size - 1;
        while (t >= 0 && idx[t] == static_cast<int>(cands.size()) - size + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < size; ++u) idx[u] = idx[u - 1] + 1;
      }
    }
  }

  void dfs(state& st, int k, int seed, long long& seq) {
    if (stop.load(std::memory_order_relaxed)) return;
    if (!entry_check(st, k)) return;
    if (k == m) {
      Drawing d = materialize(st, m);
      int g = euler_genus(planarize(d));
      if (g > current_limit()) return;
      if (cfg.predicate && !cfg.predicate(d)) return;
      on_final(std::move(d), g, seed, seq++);
      return;
    }
    for_each_choice(st, k, [&](state& s2) { dfs(s2, k + 1, seed, seq); });
  }
};

}  // namespace

EnumResult enumerate_drawings(const RotationSystem& s, const SearchConfig& cfg,
                              const std::function<bool(const Drawing&)>& visit) {
  engine e(s, cfg);
  e.dedupe_max_k = cfg.canonicalize ? 3 : -1;
  EnumResult res;
  e.on_final = [&](Drawing&& d, int, int, long long) {
    ++res.emitted;
    if (!visit(d)) e.stop = true;
  };
  engine::state st = e.initial();
  long long seq = 0;
  e.dfs(st, 0, 0, seq);
  res.explored = e.explored.load();
  res.truncated = e.truncated.load();
  return res;
}

CrgResult crossing_genus(const RotationSystem& s, const SearchConfig& cfg) {
  engine e(s, cfg);
  e.use_shared = true;
  e.dedupe_max_k = cfg.canonicalize ? 3 : -1;

  // Seed expansion is serial and independent of the worker count, so seed indices (and with them
  // the witness rank) are schedule-invariant.
  std::vector<engine::state> seeds;
  int level = 0;
  {
    engine::state root = e.initial();
    if (e.entry_check(root, 0)) seeds.push_back(std::move(root));
  }
  while (!e.stop && !seeds.empty() && level < e.m && seeds.size() < 64) {
    long long predicted = 0;
    for (engine::state& st : seeds)
      e.for_each_choice(st, level, [&](engine::state&) { ++predicted; });
    if (predicted > 4096) break;
    std::vector<engine::state> next;
    for (engine::state& st : seeds)
      e.for_each_choice(st, level, [&](engine::state& child) {
        if (!e.stop && e.entry_check(child, level + 1)) next.push_back(child);
      });
    seeds = std::move(next);
    ++level;
  }
  e.dedupe_max_k = -1;

  struct cand {
    int g = 0;
    long long seq = 0;
    Drawing d;
  };
  std::vector<std::unique_ptr<cand>> results(seeds.size());
  e.on_final = [&](Drawing&& d, int g, int seed, long long seq) {
    int cur = e.shared_best.load(std::memory_order_relaxed);
    while (g < cur &&
           !e.shared_best.compare_exchange_weak(cur, g, std::memory_order_relaxed)) {
    }
    std::unique_ptr<cand>& slot = results[seed];
    if (!slot || g < slot->g) slot.reset(new cand{g, seq, std::move(d)});
  };

  int jobs = std::max(1, cfg.jobs);
  int count = static_cast<int>(seeds.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
#endif
  for (int i = 0; i < count; ++i) {
    engine::state st = seeds[i];
    long long seq = 0;
    e.dfs(st, level, i, seq);
  }
  (void)jobs;

  CrgResult out;
  out.explored = e.explored.load();
  out.truncated = e.truncated.load();
  out.upper_bound_only = cfg.max_crossings.has_value() || out.truncated;
  for (const std::unique_ptr<cand>& c : results)
    if (c && (!out.genus || c->g < *out.genus)) {
      out.genus = c->g;
      out.witness = c->d;
    }
  out.exceeds_budget = cfg.genus_budget.has_value() && !out.truncated && !out.genus.has_value();
  return out;
}

std::vector<RotationSystem> complete_systems(int size) {
  if (size < 3) throw input_error("complete systems need size >= 3");
  if (size > 5) throw resource_error("complete system sweep is capped at size 5");
  std::vector<std::vector<std::vector<std::string>>> choices(size + 1);
  for (int i = 1; i <= size; ++i) {
    std::vector<std::string> nb;
    for (int j = 1; j <= size; ++j)
      if (j != i) nb.push_back(std::to_string(j));
    std::vector<std::string> tail(nb.begin() + 1, nb.end());
    std::sort(tail.begin(), tail.end());
    do {
      std::vector<std::string> rot{nb.front()};
      rot.insert(rot.end(), tail.begin(), tail.end());
      choices[i].push_back(rot);
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  long long per = static_cast<long long>(choices[1].size());
  long long total = 1;
  for (int i = 1; i <= size; ++i) total *= per;
  std::vector<RotationSystem> out;
  for (long long idx = 0; idx < total; ++idx) {
    RotationSystem s;
    long long rest = idx;
    for (int i = 1; i <= size; ++i) {
      s.elements.push_back(std::to_string(i));
      s.pi[std::to_string(i)] = choices[i][rest % per];
      rest /= per;
    }
    validate_system(s);
    out.push_back(std::move(s));
  }
  return out;
}

F0Report verify_f0(int jobs) {
  F0Report r;
  SearchConfig cfg;
  cfg.jobs = jobs;
  for (const RotationSystem& s : complete_systems(3)) r.size3.push_back(*crossing_genus(s, cfg).genus);
  for (const RotationSystem& s : complete_systems(4)) {
    int g = *crossing_genus(s, cfg).genus;
    r.size4.push_back(g);
    if (g == 0) ++r.size4_crg0;
    if (g == 1) ++r.size4_crg1;
  }
  r.f0_is_4 = *std::min_element(r.size3.begin(), r.size3.end()) == 0 &&
              *std::max_element(r.size4.begin(), r.size4.end()) >= 1;
  return r;
}

}  // namespace rotsys
