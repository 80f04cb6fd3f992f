#include "lporient/holt_klee.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lporient {

AcyclicityResult is_acyclic(const Orientation& o) {
  auto r = topological_order(o);
  if (std::holds_alternative<DirectedCycle>(r))
    return {false, std::get<DirectedCycle>(std::move(r))};
  return {true, std::nullopt};
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> face_source_sink(
    const Orientation& o, const Face& f) {
  FaceDigraph g = face_subdigraph(o, f);
  if (g.vertices.empty()) throw std::invalid_argument("empty face");
  std::vector<char> has_in(g.vertices.size(), 0), has_out(g.vertices.size(), 0);
  for (auto [a, b] : g.arcs) {
    has_out[a] = 1;
    has_in[b] = 1;
  }
  std::vector<VertexId> sources, sinks;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!has_in[i]) sources.push_back(g.vertices[i]);
    if (!has_out[i]) sinks.push_back(g.vertices[i]);
  }
  return {sources, sinks};
}

namespace {

// Unit-capacity max-flow network with vertex splitting. Node layout:
// node 2i = "in" copy of local vertex i, node 2i+1 = "out" copy.
// s and t are not split (their in/out copies are fused by a wide arc).
struct FlowNet {
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowNet(int nodes) : adj(nodes) {}

  void add(int a, int b, int cap) {
    adj[a].push_back({b, cap, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
  }

  int augment(int s, int t) {
    std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
    std::deque<int> q{s};
    parent[s] = {s, 0};
    while (!q.empty() && parent[t].first < 0) {
      int v = q.front();
      q.pop_front();
      for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap > 0 && parent[a.to].first < 0) {
          parent[a.to] = {v, i};
          q.push_back(a.to);
        }
      }
    }
    if (parent[t].first < 0) return 0;
    for (int v = t; v != s;) {
      auto [p, i] = parent[v];
      adj[p][i].cap -= 1;
      adj[adj[p][i].to][adj[p][i].rev].cap += 1;
      v = p;
    }
    return 1;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const Arc& a : adj[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push_back(a.to);
        }
    }
    return seen;
  }
};

}  // namespace

DisjointPaths max_disjoint_paths(const FaceDigraph& g, int s, int t) {
  int V = static_cast<int>(g.vertices.size());
  if (s == t) throw std::invalid_argument("source equals sink");
  int wide = V + 1;  // exceeds any possible flow, so cuts use split arcs only
  FlowNet net(2 * V);
  int directs = 0;
  for (int i = 0; i < V; ++i) net.add(2 * i, 2 * i + 1, i == s || i == t ? wide : 1);
  for (auto [a, b] : g.arcs) {
    if (a == s && b == t) {
      ++directs;  // a direct arc is one path on its own; keep it out of the net
      continue;
    }
    net.add(2 * a + 1, 2 * b, wide);
  }
  int flow = 0;
  while (net.augment(2 * s, 2 * t + 1)) ++flow;

  auto seen = net.reachable(2 * s);
  DisjointPaths out;
  out.count = flow + directs;
  for (int i = 0; i < V; ++i)
    if (i != s && i != t && seen[2 * i] && !seen[2 * i + 1]) out.cut.push_back(i);
  return out;
}

int disjoint_monotone_paths(const Orientation& o, const Face& f) {
  auto [sources, sinks] = face_source_sink(o, f);
  if (sources.size() != 1 || sinks.size() != 1 || sources[0] == sinks[0])
    throw std::invalid_argument("face lacks a unique source and sink");
  FaceDigraph g = face_subdigraph(o, f);
  auto pos = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(g.vertices.begin(),
                                             g.vertices.end(), v) -
                            g.vertices.begin());
  };
  return max_disjoint_paths(g, pos(sources[0]), pos(sinks[0])).count;
}

HKVerdict is_holt_klee(const Orientation& o) {
  auto acyc = is_acyclic(o);
  if (!acyc.acyclic)
    return {false, CycleViolation{std::move(*acyc.cycle)}};

  // The 1-crosspolytope graph is empty (the two vertices are an antipodal
  // pair), so there is nothing to orient; its only orientation passes.
  if (o.kind() == PolytopeKind::Crosspolytope && o.dim() == 1)
    return {true, std::nullopt};

  for (int k = 1; k <= o.dim(); ++k) {
    for (const Face& f : enumerate_faces(o.kind(), o.dim(), k)) {
      FaceDigraph g = face_subdigraph(o, f);
      int V = static_cast<int>(g.vertices.size());
      std::vector<char> has_in(V, 0), has_out(V, 0);
      for (auto [a, b] : g.arcs) {
        has_out[a] = 1;
        has_in[b] = 1;
      }
      std::vector<VertexId> sources, sinks;
      for (int i = 0; i < V; ++i) {
        if (!has_in[i]) sources.push_back(g.vertices[i]);
        if (!has_out[i]) sinks.push_back(g.vertices[i]);
      }
      if (sinks.size() > 1) return {false, MultipleSinks{f, sinks}};
      if (sources.size() > 1) return {false, MultipleSources{f, sources}};
      if (k < 2) continue;
      auto pos = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(g.vertices.begin(),
                                                 g.vertices.end(), v) -
                                g.vertices.begin());
      };
      DisjointPaths dp = max_disjoint_paths(g, pos(sources[0]), pos(sinks[0]));
      if (dp.count < k) {
        std::vector<VertexId> cut;
        for (int i : dp.cut) cut.push_back(g.vertices[i]);
        return {false, PathDeficit{f, k, dp.count, std::move(cut)}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

bool face_contains(const Face& f, VertexId v) {
  auto ids = face_vertex_ids(f);
  return std::binary_search(ids.begin(), ids.end(), v);
}

bool check_extremes(const Orientation& o, const Face& f,
                    const std::vector<VertexId>& vs, bool as_sinks) {
  if (vs.size() < 2) return false;
  FaceDigraph g = face_subdigraph(o, f);
  for (VertexId v : vs) {
    if (!face_contains(f, v)) return false;
    for (auto [a, b] : g.arcs) {
      int end = as_sinks ? a : b;
      if (g.vertices[end] == v) return false;
    }
  }
  return true;
}

}  // namespace

bool verdict_is_valid(const Orientation& o, const HKVerdict& v) {
  if (v.passed) return !v.violation.has_value();
  if (!v.violation) return false;
  const HKViolation& viol = *v.violation;

  if (const auto* c = std::get_if<CycleViolation>(&viol))
    return cycle_is_valid(o, c->cycle);
  if (const auto* ms = std::get_if<MultipleSources>(&viol))
    return check_extremes(o, ms->face, ms->vertices, /*as_sinks=*/false);
  if (const auto* mk = std::get_if<MultipleSinks>(&viol))
    return check_extremes(o, mk->face, mk->vertices, /*as_sinks=*/true);

  const auto& pd = std::get<PathDeficit>(viol);
  if (pd.achieved >= pd.required || face_dim(pd.face) != pd.required)
    return false;
  auto [sources, sinks] = face_source_sink(o, pd.face);
  if (sources.size() != 1 || sinks.size() != 1) return false;
  FaceDigraph g = face_subdigraph(o, pd.face);
  int V = static_cast<int>(g.vertices.size());
  auto pos = [&](VertexId x) {
    return static_cast<int>(std::lower_bound(g.vertices.begin(),
                                             g.vertices.end(), x) -
                            g.vertices.begin());
  };
  int s = pos(sources[0]), t = pos(sinks[0]);
  std::vector<char> removed(V, 0);
  for (VertexId x : pd.cut) {
    if (!face_contains(pd.face, x) || x == sources[0] || x == sinks[0])
      return false;
    removed[pos(x)] = 1;
  }
  // The cut plus the direct arcs must bound the path count: achieved paths at
  // most, i.e. removing the cut leaves no s->t route except direct arcs.
  int directs = 0;
  std::vector<std::vector<int>> succ(V);
  for (auto [a, b] : g.arcs) {
    if (a == s && b == t) {
      ++directs;
      continue;
    }
    if (!removed[a] && !removed[b]) succ[a].push_back(b);
  }
  std::vector<char> seen(V, 0);
  std::deque<int> q{s};
  seen[s] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : succ[x])
      if (!seen[y]) {
        seen[y] = 1;
        q.push_back(y);
      }
  }
  if (seen[t]) return false;
  return pd.achieved == static_cast<int>(pd.cut.size()) + directs;
}

std::string describe(const Orientation& o, const HKVerdict& v) {
  if (v.passed) return "HK: PASS";
  auto name = [&](VertexId x) { return vertex_name(o.kind(), o.dim(), x); };
  auto join = [&](const std::vector<VertexId>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ",";
      s += name(vs[i]);
    }
    return s;
  };
  const HKViolation& viol = *v.violation;
  if (const auto* c = std::get_if<CycleViolation>(&viol)) {
    std::string s = "HK: FAIL cycle - ";
    for (VertexId x : c->cycle.vertices) s += name(x) + "->";
    s += name(c->cycle.vertices.front());
    return s;
  }
  if (const auto* ms = std::get_if<MultipleSources>(&viol))
    return "HK: FAIL multiple_sources " + face_name(ms->face) + " " +
           join(ms->vertices);
  if (const auto* mk = std::get_if<MultipleSinks>(&viol))
    return "HK: FAIL multiple_sinks " + face_name(mk->face) + " " +
           join(mk->vertices);
  const auto& pd = std::get<PathDeficit>(viol);
  return "HK: FAIL path_deficit " + face_name(pd.face) +
         " k=" + std::to_string(pd.required) +
         " achieved=" + std::to_string(pd.achieved) + " cut=" + join(pd.cut);
}

}  // namespace lporient
