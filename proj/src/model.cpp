#include "lporient/model.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <queue>

namespace lporient {

namespace {

int popcount(std::uint32_t x) { return std::popcount(x); }

void check_cube_dim(int n, int cap) {
  if (n < 1 || n > cap)
    throw DimensionError("cube dimension " + std::to_string(n) +
                         " outside 1.." + std::to_string(cap));
}

void check_cross_dim(int d, int cap) {
  if (d < 1 || d > cap)
    throw DimensionError("crosspolytope dimension " + std::to_string(d) +
                         " outside 1.." + std::to_string(cap));
}

}  // namespace

std::string CubeVertex::name() const {
  std::string s(n, '0');
  for (int i = 1; i <= n; ++i)
    if (coordinate(i)) s[i - 1] = '1';
  return s;
}

std::string CrossVertex::name() const {
  return (negative ? "-" : "+") + std::to_string(pair_index);
}

std::string vertex_name(PolytopeKind kind, int dim, VertexId v) {
  if (kind == PolytopeKind::Cube)
    return CubeVertex{dim, static_cast<std::uint32_t>(v)}.name();
  return CrossVertex{v / 2 + 1, (v & 1) != 0}.name();
}

int CubeFace::dim() const { return n - popcount(fixed); }

std::string CubeFace::pattern() const {
  std::string s(n, '*');
  for (int i = 1; i <= n; ++i) {
    std::uint32_t bit = 1u << (i - 1);
    if (fixed & bit) s[i - 1] = (values & bit) ? '1' : '0';
  }
  return s;
}

std::vector<VertexId> CubeFace::vertex_ids() const {
  // Fixed coordinate i corresponds to vertex bit (n - i); build the fixed
  // part of the vertex id once, then deposit free-coordinate assignments in
  // ascending order.
  std::uint32_t fixed_vbits = 0, base = 0;
  std::vector<int> free_vbits;
  for (int i = 1; i <= n; ++i) {
    std::uint32_t cbit = 1u << (i - 1);
    int vshift = n - i;
    if (fixed & cbit) {
      fixed_vbits |= 1u << vshift;
      if (values & cbit) base |= 1u << vshift;
    } else {
      free_vbits.push_back(vshift);
    }
  }
  std::sort(free_vbits.begin(), free_vbits.end());
  int k = static_cast<int>(free_vbits.size());
  std::vector<VertexId> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t t = 0; t < (1u << k); ++t) {
    std::uint32_t v = base;
    for (int j = 0; j < k; ++j)
      if (t & (1u << j)) v |= 1u << free_vbits[j];
    out.push_back(static_cast<VertexId>(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int CrossFace::dim() const {
  return whole ? d : static_cast<int>(members.size()) - 1;
}

std::string CrossFace::name() const {
  if (whole) return "whole";
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += vertex_name(PolytopeKind::Crosspolytope, d, members[i]);
  }
  return s + "}";
}

std::vector<VertexId> CrossFace::vertex_ids() const {
  if (!whole) return members;
  std::vector<VertexId> out(2 * d);
  for (int v = 0; v < 2 * d; ++v) out[v] = v;
  return out;
}

int face_dim(const Face& f) {
  return std::visit([](const auto& x) { return x.dim(); }, f);
}

std::string face_name(const Face& f) {
  if (const auto* c = std::get_if<CubeFace>(&f)) return c->pattern();
  return std::get<CrossFace>(f).name();
}

std::vector<VertexId> face_vertex_ids(const Face& f) {
  return std::visit([](const auto& x) { return x.vertex_ids(); }, f);
}

int PolytopeModel::edge_index(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  if (u == v || u < 0 || v >= vertex_count) return -1;
  if (kind == PolytopeKind::Cube) {
    std::uint32_t x = static_cast<std::uint32_t>(u ^ v);
    if (popcount(x) != 1) return -1;
    // rank of the flipped bit among u's zero bits
    std::uint32_t mask = static_cast<std::uint32_t>((1u << dim) - 1);
    std::uint32_t zeros_below = ~static_cast<std::uint32_t>(u) & mask & (x - 1);
    return cube_edge_base_[u] + popcount(zeros_below);
  }
  int idx = cross_edge_idx_[u * vertex_count + v];
  return idx;
}

std::shared_ptr<const PolytopeModel> model_for(PolytopeKind kind, int dim) {
  if (kind == PolytopeKind::Cube)
    check_cube_dim(dim, limits::kCubeDimCap);
  else
    check_cross_dim(dim, limits::kCrossDimCap);

  static std::mutex mu;
  static std::map<std::pair<PolytopeKind, int>,
                  std::shared_ptr<const PolytopeModel>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(kind, dim);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto m = std::make_shared<PolytopeModel>();
  m->kind = kind;
  m->dim = dim;
  if (kind == PolytopeKind::Cube) {
    m->vertex_count = 1 << dim;
    m->cube_edge_base_.resize(m->vertex_count);
    int running = 0;
    for (VertexId u = 0; u < m->vertex_count; ++u) {
      m->cube_edge_base_[u] = running;
      for (int b = 0; b < dim; ++b) {
        if (!(u & (1 << b))) {
          m->edges.emplace_back(u, u | (1 << b));
          ++running;
        }
      }
    }
  } else {
    m->vertex_count = 2 * dim;
    m->cross_edge_idx_.assign(m->vertex_count * m->vertex_count, -1);
    for (VertexId u = 0; u < m->vertex_count; ++u) {
      for (VertexId v = u + 1; v < m->vertex_count; ++v) {
        if (u / 2 == v / 2) continue;  // antipodal pair, no edge
        int idx = static_cast<int>(m->edges.size());
        m->edges.emplace_back(u, v);
        m->cross_edge_idx_[u * m->vertex_count + v] = idx;
        m->cross_edge_idx_[v * m->vertex_count + u] = idx;
      }
    }
  }
  m->incident.resize(m->vertex_count);
  for (int e = 0; e < static_cast<int>(m->edges.size()); ++e) {
    auto [u, v] = m->edges[e];
    m->incident[u].emplace_back(v, e);
    m->incident[v].emplace_back(u, e);
  }
  for (auto& adj : m->incident) std::sort(adj.begin(), adj.end());

  cache[key] = m;
  return m;
}

std::vector<std::pair<VertexId, VertexId>> build_cube_edges(int n,
                                                            int dim_cap) {
  check_cube_dim(n, std::min(dim_cap, limits::kCubeDimCap));
  return model_for(PolytopeKind::Cube, n)->edges;
}

std::vector<std::pair<VertexId, VertexId>> build_cross_edges(int d,
                                                             int dim_cap) {
  check_cross_dim(d, std::min(dim_cap, limits::kCrossDimCap));
  return model_for(PolytopeKind::Crosspolytope, d)->edges;
}

namespace {

// Size-m subsets of {0..n-1} in lexicographic order of their sorted tuples.
std::vector<std::vector<int>> subsets_lex(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m);
  for (int i = 0; i < m; ++i) cur[i] = i;
  if (m > n) return out;
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == n - m + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (m == 0) out.assign(1, {});
  return out;
}

}  // namespace

std::vector<Face> enumerate_faces(PolytopeKind kind, int dim, int k) {
  if (k < 0 || k > dim)
    throw DimensionError("face dimension " + std::to_string(k) +
                         " outside 0.." + std::to_string(dim));
  (void)model_for(kind, dim);  // validates dim
  std::vector<Face> out;
  if (kind == PolytopeKind::Cube) {
    int m = dim - k;
    for (const auto& set : subsets_lex(dim, m)) {
      std::uint32_t fixed = 0;
      for (int c : set) fixed |= 1u << c;  // c = coordinate index - 1
      for (std::uint32_t t = 0; t < (1u << m); ++t) {
        std::uint32_t values = 0;
        for (int j = 0; j < m; ++j)
          if (t & (1u << j)) values |= 1u << set[j];
        out.push_back(CubeFace{dim, fixed, values});
      }
      if (m == 0) break;  // single whole-cube face
    }
  } else {
    if (k == dim) {
      out.push_back(CrossFace{dim, true, {}});
      return out;
    }
    for (const auto& set : subsets_lex(dim, k + 1)) {
      for (std::uint32_t t = 0; t < (1u << (k + 1)); ++t) {
        std::vector<VertexId> members;
        members.reserve(set.size());
        for (std::size_t j = 0; j < set.size(); ++j) {
          bool neg = (t & (1u << j)) != 0;
          members.push_back(2 * set[j] + (neg ? 1 : 0));
        }
        out.push_back(CrossFace{dim, false, std::move(members)});
      }
    }
  }
  return out;
}

Face whole_face(PolytopeKind kind, int dim) {
  if (kind == PolytopeKind::Cube) return CubeFace{dim, 0, 0};
  return CrossFace{dim, true, {}};
}

Orientation::Orientation(PolytopeKind kind, int dim,
                         std::vector<std::uint8_t> dir)
    : kind_(kind), dim_(dim), model_(model_for(kind, dim)), dir_(std::move(dir)) {
  if (dir_.size() != model_->edges.size())
    throw std::invalid_argument(
        "orientation has " + std::to_string(dir_.size()) + " direction bits, " +
        "polytope has " + std::to_string(model_->edges.size()) + " edges");
}

VertexId Orientation::head(int e) const {
  const auto& [u, v] = model_->edges[e];
  return dir_[e] ? v : u;
}

VertexId Orientation::tail(int e) const {
  const auto& [u, v] = model_->edges[e];
  return dir_[e] ? u : v;
}

Orientation standard_cube_orientation(int n) {
  auto m = model_for(PolytopeKind::Cube, n);
  // every canonical edge (u, u | bit) already points toward the extra 1
  return Orientation(PolytopeKind::Cube, n,
                     std::vector<std::uint8_t>(m->edges.size(), 1));
}

TopoResult topological_order(const Orientation& o) {
  const auto& m = o.model();
  int V = m.vertex_count;
  std::vector<int> indeg(V, 0);
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e)
    ++indeg[o.head(e)];

  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  std::vector<int> deg = indeg;
  for (int v = 0; v < V; ++v)
    if (deg[v] == 0) ready.push(v);

  std::vector<int> labels(V, 0);
  int next = 1;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    labels[v] = next++;
    for (auto [w, e] : m.incident[v]) {
      if (o.tail(e) != v) continue;
      if (--deg[w] == 0) ready.push(w);
    }
  }
  if (next == V + 1) return labels;

  // Remaining vertices all have an unprocessed predecessor; walk backwards
  // from the smallest one until a vertex repeats, then read the cycle off.
  std::vector<int> pos(V, -1);
  int start = 0;
  while (labels[start] != 0) ++start;
  std::vector<VertexId> path{start};
  pos[start] = 0;
  for (;;) {
    int cur = path.back();
    int pred = -1;
    for (auto [w, e] : m.incident[cur]) {
      if (o.head(e) == cur && labels[w] == 0) {
        pred = w;
        break;  // incident is sorted, smallest unprocessed predecessor
      }
    }
    if (pos[pred] >= 0) {
      // path[pos[pred]..end] with edges path[i+1] -> path[i]; reverse it
      std::vector<VertexId> cyc(path.begin() + pos[pred], path.end());
      std::reverse(cyc.begin() + 1, cyc.end());
      return DirectedCycle{std::move(cyc)};
    }
    pos[pred] = static_cast<int>(path.size());
    path.push_back(pred);
  }
}

bool cycle_is_valid(const Orientation& o, const DirectedCycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 2) return false;
  const auto& m = o.model();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    VertexId a = vs[i];
    VertexId b = vs[(i + 1) % vs.size()];
    if (a < 0 || a >= m.vertex_count || b < 0 || b >= m.vertex_count)
      return false;
    int e = m.edge_index(a, b);
    if (e < 0 || o.tail(e) != a) return false;
  }
  return true;
}

FaceDigraph face_subdigraph(const Orientation& o, const Face& f) {
  const auto& m = o.model();
  bool is_cube_face = std::holds_alternative<CubeFace>(f);
  if ((is_cube_face && o.kind() != PolytopeKind::Cube) ||
      (!is_cube_face && o.kind() != PolytopeKind::Crosspolytope))
    throw std::invalid_argument("face kind does not match orientation");
  int fdim = is_cube_face ? std::get<CubeFace>(f).n : std::get<CrossFace>(f).d;
  if (fdim != o.dim())
    throw std::invalid_argument("face dimension does not match orientation");

  FaceDigraph g;
  g.vertices = face_vertex_ids(f);
  std::vector<int> local(m.vertex_count, -1);
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    local[g.vertices[i]] = i;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    VertexId u = g.vertices[i];
    for (auto [w, e] : m.incident[u]) {
      if (w < u || local[w] < 0) continue;  // each edge once, inside face
      if (o.tail(e) == u)
        g.arcs.emplace_back(i, local[w]);
      else
        g.arcs.emplace_back(local[w], i);
    }
  }
  return g;
}

}  // namespace lporient
