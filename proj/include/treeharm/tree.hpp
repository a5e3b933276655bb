#pragma once

// Finite balls of (d0,d1)-semi-regular trees, addressed by child-index paths
// from a root vertex. Edge-centered balls are rooted at one endpoint with the
// other endpoint stored as child 0; depth budgets keep the vertex set equal to
// {x : d(x, center set) <= radius}.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "treeharm/errors.hpp"

namespace treeharm {

struct TreeParams {
  int d0 = 3;
  int d1 = 3;

  void validate() const {
    if (d0 < 3 || d1 < 3) {
      std::ostringstream os;
      os << "semi-regular tree must be thick: degrees (" << d0 << "," << d1
         << ") but both must be >= 3";
      throw DomainError(os.str());
    }
  }
  int degree(int type) const { return type == 0 ? d0 : d1; }
  bool operator==(const TreeParams&) const = default;
};

// Child-index path from the ball's root. parity = (root parity + path length) mod 2.
struct VertexAddr {
  std::vector<int> path;
  int parity = 0;

  bool operator==(const VertexAddr&) const = default;
};

inline std::string format_addr(const VertexAddr& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.path.size(); ++i) {
    if (i) os << '/';
    os << a.path[i];
  }
  return os.str();
}

inline VertexAddr parse_addr(const std::string& s, int root_parity) {
  VertexAddr a;
  if (!s.empty()) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '/')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("bad vertex address '" + s + "'");
      a.path.push_back(std::stoi(tok));
    }
  }
  a.parity = static_cast<int>((root_parity + a.path.size()) % 2);
  return a;
}

enum class CenterKind { Vertex, Edge };

struct BallVertex {
  VertexAddr addr;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;        // distance to the root vertex
  int dist_center = 0;  // distance to the center set
};

class Ball {
 public:
  TreeParams params;
  CenterKind center_kind = CenterKind::Vertex;
  int radius = 0;
  int root_type = 0;
  std::vector<BallVertex> verts;

  int size() const { return static_cast<int>(verts.size()); }
  int type_of(int v) const { return static_cast<int>((root_type + verts[v].depth) % 2); }
  int degree_of(int v) const { return params.degree(type_of(v)); }
  bool is_interior(int v) const {
    int present = static_cast<int>(verts[v].children.size()) + (verts[v].parent >= 0 ? 1 : 0);
    return present == degree_of(v);
  }
  std::vector<int> center_vertices() const {
    return center_kind == CenterKind::Vertex ? std::vector<int>{0} : std::vector<int>{0, 1};
  }
  // Depth budget for the complete subtree hanging below v (away from the root).
  int budget(int v) const { return radius - verts[v].dist_center; }

  int find(const VertexAddr& a) const {
    int cur = 0;
    for (int ci : a.path) {
      if (ci < 0 || ci >= static_cast<int>(verts[cur].children.size())) return -1;
      cur = verts[cur].children[ci];
    }
    return cur;
  }
  int at(const VertexAddr& a) const {
    int v = find(a);
    if (v < 0) throw DomainError("address '" + format_addr(a) + "' is not in the ball");
    return v;
  }
};

inline Ball build_ball(TreeParams params, CenterKind kind, int root_type, int radius) {
  params.validate();
  if (radius < 0) throw DomainError("negative ball radius");
  if (root_type != 0 && root_type != 1) throw DomainError("root type must be 0 or 1");

  Ball b;
  b.params = params;
  b.center_kind = kind;
  b.radius = radius;
  b.root_type = root_type;

  auto add_vertex = [&b](int parent, int child_index, int dist_center) {
    BallVertex v;
    v.parent = parent;
    v.dist_center = dist_center;
    if (parent >= 0) {
      v.addr = b.verts[parent].addr;
      v.addr.path.push_back(child_index);
      v.depth = b.verts[parent].depth + 1;
    }
    v.addr.parity = static_cast<int>((b.root_type + v.addr.path.size()) % 2);
    b.verts.push_back(std::move(v));
    int idx = static_cast<int>(b.verts.size()) - 1;
    if (parent >= 0) b.verts[parent].children.push_back(idx);
    return idx;
  };

  add_vertex(-1, 0, 0);
  size_t head = 0;
  if (kind == CenterKind::Edge) add_vertex(0, 0, 0);  // the other endpoint
  while (head < b.verts.size()) {
    int u = static_cast<int>(head++);
    if (b.verts[u].dist_center >= radius) continue;
    int want = b.params.degree(b.type_of(u));
    int have = static_cast<int>(b.verts[u].children.size()) + (b.verts[u].parent >= 0 ? 1 : 0);
    for (int k = have; k < want; ++k)
      add_vertex(u, static_cast<int>(b.verts[u].children.size()), b.verts[u].dist_center + 1);
  }
  return b;
}

inline int distance(const Ball& b, int u, int v) {
  int du = b.verts[u].depth, dv = b.verts[v].depth, d = 0;
  while (du > dv) { u = b.verts[u].parent; --du; ++d; }
  while (dv > du) { v = b.verts[v].parent; --dv; ++d; }
  while (u != v) { u = b.verts[u].parent; v = b.verts[v].parent; d += 2; }
  return d;
}

inline int distance(const Ball& b, const VertexAddr& u, const VertexAddr& v) {
  return distance(b, b.at(u), b.at(v));
}

// A boundary end: the child index chosen at each depth is prefix[k] while it
// lasts, then `eventual` forever. Default is the leftmost all-zero ray.
struct BoundaryRay {
  std::vector<int> prefix{};
  int eventual = 0;

  int choice(size_t depth) const {
    return depth < prefix.size() ? prefix[depth] : eventual;
  }
};

// Vertices of the ray inside the ball, starting at the root.
inline std::vector<int> ray_vertices(const Ball& b, const BoundaryRay& ray) {
  std::vector<int> out{0};
  for (size_t k = 0;; ++k) {
    int cur = out.back();
    int ci = ray.choice(k);
    if (ci < 0 || ci >= static_cast<int>(b.verts[cur].children.size())) break;
    out.push_back(b.verts[cur].children[ci]);
  }
  return out;
}

// Horocycle distance delta(w, w2, omega) = d(w, u) - d(w2, u), with u the
// confluence of the geodesic rays [w, omega[ and [w2, omega[.
inline int horocycle_delta(const Ball& b, const VertexAddr& w_addr, const VertexAddr& w2_addr,
                           const BoundaryRay& ray = {}) {
  int w = b.at(w_addr), w2 = b.at(w2_addr);
  std::vector<int> r = ray_vertices(b, ray);
  std::vector<char> on_ray(b.size(), 0);
  for (int v : r) on_ray[v] = 1;

  auto ray_from = [&](int x) {
    std::vector<int> out;
    int cur = x;
    while (!on_ray[cur]) {  // climb until the root-anchored ray is reached
      out.push_back(cur);
      cur = b.verts[cur].parent;
    }
    size_t k = 0;
    while (k < r.size() && b.verts[r[k]].depth < b.verts[cur].depth) ++k;
    for (; k < r.size(); ++k) out.push_back(r[k]);
    return out;
  };

  std::vector<int> ra = ray_from(w), rb = ray_from(w2);
  std::vector<char> in_rb(b.size(), 0);
  for (int v : rb) in_rb[v] = 1;
  for (int u : ra) {
    if (in_rb[u]) return distance(b, w, u) - distance(b, w2, u);
  }
  throw DomainError("insufficient radius: the rays have no confluence inside the ball");
}

}  // namespace treeharm
