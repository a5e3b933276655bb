#pragma once

// Exhaustive enumeration of ball automorphisms by subtree matching. A map is
// admissible iff it is a bijection preserving adjacency that stabilizes the
// center (fixes a vertex center; stabilizes an edge center setwise).

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "treeharm/errors.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

struct BallAutomorphism {
  std::vector<int> image;  // vertex index -> vertex index

  bool is_identity() const {
    for (size_t i = 0; i < image.size(); ++i)
      if (image[i] != static_cast<int>(i)) return false;
    return true;
  }
  bool operator==(const BallAutomorphism&) const = default;
  bool operator<(const BallAutomorphism& o) const { return image < o.image; }
};

inline BallAutomorphism identity_automorphism(const Ball& b) {
  BallAutomorphism g;
  g.image.resize(b.size());
  for (int i = 0; i < b.size(); ++i) g.image[i] = i;
  return g;
}

// (a * b)(x) = a(b(x)); b is applied first.
inline BallAutomorphism compose(const BallAutomorphism& a, const BallAutomorphism& g) {
  BallAutomorphism r;
  r.image.resize(g.image.size());
  for (size_t i = 0; i < g.image.size(); ++i) r.image[i] = a.image[g.image[i]];
  return r;
}

inline BallAutomorphism inverse(const BallAutomorphism& g) {
  BallAutomorphism r;
  r.image.resize(g.image.size());
  for (size_t i = 0; i < g.image.size(); ++i) r.image[g.image[i]] = static_cast<int>(i);
  return r;
}

inline bool preserves_types(const Ball& b, const BallAutomorphism& g) {
  for (int v = 0; v < b.size(); ++v)
    if (b.type_of(v) != b.type_of(g.image[v])) return false;
  return true;
}

struct EnumerationOptions {
  bool type_preserving_only = false;
  std::uint64_t cap = 1'000'000;
};

// Exact group order: one factor (#matchable children)! per vertex, doubled by
// the endpoint swap for edge-centered balls of regular trees.
inline std::uint64_t predicted_automorphism_count(const Ball& b, const EnumerationOptions& opt) {
  const std::uint64_t limit = UINT64_MAX / 2;
  std::uint64_t total = 1;
  for (int v = 0; v < b.size(); ++v) {
    std::uint64_t k = b.verts[v].children.size();
    if (v == 0 && b.center_kind == CenterKind::Edge) --k;  // the other endpoint is pinned
    for (std::uint64_t i = 2; i <= k; ++i) {
      if (total > limit / i) return UINT64_MAX;
      total *= i;
    }
  }
  bool swap_allowed = b.center_kind == CenterKind::Edge && b.params.d0 == b.params.d1 &&
                      !opt.type_preserving_only;
  if (swap_allowed) total *= 2;
  return total;
}

namespace detail {

class AutEnumerator {
 public:
  AutEnumerator(const Ball& b, std::uint64_t cap) : b_(b), cap_(cap) {
    img_.assign(b.size(), -1);
    used_.assign(b.size(), 0);
  }

  // pins: list of (vertex, forced image); centers included by the caller.
  std::vector<BallAutomorphism> run(const std::vector<std::pair<int, int>>& pins) {
    for (auto [v, w] : pins) pinned_[v] = w;
    out_.clear();
    rec(0);
    return std::move(out_);
  }

 private:
  void assign(int v, int w) { img_[v] = w; used_[w] = 1; }
  void unassign(int v, int w) { img_[v] = -1; used_[w] = 0; }

  bool compatible(int v, int w) const {
    if (used_[w]) return false;
    if (b_.budget(v) != b_.budget(w)) return false;
    if (b_.verts[v].depth > 0) {
      int p2 = img_[b_.verts[v].parent];
      if (b_.verts[w].parent != p2) return false;
    }
    return true;
  }

  void rec(int v) {
    if (v == b_.size()) {
      if (out_.size() >= cap_)
        throw CapExceeded("automorphism enumeration exceeds cap", out_.size() + 1);
      BallAutomorphism g;
      g.image = img_;
      out_.push_back(std::move(g));
      return;
    }
    auto pin = pinned_.find(v);
    if (pin != pinned_.end()) {
      int w = pin->second;
      if (img_[v] == w) {  // pre-assigned center
        rec(v + 1);
        return;
      }
      if (compatible(v, w)) {
        assign(v, w);
        rec(v + 1);
        unassign(v, w);
      }
      return;
    }
    if (img_[v] >= 0) {
      rec(v + 1);
      return;
    }
    int p2 = img_[b_.verts[v].parent];
    for (int w : b_.verts[p2].children) {
      if (!compatible(v, w)) continue;
      assign(v, w);
      rec(v + 1);
      unassign(v, w);
    }
  }

 public:
  void preassign(int v, int w) { assign(v, w); }

 private:
  const Ball& b_;
  std::uint64_t cap_;
  std::vector<int> img_;
  std::vector<char> used_;
  std::map<int, int> pinned_;
  std::vector<BallAutomorphism> out_;
};

}  // namespace detail

inline std::vector<BallAutomorphism> enumerate_automorphisms(const Ball& b,
                                                             const EnumerationOptions& opt = {}) {
  std::uint64_t predicted = predicted_automorphism_count(b, opt);
  if (predicted > opt.cap) {
    std::ostringstream os;
    os << "automorphism group order " << predicted << " exceeds cap " << opt.cap;
    throw CapExceeded(os.str(), predicted);
  }
  std::vector<BallAutomorphism> all;
  {
    detail::AutEnumerator e(b, opt.cap);
    e.preassign(0, 0);
    if (b.center_kind == CenterKind::Edge) e.preassign(1, 1);
    auto part = e.run({});
    all.insert(all.end(), part.begin(), part.end());
  }
  if (b.center_kind == CenterKind::Edge && b.params.d0 == b.params.d1 &&
      !opt.type_preserving_only) {
    detail::AutEnumerator e(b, opt.cap);
    e.preassign(0, 1);
    e.preassign(1, 0);
    auto part = e.run({});
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

// Subgroup fixing every listed address, enumerated directly with those
// vertices pinned in place.
inline std::vector<BallAutomorphism> pointwise_stabilizer(const Ball& b,
                                                          const std::vector<VertexAddr>& fixed,
                                                          const EnumerationOptions& opt = {}) {
  std::vector<std::pair<int, int>> pins;
  for (const auto& a : fixed) {
    int v = b.at(a);
    pins.emplace_back(v, v);
  }
  std::vector<BallAutomorphism> all;
  {
    detail::AutEnumerator e(b, opt.cap);
    e.preassign(0, 0);
    if (b.center_kind == CenterKind::Edge) e.preassign(1, 1);
    auto part = e.run(pins);
    all.insert(all.end(), part.begin(), part.end());
  }
  if (b.center_kind == CenterKind::Edge && b.params.d0 == b.params.d1 &&
      !opt.type_preserving_only) {
    // Under the endpoint swap both centers move, so a pin at either center
    // rules that branch out.
    bool feasible = true;
    for (auto [v, w] : pins)
      if (v < 2) feasible = false;
    if (feasible) {
      detail::AutEnumerator e(b, opt.cap);
      e.preassign(0, 1);
      e.preassign(1, 0);
      auto part = e.run(pins);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  return all;
}

inline nlohmann::json automorphism_to_json(const Ball& b, const BallAutomorphism& g) {
  nlohmann::json j = nlohmann::json::object();
  for (int v = 0; v < b.size(); ++v)
    j[format_addr(b.verts[v].addr)] = format_addr(b.verts[g.image[v]].addr);
  return j;
}

inline BallAutomorphism automorphism_from_json(const Ball& b, const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("automorphism JSON must be an object");
  BallAutomorphism g;
  g.image.assign(b.size(), -1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int from = b.at(parse_addr(it.key(), b.root_type));
    int to = b.at(parse_addr(it.value().get<std::string>(), b.root_type));
    g.image[from] = to;
  }
  std::vector<char> seen(b.size(), 0);
  for (int v = 0; v < b.size(); ++v) {
    if (g.image[v] < 0) throw DomainError("automorphism JSON is not total");
    if (seen[g.image[v]]) throw DomainError("automorphism JSON is not injective");
    seen[g.image[v]] = 1;
  }
  for (int v = 0; v < b.size(); ++v) {
    int p = b.verts[v].parent;
    if (p < 0) continue;
    int gv = g.image[v], gp = g.image[p];
    if (b.verts[gv].parent != gp && b.verts[gp].parent != gv)
      throw DomainError("automorphism JSON does not preserve adjacency");
  }
  return g;
}

}  // namespace treeharm
