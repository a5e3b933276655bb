#pragma once

// Finite permutation groups given by generators: closure, transitivity
// degree, pair orbits, conjugacy classes, and the two certificates used on
// local action groups (2-transitivity with more than two classes, and
// containment of the alternating group).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "treeharm/errors.hpp"

namespace treeharm {

struct Permutation {
  std::vector<int> img;  // 0-based images

  int degree() const { return static_cast<int>(img.size()); }

  static Permutation identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  void validate() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 0 || v >= degree() || seen[v]) throw DomainError("not a permutation");
      seen[v] = true;
    }
  }

  // (a.compose(b))(x) = a(b(x))
  Permutation compose(const Permutation& b) const {
    if (degree() != b.degree()) throw DomainError("permutation degrees differ");
    Permutation r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[i] = img[b.img[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
    return r;
  }

  int sign() const {
    std::vector<bool> seen(img.size(), false);
    int parity = 0;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img[j]) {
        seen[j] = true;
        ++len;
      }
      parity ^= (len + 1) & 1;
    }
    return parity ? -1 : 1;
  }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img < o.img; }
};

// Cycle notation with 1-based entries: "(1 2)(3 4)", "id" for the identity.
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.img.size(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.img[i] == i) continue;
    out += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = p.img[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

inline Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = Permutation::identity(degree);
  std::vector<char> used(static_cast<size_t>(degree), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (text.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    if (i != text.size()) throw DomainError("trailing characters after 'id'");
    return p;
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw DomainError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw DomainError("expected a point in cycle notation");
      int v = std::stoi(text.substr(i, j - i));
      if (v < 1 || v > degree) throw DomainError("cycle entry out of range");
      cycle.push_back(v - 1);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
    }
    if (cycle.size() < 2) throw DomainError("cycles must have length at least 2");
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (used[from]) throw DomainError("repeated point in cycle notation");
      used[from] = 1;
      p.img[from] = to;
    }
  }
  p.validate();
  return p;
}

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted

  std::uint64_t order() const { return elements.size(); }
};

inline PermGroup close_generators(const std::vector<Permutation>& gens,
                                  std::uint64_t cap = 100000) {
  if (gens.empty()) throw DomainError("at least one generator required");
  int degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw DomainError("generators act on different point counts");
    g.validate();
  }
  std::set<Permutation> closed;
  std::queue<Permutation> frontier;
  closed.insert(Permutation::identity(degree));
  frontier.push(Permutation::identity(degree));
  while (!frontier.empty()) {
    Permutation e = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      Permutation next = e.compose(g);
      if (closed.insert(next).second) {
        if (closed.size() > cap)
          throw CapExceeded("permutation closure exceeds the cap of " + std::to_string(cap),
                            closed.size());
        frontier.push(next);
      }
    }
  }
  PermGroup group;
  group.degree = degree;
  group.generators = gens;
  group.elements.assign(closed.begin(), closed.end());
  return group;
}

// Orbits of the componentwise action on all ordered pairs, diagonal
// included. A transitive action is 2-transitive exactly when there are two.
inline std::uint64_t orbit_count_on_pairs(const PermGroup& group) {
  int n = group.degree;
  if (n == 0) throw DomainError("empty point set");
  std::vector<bool> visited(static_cast<size_t>(n) * n, false);
  std::uint64_t orbits = 0;
  for (int start = 0; start < n * n; ++start) {
    if (visited[start]) continue;
    ++orbits;
    std::queue<int> queue;
    queue.push(start);
    visited[start] = true;
    while (!queue.empty()) {
      int code = queue.front();
      queue.pop();
      int a = code / n, b = code % n;
      for (const auto& g : group.generators) {
        int next = g.img[a] * n + g.img[b];
        if (!visited[next]) {
          visited[next] = true;
          queue.push(next);
        }
      }
    }
  }
  return orbits;
}

inline bool is_two_transitive(const PermGroup& group) {
  if (group.degree < 2) throw DomainError("2-transitivity needs at least two points");
  std::set<std::pair<int, int>> reached;
  for (const auto& e : group.elements) reached.insert({e.img[0], e.img[1]});
  return reached.size() ==
         static_cast<size_t>(group.degree) * static_cast<size_t>(group.degree - 1);
}

inline std::uint64_t conjugacy_class_count(const PermGroup& group) {
  std::map<Permutation, bool> visited;
  for (const auto& e : group.elements) visited[e] = false;
  std::uint64_t classes = 0;
  for (const auto& x : group.elements) {
    if (visited[x]) continue;
    ++classes;
    for (const auto& g : group.elements) visited[g.compose(x).compose(g.inverse())] = true;
  }
  return classes;
}

// A 2-transitive action always splits the permutation representation into
// the trivial and the standard part; the standard part appears with the rest
// of the dual exactly when the group has more than two conjugacy classes.
inline bool standard_rep_exists_2trans(const PermGroup& group) {
  if (!is_two_transitive(group)) throw DomainError("requires a 2-transitive action");
  return conjugacy_class_count(group) > 2;
}

inline bool contains_alternating(const PermGroup& group) {
  if (group.degree > 8) throw DomainError("alternating containment is checked up to degree 8");
  std::uint64_t even = 0;
  for (const auto& e : group.elements)
    if (e.sign() == 1) ++even;
  std::uint64_t factorial = 1;
  for (int k = 2; k <= group.degree; ++k) factorial *= static_cast<std::uint64_t>(k);
  return even * 2 >= factorial;
}

inline nlohmann::json permutation_to_json(const Permutation& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int v : p.img) a.push_back(v + 1);
  return a;
}

}  // namespace treeharm
