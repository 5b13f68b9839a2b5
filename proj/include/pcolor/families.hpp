#pragma once

// Constructive generators and isomorphism-based recognizers for the named
// graphs and parameterized families of the 4-chi_rho-critical
// characterization, plus the chi_rho=3 fixtures X(n), Y(n), T. Each generator
// emits one fixed labeled graph; classification enumerates the finitely many
// candidate parameter choices for the input's order and tests isomorphism.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pcolor/canonical.hpp"
#include "pcolor/graph.hpp"

namespace pcolor {

enum class Family {
  K4, H1, H2, H3, H4, H5, H6, H7, H8, H9,
  Cyc,     // cycles C_n, n >= 5, n not divisible by 4
  C5var,   // C5 plus chord sets, variants 1..4
  C6var,   // C6 plus diagonal sets, variants 1..3
  X,       // K3 with a pendant path P_n
  Y,       // C4 with a pendant path P_n
  T,       // the chi_rho=3 tree fixture
  F1, F2, F3, F4, F5,
};

enum class SideShape { P4, C4 };
enum class F4Extra { none, v1_y_prev, v1_w2 };

struct FamilyId {
  Family family = Family::K4;
  int p1 = 0;  // n (Cyc/X/Y), variant (C5var/C6var), l (F1..F5)
  int p2 = 0;  // l' (F4)
  SideShape a = SideShape::P4;  // F3 side shape; F5 first side
  SideShape b = SideShape::P4;  // F5 second side
  F4Extra extra = F4Extra::none;

  friend bool operator==(const FamilyId& x, const FamilyId& y) {
    return x.key() == y.key();
  }
  friend bool operator<(const FamilyId& x, const FamilyId& y) {
    return x.key() < y.key();
  }
  std::tuple<int, int, int, int, int, int> key() const {
    return {static_cast<int>(family), p1, p2, static_cast<int>(a),
            static_cast<int>(b), static_cast<int>(extra)};
  }

  std::string to_string() const;
  static FamilyId parse(const std::string& text);
};

enum class Universe { vertex_critical, critical };

namespace detail {

inline const char* shape_name(SideShape s) {
  return s == SideShape::P4 ? "P4" : "C4";
}
inline const char* extra_name(F4Extra e) {
  switch (e) {
    case F4Extra::none: return "none";
    case F4Extra::v1_y_prev: return "v1_y_prev";
    case F4Extra::v1_w2: return "v1_w2";
  }
  return "?";
}

// Named graphs are stored as letter edge lists; the chi_rho=4 / criticality
// tests pin down the structure of every entry.
struct NamedGraph {
  const char* letters;
  const char* edges;  // pairs "ab,bc,..."
};

inline Graph build_named(const NamedGraph& def) {
  std::string letters(def.letters);
  Graph g(static_cast<int>(letters.size()));
  for (size_t i = 0; i < letters.size(); ++i)
    g.set_label(static_cast<Vertex>(i), std::string(1, letters[i]));
  std::map<char, Vertex> id;
  for (size_t i = 0; i < letters.size(); ++i) id[letters[i]] = static_cast<Vertex>(i);
  std::string edges(def.edges);
  std::istringstream in(edges);
  std::string pair;
  while (std::getline(in, pair, ','))
    g.add_edge(id.at(pair[0]), id.at(pair[1]));
  return g;
}

}  // namespace detail

inline std::string FamilyId::to_string() const {
  std::ostringstream out;
  switch (family) {
    case Family::K4: return "K4";
    case Family::H1: return "H1";
    case Family::H2: return "H2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::H5: return "H5";
    case Family::H6: return "H6";
    case Family::H7: return "H7";
    case Family::H8: return "H8";
    case Family::H9: return "H9";
    case Family::T: return "T";
    case Family::Cyc: out << "C(" << p1 << ")"; break;
    case Family::C5var: out << "C5var(" << p1 << ")"; break;
    case Family::C6var: out << "C6var(" << p1 << ")"; break;
    case Family::X: out << "X(" << p1 << ")"; break;
    case Family::Y: out << "Y(" << p1 << ")"; break;
    case Family::F1: out << "F1(l=" << p1 << ")"; break;
    case Family::F2: out << "F2(l=" << p1 << ")"; break;
    case Family::F3:
      out << "F3(l=" << p1 << ",a=" << detail::shape_name(a) << ")";
      break;
    case Family::F4:
      out << "F4(l=" << p1 << ",l'=" << p2
          << ",extra=" << detail::extra_name(extra) << ")";
      break;
    case Family::F5:
      out << "F5(l=" << p1 << ",a=" << detail::shape_name(a)
          << ",b=" << detail::shape_name(b) << ")";
      break;
  }
  return out.str();
}

inline FamilyId FamilyId::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto bare = [&s](const char* name) { return s == name; };
  FamilyId id;
  if (bare("K4")) { id.family = Family::K4; return id; }
  if (bare("T")) { id.family = Family::T; return id; }
  if (bare("net")) { id.family = Family::H3; return id; }
  for (int h = 1; h <= 9; ++h)
    if (s == "H" + std::to_string(h)) {
      id.family = static_cast<Family>(static_cast<int>(Family::H1) + h - 1);
      return id;
    }
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw error("cannot parse family id '" + text + "'");
  std::string name = s.substr(0, open);
  std::string args = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> parts;
  {
    std::istringstream in(args);
    std::string part;
    while (std::getline(in, part, ',')) parts.push_back(part);
  }
  auto to_int = [&text](const std::string& v) {
    try {
      std::size_t pos = 0;
      int r = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return r;
    } catch (const std::exception&) {
      throw error("bad integer '" + v + "' in family id '" + text + "'");
    }
  };
  auto to_shape = [&text](const std::string& v) {
    if (v == "P4") return SideShape::P4;
    if (v == "C4") return SideShape::C4;
    throw error("bad shape '" + v + "' in family id '" + text + "'");
  };
  auto to_extra = [&text](const std::string& v) {
    if (v == "none") return F4Extra::none;
    if (v == "v1_y_prev") return F4Extra::v1_y_prev;
    if (v == "v1_w2") return F4Extra::v1_w2;
    throw error("bad extra '" + v + "' in family id '" + text + "'");
  };

  std::map<std::string, std::string> kv;
  std::vector<std::string> positional;
  for (const std::string& p : parts) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      positional.push_back(p);
    else
      kv[p.substr(0, eq)] = p.substr(eq + 1);
  }
  auto single_positional = [&]() {
    if (positional.size() != 1 || !kv.empty())
      throw error("family '" + name + "' takes one positional parameter");
    return to_int(positional[0]);
  };
  auto kv_int = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw error("family id '" + text + "' missing parameter '" + key + "'");
    return to_int(it->second);
  };

  if (name == "C" || name == "Cyc") {
    id.family = Family::Cyc;
    id.p1 = single_positional();
  } else if (name == "C5var") {
    id.family = Family::C5var;
    id.p1 = single_positional();
  } else if (name == "C6var") {
    id.family = Family::C6var;
    id.p1 = single_positional();
  } else if (name == "X") {
    id.family = Family::X;
    id.p1 = single_positional();
  } else if (name == "Y") {
    id.family = Family::Y;
    id.p1 = single_positional();
  } else if (name == "F1") {
    id.family = Family::F1;
    id.p1 = kv_int("l");
  } else if (name == "F2") {
    id.family = Family::F2;
    id.p1 = kv_int("l");
  } else if (name == "F3") {
    id.family = Family::F3;
    id.p1 = kv_int("l");
    id.a = to_shape(kv.count("a") ? kv.at("a") : "P4");
  } else if (name == "F4") {
    id.family = Family::F4;
    id.p1 = kv_int("l");
    id.p2 = kv_int("l'");
    id.extra = to_extra(kv.count("extra") ? kv.at("extra") : "none");
  } else if (name == "F5") {
    id.family = Family::F5;
    id.p1 = kv_int("l");
    id.a = to_shape(kv.count("a") ? kv.at("a") : "P4");
    id.b = to_shape(kv.count("b") ? kv.at("b") : "P4");
    if (static_cast<int>(id.a) > static_cast<int>(id.b)) std::swap(id.a, id.b);
  } else {
    throw error("unknown family '" + name + "'");
  }
  return id;
}

// ---------------------------------------------------------------------------
// Generation.
inline Graph generate(const FamilyId& id) {
  using detail::NamedGraph;
  auto require = [&id](bool cond, const char* what) {
    if (!cond)
      throw error("illegal parameter for " + id.to_string() + ": " + what);
  };
  // Chains a path of `count` new vertices between two existing endpoints,
  // labeling them prefix1..prefixN; with count == 0 adds the direct edge.
  auto subdivide = [](Graph& g, Vertex from, Vertex to, int first_id, int count,
                      const std::string& prefix) {
    if (count == 0) {
      g.add_edge(from, to);
      return;
    }
    Vertex prev = from;
    for (int i = 1; i <= count; ++i) {
      Vertex x = first_id + i - 1;
      g.set_label(x, prefix + std::to_string(i));
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, to);
  };

  switch (id.family) {
    case Family::K4: {
      Graph g = make_complete(4);
      const char* names = "abcd";
      for (Vertex v = 0; v < 4; ++v) g.set_label(v, std::string(1, names[v]));
      return g;
    }
    case Family::H1:
      return detail::build_named({"abcde", "ab,bc,ae,ed,db,ad"});
    case Family::H2:
      return detail::build_named({"abcde", "ab,bc,cd,db,be,ea"});
    case Family::H3:  // the net graph
      return detail::build_named({"abcdef", "ab,ac,bc,ad,be,cf"});
    case Family::H4:
      return detail::build_named({"abcdefg", "ab,bc,cd,de,ef,cg,gd"});
    case Family::H5:
      return detail::build_named({"abcdef", "ab,bc,cd,da,be,cf"});
    case Family::H6:
      return detail::build_named({"abcdef", "ab,be,ed,da,ac,ce,bf"});
    case Family::H7:
      return detail::build_named(
          {"abcdefghij", "ab,bc,cd,de,ef,eg,gh,hi,ij,jb"});
    case Family::H8:
      return detail::build_named(
          {"abcdefghij", "ab,bc,cd,de,ef,eg,gh,hi,ij,jb,ai"});
    case Family::H9:
      return detail::build_named({"abcdefgh", "ab,bc,cd,de,bf,cg,dh"});
    case Family::T:
      // Path d-b-y'-c-e with the leaf a on y'; ids follow that listing.
      {
        Graph g(6);
        const char* names[] = {"d", "b", "y'", "c", "e", "a"};
        for (Vertex v = 0; v < 6; ++v) g.set_label(v, names[v]);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(2, 5);
        return g;
      }
    case Family::Cyc: {
      require(id.p1 >= 5 && id.p1 % 4 != 0, "need n >= 5 with n % 4 != 0");
      Graph g = make_cycle(id.p1);
      for (Vertex v = 0; v < id.p1; ++v)
        g.set_label(v, "a" + std::to_string(v + 1));
      return g;
    }
    case Family::C5var: {
      require(id.p1 >= 1 && id.p1 <= 4, "variant must be 1..4");
      Graph g = make_cycle(5);
      for (Vertex v = 0; v < 5; ++v) g.set_label(v, "a" + std::to_string(v + 1));
      g.add_edge(1, 3);                      // a2a4, every variant
      if (id.p1 == 2) g.add_edge(0, 2);      // a1a3
      if (id.p1 >= 3) g.add_edge(0, 3);      // a1a4
      if (id.p1 == 4) g.add_edge(2, 4);      // a3a5
      return g;
    }
    case Family::C6var: {
      require(id.p1 >= 1 && id.p1 <= 3, "variant must be 1..3");
      Graph g = make_cycle(6);
      for (Vertex v = 0; v < 6; ++v) g.set_label(v, "a" + std::to_string(v + 1));
      g.add_edge(2, 5);                      // a3a6, every variant
      if (id.p1 >= 2) g.add_edge(1, 4);      // a2a5
      if (id.p1 == 3) g.add_edge(0, 3);      // a1a4
      return g;
    }
    case Family::X: {
      require(id.p1 >= 1, "need n >= 1");
      Graph g(3 + id.p1);
      g.set_label(0, "a");
      g.set_label(1, "b");
      g.set_label(2, "c");
      g.add_edge(0, 1);
      g.add_edge(0, 2);
      g.add_edge(1, 2);
      for (int i = 1; i <= id.p1; ++i) {
        g.set_label(2 + i, "x" + std::to_string(i));
        g.add_edge(i == 1 ? 2 : 2 + i - 1, 2 + i);
      }
      return g;
    }
    case Family::Y: {
      require(id.p1 >= 1, "need n >= 1");
      Graph g(4 + id.p1);
      const char* names = "abcd";
      for (Vertex v = 0; v < 4; ++v) g.set_label(v, std::string(1, names[v]));
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(2, 3);
      g.add_edge(0, 3);
      for (int i = 1; i <= id.p1; ++i) {
        g.set_label(3 + i, "x" + std::to_string(i));
        g.add_edge(i == 1 ? 0 : 3 + i - 1, 3 + i);
      }
      return g;
    }
    case Family::F1:
    case Family::F2: {
      int l = id.p1;
      if (id.family == Family::F1)
        require(l >= 0 && l % 4 != 3, "need l >= 0 with l % 4 != 3");
      else
        require(l == 0 || l % 4 == 2, "need l = 0 or l % 4 = 2");
      Graph g(6 + l);
      g.set_label(0, "u");
      g.set_label(1, "u1");
      g.set_label(2, "u2");
      g.set_label(3 + l, "v");
      g.set_label(4 + l, "v1");
      g.set_label(5 + l, "v2");
      g.add_edge(0, 1);
      g.add_edge(0, 2);
      g.add_edge(1, 2);
      g.add_edge(3 + l, 4 + l);
      g.add_edge(3 + l, 5 + l);
      if (id.family == Family::F1) g.add_edge(4 + l, 5 + l);  // K3 vs P3 side
      subdivide(g, 0, 3 + l, 3, l, "x");
      return g;
    }
    case Family::F3: {
      int l = id.p1;
      require(l >= 4 && l % 4 == 0, "need l = 4k with k >= 1");
      Graph g(7 + l);
      g.set_label(0, "u");
      g.set_label(1, "u1");
      g.set_label(2, "u2");
      g.set_label(3, "u3");
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(0, 3);
      if (id.a == SideShape::C4) g.add_edge(2, 3);  // u2u3
      g.set_label(4 + l, "v");
      g.set_label(5 + l, "v1");
      g.set_label(6 + l, "v2");
      g.add_edge(4 + l, 5 + l);
      g.add_edge(4 + l, 6 + l);
      g.add_edge(5 + l, 6 + l);
      subdivide(g, 0, 4 + l, 4, l, "x");
      return g;
    }
    case Family::F4: {
      int l = id.p1, lp = id.p2;
      require(l >= 2 && l % 4 == 2, "need l = 4k+2");
      require(lp >= 0 && lp % 4 == 0, "need l' = 4k'");
      if (id.extra == F4Extra::v1_w2)
        require(lp >= 2, "extra v1_w2 needs w2, so l' >= 2");
      Graph g(8 + l + lp);
      Vertex u = 0, v = 3 + l, v1 = 4 + l, z = 5 + l + lp, z1 = 6 + l + lp,
             z2 = 7 + l + lp;
      g.set_label(u, "u");
      g.set_label(1, "u1");
      g.set_label(2, "u2");
      g.set_label(v, "v");
      g.set_label(v1, "v1");
      g.set_label(z, "z");
      g.set_label(z1, "z1");
      g.set_label(z2, "z2");
      g.add_edge(u, 1);
      g.add_edge(u, 2);
      g.add_edge(v, v1);
      g.add_edge(z, z1);
      g.add_edge(z, z2);
      subdivide(g, u, v, 3, l, "y");
      subdivide(g, v, z, 5 + l, lp, "w");
      if (id.extra == F4Extra::v1_y_prev) g.add_edge(v1, 3 + (l - 1) - 1);
      if (id.extra == F4Extra::v1_w2) g.add_edge(v1, 5 + l + 1);
      return g;
    }
    case Family::F5: {
      int l = id.p1;
      require(l >= 0 && l % 2 == 0, "need even l >= 0");
      SideShape sa = id.a, sb = id.b;
      if (static_cast<int>(sa) > static_cast<int>(sb)) std::swap(sa, sb);
      Graph g(8 + l);
      Vertex u = 0, v = 4 + l;
      g.set_label(u, "u");
      g.set_label(1, "u1");
      g.set_label(2, "u2");
      g.set_label(3, "u3");
      g.set_label(v, "v");
      g.set_label(5 + l, "v1");
      g.set_label(6 + l, "v2");
      g.set_label(7 + l, "v3");
      g.add_edge(u, 1);
      g.add_edge(1, 2);
      g.add_edge(u, 3);
      if (sa == SideShape::C4) g.add_edge(2, 3);  // u2u3
      g.add_edge(v, 5 + l);
      g.add_edge(5 + l, 6 + l);
      g.add_edge(v, 7 + l);
      if (sb == SideShape::C4) g.add_edge(6 + l, 7 + l);  // v2v3
      subdivide(g, u, v, 4, l, "x");
      return g;
    }
  }
  throw error("unreachable family tag");
}

// ---------------------------------------------------------------------------
// Universes and classification.
namespace detail {

// All family ids of the universe whose generated order is exactly `order`.
inline std::vector<FamilyId> candidates_for_order(Universe u, int order) {
  std::vector<FamilyId> out;
  auto add = [&out](FamilyId id) { out.push_back(id); };
  bool vertex = u == Universe::vertex_critical;

  auto named = [&](Family f, int f_order) {
    if (f_order == order) add({f});
  };
  named(Family::K4, 4);
  named(Family::H1, 5);
  named(Family::H2, 5);
  named(Family::H3, 6);
  named(Family::H4, 7);
  named(Family::H5, 6);
  if (vertex) named(Family::H6, 6);
  if (vertex) named(Family::H7, 10);
  if (vertex) named(Family::H8, 10);
  named(Family::H9, 8);
  if (order >= 5 && order % 4 != 0) add({Family::Cyc, order});
  if (vertex && order == 5)
    for (int i = 1; i <= 4; ++i) add({Family::C5var, i});
  if (vertex && order == 6)
    for (int i = 1; i <= 3; ++i) add({Family::C6var, i});

  // F1: order 6+l. Critical subfamily excludes l = 0 and l = 4k+2.
  {
    int l = order - 6;
    bool legal = l >= 0 && l % 4 != 3;
    bool primed = legal && l % 4 != 2 && l != 0;
    if (legal && (vertex || primed)) add({Family::F1, l});
  }
  // F2: order 6+l; the whole family is critical.
  {
    int l = order - 6;
    if (l == 0 || (l > 0 && l % 4 == 2)) add({Family::F2, l});
  }
  // F3: order 7+l. Critical subfamily is the P4 side only.
  {
    int l = order - 7;
    if (l >= 4 && l % 4 == 0) {
      add({Family::F3, l, 0, SideShape::P4});
      if (vertex) add({Family::F3, l, 0, SideShape::C4});
    }
  }
  // F4: order 8+l+l'. Critical subfamily has no optional edge.
  {
    int total = order - 8;
    for (int l = 2; l <= total; l += 4) {
      int lp = total - l;
      if (lp < 0 || lp % 4 != 0) continue;
      add({Family::F4, l, lp});
      if (vertex) {
        add({Family::F4, l, lp, SideShape::P4, SideShape::P4, F4Extra::v1_y_prev});
        if (lp >= 4)
          add({Family::F4, l, lp, SideShape::P4, SideShape::P4, F4Extra::v1_w2});
      }
    }
  }
  // F5: order 8+l. Critical subfamily is (P4, P4) only.
  {
    int l = order - 8;
    if (l >= 0 && l % 2 == 0) {
      add({Family::F5, l, 0, SideShape::P4, SideShape::P4});
      if (vertex) {
        add({Family::F5, l, 0, SideShape::P4, SideShape::C4});
        add({Family::F5, l, 0, SideShape::C4, SideShape::C4});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

struct ClassificationResult {
  // Each match pairs the family id with the vertex map input -> generated.
  std::vector<std::pair<FamilyId, std::vector<Vertex>>> matches;
};

inline ClassificationResult classify(const Graph& g, Universe u) {
  if (g.order() > 12) throw error("classify supports order <= 12");
  ClassificationResult result;
  for (const FamilyId& id : detail::candidates_for_order(u, g.order())) {
    Graph member = generate(id);
    auto map = find_isomorphism(g, member);
    if (!map) continue;
    // Re-verify the witness edge-by-edge before reporting it.
    bool ok = g.size() == member.size();
    for (const Edge& e : g.edges())
      if (!member.has_edge((*map)[static_cast<size_t>(e.first)],
                           (*map)[static_cast<size_t>(e.second)]))
        ok = false;
    if (!ok) throw error("internal: isomorphism witness failed re-check");
    result.matches.emplace_back(id, std::move(*map));
  }
  return result;
}

// Every member of the universe with order <= max_order, deduplicated by
// canonical form, in deterministic (order, id) order.
inline std::vector<std::pair<FamilyId, Graph>> list_members(Universe u,
                                                            int max_order) {
  if (max_order > 20) throw error("list_members supports max_order <= 20");
  std::vector<std::pair<FamilyId, Graph>> out;
  std::vector<std::string> seen;  // canonical bytes
  for (int order = 1; order <= max_order; ++order) {
    for (const FamilyId& id : detail::candidates_for_order(u, order)) {
      Graph g = generate(id);
      std::string key = detail::canonical_form_unchecked(g).bytes;
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      out.emplace_back(id, std::move(g));
    }
  }
  return out;
}

}  // namespace pcolor
