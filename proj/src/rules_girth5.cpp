#include "rules.hpp"

namespace forest::rules {

namespace {

VariantSpec var(const char* label, int a, int b, int c) { return {label, {a, b, c}, false}; }

VertexList thirds(const Graph& g, const VertexList& v) {
  const int k = static_cast<int>(v.size());
  VertexList u(k);
  for (int i = 0; i < k; ++i) u[i] = third(g, v[i], v[(i + k - 1) % k], v[(i + 1) % k]);
  return u;
}

VertexList cat(VertexList a, std::initializer_list<Vertex> b) {
  a.insert(a.end(), b);
  return a;
}

void hub(const Context& c, Emitter& e) {
  for (Vertex v = 0; v < c.g.order(); ++v)
    if (c.g.degree(v) >= 5) e.emit(0, {v}, {v}, {});
}

void join_around(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) < 4) continue;
      VertexList xy = others(g, v, {w});
      e.emit(0, {v, w, xy[0], xy[1]}, {v, w}, {v}, {{xy[0], xy[1], {v}}});
    }
  }
}

void deg2_heavy(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    for (Vertex w : g.neighbors(v))
      if (g.degree(w) >= 4) e.emit(0, {v, w}, {v, w}, {v});
  }
}

void deg3_two_deg2(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.degree(nb[i]) == 2 && g.degree(nb[j]) == 2)
          e.emit(0, {v, nb[i], nb[j]}, {v, nb[i], nb[j]}, {nb[i], nb[j]});
  }
}

void separating_pentagon_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& cyc : cycles_of_length(g, 5)) {
    if (!all_degree(g, cyc, 3) || !separating(g, *c.faces, cyc)) continue;
    for (const VertexList& v : orientations(cyc)) e.emit(0, v, v, {v[0], v[1], v[3]});
  }
}

void deg2_vertex(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    for (int side = 0; side < 2; ++side) {
      Vertex u = g.neighbors(v)[side], w = g.neighbors(v)[1 - side];
      if (g.degree(u) == 2 && g.degree(w) == 3) e.emit(0, {v, u, w}, {u, v, w}, {u, v});
      if (g.degree(u) != 3 || g.degree(w) != 3) continue;
      if (side == 0) e.emit(1, {v, u, w}, {v}, {v}, {{u, w, {v}}});
      // 5-cycles u v w x y
      for (Vertex x : others(g, w, {v}))
        for (Vertex y : others(g, u, {v})) {
          if (x == y || !g.has_edge(x, y)) continue;
          VertexList five{u, v, w, x, y};
          e.emit(2, five, five, {u, v, x});
          for (Vertex xp : others(g, x, {w, y})) {
            e.emit(3, cat(five, {xp}), cat(five, {xp}), {u, v, x, xp});
            for (Vertex up : others(g, u, {v, y}))
              e.emit(5, cat(five, {up, xp}), cat(five, {up, xp}), {u, v, x, y, xp});
          }
          for (Vertex up : others(g, u, {v, y})) {
            for (Vertex yp : others(g, y, {u, x})) {
              VertexList m = cat(five, {up, yp});
              e.emit(4, m, m, {u, v, w, y});
              for (Vertex z : common(g, up, yp, {u, y})) {
                e.emit(9, cat(m, {z}), cat(m, {z}), {u, v, x, up, yp});
                for (Vertex xp : others(g, x, {w, y}))
                  for (Vertex zp : common(g, xp, yp, {x, y})) {
                    VertexList mm = cat(m, {xp, z, zp});
                    e.emit(8, mm, mm, {u, v, x, up, xp, yp, z});
                  }
              }
            }
            e.emit(6, cat(five, {up}), {u, v, w}, {u, v}, {{up, y, {u}}});
          }
          for (Vertex xp : others(g, x, {w, y}))
            e.emit(7, cat(five, {xp}), {v, w, x}, {x, v}, {{xp, y, {x}}});
          for (Vertex x2 : others(g, w, {v, x}))
            for (Vertex y2 : others(g, u, {v, y}))
              if (x2 != y2 && g.has_edge(x2, y2))
                e.emit(10, cat(five, {x2, y2}), cat(five, {x2}), {u, v, w});
        }
    }
  }
  emit_cycle_case(c, e, 11);
}

// 5-cycles with a single 4-vertex, rotated so that it comes first.
template <class F>
void for_each_one_heavy(const Graph& g, const std::vector<VertexList>& cycles, F&& f) {
  for (const VertexList& cyc : cycles)
    for (const VertexList& v : orientations(cyc)) {
      if (g.degree(v[0]) != 4) continue;
      if (!all_degree(g, VertexList(v.begin() + 1, v.end()), 3)) continue;
      f(v, thirds(g, v));
    }
}

void pentagon_one_heavy(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for_each_one_heavy(g, cycles_of_length(g, 5), [&](const VertexList& v, const VertexList& u) {
    for (int i : {1, 2})
      if (u[i] >= 0 && g.degree(u[i]) == 4)
        e.emit(0, cat(v, {u[i]}), cat(v, {u[i]}), {v[1], v[2], v[4]});
  });
}

void separating_pentagon(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  std::vector<VertexList> sep;
  for (const VertexList& cyc : cycles_of_length(g, 5))
    if (separating(g, *c.faces, cyc)) sep.push_back(cyc);
  for_each_one_heavy(g, sep, [&](const VertexList& v, const VertexList& u) {
    e.emit(0, v, v, {v[1], v[2], v[4]});
    for (Vertex w : common(g, u[1], u[2], {v[1], v[2]})) {
      VertexList m = cat(v, {u[1], u[2], u[3], w});
      e.emit(2, m, {v[1], v[2], v[3], v[4], u[1], u[2], w}, {u[1], u[2], v[2], v[4]});
      for (Vertex wp : others(g, u[1], {v[1], w}))
        e.emit(1, cat(m, {wp}), cat(v, {u[1], u[2], u[3], w, wp}),
               {v[1], v[2], v[3], v[4], u[1], u[2]});
    }
  });
}

void pentagon_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& cyc : cycles_of_length(g, 5)) {
    if (!all_degree(g, cyc, 3)) continue;
    for (const VertexList& v : orientations(cyc)) {
      VertexList u = thirds(g, v);
      if (u[0] >= 0 && u[2] >= 0 && g.has_edge(u[0], u[2]))
        e.emit(0, cat(v, {u[0], u[2]}), cat(v, {u[0], u[2]}), {v[0], v[1], v[2], v[3]});
      if (c.faces) emit_pentagon_apexes(e, 1, v, u);
    }
  }
}

void face_one_heavy(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for_each_one_heavy(g, faces_of_length(*c.faces, 5), [&](const VertexList& v,
                                                          const VertexList& u) {
    for (int i : {1, 2})
      if (u[i] >= 0 && g.degree(u[i]) == 4)
        e.emit(0, cat(v, {u[i]}), cat(v, {u[i]}), {v[1], v[2], v[4]});
    for (Vertex w : common(g, u[1], u[2], {v[1], v[2]})) {
      VertexList m = cat(v, {u[1], u[2], u[3], u[4], w});
      e.emit(1, m, {v[0], v[1], v[2], v[4], u[1], u[4], w}, {w, u[1], v[1], v[4]});
      for (Vertex wp : common(g, u[3], u[4], {v[3], v[4], w})) {
        VertexList mw = cat(m, {wp});
        e.emit(2, mw, {v[0], v[1], v[4], u[1], u[4], w, wp}, {u[1], v[1], v[4], wp});
        for (Vertex x : others(g, u[1], {v[1], w})) {
          VertexList mx = cat(mw, {x});
          VertexList ring{v[1], v[2], v[3], v[4], u[1], u[2], u[3], u[4], w, wp, x};
          e.emit(3, mx, ring, {v[1], v[2], v[3], u[1], u[4], w, wp});
          e.emit(3, mx, ring, {v[1], v[2], v[3], u[1], u[4], w, u[3]});
          e.emit(4, mx, cat(v, {u[1], u[2], u[3], u[4], w, wp, x}),
                 {v[1], v[2], v[3], v[4], u[1], w, wp});
        }
      }
    }
  });
}

void face_heavy_thirds(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& f : faces_of_length(*c.faces, 5)) {
    if (!all_degree(g, f, 3)) continue;
    for (const VertexList& v : orientations(f)) {
      VertexList u = thirds(g, v);
      if (u[0] >= 0 && u[2] >= 0 && g.has_edge(u[0], u[2]))
        e.emit(0, cat(v, {u[0], u[2]}), {v[0], v[1], v[2], v[3], u[0], u[2]},
               {v[0], v[1], v[2]});
      // three 4-vertex thirds at positions 0 < i < j, plus one more lifted v
      for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          int idx[3] = {0, i, j};
          bool heavy = true;
          for (int t : idx) heavy &= u[t] >= 0 && g.degree(u[t]) == 4;
          if (!heavy) continue;
          for (int extra = 0; extra < 5; ++extra) {
            if (extra == 0 || extra == i || extra == j) continue;
            VertexList del = cat(v, {u[0], u[i], u[j]});
            e.emit(1, cat(del, {v[extra]}), del, {v[0], v[i], v[j], v[extra]});
          }
        }
    }
  }
}

void adjacent_pentagons(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& cyc : cycles_of_length(g, 5)) {
    if (!all_degree(g, cyc, 3)) continue;
    for (const VertexList& v : orientations(cyc)) {
      Vertex u2 = third(g, v[1], v[0], v[2]);
      Vertex u4 = third(g, v[0], v[4], v[1]);
      if (u2 < 0 || u4 < 0) continue;
      for (Vertex u3 : common(g, u2, u4, {v[1], v[0]})) {
        if (!all_degree(g, {u2, u3, u4}, 3)) continue;
        for (Vertex w : common(g, v[3], u3, {})) {
          VertexList m = cat(v, {u2, u3, u4, w});
          e.emit(0, m, m, {v[0], v[1], v[2], v[3], u3, u4});
        }
      }
    }
  }
}

void face_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& f : faces_of_length(*c.faces, 5)) {
    if (!all_degree(g, f, 3)) continue;
    for (const VertexList& v : orientations(f)) {
      VertexList u = thirds(g, v);
      bool ok = true;
      for (Vertex x : u) ok &= x >= 0;
      if (!ok) continue;
      VertexList vu = cat(v, {u[0], u[1], u[2], u[3], u[4]});
      if (g.has_edge(u[0], u[2])) {
        e.emit(0, cat(v, {u[0], u[2]}), cat(v, {u[0], u[2]}), {v[0], v[1], v[2], v[3]});
        e.emit(1, cat(v, {u[0], u[2]}), {v[0], v[1], v[2], v[3], u[0], u[2]},
               {v[0], v[1], v[2]});
      }
      auto pair = [&](int i, std::initializer_list<Vertex> extra) {
        int j = (i + 1) % 5;
        return common(g, u[i], u[j], extra);
      };
      for (Vertex w : pair(2, {v[2], v[3]}))
        e.emit(2, cat(vu, {w}), cat(vu, {w}), {v[0], v[1], v[2], v[4], u[2], u[3]});
      for (Vertex w : pair(3, {v[3], v[4]}))
        e.emit(2, cat(vu, {w}), cat(vu, {w}), {v[0], v[1], v[2], v[4], u[3], u[4]});
      for (Vertex w1 : pair(1, {v[1], v[2]})) {
        for (Vertex w : pair(0, {v[0], v[1]}))
          for (Vertex w2 : pair(2, {v[2], v[3]})) {
            VertexList m = cat(vu, {w, w1, w2});
            e.emit(3, m, cat(v, {u[0], u[1], u[2], u[3], w, w1, w2}),
                   {v[0], v[2], v[4], u[1], u[2], u[3], w1});
          }
        for (Vertex w3 : pair(3, {v[3], v[4]})) {
          VertexList m = cat(vu, {w1, w3});
          e.emit(3, m, cat(vu, {w1, w3}), {v[0], v[1], v[2], v[3], u[3], u[4], w1});
          e.emit(4, m, cat(v, {u[1], u[2], u[3], u[4], w1, w3}),
                 {v[1], v[2], v[3], v[4], u[3], u[4], w1});
          for (Vertex w2 : pair(2, {v[2], v[3]}))
            e.emit(5, cat(m, {w2}), cat(vu, {w1, w2, w3}),
                   {v[0], v[1], v[2], v[3], u[1], u[2], u[3], u[4]});
        }
      }
    }
  }
}

}  // namespace

const std::vector<RuleImpl>& girth5_rules() {
  static const std::vector<RuleImpl> rules = [] {
    auto spec = [](const char* id, bool emb, const char* conf, std::vector<VariantSpec> vs) {
      return RuleSpec{id, GraphClass::girth5, emb, conf, std::move(vs)};
    };
    std::vector<RuleImpl> r;
    r.push_back({spec("g5-max-degree", false, "a 5+-vertex", {var("remove-hub", 1, 5, 0)}), hub});
    r.push_back({spec("g5-deg3-next-to-deg4", false,
                      "a 3-vertex next to a 4-vertex whose other neighbours can be joined",
                      {var("join-other-neighbours", 2, 5, 1)}),
                 join_around});
    r.push_back({spec("g5-deg2-next-to-deg4", false, "a 2-vertex next to a 4-vertex",
                      {var("delete-pair", 2, 5, 1)}),
                 deg2_heavy});
    r.push_back({spec("g5-deg3-two-deg2", false, "a 3-vertex next to two 2-vertices",
                      {var("delete-star", 3, 5, 2)}),
                 deg3_two_deg2});
    r.push_back({spec("g5-separating-five-cycle-cubic", true,
                      "a separating 5-cycle of 3-vertices", {var("delete-cycle", 5, 10, 3)}),
                 separating_pentagon_cubic});
    r.push_back({spec("g5-deg2-vertex", false, "a 2-vertex",
                      {var("path-end", 3, 5, 2), var("smooth", 1, 0, 1),
                       var("pentagon", 5, 10, 3), var("pentagon-pendant", 6, 10, 4),
                       var("pentagon-heavy-thirds", 7, 14, 4), var("pentagon-chord", 7, 10, 5),
                       var("reroute-first", 3, 5, 2), var("reroute-second", 3, 5, 2),
                       var("double-link", 10, 15, 7), var("single-link", 8, 14, 5),
                       var("two-pentagons", 6, 14, 3), {"cycle", {5, 5, 4}, true}}),
                 deg2_vertex});
    r.push_back({spec("g5-five-cycle-one-deg4", true,
                      "a 5-cycle with one 4-vertex and a 4-vertex third neighbour",
                      {var("delete-cycle-and-third", 6, 14, 3)}),
                 pentagon_one_heavy});
    r.push_back({spec("g5-separating-five-cycle", true,
                      "a separating 5-cycle with exactly one 4-vertex",
                      {var("delete-cycle", 5, 10, 3), var("two-sided-thirds", 10, 20, 6),
                       var("outer-thirds", 7, 14, 4)}),
                 separating_pentagon});
    r.push_back({spec("g5-five-cycle-cubic", true, "a 5-cycle of 3-vertices",
                      {var("linked-thirds", 7, 14, 4), var("two-apexes", 3, 5, 2)}),
                 pentagon_cubic});
    r.push_back({spec("g5-five-face-one-deg4", true, "a 5-face with exactly one 4-vertex",
                      {var("heavy-third", 6, 14, 3), var("hub-side", 7, 14, 4),
                       var("hub-both-sides", 7, 14, 4), var("ring", 11, 19, 7),
                       var("full-ring", 12, 23, 7)}),
                 face_one_heavy});
    r.push_back({spec("g5-five-face-heavy-thirds", true,
                      "a 5-face of 3-vertices with three 4-vertex third neighbours",
                      {var("linked-thirds", 6, 14, 3), var("delete-heavy-thirds", 8, 19, 4)}),
                 face_heavy_thirds});
    r.push_back({spec("g5-adjacent-five-cycles", true,
                      "two 5-cycles of 3-vertices sharing an edge, far corners at distance two",
                      {var("delete-both", 9, 15, 6)}),
                 adjacent_pentagons});
    r.push_back({spec("g5-five-face-cubic", true, "a 5-face of 3-vertices",
                      {var("linked-thirds", 7, 14, 4), var("linked-thirds-small", 6, 14, 3),
                       var("one-link", 11, 23, 6), var("three-links", 12, 23, 7),
                       var("two-links", 11, 19, 7), var("all-links", 13, 23, 8)}),
                 face_cubic});
    return r;
  }();
  return rules;
}

}  // namespace forest::rules
