#include "rules.hpp"

namespace forest::rules {

namespace {

VariantSpec var(const char* label, int a, int b, int c) { return {label, {a, b, c}, false}; }

void hub(const Context& c, Emitter& e) {
  for (Vertex v = 0; v < c.g.order(); ++v)
    if (c.g.degree(v) >= 6) e.emit(0, {v}, {v}, {});
}

// v is a 3-vertex next to w; its other neighbours x, y get joined.
void join_around(const Context& c, Emitter& e, bool light_partner) {
  const Graph& g = c.g;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) < 4) continue;
      VertexList xy = others(g, v, {w});
      Vertex x = xy[0], y = xy[1];
      if (light_partner && g.degree(x) != 3 && g.degree(y) != 3) continue;
      e.emit(0, {v, w, x, y}, {v, w}, {v}, {{x, y, {v}}});
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

void deg2_vertex(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    for (int side = 0; side < 2; ++side) {
      Vertex u = g.neighbors(v)[side], w = g.neighbors(v)[1 - side];
      if (g.degree(u) == 2 && g.degree(w) == 3) e.emit(0, {v, u, w}, {u, v, w}, {u, v});
      if (g.degree(u) != 3 || g.degree(w) != 3) continue;
      if (side == 0) e.emit(1, {v, u, w}, {v}, {v}, {{u, w, {v}}});
      VertexList shared = common(g, u, w, {v});
      for (Vertex x : shared)
        for (Vertex y : others(g, u, {v, x})) {
          bool both = g.has_edge(w, y);
          if (!both) e.emit(2, {v, u, w, x, y}, {u, v, w, x, y}, {u, v, w});
          if (both && g.degree(x) >= 4) e.emit(3, {v, u, w, x, y}, {u, v, w, x, y}, {u, v, w});
          if (both && g.degree(x) == 3 && g.degree(y) == 3)
            for (Vertex z : others(g, x, {u, w}))
              e.emit(4, {v, u, w, x, y, z}, {u, v, w, x, y, z}, {u, v, x, y});
        }
    }
  }
  emit_cycle_case(c, e, 5);
}

void four_cycle(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& cyc : cycles_of_length(g, 4))
    for (const VertexList& o : orientations(cyc)) {
      Vertex v0 = o[0], v1 = o[1], v2 = o[2], v3 = o[3];
      int d0 = g.degree(v0), d1 = g.degree(v1), d2 = g.degree(v2), d3 = g.degree(v3);
      if (d0 == 3 && d2 == 3 && d1 >= 4 && d3 >= 4) e.emit(0, o, o, {v0, v2});
      if (d0 == 3 && d1 == 3 && d2 == 3 && d3 >= 4) {
        Vertex u0 = third(g, v0, v1, v3), u1 = third(g, v1, v0, v2), u2 = third(g, v2, v1, v3);
        if (u0 == u2) e.emit(1, o, {v0, v1, v2, v3, u0}, {v0, v1, v2});
        if (u0 != u2) {
          VertexList m{v0, v1, v2, v3, u0, u1, u2};
          e.emit(2, m, {v0, v1, v2, v3, u0, u1, u2}, {v0, v1, v2, u0});
          e.emit(3, m, {v0, v1, v2, v3, u0, u2}, {v0, v1, v2});
        }
      }
      if (c.faces && d0 == 3 && d2 == 4 && d1 >= 4) {
        CycleSides s = cycle_sides(g, *c.faces, o);
        bool in_side = false, out_side = false;
        for (Vertex x : others(g, v2, {v1, v3})) {
          in_side |= s.side[x] == 1;
          out_side |= s.side[x] == 0;
        }
        if (in_side && out_side) e.emit(4, o, o, {v0, v2});
      }
    }
}

void four_face_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& f : faces_of_length(*c.faces, 4)) {
    if (!all_degree(g, f, 3)) continue;
    for (const VertexList& v : orientations(f)) {
      VertexList u(4);
      for (int i = 0; i < 4; ++i) u[i] = third(g, v[i], v[(i + 3) % 4], v[(i + 1) % 4]);
      VertexList m{v[0], v[1], v[2], v[3], u[0], u[1], u[2], u[3]};
      VertexList all = m;
      e.emit(0, m, v, {v[0], v[2]}, {}, {{{u[0], u[1], u[2]}, {}, {v[0], v[1], v[2]}}});
      for (int k = 1; k < 4; ++k) {
        VertexList mk = m;
        mk.push_back(u[k]);
        e.emit(1, mk, all, {u[0], u[k], v[1], v[2], v[3]});
      }
      for (int t = 2; t < 4; ++t) {
        VertexList mt = m;
        mt.push_back(u[t]);
        VertexList del = v;
        for (int j = 0; j < 4; ++j)
          if (j != t) del.push_back(u[j]);
        e.emit(2, mt, del, {u[0], v[1], v[2], v[3]});
      }
      e.emit(3, m, {v[0], v[1], v[2], v[3], u[0], u[2]}, {v[0], v[1], v[2]});
    }
  }
}

void separating_four_cycle_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& cyc : cycles_of_length(g, 4)) {
    if (!all_degree(g, cyc, 3) || !separating(g, *c.faces, cyc)) continue;
    for (const VertexList& o : orientations(cyc)) {
      Vertex u = third(g, o[0], o[3], o[1]);
      e.emit(0, {o[0], o[1], o[2], o[3], u}, {o[0], o[1], o[2], o[3], u}, {o[0], o[1], o[2]});
    }
  }
}

void deg3_deg5(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    for (Vertex u : g.neighbors(v)) {
      if (g.degree(u) != 5) continue;
      for (Vertex w : others(g, v, {u}))
        if (g.degree(w) >= 4) e.emit(0, {v, u, w}, {u, v, w}, {v});
    }
  }
}

void separating_four_cycle(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& cyc : cycles_of_length(g, 4)) {
    if (!separating(g, *c.faces, cyc)) continue;
    for (const VertexList& o : orientations(cyc)) {
      if (g.degree(o[0]) != 3 || g.degree(o[1]) != 3) continue;
      Vertex u1 = third(g, o[1], o[0], o[2]);
      e.emit(0, {o[0], o[1], o[2], o[3], u1}, {o[0], o[1], o[3], u1}, {o[0], o[1]});
    }
  }
}

void four_face_two_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& f : faces_of_length(*c.faces, 4))
    for (const VertexList& v : orientations(f)) {
      if (g.degree(v[0]) != 3 || g.degree(v[1]) != 3) continue;
      if (g.degree(v[2]) < 4 || g.degree(v[3]) < 4) continue;
      Vertex u0 = third(g, v[0], v[3], v[1]), u1 = third(g, v[1], v[0], v[2]);
      if (u0 < 0 || g.has_edge(u0, v[2])) continue;
      e.emit(0, {v[0], v[1], v[2], v[3], u0, u1}, {u1, v[0], v[1], v[3]}, {v[0], v[1]},
             {{u0, v[2], {v[0], v[1]}}});
    }
}

void four_face_one_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& f : faces_of_length(*c.faces, 4))
    for (const VertexList& v : orientations(f)) {
      Vertex v0 = v[0], v1 = v[1], v2 = v[2], v3 = v[3];
      if (g.degree(v0) != 3 || g.degree(v1) < 4 || g.degree(v2) < 4 || g.degree(v3) < 4) continue;
      Vertex u0 = third(g, v0, v3, v1);
      if (u0 < 0) continue;
      if (g.has_edge(u0, v2)) {
        e.emit(0, {v0, v1, v2, v3, u0}, {u0, v0, v2}, {v0});
        e.emit(1, {v0, v1, v2, v3, u0}, {v0, v1, v2, u0}, {v0, v2});
        continue;
      }
      for (Vertex u1 : common(g, v1, u0, {v0})) {
        if (g.has_edge(u1, v3)) {
          e.emit(2, {v0, v1, v2, v3, u0, u1}, {u1, v0, v3}, {v0});
          e.emit(3, {v0, v1, v2, v3, u0, u1}, {v0, v1, v2, v3, u0, u1}, {v0, v1, v3});
          continue;
        }
        for (Vertex u3 : common(g, v3, u0, {v0, u1})) {
          VertexList core{v0, v1, v2, v3, u0, u1, u3};
          for (Vertex w0 : others(g, u0, {v0, u1, u3}))
            for (Vertex w1 : others(g, v1, {v0, v2, u1}))
              for (Vertex w3 : others(g, v3, {v0, v2, u3})) {
                VertexList m = core;
                m.insert(m.end(), {w0, w1, w3});
                VertexList kept{v0, v1, v3, u0};
                auto with = [&](std::initializer_list<Vertex> extra) {
                  VertexList d = core;
                  d.insert(d.end(), extra);
                  return d;
                };
                e.emit(4, m, with({w0}), kept);
                e.emit(4, m, with({w3}), kept);
                e.emit(5, m, with({w0, w1}), kept);
                e.emit(6, m, with({w0, w1, w3}), {v0, v1, v3, u0, w0});
                e.emit(6, m, with({w0, w1, w3}), {v0, v1, v3, u0, w3});
                e.emit(8, m, {v0, v1, v3, u0, u1, u3, w0, w1, w3}, {v0, v1, u0, w0, w3});
                e.emit(9, m, core, {v1, v3, u0}, {}, {{{w0, w1, w3}, {}, {v0, v1, v3, u0}}});
                VertexList ys = others(g, w1, {v1});
                for (Vertex y0 : ys)
                  for (Vertex y1 : ys) {
                    if (y0 == y1) continue;
                    for (Vertex z : others(g, v2, {v1, v3, y0})) {
                      VertexList mz = m;
                      mz.insert(mz.end(), {y0, y1, z});
                      e.emit(7, mz, {v0, v1, v2, v3, u0, u1, w1, y0, y1, z},
                             {v0, v1, v2, u1, w1});
                    }
                  }
              }
        }
      }
    }
}

void five_face_cubic(const Context& c, Emitter& e) {
  const Graph& g = c.g;
  for (const VertexList& f : faces_of_length(*c.faces, 5)) {
    if (!all_degree(g, f, 3)) continue;
    for (const VertexList& v : orientations(f)) {
      VertexList u(5);
      for (int i = 0; i < 5; ++i) u[i] = third(g, v[i], v[(i + 4) % 5], v[(i + 1) % 5]);
      emit_pentagon_apexes(e, 0, v, u);
    }
  }
}

void deg3_deg3_deg4(const Context& c, Emitter& e) { join_around(c, e, true); }

}  // namespace

const std::vector<RuleImpl>& girth4_rules() {
  static const std::vector<RuleImpl> rules = [] {
    auto spec = [](const char* id, bool emb, const char* conf, std::vector<VariantSpec> vs) {
      return RuleSpec{id, GraphClass::girth4, emb, conf, std::move(vs)};
    };
    std::vector<RuleImpl> r;
    r.push_back({spec("g4-max-degree", false, "a 6+-vertex", {var("remove-hub", 1, 6, 0)}), hub});
    r.push_back({spec("g4-deg3-next-to-deg4plus", false,
                      "a 3-vertex next to a 4+-vertex whose other neighbours can be joined",
                      {var("join-other-neighbours", 2, 5, 1)}),
                 [](const Context& c, Emitter& e) { join_around(c, e, false); }});
    r.push_back({spec("g4-deg2-next-to-deg4plus", false, "a 2-vertex next to a 4+-vertex",
                      {var("delete-pair", 2, 5, 1)}),
                 deg2_heavy});
    r.push_back({spec("g4-deg3-two-deg2", false, "a 3-vertex next to two 2-vertices",
                      {var("delete-star", 3, 5, 2)}),
                 deg3_two_deg2});
    r.push_back({spec("g4-deg2-vertex", false, "a 2-vertex",
                      {var("path-end", 3, 5, 2), var("smooth", 1, 1, 1),
                       var("two-common-neighbours", 5, 9, 3),
                       var("three-common-heavy", 5, 9, 3), var("three-common-cubic", 6, 8, 4),
                       {"cycle", {4, 4, 3}, true}}),
                 deg2_vertex});
    r.push_back({spec("g4-four-cycle", false,
                      "a 4-cycle with two opposite 3-vertices and a 4+-vertex",
                      {var("opposite-heavy", 4, 10, 2), var("shared-third", 5, 9, 3),
                       var("path-of-thirds", 7, 13, 4), var("drop-outer-thirds", 6, 14, 3),
                       var("split-4-vertex", 4, 10, 2)}),
                 four_cycle});
    r.push_back({spec("g4-four-face-cubic", true, "a 4-face of 3-vertices",
                      {var("apex", 3, 5, 2), var("isolated-third", 8, 12, 5),
                       var("keep-one-third", 7, 13, 4), var("drop-two-thirds", 6, 14, 3)}),
                 four_face_cubic});
    r.push_back({spec("g4-separating-four-cycle-cubic", true,
                      "a separating 4-cycle of 3-vertices", {var("delete-cycle-and-third", 5, 9, 3)}),
                 separating_four_cycle_cubic});
    r.push_back({spec("g4-deg3-next-to-deg5", false, "a 3-vertex next to a 5-vertex",
                      {var("delete-heavy-pair", 3, 10, 1)}),
                 deg3_deg5});
    r.push_back({spec("g4-separating-four-cycle", true,
                      "a separating 4-cycle with two adjacent 3-vertices",
                      {var("delete-three-and-third", 4, 10, 2)}),
                 separating_four_cycle});
    r.push_back({spec("g4-four-face-two-cubic", true, "a 4-face with exactly two 3-vertices",
                      {var("reroute", 4, 10, 2)}),
                 four_face_two_cubic});
    r.push_back({spec("g4-four-face-one-cubic", true, "a 4-face with exactly one 3-vertex",
                      {var("hub-opposite", 3, 10, 1), var("corner-cycle", 4, 10, 2),
                       var("hub-common", 3, 10, 1), var("inner-square", 6, 14, 3),
                       var("wing", 8, 19, 4), var("double-wing", 9, 24, 4),
                       var("three-wings", 10, 23, 5), var("far-corner", 10, 23, 5),
                       var("open-corner", 9, 19, 5), var("apex", 6, 14, 3)}),
                 four_face_one_cubic});
    r.push_back({spec("g4-five-face-cubic", true, "a 5-face of 3-vertices",
                      {var("two-apexes", 3, 5, 2)}),
                 five_face_cubic});
    r.push_back({spec("g4-deg3-deg3-deg4", false,
                      "a 3-vertex next to a 3-vertex and a 4-vertex; uses the join surgery",
                      {var("join-other-neighbours", 2, 5, 1)}),
                 deg3_deg3_deg4});
    return r;
  }();
  return rules;
}

}  // namespace forest::rules
