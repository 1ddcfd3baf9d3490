#include "forest/reducer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "forest/union_find.hpp"
#include "rules.hpp"

namespace forest {

namespace rules {

bool in(std::initializer_list<Vertex> set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

Vertex third(const Graph& g, Vertex v, Vertex a, Vertex b) {
  if (v < 0 || g.degree(v) != 3) return -1;
  for (Vertex x : g.neighbors(v))
    if (x != a && x != b) return x;
  return -1;
}

VertexList others(const Graph& g, Vertex v, std::initializer_list<Vertex> excluded) {
  VertexList out;
  if (v < 0) return out;
  for (Vertex x : g.neighbors(v))
    if (!in(excluded, x)) out.push_back(x);
  return out;
}

VertexList common(const Graph& g, Vertex a, Vertex b, std::initializer_list<Vertex> excluded) {
  VertexList out;
  if (a < 0 || b < 0) return out;
  auto na = g.neighbors(a), nb = g.neighbors(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  std::erase_if(out, [&](Vertex x) { return in(excluded, x); });
  return out;
}

std::vector<VertexList> cycles_of_length(const Graph& g, int length) {
  std::vector<VertexList> out;
  VertexList path;
  std::vector<char> on(g.order(), 0);
  // Start at the smallest vertex; the second vertex is smaller than the last.
  std::function<void(Vertex)> grow = [&](Vertex v) {
    const Vertex s = path.front();
    if (static_cast<int>(path.size()) == length) {
      if (g.has_edge(v, s) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (Vertex x : g.neighbors(v)) {
      if (x <= s || on[x]) continue;
      on[x] = 1;
      path.push_back(x);
      grow(x);
      path.pop_back();
      on[x] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    on[s] = 1;
    grow(s);
    on[s] = 0;
  }
  return out;
}

std::vector<VertexList> faces_of_length(const FaceSet& faces, int length) {
  std::vector<VertexList> out;
  for (const VertexList& w : faces.walks) {
    if (static_cast<int>(w.size()) != length) continue;
    std::set<Vertex> distinct(w.begin(), w.end());
    if (static_cast<int>(distinct.size()) == length) out.push_back(w);
  }
  return out;
}

std::vector<VertexList> orientations(const VertexList& cycle) {
  const int k = static_cast<int>(cycle.size());
  std::vector<VertexList> out;
  for (int dir = 0; dir < 2; ++dir)
    for (int r = 0; r < k; ++r) {
      VertexList o(k);
      for (int i = 0; i < k; ++i) o[i] = cycle[((dir ? -i : i) + r + 2 * k) % k];
      out.push_back(std::move(o));
    }
  return out;
}

bool separating(const Graph& g, const FaceSet& faces, const VertexList& cycle) {
  return cycle_sides(g, faces, cycle).separating();
}

bool all_degree(const Graph& g, const VertexList& vs, int d) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= 0 && g.degree(v) == d; });
}

void emit_cycle_case(const Context& c, Emitter& e, int variant) {
  const Graph& g = c.g;
  const int n = g.order();
  if (n < 3 || g.min_degree() != 2 || g.max_degree() != 2 || !is_connected(g)) return;
  VertexList all(n), rest;
  for (int v = 0; v < n; ++v) all[v] = v;
  rest.assign(all.begin() + 1, all.end());
  e.emit_scaled(variant, {n, n, n - 1}, {0}, all, rest);
}

void emit_pentagon_apexes(Emitter& e, int variant, const VertexList& v, const VertexList& u) {
  std::vector<Apex> apexes{{{u[0], u[1]}, {}, {v[0], v[1]}}, {{u[2], u[3]}, {0}, {v[2], v[3]}}};
  VertexList match = v;
  match.insert(match.end(), u.begin(), u.end());
  e.emit(variant, match, v, {v[0], v[3]}, {}, std::move(apexes));
}

namespace {

bool has_missing(const VertexList& vs) {
  return std::find(vs.begin(), vs.end(), -1) != vs.end();
}

}  // namespace

void Emitter::emit(int variant, VertexList match, VertexList deleted, VertexList base,
                   std::vector<AddedEdge> edges, std::vector<Apex> apexes) {
  if (variant < 0 || variant >= static_cast<int>(spec_.variants.size()))
    throw std::logic_error("variant out of range in " + spec_.id);
  const std::size_t before = out_.size();
  emit_scaled(variant, spec_.variants[variant].triple, std::move(match), std::move(deleted),
              std::move(base));
  if (out_.size() == before) return;
  ReductionStep& s = out_.back();
  for (const AddedEdge& x : edges)
    if (x.u < 0 || x.v < 0 || has_missing(x.part)) {
      out_.pop_back();
      return;
    }
  for (const Apex& x : apexes)
    if (has_missing(x.neighbors) || has_missing(x.part)) {
      out_.pop_back();
      return;
    }
  s.surgery.added_edges = std::move(edges);
  s.surgery.apexes = std::move(apexes);
}

void Emitter::emit_scaled(int variant, Triple t, VertexList match, VertexList deleted,
                          VertexList base) {
  if (has_missing(match) || has_missing(deleted) || has_missing(base)) return;
  std::sort(deleted.begin(), deleted.end());
  if (std::adjacent_find(deleted.begin(), deleted.end()) != deleted.end()) return;
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  ReductionStep s;
  s.rule = spec_.id;
  s.variant = variant;
  s.variant_label = spec_.variants.at(variant).label;
  s.triple = t;
  s.match = std::move(match);
  s.surgery.deleted = std::move(deleted);
  s.surgery.base = std::move(base);
  out_.push_back(std::move(s));
}

}  // namespace rules

namespace {

const std::vector<rules::RuleImpl>& impls(GraphClass cls) {
  return cls == GraphClass::girth4 ? rules::girth4_rules() : rules::girth5_rules();
}

bool sorted_unique(const VertexList& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_tree(const Graph& g, const VertexList& part) {
  if (part.empty()) return false;
  auto [sub, rel] = induced_subgraph(g, part);
  return static_cast<long>(sub.size()) == sub.order() - 1L && is_connected(sub);
}

}  // namespace

const std::vector<RuleSpec>& rule_catalog(GraphClass cls) {
  static const std::vector<RuleSpec> g4 = [] {
    std::vector<RuleSpec> out;
    for (const auto& r : rules::girth4_rules()) out.push_back(r.spec);
    return out;
  }();
  static const std::vector<RuleSpec> g5 = [] {
    std::vector<RuleSpec> out;
    for (const auto& r : rules::girth5_rules()) out.push_back(r.spec);
    return out;
  }();
  return cls == GraphClass::girth4 ? g4 : g5;
}

const RuleSpec& find_rule(GraphClass cls, const std::string& id) {
  for (const RuleSpec& r : rule_catalog(cls))
    if (r.id == id) return r;
  throw ReducerError("unknown rule " + id + " for class " + to_string(cls));
}

AppliedStep apply_step(const Graph& g, const ReductionStep& step) {
  const Surgery& s = step.surgery;
  const int n = g.order();
  if (!sorted_unique(s.deleted)) throw ReducerError("deleted set must be sorted and distinct");
  for (Vertex v : s.deleted)
    if (v < 0 || v >= n) throw ReducerError("deleted vertex out of range");
  auto [h, rel] = delete_vertices(g, s.deleted);
  auto survivor = [&](Vertex v) {
    if (v < 0 || v >= n || rel.old_to_new[v] < 0)
      throw ReducerError("surgery attaches to a deleted or missing vertex");
    return rel.old_to_new[v];
  };
  std::vector<Edge> add;
  std::set<Edge> seen;
  for (const AddedEdge& e : s.added_edges) {
    Vertex u = survivor(e.u), v = survivor(e.v);
    if (u == v || h.has_edge(u, v) || !seen.insert(std::minmax(u, v)).second)
      throw ReducerError("added edge is a loop or already present");
    add.emplace_back(u, v);
  }
  const int first_apex = h.order();
  try {
    if (!add.empty()) h = insert_edges_embedded(h, add);
    for (std::size_t i = 0; i < s.apexes.size(); ++i) {
      const Apex& ap = s.apexes[i];
      VertexList nbrs;
      for (Vertex v : ap.neighbors) nbrs.push_back(survivor(v));
      for (int j : ap.apexes) {
        if (j < 0 || j >= static_cast<int>(i)) throw ReducerError("apex joined to a later apex");
        nbrs.push_back(first_apex + j);
      }
      if (!h.has_rotation()) {
        h = add_vertex_with_edges(h, nbrs).first;
        continue;
      }
      FaceSet fs = trace_faces(h);
      bool placed = false;
      for (int f = 0; f < static_cast<int>(fs.count()) && !placed; ++f) {
        const VertexList& walk = fs.walks[f];
        std::vector<std::pair<std::size_t, Vertex>> pos;
        bool fits = true;
        for (Vertex x : nbrs) {
          auto it = std::find(walk.begin(), walk.end(), x);
          if (it == walk.end() && h.degree(x) > 0) fits = false;
          pos.emplace_back(static_cast<std::size_t>(it - walk.begin()), x);
        }
        if (!fits) continue;
        std::sort(pos.begin(), pos.end());
        VertexList ordered;
        for (auto& p : pos) ordered.push_back(p.second);
        try {
          h = add_vertex_with_edges(h, ordered, f).first;
          placed = true;
        } catch (const EmbeddingError&) {
        }
      }
      if (!placed) throw ReducerError("apex does not fit in any face");
    }
    if (h.has_rotation()) trace_faces(h);
  } catch (const GraphError& e) {
    throw ReducerError(std::string("surgery cannot be embedded: ") + e.what());
  }
  if (n - h.order() != step.triple.alpha)
    throw ReducerError("order drops by " + std::to_string(n - h.order()) + ", not " +
                       std::to_string(step.triple.alpha));
  const long dropped = static_cast<long>(g.size()) - static_cast<long>(h.size());
  if (dropped < step.triple.beta)
    throw ReducerError("size drops by " + std::to_string(dropped) + ", less than " +
                       std::to_string(step.triple.beta));
  AppliedStep out;
  out.old_to_new = rel.old_to_new;
  out.new_to_old = rel.new_to_old;
  out.new_to_old.resize(h.order(), -1);
  out.graph = std::move(h);
  return out;
}

VertexList lift_forest(const ReductionStep& step, const AppliedStep& applied,
                       const VertexList& forest_of_h) {
  const Surgery& s = step.surgery;
  const int first_apex = applied.graph.order() - static_cast<int>(s.apexes.size());
  VertexList out = s.base;
  for (Vertex v : forest_of_h) {
    if (v < 0 || v >= applied.graph.order()) throw ReducerError("forest vertex out of range");
    if (v < first_apex) {
      out.push_back(applied.new_to_old[v]);
    } else {
      const VertexList& part = s.apexes[v - first_apex].part;
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<AppliedStep> validate_step(const Graph& g, GraphClass cls, ReductionStep& step) {
  AppliedStep a;
  try {
    a = apply_step(g, step);
  } catch (const ReducerError&) {
    return std::nullopt;
  }
  const Surgery& s = step.surgery;
  const Graph& h = a.graph;
  const int n = g.order();
  const int k = static_cast<int>(s.apexes.size());
  const int first_apex = h.order() - k;
  if ((!s.added_edges.empty() || k > 0) && girth(h) < required_girth(cls)) return std::nullopt;

  std::vector<char> del(n, 0), in_base(n, 0);
  for (Vertex v : s.deleted) del[v] = 1;
  if (!sorted_unique(s.base)) return std::nullopt;
  for (Vertex v : s.base) {
    if (v < 0 || v >= n || !del[v]) return std::nullopt;
    in_base[v] = 1;
  }

  // owner[v]: which part a deleted vertex belongs to; apexes are 0..k-1, edges k...
  std::vector<int> owner(n, -1);
  std::vector<const VertexList*> parts;
  for (const Apex& ap : s.apexes) parts.push_back(&ap.part);
  for (const AddedEdge& e : s.added_edges) parts.push_back(&e.part);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
    for (Vertex v : *parts[p]) {
      if (v < 0 || v >= n || !del[v] || owner[v] != -1) return std::nullopt;
      if (p >= k && !in_base[v]) return std::nullopt;
      owner[v] = p;
    }
    if (!is_tree(g, *parts[p])) return std::nullopt;
  }

  std::vector<std::vector<char>> apex_adj(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j : s.apexes[i].apexes) apex_adj[i][j] = apex_adj[j][i] = 1;

  for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
    std::map<Vertex, int> outside;
    std::vector<int> to_part(parts.size(), 0);
    for (Vertex v : *parts[p])
      for (Vertex x : g.neighbors(v)) {
        if (!del[x])
          ++outside[x];
        else if (owner[x] != -1 && owner[x] != p)
          ++to_part[owner[x]];
      }
    std::map<Vertex, int> want;
    if (p < k) {
      for (Vertex x : s.apexes[p].neighbors) want[x] = 1;
    } else {
      const AddedEdge& e = s.added_edges[p - k];
      want[e.u] = 1;
      want[e.v] = 1;
    }
    if (outside != want) return std::nullopt;
    for (int q = 0; q < static_cast<int>(parts.size()); ++q) {
      if (q == p) continue;
      int expected = (p < k && q < k && apex_adj[p][q]) ? 1 : 0;
      if (to_part[q] != expected) return std::nullopt;
    }
  }

  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<char> lifted = in_base;
    int size = 0;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1)
        for (Vertex v : s.apexes[i].part) lifted[v] = 1;
    for (int v = 0; v < n; ++v) size += lifted[v];
    if (size - __builtin_popcount(mask) < step.triple.gamma) return std::nullopt;

    UnionFind comp(h.order());
    for (auto [u, v] : h.edges()) {
      auto gone = [&](Vertex x) { return x >= first_apex && !(mask >> (x - first_apex) & 1); };
      if (!gone(u) && !gone(v)) comp.unite(u, v);
    }
    // Node of each lifted or surviving vertex of g: a component of H*, or its own node.
    std::vector<int> node(n, -1);
    std::vector<char> rest(n, 0);
    int next = h.order();
    for (int v = 0; v < n; ++v) {
      if (!del[v]) {
        node[v] = comp.find(a.old_to_new[v]);
      } else if (lifted[v]) {
        int p = owner[v];
        if (p >= 0 && p < k && (mask >> p & 1))
          node[v] = comp.find(first_apex + p);
        else if (p >= k)
          node[v] = comp.find(a.old_to_new[s.added_edges[p - k].u]);
        else {
          rest[v] = 1;
          node[v] = next++;
        }
      }
    }
    UnionFind multi(next);
    for (int v = 0; v < n; ++v) {
      if (!rest[v]) continue;
      for (Vertex x : g.neighbors(v)) {
        if (node[x] < 0 || (rest[x] && x < v)) continue;
        if (!multi.unite(node[v], node[x])) return std::nullopt;
      }
    }
  }
  step.edges_removed = static_cast<long>(g.size()) - static_cast<long>(h.size());
  return a;
}

std::vector<ReductionStep> rule_candidates(const std::string& rule, const Graph& g,
                                           const FaceSet* faces, GraphClass cls) {
  for (const rules::RuleImpl& r : impls(cls)) {
    if (r.spec.id != rule) continue;
    std::vector<ReductionStep> out;
    if (r.spec.needs_embedding && !faces) return out;
    rules::Emitter e(r.spec, out);
    r.generate(rules::Context{g, faces, cls}, e);
    std::stable_sort(out.begin(), out.end(), [](const ReductionStep& x, const ReductionStep& y) {
      return std::tie(x.variant, x.match) < std::tie(y.variant, y.match);
    });
    return out;
  }
  throw ReducerError("unknown rule " + rule);
}

std::optional<ReductionStep> find_application(const Graph& g, const FaceSet* faces,
                                              GraphClass cls) {
  for (const RuleSpec& r : rule_catalog(cls))
    for (ReductionStep& s : rule_candidates(r.id, g, faces, cls))
      if (validate_step(g, cls, s)) return s;
  return std::nullopt;
}

std::vector<ReductionStep> find_all_applications(const Graph& g, const FaceSet* faces,
                                                 GraphClass cls) {
  std::vector<ReductionStep> out;
  for (const RuleSpec& r : rule_catalog(cls))
    for (ReductionStep& s : rule_candidates(r.id, g, faces, cls))
      if (validate_step(g, cls, s)) out.push_back(std::move(s));
  return out;
}

std::string to_string(Guarantee g) { return g == Guarantee::certified ? "certified" : "heuristic"; }

std::string to_string(TraceNode::Kind k) {
  switch (k) {
    case TraceNode::Kind::split: return "split";
    case TraceNode::Kind::bridge: return "bridge";
    case TraceNode::Kind::step: return "step";
    case TraceNode::Kind::greedy: return "greedy";
    case TraceNode::Kind::leaf: return "leaf";
  }
  return "leaf";
}

namespace {

class Engine {
 public:
  Engine(GraphClass cls, const ReduceOptions& opts, PolygonVertex at, int first_free)
      : cls_(cls), opts_(opts), at_(at), next_id_(first_free) {}

  TraceNode build(const Graph& h, VertexList ids) {
    TraceNode t;
    t.ids = std::move(ids);
    t.n = h.order();
    t.m = static_cast<long>(h.size());
    if (t.n == 0) {
      t.method = "empty";
      return t;
    }
    auto comps = connected_components(h);
    if (comps.size() > 1) {
      t.kind = TraceNode::Kind::split;
      for (const VertexList& c : comps) {
        auto [sub, rel] = induced_subgraph(h, c);
        t.children.push_back(build(sub, globals(t.ids, rel.new_to_old)));
        const VertexList& f = t.children.back().forest;
        t.forest.insert(t.forest.end(), f.begin(), f.end());
      }
      std::sort(t.forest.begin(), t.forest.end());
      return t;
    }
    if (auto br = bridges(h); !br.empty()) {
      std::sort(br.begin(), br.end());
      t.kind = TraceNode::Kind::bridge;
      t.removed_edge = br.front();
      t.children.push_back(build(delete_edges(h, std::span(br.data(), 1)), t.ids));
      t.forest = t.children.back().forest;
      return t;
    }
    if (t.m == t.n - 1) {
      t.method = "acyclic";
      t.forest = t.ids;
      std::sort(t.forest.begin(), t.forest.end());
      check_leaf(t);
      return t;
    }
    if (t.n <= opts_.threshold) {
      SolveResult r = forest_number_exact(h, opts_.solver);
      if (!r.optimal) {
        heuristic_ = true;
        diagnostics_.push_back("exact solver stopped early on a component of order " +
                               std::to_string(t.n));
      }
      t.method = "exact";
      for (Vertex v : r.witness) t.forest.push_back(t.ids[v]);
      std::sort(t.forest.begin(), t.forest.end());
      check_leaf(t);
      return t;
    }
    std::optional<FaceSet> faces;
    if (h.has_rotation()) {
      try {
        faces = trace_faces(h);
      } catch (const EmbeddingError&) {
      }
    }
    if (auto step = find_application(h, faces ? &*faces : nullptr, cls_)) {
      AppliedStep a = apply_step(h, *step);
      VertexList child_ids;
      for (Vertex old : a.new_to_old) {
        if (old >= 0) {
          child_ids.push_back(t.ids[old]);
        } else {
          child_ids.push_back(next_id_);
          t.apex_ids.push_back(next_id_++);
        }
      }
      t.kind = TraceNode::Kind::step;
      t.children.push_back(build(a.graph, child_ids));
      VertexList local;
      std::map<Vertex, Vertex> back;
      for (int i = 0; i < a.graph.order(); ++i) back[child_ids[i]] = i;
      for (Vertex v : t.children.back().forest) local.push_back(back.at(v));
      std::sort(local.begin(), local.end());
      VertexList lifted = lift_forest(*step, a, local);
      if (!is_induced_forest(h, lifted))
        throw ReducerError("lifted set is not an induced forest after " + step->rule);
      for (Vertex v : lifted) t.forest.push_back(t.ids[v]);
      std::sort(t.forest.begin(), t.forest.end());
      t.step = std::move(step);
      return t;
    }
    report_gap(h, faces ? &*faces : nullptr);
    heuristic_ = true;
    Vertex pick = 0;
    for (Vertex v = 1; v < h.order(); ++v)
      if (h.degree(v) > h.degree(pick)) pick = v;
    t.kind = TraceNode::Kind::greedy;
    t.removed_vertex = pick;
    auto [sub, rel] = delete_vertices(h, std::span(&pick, 1));
    t.children.push_back(build(sub, globals(t.ids, rel.new_to_old)));
    t.forest = t.children.back().forest;
    return t;
  }

  bool heuristic() const { return heuristic_; }
  std::vector<std::string>& diagnostics() { return diagnostics_; }

 private:
  static VertexList globals(const VertexList& ids, const VertexList& local) {
    VertexList out;
    for (Vertex v : local) out.push_back(ids[v]);
    return out;
  }

  void check_leaf(const TraceNode& t) {
    Rational need = at_.a * Rational(t.n) - at_.b * Rational(t.m);
    if (Rational(static_cast<long long>(t.forest.size())) >= need) return;
    heuristic_ = true;
    diagnostics_.push_back("leaf of order " + std::to_string(t.n) + " misses the bound: " +
                           std::to_string(t.forest.size()) + " < " + forest::to_string(need));
  }

  void report_gap(const Graph& h, const FaceSet* faces) {
    std::ostringstream os;
    os << "no rule applies to a component with n=" << h.order() << ", m=" << h.size();
    if (faces) {
      try {
        AuditReport r = discharging_audit(h, cls_);
        os << "; audit: " << r.violations.size() << " face violations, "
           << r.vertex_violations.size() << " vertex violations";
      } catch (const std::exception& e) {
        os << "; audit unavailable: " << e.what();
      }
    } else {
      os << "; no embedding, face rules skipped";
    }
    diagnostics_.push_back(os.str());
  }

  GraphClass cls_;
  const ReduceOptions& opts_;
  PolygonVertex at_;
  int next_id_;
  bool heuristic_ = false;
  std::vector<std::string> diagnostics_;
};

}  // namespace

ForestCertificate reduce(const Graph& g, GraphClass cls, const ReduceOptions& opts) {
  if (girth(g) < required_girth(cls))
    throw ReducerError("graph has girth below " + std::to_string(required_girth(cls)));
  if (opts.threshold < 0) throw ReducerError("threshold must be nonnegative");
  ForestCertificate c;
  c.cls = cls;
  c.n = g.order();
  c.m = static_cast<long>(g.size());
  c.threshold = opts.threshold;
  BestBound bb = best_bound(cls, Rational(c.n), Rational(c.m));
  c.claimed = bb.value;
  c.bound_vertex = bb.vertex;
  Engine engine(cls, opts, bb.vertex, g.order());
  VertexList ids(g.order());
  for (int v = 0; v < g.order(); ++v) ids[v] = v;
  c.trace = engine.build(g, ids);
  c.forest = c.trace.forest;
  if (!is_induced_forest(g, c.forest)) throw ReducerError("result is not an induced forest");
  c.diagnostics = std::move(engine.diagnostics());
  c.guarantee = engine.heuristic() ? Guarantee::heuristic : Guarantee::certified;
  if (Rational(static_cast<long long>(c.forest.size())) < c.claimed) {
    c.guarantee = Guarantee::heuristic;
    c.diagnostics.push_back("forest is smaller than the bound");
  }
  return c;
}

}  // namespace forest
