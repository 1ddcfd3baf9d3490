#include "forest/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace forest {

using nlohmann::json;

namespace {

json ones(const VertexList& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

VertexList zeros(const json& j) {
  if (!j.is_array()) throw ReducerError("expected an array of vertices");
  VertexList out;
  for (const json& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 1)
      throw ReducerError("vertex ids must be positive integers");
    out.push_back(static_cast<Vertex>(x.get<long long>() - 1));
  }
  return out;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ReducerError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ReducerError(std::string("bad field '") + key + "'");
  }
}

json node_to_json(const TraceNode& t) {
  json j{{"kind", to_string(t.kind)}, {"ids", ones(t.ids)}, {"n", t.n}, {"m", t.m},
         {"forest", ones(t.forest)}};
  switch (t.kind) {
    case TraceNode::Kind::leaf: j["method"] = t.method; break;
    case TraceNode::Kind::bridge:
      j["removed_edge"] = {t.removed_edge.first + 1, t.removed_edge.second + 1};
      break;
    case TraceNode::Kind::greedy: j["removed_vertex"] = t.removed_vertex + 1; break;
    case TraceNode::Kind::step:
      j["step"] = step_to_json(*t.step);
      j["apex_ids"] = ones(t.apex_ids);
      break;
    case TraceNode::Kind::split: break;
  }
  if (!t.children.empty()) {
    json kids = json::array();
    for (const TraceNode& c : t.children) kids.push_back(node_to_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

TraceNode node_from_json(const json& j) {
  TraceNode t;
  const std::string kind = field<std::string>(j, "kind");
  static const std::map<std::string, TraceNode::Kind> kinds{
      {"split", TraceNode::Kind::split}, {"bridge", TraceNode::Kind::bridge},
      {"step", TraceNode::Kind::step},   {"greedy", TraceNode::Kind::greedy},
      {"leaf", TraceNode::Kind::leaf}};
  auto it = kinds.find(kind);
  if (it == kinds.end()) throw ReducerError("unknown node kind " + kind);
  t.kind = it->second;
  t.ids = zeros(field<json>(j, "ids"));
  t.n = field<long>(j, "n");
  t.m = field<long>(j, "m");
  t.forest = zeros(field<json>(j, "forest"));
  switch (t.kind) {
    case TraceNode::Kind::leaf: t.method = field<std::string>(j, "method"); break;
    case TraceNode::Kind::bridge: {
      VertexList e = zeros(field<json>(j, "removed_edge"));
      if (e.size() != 2) throw ReducerError("removed_edge needs two ends");
      t.removed_edge = {e[0], e[1]};
      break;
    }
    case TraceNode::Kind::greedy: t.removed_vertex = field<int>(j, "removed_vertex") - 1; break;
    case TraceNode::Kind::step:
      t.step = step_from_json(field<json>(j, "step"));
      t.apex_ids = zeros(field<json>(j, "apex_ids"));
      break;
    case TraceNode::Kind::split: break;
  }
  if (j.contains("children"))
    for (const json& c : j.at("children")) t.children.push_back(node_from_json(c));
  return t;
}

}  // namespace

json step_to_json(const ReductionStep& s) {
  json edges = json::array(), apexes = json::array();
  for (const AddedEdge& e : s.surgery.added_edges)
    edges.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"part", ones(e.part)}});
  for (const Apex& a : s.surgery.apexes)
    apexes.push_back({{"neighbors", ones(a.neighbors)}, {"apexes", a.apexes}, {"part", ones(a.part)}});
  return {{"rule", s.rule},
          {"variant", s.variant},
          {"variant_label", s.variant_label},
          {"triple", {s.triple.alpha, s.triple.beta, s.triple.gamma}},
          {"match", ones(s.match)},
          {"deleted", ones(s.surgery.deleted)},
          {"added_edges", edges},
          {"apexes", apexes},
          {"base", ones(s.surgery.base)},
          {"edges_removed", s.edges_removed}};
}

ReductionStep step_from_json(const json& j) {
  ReductionStep s;
  s.rule = field<std::string>(j, "rule");
  s.variant = field<int>(j, "variant");
  s.variant_label = field<std::string>(j, "variant_label");
  auto t = field<std::vector<int>>(j, "triple");
  if (t.size() != 3) throw ReducerError("triple needs three entries");
  s.triple = {t[0], t[1], t[2]};
  s.match = zeros(field<json>(j, "match"));
  s.surgery.deleted = zeros(field<json>(j, "deleted"));
  s.surgery.base = zeros(field<json>(j, "base"));
  for (const json& e : field<json>(j, "added_edges"))
    s.surgery.added_edges.push_back(
        {field<int>(e, "u") - 1, field<int>(e, "v") - 1, zeros(field<json>(e, "part"))});
  for (const json& a : field<json>(j, "apexes"))
    s.surgery.apexes.push_back({zeros(field<json>(a, "neighbors")),
                                field<std::vector<int>>(a, "apexes"),
                                zeros(field<json>(a, "part"))});
  s.edges_removed = field<long>(j, "edges_removed");
  return s;
}

json certificate_to_json(const ForestCertificate& c) {
  return {{"class", to_string(c.cls)},
          {"n", c.n},
          {"m", c.m},
          {"threshold", c.threshold},
          {"forest_size", c.forest.size()},
          {"forest", ones(c.forest)},
          {"claimed", to_string(c.claimed)},
          {"bound_vertex", {{"a", to_string(c.bound_vertex.a)}, {"b", to_string(c.bound_vertex.b)}}},
          {"guarantee", to_string(c.guarantee)},
          {"diagnostics", c.diagnostics},
          {"trace", node_to_json(c.trace)}};
}

ForestCertificate certificate_from_json(const json& j) {
  ForestCertificate c;
  try {
    c.cls = parse_graph_class(field<std::string>(j, "class"));
    c.claimed = parse_rational(field<std::string>(j, "claimed"));
    const json& bv = field<json>(j, "bound_vertex");
    c.bound_vertex = {parse_rational(field<std::string>(bv, "a")),
                      parse_rational(field<std::string>(bv, "b"))};
  } catch (const ReducerError&) {
    throw;
  } catch (const std::exception& e) {
    throw ReducerError(std::string("bad certificate: ") + e.what());
  }
  c.n = field<long>(j, "n");
  c.m = field<long>(j, "m");
  c.threshold = field<int>(j, "threshold");
  c.forest = zeros(field<json>(j, "forest"));
  const std::string g = field<std::string>(j, "guarantee");
  if (g != "certified" && g != "heuristic") throw ReducerError("unknown guarantee " + g);
  c.guarantee = g == "certified" ? Guarantee::certified : Guarantee::heuristic;
  if (j.contains("diagnostics")) c.diagnostics = field<std::vector<std::string>>(j, "diagnostics");
  c.trace = node_from_json(field<json>(j, "trace"));
  return c;
}

json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Replay {
 public:
  Replay(const ForestCertificate& c) : c_(c) {}

  // Empty string on success.
  std::string run(const Graph& g) {
    VertexList ids(g.order());
    for (int v = 0; v < g.order(); ++v) ids[v] = v;
    std::string err = node(g, ids, c_.trace, "root");
    if (err.empty() && c_.trace.forest != c_.forest) err = "root forest differs from the certificate";
    return err;
  }

  bool greedy = false;
  std::vector<std::string> short_leaves;

 private:
  std::string node(const Graph& h, const VertexList& ids, const TraceNode& t,
                   const std::string& at) {
    auto fail = [&](const std::string& why) { return at + ": " + why; };
    if (t.ids != ids) return fail("ids do not match the replayed graph");
    if (t.n != h.order() || t.m != static_cast<long>(h.size())) return fail("order or size differs");
    std::map<Vertex, Vertex> local;
    for (int i = 0; i < h.order(); ++i) local[ids[i]] = i;
    VertexList f;
    for (Vertex v : t.forest) {
      auto it = local.find(v);
      if (it == local.end()) return fail("forest vertex outside the node");
      f.push_back(it->second);
    }
    if (!std::is_sorted(t.forest.begin(), t.forest.end()) || !is_induced_forest(h, f))
      return fail("forest is not a sorted induced forest");
    auto same_forest = [&](const VertexList& want) {
      VertexList w = want;
      std::sort(w.begin(), w.end());
      return w == t.forest;
    };
    auto child = [&](const Graph& sub, const VertexList& sub_ids, std::size_t i) {
      if (i >= t.children.size()) return fail("missing child");
      return node(sub, sub_ids, t.children[i], at + "." + std::to_string(i));
    };
    auto globals = [&](const VertexList& loc) {
      VertexList out;
      for (Vertex v : loc) out.push_back(ids[v]);
      return out;
    };

    switch (t.kind) {
      case TraceNode::Kind::leaf: {
        if (!t.children.empty()) return fail("leaf with children");
        if (t.method == "empty") {
          if (t.n != 0) return fail("empty leaf with vertices");
        } else if (t.method == "acyclic") {
          if (t.m != t.n - 1 || !is_connected(h)) return fail("acyclic leaf is not a tree");
          if (static_cast<long>(t.forest.size()) != t.n) return fail("tree leaf keeps too little");
        } else if (t.method != "exact") {
          return fail("unknown leaf method " + t.method);
        }
        Rational need = c_.bound_vertex.a * Rational(t.n) - c_.bound_vertex.b * Rational(t.m);
        if (Rational(static_cast<long long>(t.forest.size())) < need) short_leaves.push_back(at);
        return {};
      }
      case TraceNode::Kind::split: {
        auto comps = connected_components(h);
        if (comps.size() < 2 || comps.size() != t.children.size())
          return fail("split does not match the components");
        VertexList all;
        for (std::size_t i = 0; i < comps.size(); ++i) {
          auto [sub, rel] = induced_subgraph(h, comps[i]);
          if (auto e = child(sub, globals(rel.new_to_old), i); !e.empty()) return e;
          all.insert(all.end(), t.children[i].forest.begin(), t.children[i].forest.end());
        }
        return same_forest(all) ? "" : fail("split forest is not the union of its parts");
      }
      case TraceNode::Kind::bridge: {
        Edge e = std::minmax(t.removed_edge.first, t.removed_edge.second);
        auto br = bridges(h);
        bool found = false;
        for (auto [u, v] : br) found |= Edge(std::minmax(u, v)) == e;
        if (!found || t.children.size() != 1) return fail("removed edge is not a bridge");
        if (auto err = child(delete_edges(h, std::span(&e, 1)), ids, 0); !err.empty()) return err;
        return same_forest(t.children[0].forest) ? "" : fail("bridge forest differs from child");
      }
      case TraceNode::Kind::greedy: {
        greedy = true;
        Vertex v = t.removed_vertex;
        if (v < 0 || v >= h.order() || t.children.size() != 1) return fail("bad greedy vertex");
        auto [sub, rel] = delete_vertices(h, std::span(&v, 1));
        if (auto err = child(sub, globals(rel.new_to_old), 0); !err.empty()) return err;
        return same_forest(t.children[0].forest) ? "" : fail("greedy forest differs from child");
      }
      case TraceNode::Kind::step: {
        if (!t.step || t.children.size() != 1) return fail("step node without a step");
        ReductionStep s = *t.step;
        const RuleSpec* spec = nullptr;
        try {
          spec = &find_rule(c_.cls, s.rule);
        } catch (const ReducerError& e) {
          return fail(e.what());
        }
        if (s.variant < 0 || s.variant >= static_cast<int>(spec->variants.size()))
          return fail("variant out of range");
        const VariantSpec& var = spec->variants[s.variant];
        Triple want = var.scales_with_order ? Triple{h.order(), h.order(), h.order() - 1}
                                            : var.triple;
        if (var.label != s.variant_label || !(want == s.triple))
          return fail("triple or label does not match the catalog");
        if (!check_triple(s.triple, bound_polygon(c_.cls)))
          return fail("triple is not valid on the polygon");
        auto applied = validate_step(h, c_.cls, s);
        if (!applied) return fail("step " + s.rule + " does not validate");
        if (s.edges_removed != t.step->edges_removed) return fail("edges_removed differs");
        VertexList child_ids;
        std::size_t next_apex = 0;
        for (Vertex old : applied->new_to_old) {
          if (old >= 0) {
            child_ids.push_back(ids[old]);
            continue;
          }
          if (next_apex >= t.apex_ids.size()) return fail("too few apex ids");
          Vertex id = t.apex_ids[next_apex++];
          if (id < c_.n || !apex_ids_.insert(id).second) return fail("apex id reused");
          child_ids.push_back(id);
        }
        if (next_apex != t.apex_ids.size()) return fail("too many apex ids");
        if (auto err = child(applied->graph, child_ids, 0); !err.empty()) return err;
        std::map<Vertex, Vertex> back;
        for (std::size_t i = 0; i < child_ids.size(); ++i) back[child_ids[i]] = static_cast<Vertex>(i);
        VertexList sub;
        for (Vertex v : t.children[0].forest) sub.push_back(back.at(v));
        std::sort(sub.begin(), sub.end());
        return same_forest(globals(lift_forest(s, *applied, sub)))
                   ? ""
                   : fail("forest is not the lift of the child's forest");
      }
    }
    return fail("unknown node");
  }

  const ForestCertificate& c_;
  std::set<Vertex> apex_ids_;
};

}  // namespace

VerificationReport verify_certificate(const Graph& g, const ForestCertificate& c) {
  VerificationReport r;
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const bool shape = c.n == g.order() && c.m == static_cast<long>(g.size());
  add("graph", shape, shape ? "order and size match" : "certificate is for another graph");
  const int gi = girth(g);
  add("girth", gi >= required_girth(c.cls),
      "girth " + (gi == kInfiniteGirth ? std::string("inf") : std::to_string(gi)));

  bool in_range = std::all_of(c.forest.begin(), c.forest.end(),
                              [&](Vertex v) { return v >= 0 && v < g.order(); });
  bool forest_ok = in_range && std::is_sorted(c.forest.begin(), c.forest.end()) &&
                   std::adjacent_find(c.forest.begin(), c.forest.end()) == c.forest.end() &&
                   is_induced_forest(g, c.forest);
  add("forest", forest_ok,
      std::to_string(c.forest.size()) + " vertices" + (forest_ok ? "" : ", not an induced forest"));

  BestBound bb = best_bound(c.cls, Rational(g.order()), Rational(static_cast<long long>(g.size())));
  bool claim_ok = bb.value == c.claimed && bb.vertex == c.bound_vertex;
  bool meets = Rational(static_cast<long long>(c.forest.size())) >= c.claimed;
  add("bound", claim_ok && (meets || c.guarantee == Guarantee::heuristic),
      "claimed " + to_string(c.claimed) + (claim_ok ? "" : " (expected " + to_string(bb.value) + ")") +
          (meets ? ", met" : ", not met"));

  if (!shape || !in_range) {
    add("trace", false, "skipped");
    return r;
  }
  Replay replay(c);
  std::string err = replay.run(g);
  add("trace", err.empty(), err.empty() ? "replayed" : err);

  std::string why;
  if (replay.greedy) why = "greedy fallback used";
  if (!replay.short_leaves.empty()) why = "leaf " + replay.short_leaves.front() + " misses the bound";
  bool certified_ok = c.guarantee == Guarantee::heuristic || why.empty();
  add("guarantee", certified_ok, to_string(c.guarantee) + (why.empty() ? "" : ": " + why));
  return r;
}

}  // namespace forest
