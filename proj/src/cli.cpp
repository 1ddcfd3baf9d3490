#include "forest/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "forest/audit.hpp"
#include "forest/bounds.hpp"
#include "forest/certificate.hpp"
#include "forest/embedding.hpp"
#include "forest/exact.hpp"
#include "forest/families.hpp"
#include "forest/graph_io.hpp"
#include "forest/polygon_plot.hpp"
#include "forest/reducer.hpp"
#include "forest/report.hpp"

namespace forest {

namespace {

using nlohmann::json;

// Reported with exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Graph g;
  std::string digest;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path == "-") {
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  os << f.rdbuf();
  return os.str();
}

Loaded load(const std::string& path, std::istream& in) {
  std::string text = slurp(path, in);
  try {
    return {parse_graph_text(text), digest_hex(text)};
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json vertices(const VertexList& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

json girth_json(int g) { return g == kInfiniteGirth ? json("inf") : json(g); }

void require_class(const Graph& g, GraphClass cls) {
  int gi = girth(g);
  if (gi < required_girth(cls))
    throw InputError("graph has girth " + std::to_string(gi) + ", class " + to_string(cls) +
                     " needs at least " + std::to_string(required_girth(cls)));
}

GraphClass class_arg(const std::string& s) {
  try {
    return parse_graph_class(s);
  } catch (const std::exception&) {
    throw InputError("unknown class " + s + " (expected girth4 or girth5)");
  }
}

json best_json(GraphClass cls, const Graph& g) {
  Rational n(g.order()), m(static_cast<long long>(g.size()));
  BestBound b = best_bound(cls, n, m);
  return {{"class", to_string(cls)},
          {"n", g.order()},
          {"m", g.size()},
          {"value", to_string(b.value)},
          {"ceil", ceil_of(b.value)},
          {"vertex", {{"a", to_string(b.vertex.a)}, {"b", to_string(b.vertex.b)}}}};
}

json catalog_json() {
  json a = json::array();
  for (const Formula& f : formula_catalog()) {
    json pieces = json::array();
    for (const LinearForm& p : f.pieces) pieces.push_back(p.to_string());
    a.push_back({{"id", f.id},
                 {"expression", f.expression},
                 {"applies_to", f.applies_to},
                 {"kind", f.kind == FormulaKind::lower ? "lower" : "upper"},
                 {"status", to_string(f.status)},
                 {"inputs", f.inputs},
                 {"pieces", pieces},
                 {"min_girth", f.min_girth}});
  }
  return a;
}

json audit_json(const AuditReport& r) {
  json degrees = json::object(), faces = json::object(), viol = json::array(),
       vviol = json::array();
  for (auto [d, c] : r.vertex_degrees) degrees[std::to_string(d)] = c;
  for (auto [l, c] : r.face_lengths) faces[std::to_string(l)] = c;
  for (const FaceViolation& v : r.violations)
    viol.push_back({{"face", v.face},
                    {"walk", vertices(v.walk)},
                    {"length", v.length},
                    {"heavy", v.heavy},
                    {"required", v.required}});
  for (const VertexViolation& v : r.vertex_violations)
    vviol.push_back({{"vertex", v.vertex + 1}, {"degree", v.degree}, {"predicate", v.predicate}});
  return {{"mode", to_string(r.mode)},
          {"vertex_degrees", degrees},
          {"face_lengths", faces},
          {"euler_sum", r.euler_sum},
          {"identity_holds", r.identity_holds},
          {"charge_estimate", r.charge_estimate},
          {"heavy_supply", r.heavy_supply},
          {"heavy_demand", r.heavy_demand},
          {"violations", viol},
          {"vertex_violations", vviol}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Maximum induced forests in planar graphs of girth 4 and 5", "inforest"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string file, cert_file, output, cls_name, formula, best_cls, mode, family;
  std::vector<int> params;
  bool catalog = false;
  double limit_s = 3600;
  std::uint64_t node_limit = 2'000'000'000ULL;
  int jobs = 1, threshold = 30, k = 1;

  auto* gen = app.add_subcommand("gen", "Generate a family member as a graph file");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* info = app.add_subcommand("info", "Basic invariants of a graph");
  info->add_option("file", file, "Graph file, - for standard input")->required();

  auto* bound = app.add_subcommand("bound", "Evaluate lower bounds");
  bound->add_option("file", file, "Graph file, - for standard input");
  auto* f_opt = bound->add_option("--formula", formula, "Formula id");
  bound->add_option("--best", best_cls, "Best polygon bound for a class")->excludes(f_opt);
  bound->add_flag("--catalog", catalog, "List every formula");

  auto* exact = app.add_subcommand("exact", "Exact forest number");
  exact->add_option("file", file, "Graph file, - for standard input")->required();
  exact->add_option("--limit-s", limit_s, "Time limit in seconds");
  exact->add_option("--node-limit", node_limit, "Branching node limit");
  exact->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* red = app.add_subcommand("reduce", "Certified forest via reduction rules");
  red->add_option("file", file, "Graph file, - for standard input")->required();
  red->add_option("--class", cls_name, "girth4 or girth5")->required();
  red->add_option("--threshold", threshold, "Solve components this small exactly")
      ->check(CLI::NonNegativeNumber);
  red->add_option("-o,--output", output, "Also write the certificate here");

  auto* ver = app.add_subcommand("verify", "Check a certificate against a graph");
  ver->add_option("file", file, "Graph file")->required();
  ver->add_option("cert", cert_file, "Certificate or reduce output")->required();

  auto* aud = app.add_subcommand("audit", "Discharging audit of a plane graph");
  aud->add_option("file", file, "Graph file, - for standard input")->required();
  aud->add_option("--mode", mode, "girth4 or girth5")->required();

  auto* kow = app.add_subcommand("refute-kowalik", "Claimed bound against k disjoint cubes");
  kow->add_option("--k", k, "Number of cubes")->required();

  auto* plot = app.add_subcommand("plot-polygon", "SVG of the feasible (a, b) region");
  plot->add_option("--class", cls_name, "girth4 or girth5")->required();
  plot->add_option("-o,--output", output, "SVG file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const std::string& command, const std::string& digest, json result) {
    out << envelope(command, digest, std::move(result)).dump(2) << "\n";
  };

  try {
    if (*gen) {
      Graph g;
      try {
        g = make_family(family, params);
      } catch (const FamilyError& e) {
        throw InputError(e.what());
      }
      std::ostringstream comment;
      comment << family;
      for (int p : params) comment << " " << p;
      std::string text = emit_graph(g, comment.str());
      if (output.empty()) {
        out << text;
        return 0;
      }
      write_text(output, text);
      emit("gen", digest_hex(text),
           {{"family", family}, {"params", params}, {"n", g.order()}, {"m", g.size()},
            {"file", output}});
      return 0;
    }

    if (*info) {
      Loaded l = load(file, in);
      const Graph& g = l.g;
      json r{{"n", g.order()},
             {"m", g.size()},
             {"girth", girth_json(girth(g))},
             {"min_degree", g.order() ? g.min_degree() : 0},
             {"max_degree", g.order() ? g.max_degree() : 0},
             {"components", connected_components(g).size()},
             {"bridges", bridges(g).size()},
             {"has_rotation", g.has_rotation() && g.order() > 0}};
      if (g.has_rotation() && g.order() > 0) {
        bool plane = is_plane_embedding(g);
        r["plane"] = plane;
        if (plane) {
          FaceSet fs = trace_faces(g);
          std::map<int, long> lengths;
          for (const VertexList& w : fs.walks) ++lengths[static_cast<int>(w.size())];
          json fl = json::object();
          for (auto [len, c] : lengths) fl[std::to_string(len)] = c;
          r["faces"] = fs.count();
          r["face_lengths"] = fl;
        }
      }
      emit("info", l.digest, r);
      return 0;
    }

    if (*bound) {
      if (catalog) {
        emit("bound", digest_hex("catalog"), {{"catalog", catalog_json()}});
        return 0;
      }
      if (file.empty()) throw InputError("bound needs a graph file unless --catalog is given");
      Loaded l = load(file, in);
      const Graph& g = l.g;
      if (!best_cls.empty()) {
        GraphClass cls = class_arg(best_cls);
        require_class(g, cls);
        emit("bound", l.digest, {{"best", best_json(cls, g)}});
        return 0;
      }
      if (!formula.empty()) {
        const Formula* f = nullptr;
        try {
          f = &find_formula(formula);
        } catch (const BoundsError& e) {
          throw InputError(e.what());
        }
        int gi = girth(g);
        if (gi < f->min_girth)
          throw InputError("formula " + formula + " needs girth at least " +
                           std::to_string(f->min_girth));
        FormulaInputs fi;
        fi.n = g.order();
        fi.m = static_cast<long>(g.size());
        fi.girth = gi == kInfiniteGirth ? std::max(f->min_girth, 3) : gi;
        if (g.order()) fi.max_degree = g.max_degree();
        if (g.order() <= 64) fi.alpha = max_independent_set(g).size;
        Rational v;
        try {
          v = eval_formula(formula, fi);
        } catch (const BoundsError& e) {
          throw InputError(e.what());
        }
        emit("bound", l.digest,
             {{"formula", formula},
              {"expression", f->expression},
              {"status", to_string(f->status)},
              {"kind", f->kind == FormulaKind::lower ? "lower" : "upper"},
              {"n", fi.n},
              {"m", fi.m},
              {"value", to_string(v)}});
        return 0;
      }
      json r = json::array();
      int gi = girth(g);
      for (GraphClass cls : {GraphClass::girth4, GraphClass::girth5})
        if (gi >= required_girth(cls)) r.push_back(best_json(cls, g));
      if (r.empty()) throw InputError("graph has triangles; no class bound applies");
      emit("bound", l.digest, {{"best", r}});
      return 0;
    }

    if (*exact) {
      Loaded l = load(file, in);
      SolverConfig cfg;
      cfg.time_limit_s = limit_s;
      cfg.node_limit = node_limit;
      cfg.jobs = jobs;
      SolveResult r = forest_number_exact(l.g, cfg);
      emit("exact", l.digest,
           {{"n", l.g.order()},
            {"m", l.g.size()},
            {"forest_number", r.forest_number},
            {"decycling_number", r.decycling_number},
            {"witness", vertices(r.witness)},
            {"nodes", r.nodes},
            {"elapsed_ms", r.elapsed_ms},
            {"optimal", r.optimal}});
      return 0;
    }

    if (*red) {
      GraphClass cls = class_arg(cls_name);
      Loaded l = load(file, in);
      require_class(l.g, cls);
      ReduceOptions opts;
      opts.threshold = threshold;
      ForestCertificate c = reduce(l.g, cls, opts);
      json cj = certificate_to_json(c);
      if (!output.empty()) write_text(output, cj.dump(2) + "\n");
      emit("reduce", l.digest, cj);
      return 0;
    }

    if (*ver) {
      Loaded l = load(file, in);
      std::string text = slurp(cert_file, in);
      ForestCertificate c;
      try {
        json j = json::parse(text);
        if (j.contains("command") && j.contains("result")) j = j.at("result");
        c = certificate_from_json(j);
      } catch (const json::exception& e) {
        throw InputError(cert_file + ": " + e.what());
      } catch (const ReducerError& e) {
        throw InputError(cert_file + ": " + e.what());
      }
      VerificationReport rep = verify_certificate(l.g, c);
      emit("verify", digest_hex(l.digest + text), report_to_json(rep));
      return rep.passed() ? 0 : 1;
    }

    if (*aud) {
      GraphClass cls = class_arg(mode);
      Loaded l = load(file, in);
      require_class(l.g, cls);
      if (!l.g.has_rotation() || l.g.order() == 0) throw InputError("audit needs a rotation system");
      if (!is_connected(l.g)) throw InputError("audit needs a connected graph");
      AuditReport r;
      try {
        r = discharging_audit(l.g, cls);
      } catch (const GraphError& e) {
        throw InputError(e.what());
      }
      emit("audit", l.digest, audit_json(r));
      return 0;
    }

    if (*kow) {
      if (k < 1) throw InputError("--k must be at least 1");
      KowalikReport r = kowalik_refutation(k);
      emit("refute-kowalik", digest_hex("k=" + std::to_string(k)),
           {{"k", r.k},
            {"n", r.n},
            {"m", r.m},
            {"claimed", to_string(r.claimed)},
            {"actual", r.actual},
            {"violated", r.violated},
            {"margin", to_string(r.margin)}});
      return 0;
    }

    if (*plot) {
      GraphClass cls = class_arg(cls_name);
      std::string svg = polygon_svg(cls);
      if (output.empty()) {
        out << svg;
        return 0;
      }
      write_text(output, svg);
      json labels = json::array(), cons = json::array();
      for (const PolygonVertex& v : bound_polygon(cls).vertices) labels.push_back(vertex_label(v));
      for (const HalfPlane& h : bound_polygon(cls).constraints) cons.push_back(h.label);
      emit("plot-polygon", digest_hex(to_string(cls)),
           {{"class", to_string(cls)}, {"file", output}, {"vertices", labels},
            {"constraints", cons}});
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ReducerError& e) {
    err << "reduction failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace forest
