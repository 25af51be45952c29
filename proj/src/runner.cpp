#include "relkit/runner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace relkit {

namespace {

enum class Status { pass, fail, error };

struct CheckResult {
  std::string id;
  std::string check;
  Status status;
  std::string summary;
  Json detail;
};

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::error: return "ERROR";
  }
  return "";
}

std::string point_text(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

class Session {
public:
  explicit Session(const RunOptions& o) : options(o), policy{o.seed} {}

  const RunOptions& options;
  SamplingPolicy policy;
  std::vector<CheckResult> results;
  Json certificates = Json::array();

  void add(std::string id, std::string check, bool pass, std::string summary, Json detail = Json::object()) {
    results.push_back({std::move(id), std::move(check), pass ? Status::pass : Status::fail, std::move(summary),
                       std::move(detail)});
  }

  // Runs one check; precondition and input failures become ERROR, anything
  // else unexpected becomes FAIL.
  void guard(const std::string& id, const std::string& check, const std::function<void()>& body) {
    try {
      body();
    } catch (const InputError& e) {
      results.push_back({id, check, Status::error, e.what(), Json{{"error", e.what()}}});
    } catch (const PreconditionError& e) {
      results.push_back({id, check, Status::error, e.what(), Json{{"error", e.what()}}});
    } catch (const std::exception& e) {
      results.push_back({id, check, Status::fail, std::string("internal error: ") + e.what(),
                         Json{{"error", e.what()}}});
    }
  }
};

const RatVector& require_point(const RunOptions& o, std::size_t dim) {
  if (!o.point) throw InputError("--point is required for this command");
  require_dim(o.point->size(), dim, "--point");
  return *o.point;
}

std::vector<RatVector> set_points(const Session& s, const PreparedPolyhedron& P, const InstanceDocument& doc) {
  std::vector<RatVector> pts = sample_points(P, s.policy);
  std::set<RatVector> seen(pts.begin(), pts.end());
  for (const auto& p : doc.probes)
    if (seen.insert(p).second) pts.push_back(p);
  return pts;
}

Json qri_certificate(const QriSeparationReport& r, const RatVector& x, const HPolyhedron& P) {
  return separation_certificate_document(*r.certificate, HPolyhedron::point(x), P);
}

// ---- per-instance checks ------------------------------------------------

void suite_check(Session& s, const InstanceDocument& doc, const PreparedPolyhedron& P,
                 const std::vector<RatVector>& pts) {
  Json reports = Json::array();
  bool ok = true;
  std::size_t interior = 0;
  for (const auto& x : pts) {
    const MembershipReport r = characterization_suite(P, x, doc.id);
    ok = ok && r.all_agree() && r.chain_holds();
    interior += r.ri_def;
    reports.push_back(to_json(r));
  }
  s.add(doc.id, "suite", ok,
        "points=" + std::to_string(pts.size()) + " interior=" + std::to_string(interior),
        Json{{"reports", reports}});
}

void qri_check(Session& s, const InstanceDocument& doc, const PreparedPolyhedron& P,
               const std::vector<RatVector>& pts) {
  Json rows = Json::array();
  bool ok = true;
  std::size_t outside = 0;
  for (const auto& x : pts) {
    const QriSeparationReport r = qri_nonmembership_via_separation(P, x);
    bool valid = r.consistent();
    Json row{{"point", to_json(x)}, {"outside_qri", r.outside_qri}};
    if (r.normal_cone_subspace) row["normal_cone_subspace"] = *r.normal_cone_subspace;
    if (r.certificate) {
      Json cert = qri_certificate(r, x, P.h);
      valid = valid && verify_certificate_document(cert);
      row["certificate"] = cert;
      s.certificates.push_back(std::move(cert));
    }
    outside += r.outside_qri;
    ok = ok && valid;
    row["consistent"] = valid;
    rows.push_back(std::move(row));
  }
  s.add(doc.id, "qri-sep", ok,
        "points=" + std::to_string(pts.size()) + " outside=" + std::to_string(outside), Json{{"points", rows}});
}

void image_check(Session& s, const std::string& id, const RatMatrix& A, const HPolyhedron& P,
                 const std::string& label) {
  const CommutationReport r = linear_image_ri_commutes(A, P);
  s.add(id, "image-ri", r.holds(), label + " forward=" + (r.forward_ok ? "ok" : "bad") +
                                       " backward=" + (r.backward_ok ? "ok" : "bad"),
        Json{{"matrix", to_json(A)}, {"report", to_json(r)}});
}

void set_instance_checks(Session& s, const InstanceDocument& doc, const PreparedPolyhedron& P) {
  const HPolyhedron& H = P.h;
  const std::string& id = doc.id;
  if (P.empty()) {
    s.guard(id, "empty-set", [&] {
      bool ri_throws = false;
      try {
        ri_point(P);
      } catch (const PreconditionError&) {
        ri_throws = true;
      }
      bool probes_ok = true;
      for (const auto& x : doc.probes) {
        const MembershipReport r = characterization_suite(P, x, id);
        probes_ok = probes_ok && !r.in_set && r.all_agree() && !r.ri_def;
      }
      const bool ok = is_empty(H) && h_to_v(H).points.empty() && ri_throws && probes_ok;
      s.add(id, "empty-set", ok, "generators=0 ri-point=undefined");
    });
    return;
  }
  s.guard(id, "roundtrip", [&] {
    const bool ok = same_set(H, v_to_h(P.v));
    s.add(id, "roundtrip", ok,
          "points=" + std::to_string(P.v.points.size()) + " rays=" + std::to_string(P.v.rays.size()),
          Json{{"generators", to_json(P.v)}});
  });
  s.guard(id, "ri-point", [&] {
    const RatVector x = ri_point(P);
    s.add(id, "ri-point", ri_membership(P, x).member, point_text(x), Json{{"point", to_json(x)}});
  });
  const std::vector<RatVector> pts = set_points(s, P, doc);
  s.guard(id, "suite", [&] { suite_check(s, doc, P, pts); });
  s.guard(id, "qri-sep", [&] { qri_check(s, doc, P, pts); });
  s.guard(id, "quasi-regularity", [&] {
    const QuasiRegularityReport r = quasi_regularity_report(P, id);
    s.add(id, "quasi-regularity", r.consistent() && r.verdict && r.sampled_equality_check,
          std::string("verdict=") + (r.verdict ? "true" : "false"), to_json(r));
  });
  s.guard(id, "image-ri", [&] {
    const std::size_t n = H.dim;
    image_check(s, id, RatMatrix({RatVector(n, Rational(1))}, n), H, "sum");
    if (n >= 2) image_check(s, id, RatMatrix({unit_vector(n, 0)}, n), H, "first-coordinate");
  });
}

void map_instance_checks(Session& s, const InstanceDocument& doc) {
  const auto& F = std::get<PolyhedralMap>(doc.payload);
  const std::string& id = doc.id;
  const MapContext ctx = prepare_map(F);
  s.guard(id, "graph-ri", [&] {
    std::vector<RatVector> pts = ctx.graph.empty() ? std::vector<RatVector>{} : graph_samples(ctx, s.policy);
    std::set<RatVector> seen(pts.begin(), pts.end());
    for (const auto& p : doc.probes)
      if (seen.insert(p).second) pts.push_back(p);
    Json reports = Json::array();
    bool ok = ctx.graph.empty() == ctx.domain.empty();
    std::size_t lhs_true = 0;
    for (const auto& z : pts) {
      const RatVector x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(F.m));
      const RatVector y(z.begin() + static_cast<std::ptrdiff_t>(F.m), z.end());
      const GraphRIReport r = graph_ri_check(ctx, x, y);
      const bool slice_ok = contains(image_at(F, x), y) == contains(F.graph, z);
      ok = ok && r.holds() && slice_ok;
      lhs_true += r.lhs;
      Json j = to_json(r);
      j["slice_consistent"] = slice_ok;
      reports.push_back(std::move(j));
    }
    s.add(id, "graph-ri", ok, "points=" + std::to_string(pts.size()) + " interior=" + std::to_string(lhs_true),
          Json{{"reports", reports}});
  });
  if (!ctx.graph.empty()) {
    s.guard(id, "quasi-regularity", [&] {
      const bool ok = ctx.quasi_reg_graph && ctx.quasi_reg_dom;
      s.add(id, "quasi-regularity", ok,
            std::string("graph=") + (ctx.quasi_reg_graph ? "true" : "false") +
                " domain=" + (ctx.quasi_reg_dom ? "true" : "false"),
            Json{{"quasi_reg_graph", ctx.quasi_reg_graph}, {"quasi_reg_dom", ctx.quasi_reg_dom}});
    });
  }
}

void epi_reports(Session& s, const InstanceDocument& doc, const FunctionContext& ctx) {
  Json reports = Json::array();
  bool ok = true;
  auto record = [&](const RatVector& x, const Rational& lambda, std::optional<bool> expect_lhs) {
    const EpiRelintReport r = epi_relint_report(ctx, x, lambda);
    const bool good = r.holds() && (!expect_lhs || r.lhs_ri == *expect_lhs);
    ok = ok && good;
    Json j = to_json(r);
    j["pass"] = good;
    reports.push_back(std::move(j));
  };
  const RatVector c = ri_point(ctx.domain);
  record(c, ctx.f(c) + 1, true);
  for (const auto& x : sample_points(ctx.domain, s.policy)) {
    record(x, ctx.f(x), false);
    record(x, ctx.f(x) + 1, std::nullopt);
  }
  for (const auto& p : doc.probes) {
    const RatVector x(p.begin(), p.end() - 1);
    record(x, p.back(), std::nullopt);
  }
  s.add(doc.id, "epi-ri", ok, "samples=" + std::to_string(reports.size()), Json{{"reports", reports}});
}

void function_instance_checks(Session& s, const InstanceDocument& doc) {
  const auto& f = std::get<PLConvexFunction>(doc.payload);
  const FunctionContext ctx = prepare_function(f);
  s.guard(doc.id, "epi-ri", [&] { epi_reports(s, doc, ctx); });
  s.guard(doc.id, "epi-quasireg", [&] {
    const EpiQuasiRegularityReport r = epi_quasireg_implies_dom(f);
    s.add(doc.id, "epi-quasireg", r.implication_holds(),
          std::string("epi=") + (r.epi.verdict ? "true" : "false") + " dom=" + (r.domain.verdict ? "true" : "false"),
          Json{{"epi", to_json(r.epi)}, {"domain", to_json(r.domain)}, {"implication_holds", r.implication_holds()}});
  });
}

void sequence_instance_checks(Session& s, const InstanceDocument& doc) {
  const auto& x = std::get<HybridSeq>(doc.payload);
  const L1BallClassification c = classify_l1ball(x);
  bool ok = c.chain_holds();
  if (doc.expect) {
    const auto& e = *doc.expect;
    ok = ok && (!e.in_set || *e.in_set == c.in_set) && (!e.in_iri || *e.in_iri == c.in_iri) &&
         (!e.in_qri || *e.in_qri == c.in_qri);
  }
  Json detail = to_json(c);
  detail["l1_norm"] = to_json(l1_norm(x));
  detail["gap_witness"] = is_gap_witness(x);
  s.add(doc.id, "seq-classify", ok,
        "norm=" + to_string(l1_norm(x)) + " set=" + (c.in_set ? "1" : "0") + " iri=" + (c.in_iri ? "1" : "0") +
            " qri=" + (c.in_qri ? "1" : "0"),
        std::move(detail));
}

void separation_check(Session& s, const std::string& id, const PreparedPolyhedron& A, const PreparedPolyhedron& B) {
  const SeparationEquivalenceReport r = separation_iff_ri_disjoint(A, B);
  Json cert = r.separation.separated()
                  ? separation_certificate_document(r.separation.certificate(), A.h, B.h)
                  : disjointness_witness_document(r.separation.witness(), A.h, B.h);
  const bool round_trip = verify_certificate_document(cert);
  const bool ok = r.equivalent() && r.certificate_valid && round_trip;
  Json detail{{"separated", r.separated},
              {"ri_disjoint", r.ri_disjoint},
              {"qri_disjoint", r.qri_disjoint},
              {"qri_structural", r.qri_structural},
              {"certificate_valid", r.certificate_valid},
              {"certificate", cert}};
  s.certificates.push_back(std::move(cert));
  s.add(id, "separate", ok, std::string("separated=") + (r.separated ? "true" : "false"), std::move(detail));
}

void difference_check(Session& s, const std::string& id, const HPolyhedron& P1, const HPolyhedron& P2) {
  const DifferenceReport r = set_difference_ri_commutes(P1, P2);
  Json detail{{"report", to_json(r.commutation)},
              {"part1", r.part1 ? to_json(*r.part1) : Json(nullptr)},
              {"part2", r.part2 ? to_json(*r.part2) : Json(nullptr)}};
  s.add(id, "diff-ri", r.holds(),
        std::string("forward=") + (r.commutation.forward_ok ? "ok" : "bad") +
            " backward=" + (r.commutation.backward_ok ? "ok" : "bad"),
        std::move(detail));
}

// ---- commands -----------------------------------------------------------

const InstanceDocument& single_set(const std::vector<InstanceDocument>& docs) {
  if (docs.empty()) throw InputError("expected at least one set instance");
  for (const auto& d : docs)
    if (!d.is_set()) throw InputError("instance " + d.id + " is not an hpoly or vpoly");
  return docs.front();
}

void require_kind(const std::vector<InstanceDocument>& docs, InstanceKind k) {
  if (docs.empty()) throw InputError("expected at least one " + std::string(kind_name(k)) + " instance");
  for (const auto& d : docs)
    if (d.kind != k) throw InputError("instance " + d.id + " is not a " + std::string(kind_name(k)));
}

void cmd_ri_check(Session& s, const std::vector<InstanceDocument>& docs) {
  single_set(docs);
  for (const auto& doc : docs) {
    const HPolyhedron H = doc.as_hpoly();
    const RatVector& x = require_point(s.options, H.dim);
    const RiResult r = ri_membership(H, x);
    Json detail{{"point", to_json(x)}, {"member", r.member}};
    if (r.witness) {
      const char* kinds[] = {"violated_inequality", "violated_equality", "active_inequality"};
      detail["witness"] = Json{{"kind", kinds[static_cast<int>(r.witness->kind)]}, {"row", r.witness->row}};
    }
    s.add(doc.id, "ri-check", true, point_text(x) + " member=" + (r.member ? "true" : "false"), std::move(detail));
  }
}

void cmd_ri_point(Session& s, const std::vector<InstanceDocument>& docs) {
  single_set(docs);
  for (const auto& doc : docs) {
    const PreparedPolyhedron P = prepare(doc.as_hpoly());
    const RatVector x = ri_point(P);
    s.add(doc.id, "ri-point", ri_membership(P, x).member, point_text(x), Json{{"point", to_json(x)}});
  }
}

std::vector<RatVector> query_points(const Session& s, const PreparedPolyhedron& P, const InstanceDocument& doc) {
  if (s.options.point) return {require_point(s.options, P.h.dim)};
  return set_points(s, P, doc);
}

void cmd_suite(Session& s, const std::vector<InstanceDocument>& docs) {
  single_set(docs);
  for (const auto& doc : docs) {
    const PreparedPolyhedron P = prepare(doc.as_hpoly());
    if (P.empty() && !s.options.point) throw PreconditionError("instance " + doc.id + " is empty; pass --point");
    suite_check(s, doc, P, query_points(s, P, doc));
  }
}

void cmd_normal_cone(Session& s, const std::vector<InstanceDocument>& docs) {
  single_set(docs);
  for (const auto& doc : docs) {
    const PreparedPolyhedron P = prepare(doc.as_hpoly());
    const RatVector& x = require_point(s.options, P.h.dim);
    const PolyCone N = normal_cone(P, x);
    const PolyCone K = conic_hull_at(P, x);
    bool polar = true;
    for (const auto& n : N.generators)
      for (const auto& g : K.generators) polar = polar && sgn(dot(n, g)) <= 0;
    const bool sub = is_subspace(N).subspace;
    s.add(doc.id, "normal-cone", polar,
          point_text(x) + " generators=" + std::to_string(N.generators.size()) + " subspace=" + (sub ? "true" : "false"),
          Json{{"point", to_json(x)}, {"cone", to_json(N)}, {"subspace", sub}, {"polarity_holds", polar}});
  }
}

std::pair<PreparedPolyhedron, PreparedPolyhedron> two_sets(const std::vector<InstanceDocument>& docs) {
  single_set(docs);
  if (docs.size() != 2) throw InputError("expected exactly two set instances");
  return {prepare(docs[0].as_hpoly()), prepare(docs[1].as_hpoly())};
}

void cmd_separate(Session& s, const std::vector<InstanceDocument>& docs) {
  const auto [A, B] = two_sets(docs);
  separation_check(s, docs[0].id + "|" + docs[1].id, A, B);
}

void cmd_qri_sep(Session& s, const std::vector<InstanceDocument>& docs) {
  single_set(docs);
  for (const auto& doc : docs) {
    const PreparedPolyhedron P = prepare(doc.as_hpoly());
    if (P.empty()) throw PreconditionError("instance " + doc.id + " is empty");
    qri_check(s, doc, P, query_points(s, P, doc));
  }
}

void cmd_graph_ri(Session& s, const std::vector<InstanceDocument>& docs) {
  require_kind(docs, InstanceKind::map);
  for (auto doc : docs) {
    if (s.options.point) {
      const auto& F = std::get<PolyhedralMap>(doc.payload);
      doc.probes = {require_point(s.options, F.m + F.n)};
      const MapContext ctx = prepare_map(F);
      const RatVector& z = doc.probes[0];
      const GraphRIReport r = graph_ri_check(ctx, RatVector(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(F.m)),
                                             RatVector(z.begin() + static_cast<std::ptrdiff_t>(F.m), z.end()));
      s.add(doc.id, "graph-ri", r.holds(),
            point_text(z) + " lhs=" + (r.lhs ? "true" : "false") + " rhs=" + (r.rhs ? "true" : "false"), to_json(r));
    } else {
      map_instance_checks(s, doc);
    }
  }
}

void cmd_epi_ri(Session& s, const std::vector<InstanceDocument>& docs) {
  require_kind(docs, InstanceKind::plfunction);
  for (const auto& doc : docs) {
    const FunctionContext ctx = prepare_function(std::get<PLConvexFunction>(doc.payload));
    if (s.options.point || s.options.lambda) {
      const RatVector& x = require_point(s.options, ctx.f.dim());
      if (!s.options.lambda) throw InputError("--lambda is required with --point");
      const EpiRelintReport r = epi_relint_report(ctx, x, *s.options.lambda);
      s.add(doc.id, "epi-ri", r.holds(),
            point_text(x) + " lambda=" + to_string(*s.options.lambda) + " ri=" + (r.lhs_ri ? "true" : "false") +
                (r.affine_instance ? " affine" : ""),
            to_json(r));
    } else {
      epi_reports(s, doc, ctx);
    }
  }
}

void cmd_image_ri(Session& s, const std::vector<InstanceDocument>& docs) {
  single_set(docs);
  if (!s.options.matrix) throw InputError("--matrix is required for image-ri");
  for (const auto& doc : docs) image_check(s, doc.id, *s.options.matrix, doc.as_hpoly(), "matrix");
}

void cmd_diff_ri(Session& s, const std::vector<InstanceDocument>& docs) {
  two_sets(docs);
  difference_check(s, docs[0].id + "|" + docs[1].id, docs[0].as_hpoly(), docs[1].as_hpoly());
}

void cmd_seq_classify(Session& s, const std::vector<InstanceDocument>& docs) {
  require_kind(docs, InstanceKind::sequence);
  for (const auto& doc : docs) sequence_instance_checks(s, doc);
}

void cmd_verify_corpus(Session& s, std::vector<InstanceDocument> docs) {
  std::sort(docs.begin(), docs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < docs.size(); ++i)
    if (docs[i].id == docs[i - 1].id) throw InputError("duplicate instance id " + docs[i].id);

  std::vector<std::pair<const InstanceDocument*, PreparedPolyhedron>> sets;
  for (const auto& doc : docs) {
    switch (doc.kind) {
      case InstanceKind::hpoly:
      case InstanceKind::vpoly:
        s.guard(doc.id, "set", [&] {
          PreparedPolyhedron P = prepare(doc.as_hpoly());
          set_instance_checks(s, doc, P);
          if (!P.empty()) sets.emplace_back(&doc, std::move(P));
        });
        break;
      case InstanceKind::map: s.guard(doc.id, "map", [&] { map_instance_checks(s, doc); }); break;
      case InstanceKind::plfunction: s.guard(doc.id, "function", [&] { function_instance_checks(s, doc); }); break;
      case InstanceKind::sequence: s.guard(doc.id, "sequence", [&] { sequence_instance_checks(s, doc); }); break;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const auto& [d1, P1] = sets[i];
      const auto& [d2, P2] = sets[j];
      if (P1.h.dim != P2.h.dim) continue;
      const std::string id = d1->id + "|" + d2->id;
      s.guard(id, "separate", [&] { separation_check(s, id, P1, P2); });
      s.guard(id, "diff-ri", [&] { difference_check(s, id, P1.h, P2.h); });
    }
  }
  std::stable_sort(s.results.begin(), s.results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

Json error_report(const std::string& command, const RunOptions& o, const std::string& source, const std::string& msg) {
  return Json{{"command", command},
              {"seed", o.seed},
              {"error", Json{{"source", source}, {"message", msg}}},
              {"exit_code", kExitInputError}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"ri-check", "ri-point", "suite",        "normal-cone", "separate",
                                              "qri-sep",  "graph-ri", "epi-ri",       "image-ri",    "diff-ri",
                                              "seq-classify", "verify", "verify-corpus"};
  return names;
}

RatVector parse_vector_arg(std::string_view text) {
  RatVector v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

RatMatrix parse_matrix_arg(std::string_view text) {
  std::vector<RatVector> rows;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    rows.push_back(parse_vector_arg(text.substr(start, semi == std::string_view::npos ? text.npos : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  const std::size_t n = rows.front().size();
  return RatMatrix(std::move(rows), n);
}

RunReport run(const std::string& command, const RunOptions& options, const std::vector<RunInput>& inputs) {
  RunReport out;
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    out.exit_code = kExitInputError;
    out.json = error_report(command, options, "", "unknown command");
    out.lines.push_back("ERROR unknown command " + command);
    return out;
  }

  Session s(options);
  Json instance_ids = Json::array();
  try {
    if (command == "verify") {
      if (inputs.empty()) throw InputError("expected at least one certificate document");
      for (const auto& in : inputs) {
        Json doc;
        try {
          doc = Json::parse(in.text);
        } catch (const nlohmann::json::parse_error&) {
          throw DocumentError(in.source, "malformed JSON");
        }
        try {
          const bool ok = verify_certificate_document(doc);
          s.add(in.source, "verify", ok, ok ? "certificate valid" : "certificate invalid");
        } catch (const DocumentError& e) {
          throw DocumentError(in.source + ": " + e.where(), e.what());
        }
        instance_ids.push_back(in.source);
      }
    } else {
      std::vector<InstanceDocument> docs;
      for (const auto& in : inputs) {
        try {
          docs.push_back(parse_instance(in.text));
        } catch (const DocumentError& e) {
          out.exit_code = kExitInputError;
          out.json = error_report(command, options, in.source, e.what());
          out.lines.push_back("ERROR " + in.source + ": " + e.what());
          return out;
        }
      }
      if (command == "verify-corpus") {
        if (docs.empty()) throw InputError("corpus is empty");
        cmd_verify_corpus(s, docs);
        std::vector<std::string> ids;
        for (const auto& d : docs) ids.push_back(d.id);
        std::sort(ids.begin(), ids.end());
        for (auto& id : ids) instance_ids.push_back(id);
      } else {
        for (const auto& d : docs) instance_ids.push_back(d.id);
        if (command == "ri-check") cmd_ri_check(s, docs);
        else if (command == "ri-point") cmd_ri_point(s, docs);
        else if (command == "suite") cmd_suite(s, docs);
        else if (command == "normal-cone") cmd_normal_cone(s, docs);
        else if (command == "separate") cmd_separate(s, docs);
        else if (command == "qri-sep") cmd_qri_sep(s, docs);
        else if (command == "graph-ri") cmd_graph_ri(s, docs);
        else if (command == "epi-ri") cmd_epi_ri(s, docs);
        else if (command == "image-ri") cmd_image_ri(s, docs);
        else if (command == "diff-ri") cmd_diff_ri(s, docs);
        else if (command == "seq-classify") cmd_seq_classify(s, docs);
      }
    }
  } catch (const InputError& e) {
    out.exit_code = kExitInputError;
    out.json = error_report(command, options, "", e.what());
    out.lines.push_back(std::string("ERROR ") + e.what());
    return out;
  } catch (const PreconditionError& e) {
    out.exit_code = kExitInputError;
    out.json = error_report(command, options, "", e.what());
    out.lines.push_back(std::string("ERROR ") + e.what());
    return out;
  }

  std::size_t failures = 0, errors = 0;
  Json results = Json::array();
  for (const auto& r : s.results) {
    failures += r.status == Status::fail;
    errors += r.status == Status::error;
    out.lines.push_back(std::string(status_name(r.status)) + " " + r.id + " " + r.check +
                        (r.summary.empty() ? "" : " " + r.summary));
    results.push_back(Json{{"id", r.id}, {"check", r.check}, {"status", status_name(r.status)},
                           {"summary", r.summary}, {"detail", r.detail}});
  }
  out.exit_code = errors ? kExitInputError : failures ? kExitViolation : kExitOk;
  out.json = Json{{"command", command},
                  {"seed", options.seed},
                  {"instances", instance_ids},
                  {"results", results},
                  {"certificates", s.certificates},
                  {"summary", Json{{"checks", s.results.size()}, {"failures", failures}, {"errors", errors}}},
                  {"exit_code", out.exit_code}};
  return out;
}

}  // namespace relkit
