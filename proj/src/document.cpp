#include "relkit/document.hpp"

#include <algorithm>
#include <set>

namespace relkit {

namespace {

std::string at_index(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::string at_field(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw DocumentError(where, std::string("expected object, got ") + j.type_name());
}

void require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where, std::string("expected array, got ") + j.type_name());
}

void reject_unknown(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
    if (!ok) throw DocumentError(at_field(where, it.key()), "unknown field");
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(at_field(where, key), "missing field");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw DocumentError(where, "expected nonnegative integer");
  return j.get<std::size_t>();
}

bool bool_from_json(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw DocumentError(where, "expected boolean");
  return j.get<bool>();
}

std::vector<RatVector> vectors_from_json(const Json& j, std::size_t dim, const std::string& where) {
  require_array(j, where);
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    RatVector v = vector_from_json(j[i], at_index(where, i));
    if (v.size() != dim)
      throw DocumentError(at_index(where, i),
                          "dimension mismatch: length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
    out.push_back(std::move(v));
  }
  return out;
}

PolyhedralMap map_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"graph", "m", "n"});
  PolyhedralMap F;
  F.graph = hpoly_from_json(field(j, "graph", where), at_field(where, "graph"));
  F.m = count_from_json(field(j, "m", where), at_field(where, "m"));
  F.n = count_from_json(field(j, "n", where), at_field(where, "n"));
  if (F.graph.dim != F.m + F.n) throw DocumentError(at_field(where, "graph.dim"), "dimension mismatch: expected m + n");
  return F;
}

PLConvexFunction function_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"pieces", "domain"});
  PLConvexFunction f;
  f.domain = hpoly_from_json(field(j, "domain", where), at_field(where, "domain"));
  const std::string pw = at_field(where, "pieces");
  const Json& pieces = field(j, "pieces", where);
  require_array(pieces, pw);
  if (pieces.empty()) throw DocumentError(pw, "at least one piece required");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    RatVector row = vector_from_json(pieces[i], at_index(pw, i));
    if (row.size() != f.domain.dim + 1)
      throw DocumentError(at_index(pw, i), "dimension mismatch: expected slope entries plus intercept");
    Rational c = row.back();
    row.pop_back();
    f.pieces.push_back({std::move(row), std::move(c)});
  }
  return f;
}

SequenceExpectation expectation_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"in_set", "in_iri", "in_qri"});
  SequenceExpectation e;
  if (j.contains("in_set")) e.in_set = bool_from_json(j["in_set"], at_field(where, "in_set"));
  if (j.contains("in_iri")) e.in_iri = bool_from_json(j["in_iri"], at_field(where, "in_iri"));
  if (j.contains("in_qri")) e.in_qri = bool_from_json(j["in_qri"], at_field(where, "in_qri"));
  return e;
}

Json optional_rational(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }

std::optional<Rational> optional_rational_from_json(const Json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  return rational_from_json(j, where);
}

std::string_view witness_kind(RiWitness::Kind k) {
  switch (k) {
    case RiWitness::Kind::violated_inequality: return "violated_inequality";
    case RiWitness::Kind::violated_equality: return "violated_equality";
    case RiWitness::Kind::active_inequality: return "active_inequality";
  }
  return "";
}

}  // namespace

std::string_view kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::hpoly: return "hpoly";
    case InstanceKind::vpoly: return "vpoly";
    case InstanceKind::map: return "map";
    case InstanceKind::plfunction: return "plfunction";
    case InstanceKind::sequence: return "sequence";
  }
  return "";
}

HPolyhedron InstanceDocument::as_hpoly() const {
  if (kind == InstanceKind::hpoly) return std::get<HPolyhedron>(payload);
  if (kind == InstanceKind::vpoly) return v_to_h(std::get<VPolyhedron>(payload));
  throw InputError("instance " + id + " is not a set");
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw DocumentError(where, std::string("expected rational string \"p/q\", got ") + j.type_name());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw DocumentError(where, e.what());
  }
}

RatVector vector_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  RatVector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], at_index(where, i)));
  return v;
}

RatMatrix matrix_from_json(const Json& j, std::size_t ncols, const std::string& where) {
  RatMatrix m(ncols);
  for (auto& row : vectors_from_json(j, ncols, where)) m.append_row(std::move(row));
  return m;
}

HPolyhedron hpoly_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"A", "b", "E", "d", "dim"});
  const std::size_t dim = count_from_json(field(j, "dim", where), at_field(where, "dim"));
  HPolyhedron P(dim);
  if (j.contains("A")) P.A = matrix_from_json(j["A"], dim, at_field(where, "A"));
  if (j.contains("b")) P.b = vector_from_json(j["b"], at_field(where, "b"));
  if (j.contains("E")) P.E = matrix_from_json(j["E"], dim, at_field(where, "E"));
  if (j.contains("d")) P.d = vector_from_json(j["d"], at_field(where, "d"));
  if (P.b.size() != P.A.nrows())
    throw DocumentError(at_field(where, "b"), "dimension mismatch: " + std::to_string(P.b.size()) + " entries for " +
                                                  std::to_string(P.A.nrows()) + " rows of A");
  if (P.d.size() != P.E.nrows())
    throw DocumentError(at_field(where, "d"), "dimension mismatch: " + std::to_string(P.d.size()) + " entries for " +
                                                  std::to_string(P.E.nrows()) + " rows of E");
  return P;
}

VPolyhedron vpoly_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"points", "rays", "dim"});
  VPolyhedron V;
  V.dim = count_from_json(field(j, "dim", where), at_field(where, "dim"));
  if (j.contains("points")) V.points = vectors_from_json(j["points"], V.dim, at_field(where, "points"));
  if (j.contains("rays")) V.rays = vectors_from_json(j["rays"], V.dim, at_field(where, "rays"));
  return V;
}

HybridSeq sequence_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"prefix", "tail"});
  HybridSeq x;
  if (j.contains("prefix")) x.prefix = vector_from_json(j["prefix"], at_field(where, "prefix"));
  if (j.contains("tail") && !j["tail"].is_null()) {
    const std::string tw = at_field(where, "tail");
    const Json& t = j["tail"];
    require_object(t, tw);
    reject_unknown(t, tw, {"c", "q", "start"});
    GeometricTail tail;
    tail.c = rational_from_json(field(t, "c", tw), at_field(tw, "c"));
    tail.q = rational_from_json(field(t, "q", tw), at_field(tw, "q"));
    tail.start = t.contains("start") ? count_from_json(t["start"], at_field(tw, "start")) : x.prefix.size() + 1;
    x.tail = tail;
  }
  try {
    x.validate();
  } catch (const InputError& e) {
    throw DocumentError(at_field(where, "tail"), e.what());
  }
  return x;
}

InstanceDocument parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
  return instance_from_json(doc);
}

InstanceDocument instance_from_json(const Json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"id", "kind", "payload", "probes", "expect"});
  InstanceDocument out;
  const Json& id = field(doc, "id", "");
  if (!id.is_string() || id.get<std::string>().empty()) throw DocumentError("id", "expected nonempty string");
  out.id = id.get<std::string>();

  const Json& kind = field(doc, "kind", "");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  const Json& payload = field(doc, "payload", "");
  std::size_t probe_dim = 0;
  if (k == "hpoly") {
    out.kind = InstanceKind::hpoly;
    auto P = hpoly_from_json(payload, "payload");
    probe_dim = P.dim;
    out.payload = std::move(P);
  } else if (k == "vpoly") {
    out.kind = InstanceKind::vpoly;
    auto V = vpoly_from_json(payload, "payload");
    probe_dim = V.dim;
    out.payload = std::move(V);
  } else if (k == "map") {
    out.kind = InstanceKind::map;
    auto F = map_from_json(payload, "payload");
    probe_dim = F.m + F.n;
    out.payload = std::move(F);
  } else if (k == "plfunction") {
    out.kind = InstanceKind::plfunction;
    auto f = function_from_json(payload, "payload");
    probe_dim = f.dim() + 1;
    out.payload = std::move(f);
  } else if (k == "sequence") {
    out.kind = InstanceKind::sequence;
    out.payload = sequence_from_json(payload, "payload");
  } else {
    throw DocumentError("kind", "expected one of hpoly, vpoly, map, plfunction, sequence");
  }

  if (doc.contains("probes")) {
    if (out.kind == InstanceKind::sequence) throw DocumentError("probes", "not supported for sequences");
    out.probes = vectors_from_json(doc["probes"], probe_dim, "probes");
  }
  if (doc.contains("expect")) {
    if (out.kind != InstanceKind::sequence) throw DocumentError("expect", "only supported for sequences");
    out.expect = expectation_from_json(doc["expect"], "expect");
  }
  return out;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (const auto& r : m.rows()) a.push_back(to_json(r));
  return a;
}

Json to_json(const HPolyhedron& P) {
  return Json{{"A", to_json(P.A)}, {"b", to_json(P.b)}, {"E", to_json(P.E)}, {"d", to_json(P.d)}, {"dim", P.dim}};
}

Json to_json(const VPolyhedron& V) {
  Json pts = Json::array(), rays = Json::array();
  for (const auto& p : V.points) pts.push_back(to_json(p));
  for (const auto& r : V.rays) rays.push_back(to_json(r));
  return Json{{"points", pts}, {"rays", rays}, {"dim", V.dim}};
}

Json to_json(const PolyCone& C) {
  Json gens = Json::array();
  for (const auto& g : C.generators) gens.push_back(to_json(g));
  return Json{{"generators", gens}, {"dim", C.dim}};
}

Json to_json(const HybridSeq& x) {
  Json tail = nullptr;
  if (x.tail) tail = Json{{"c", to_json(x.tail->c)}, {"q", to_json(x.tail->q)}, {"start", x.tail->start}};
  return Json{{"prefix", to_json(x.prefix)}, {"tail", tail}};
}

Json to_json(const MembershipReport& r) {
  Json j{{"point", to_json(r.point)},
         {"in_set", r.in_set},
         {"ri_def", r.ri_def},
         {"prolongation", r.prolongation},
         {"cone_subspace", r.cone_subspace},
         {"closed_cone_subspace", r.closed_cone_subspace},
         {"normal_cone_subspace", r.normal_cone_subspace},
         {"cone_closure_structural", r.cone_closure_structural},
         {"all_agree", r.all_agree()},
         {"chain_holds", r.chain_holds()}};
  if (!r.set_id.empty()) j["set_id"] = r.set_id;
  if (r.ri_witness)
    j["ri_witness"] = Json{{"kind", witness_kind(r.ri_witness->kind)}, {"row", r.ri_witness->row}};
  if (!r.prolongation_endpoints.empty()) {
    Json ends = Json::array();
    for (const auto& u : r.prolongation_endpoints) ends.push_back(to_json(u));
    j["prolongation_endpoints"] = ends;
  }
  if (r.violating_functional) j["violating_functional"] = to_json(*r.violating_functional);
  return j;
}

Json to_json(const QuasiRegularityReport& r) {
  Json j{{"cond_finite_dim", r.cond_finite_dim},     {"cond_int_nonempty", r.cond_int_nonempty},
         {"cond_ri_nonempty", r.cond_ri_nonempty},   {"verdict", r.verdict},
         {"sampled_equality_check", r.sampled_equality_check}, {"consistent", r.consistent()}};
  if (!r.set_id.empty()) j["set_id"] = r.set_id;
  return j;
}

Json to_json(const L1BallClassification& c) {
  return Json{{"in_set", c.in_set},
              {"in_iri", c.in_iri},
              {"in_qri", c.in_qri},
              {"finite_support", c.finite_support},
              {"chain_holds", c.chain_holds()}};
}

Json to_json(const GraphRIReport& r) {
  return Json{{"x", to_json(r.x)},
              {"y", to_json(r.y)},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"quasi_reg_graph", r.quasi_reg_graph},
              {"quasi_reg_dom", r.quasi_reg_dom},
              {"equality_holds", r.equality_holds()},
              {"graph_inclusion_holds", r.graph_inclusion_holds()},
              {"domain_inclusion_holds", r.domain_inclusion_holds()}};
}

Json to_json(const EpiRelintReport& r) {
  return Json{{"x", to_json(r.x)},       {"lambda", to_json(r.lambda)}, {"lhs_ri", r.lhs_ri},
              {"rhs_ri", r.rhs_ri},      {"lhs_iri", r.lhs_iri},        {"rhs_iri", r.rhs_iri},
              {"lhs_qri", r.lhs_qri},    {"rhs_qri", r.rhs_qri},        {"affine_instance", r.affine_instance},
              {"holds", r.holds()}};
}

Json to_json(const CommutationReport& r) {
  Json fwd = Json::array();
  for (const auto& p : r.forward_samples) fwd.push_back(to_json(p));
  return Json{{"forward_samples", fwd},
              {"forward_ok", r.forward_ok},
              {"image_point", to_json(r.image_point)},
              {"preimage", r.preimage ? to_json(*r.preimage) : Json(nullptr)},
              {"backward_ok", r.backward_ok}};
}

Json to_json(const InstanceDocument& doc) {
  Json payload;
  switch (doc.kind) {
    case InstanceKind::hpoly: payload = to_json(std::get<HPolyhedron>(doc.payload)); break;
    case InstanceKind::vpoly: payload = to_json(std::get<VPolyhedron>(doc.payload)); break;
    case InstanceKind::map: {
      const auto& F = std::get<PolyhedralMap>(doc.payload);
      payload = Json{{"graph", to_json(F.graph)}, {"m", F.m}, {"n", F.n}};
      break;
    }
    case InstanceKind::plfunction: {
      const auto& f = std::get<PLConvexFunction>(doc.payload);
      Json pieces = Json::array();
      for (const auto& p : f.pieces) pieces.push_back(to_json(concat(p.slope, {p.intercept})));
      payload = Json{{"pieces", pieces}, {"domain", to_json(f.domain)}};
      break;
    }
    case InstanceKind::sequence: payload = to_json(std::get<HybridSeq>(doc.payload)); break;
  }
  Json j{{"id", doc.id}, {"kind", kind_name(doc.kind)}, {"payload", payload}};
  if (!doc.probes.empty()) {
    Json probes = Json::array();
    for (const auto& p : doc.probes) probes.push_back(to_json(p));
    j["probes"] = probes;
  }
  if (doc.expect) {
    Json e = Json::object();
    if (doc.expect->in_set) e["in_set"] = *doc.expect->in_set;
    if (doc.expect->in_iri) e["in_iri"] = *doc.expect->in_iri;
    if (doc.expect->in_qri) e["in_qri"] = *doc.expect->in_qri;
    j["expect"] = e;
  }
  return j;
}

Json separation_certificate_document(const SeparationCertificate& c, const HPolyhedron& P1, const HPolyhedron& P2) {
  return Json{{"kind", "separation-certificate"},
              {"set1", to_json(P1)},
              {"set2", to_json(P2)},
              {"functional", to_json(c.functional)},
              {"sup1", optional_rational(c.sup1)},
              {"inf2", optional_rational(c.inf2)},
              {"strict_witness_1", to_json(c.strict_witness_1)},
              {"strict_witness_2", to_json(c.strict_witness_2)}};
}

Json disjointness_witness_document(const DisjointnessWitness& w, const HPolyhedron& P1, const HPolyhedron& P2) {
  return Json{{"kind", "disjointness-witness"},
              {"set1", to_json(P1)},
              {"set2", to_json(P2)},
              {"common_point", to_json(w.common_point)}};
}

bool verify_certificate_document(const Json& doc) {
  require_object(doc, "");
  if (doc.contains("certificates")) {
    const Json& certs = doc["certificates"];
    require_array(certs, "certificates");
    if (certs.empty()) throw DocumentError("certificates", "no certificates to verify");
    bool ok = true;
    for (const auto& c : certs) ok = verify_certificate_document(c) && ok;
    return ok;
  }
  const Json& kind = field(doc, "kind", "");
  const HPolyhedron P1 = hpoly_from_json(field(doc, "set1", ""), "set1");
  const HPolyhedron P2 = hpoly_from_json(field(doc, "set2", ""), "set2");
  if (P1.dim != P2.dim) throw DocumentError("set2.dim", "dimension mismatch");
  if (kind == "separation-certificate") {
    SeparationCertificate c;
    c.functional = vector_from_json(field(doc, "functional", ""), "functional");
    c.sup1 = optional_rational_from_json(field(doc, "sup1", ""), "sup1");
    c.inf2 = optional_rational_from_json(field(doc, "inf2", ""), "inf2");
    c.strict_witness_1 = vector_from_json(field(doc, "strict_witness_1", ""), "strict_witness_1");
    c.strict_witness_2 = vector_from_json(field(doc, "strict_witness_2", ""), "strict_witness_2");
    return verify_separation(c, P1, P2);
  }
  if (kind == "disjointness-witness") {
    DisjointnessWitness w{vector_from_json(field(doc, "common_point", ""), "common_point")};
    return verify_disjointness_witness(w, P1, P2);
  }
  throw DocumentError("kind", "expected separation-certificate or disjointness-witness");
}

}  // namespace relkit
