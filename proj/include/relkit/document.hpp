#ifndef RELKIT_DOCUMENT_HPP
#define RELKIT_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "relkit/errors.hpp"
#include "relkit/polyhedron.hpp"
#include "relkit/relint.hpp"
#include "relkit/separation.hpp"
#include "relkit/seqspace.hpp"
#include "relkit/setmaps.hpp"

namespace relkit {

using Json = nlohmann::ordered_json;

/// Parse or schema failure; `where` is a JSON path such as
/// "payload.b[1]" or "line 3, column 7".
class DocumentError : public InputError {
public:
  DocumentError(std::string where, const std::string& what)
      : InputError(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

enum class InstanceKind { hpoly, vpoly, map, plfunction, sequence };

std::string_view kind_name(InstanceKind k);

/// Expected classification attached to a sequence instance.
struct SequenceExpectation {
  std::optional<bool> in_set;
  std::optional<bool> in_iri;
  std::optional<bool> in_qri;
};

/// One parsed input document:
///   {"id": "...", "kind": "hpoly" | "vpoly" | "map" | "plfunction" | "sequence",
///    "payload": {...}, "probes": [[...], ...] (optional),
///    "expect": {...} (optional, sequences only)}
/// Probes are extra points (for maps: concatenated (x, y); for functions:
/// (x, lambda)) evaluated on top of the sampling policy.
struct InstanceDocument {
  std::string id;
  InstanceKind kind = InstanceKind::hpoly;
  std::variant<HPolyhedron, VPolyhedron, PolyhedralMap, PLConvexFunction, HybridSeq> payload;
  std::vector<RatVector> probes;
  std::optional<SequenceExpectation> expect;

  bool is_set() const { return kind == InstanceKind::hpoly || kind == InstanceKind::vpoly; }
  /// H-form of an hpoly or vpoly instance.
  HPolyhedron as_hpoly() const;
};

/// Parses a document from text. Throws DocumentError with a location.
InstanceDocument parse_instance(std::string_view text);
InstanceDocument instance_from_json(const Json& doc);

// Field-level readers, exposed for certificate documents.
Rational rational_from_json(const Json& j, const std::string& where);
RatVector vector_from_json(const Json& j, const std::string& where);
RatMatrix matrix_from_json(const Json& j, std::size_t ncols, const std::string& where);
HPolyhedron hpoly_from_json(const Json& j, const std::string& where);
VPolyhedron vpoly_from_json(const Json& j, const std::string& where);
HybridSeq sequence_from_json(const Json& j, const std::string& where);

Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const HPolyhedron& P);
Json to_json(const VPolyhedron& V);
Json to_json(const PolyCone& C);
Json to_json(const HybridSeq& x);
Json to_json(const MembershipReport& r);
Json to_json(const QuasiRegularityReport& r);
Json to_json(const L1BallClassification& c);
Json to_json(const GraphRIReport& r);
Json to_json(const EpiRelintReport& r);
Json to_json(const CommutationReport& r);
Json to_json(const InstanceDocument& doc);

/// Self-contained certificate documents: both sets' H-forms travel with the
/// evidence so `verify` needs nothing else.
Json separation_certificate_document(const SeparationCertificate& c, const HPolyhedron& P1,
                                     const HPolyhedron& P2);
Json disjointness_witness_document(const DisjointnessWitness& w, const HPolyhedron& P1,
                                   const HPolyhedron& P2);

/// Re-validates a certificate document. Throws DocumentError when it is
/// malformed; returns false when well-formed but invalid.
bool verify_certificate_document(const Json& doc);

}  // namespace relkit

#endif  // RELKIT_DOCUMENT_HPP
