#pragma once

#include <string>

#include <json.hpp>

#include "cuspidal/curve.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/multseq.hpp"
#include "cuspidal/topology.hpp"

// JSON encodings and the text / LaTeX / DOT emitters. Keys keep their
// insertion order, so rendering is deterministic; every record the CLI
// prints as JSON can be parsed back.

namespace cuspidal {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);
Json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);
Json to_json(const BinForm& f);
BinForm binform_from_json(const Json& j);

Json to_json(const SequenceInvariants& inv);
Json to_json(const MultiplicitySequence& seq);
MultiplicitySequence sequence_from_json(const Json& j);
Json to_json(const ValidationReport& report);

Json to_json(const CuspidalCurve& curve);
CuspidalCurve curve_from_json(const Json& j);

Json to_json(const InvariantReport& report);
InvariantReport report_from_json(const Json& j);

Json to_json(const DualGraph& graph);
Json to_json(const GroupPresentation& pres);

/// "(2_3)" / "(5)" when the sequence has compact form, else "".
std::string compact_notation(const MultiplicitySequence& seq);

/// "(2_3) = (2,2,2,1,1,1)" or the raw tuple when no compact form exists.
std::string render_sequence_text(const MultiplicitySequence& seq);

std::string render_curve_text(const CuspidalCurve& curve);
std::string render_report_text(const InvariantReport& report);
std::string render_graph_text(const DualGraph& graph);
std::string render_presentation_text(const GroupPresentation& pres);

/// Standalone LaTeX document showing the affine equation grouped as
/// residual - (X-Y)^(d-2) + XY(...).
std::string render_curve_latex(const CuspidalCurve& curve);

std::string render_dot(const DualGraph& graph);

}  // namespace cuspidal
