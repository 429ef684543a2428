#pragma once

#include <string>

#include "json.hpp"
#include "kwedge/extension_graph.hpp"
#include "kwedge/oracle.hpp"
#include "kwedge/search.hpp"
#include "kwedge/structural.hpp"
#include "kwedge/sumset.hpp"
#include "kwedge/theorem.hpp"

namespace kwedge {

using ojson = nlohmann::ordered_json;

// Canonical JSON shapes. Field order is fixed, values are plain integers and
// booleans, and nothing volatile is emitted (search wall time only appears
// when include_timing is set), so equal inputs serialize byte-identically.

ojson to_json(const SumMultiplicityTable& table);
ojson to_json(const RepresentationList& reps);
ojson to_json(const ExtensionGraph& g);          // edges as [s, t, in_H] triples
ojson to_json(const CheckResult& check);
ojson to_json(const VerificationReport& report);
ojson to_json(const RatioVerdict& verdict);
ojson to_json(const StructuralReport& report);
ojson to_json(const SearchReport& report, bool include_timing = false);

/// Fixed flat schema shared by every CSV output:
/// set,n,k,size_k,size_k1,lhs_cross,rhs_cross,holds,hyp_theorem,hyp_question
std::string csv_header();
std::string csv_row(const RatioVerdict& verdict);

} // namespace kwedge
