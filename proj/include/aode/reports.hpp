#pragma once

#include <json.hpp>

#include "aode/curves.hpp"
#include "aode/solver.hpp"

namespace aode {

using Json = nlohmann::ordered_json;

/// Every numeric value is emitted as an exact decimal-free rational string
/// ("p" or "p/q"); structural integers (degrees, indices, counts) are plain
/// JSON integers. Nothing ever goes through floating point.

Json analyze_report(const DiffPoly& f);
Json bound_report_json(const BoundReport& rep);
Json solution_set_json(const SolutionSet& sols, bool warn_default_cap);

template <class K>
Json singular_report_json(const SingularReport<K>& rep);

template <class K>
Json resolution_trace_json(const ResolutionTrace<K>& trace);

template <class K>
Json points_json(const std::vector<ProjPoint<K>>& pts);

Json height_inequality_json(const HeightInequalityReport& rep);

Json error_json(const std::string& code, const std::string& message, int line = 0, int col = 0);

}  // namespace aode
