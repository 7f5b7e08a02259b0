#include "aode/reports.hpp"

#include "aode/factor.hpp"

namespace aode {

namespace {

template <class K>
Json point_json(const ProjPoint<K>& p) {
    Json j = Json::array();
    for (int i = 0; i < 3; ++i) j.push_back(FieldTraits<K>::str(p[i]));
    return j;
}

}  // namespace

Json analyze_report(const DiffPoly& f) {
    Json j;
    MSIndexReport ms = ms_index(f);
    j["equation"] = f.str();
    j["n"] = f.tdeg_all();
    j["d"] = f.d();
    j["ms_index"] = ms.index;
    j["ms_index_positive"] = ms.positive;
    Json per = Json::array();
    for (const auto& e : ms.per_i)
        per.push_back(Json{{"i", e.i}, {"deg_y", e.deg_y}, {"value", e.value}});
    j["per_i"] = per;
    j["maximally_comparable"] = is_maximally_comparable(f);
    try {
        j["irreducible"] = is_irreducible_over_qt(f.poly());
    } catch (const UnsupportedRangeError&) {
        j["irreducible"] = nullptr;
    }
    j["Tf"] = diffpoly_height(f).value().str();
    return j;
}

Json bound_report_json(const BoundReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["ms_index"] = rep.ms_index;
    j["s"] = rep.s;
    j["N"] = rep.N.str();
    j["mu"] = rep.mu.str();
    j["C"] = rep.C.str();
    j["final_bound"] = rep.final_bound.str();
    Json ledger = Json::array();
    for (const auto& e : rep.ledger)
        ledger.push_back(Json{{"formula", e.name}, {"anchor", e.formula}, {"value", e.value.str()}});
    j["ledger"] = ledger;
    return j;
}

Json solution_set_json(const SolutionSet& sols, bool warn_default_cap) {
    Json j;
    Json arr = Json::array();
    for (const auto& r : sols.solutions) arr.push_back(r.str());
    j["solutions"] = arr;
    Json fams = Json::array();
    for (const auto& f : sols.families)
        fams.push_back(Json{{"form", f.str()}, {"parameters", f.parameters()}});
    j["families"] = fams;
    j["cap"] = sols.search_cap;
    j["theoretical_bound"] =
        sols.theoretical_bound ? Json(sols.theoretical_bound->str()) : Json(nullptr);
    j["complete_up_to_cap"] = sols.complete_up_to_cap;
    if (warn_default_cap)
        j["warning"] =
            "default cap 6 in effect; completeness holds only up to this degree cap";
    return j;
}

template <class K>
Json singular_report_json(const SingularReport<K>& rep) {
    Json j;
    Json pts = Json::array();
    for (const auto& sp : rep.points)
        pts.push_back(Json{{"point", point_json(sp.point)},
                           {"multiplicity", sp.multiplicity},
                           {"ordinary", sp.ordinary}});
    j["points"] = pts;
    j["residual_count"] = rep.residual_count;
    return j;
}

template <class K>
Json resolution_trace_json(const ResolutionTrace<K>& trace) {
    Json j;
    Json steps = Json::array();
    int i = 1;
    for (const auto& st : trace.steps) {
        steps.push_back(Json{{"step", i},
                             {"center", point_json(st.center)},
                             {"curve", st.curve.poly().str()},
                             {"degree", st.degree},
                             {"height_ledger", st.height_ledger.str()}});
        ++i;
    }
    j["steps"] = steps;
    j["s"] = trace.s;
    j["complete"] = trace.complete;
    j["residual_count"] = trace.residual_count_final;
    j["budget_exhausted"] = trace.budget_exhausted;
    return j;
}

template <class K>
Json points_json(const std::vector<ProjPoint<K>>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(point_json(p));
    return Json{{"points", arr}, {"count", pts.size()}};
}

Json height_inequality_json(const HeightInequalityReport& rep) {
    Json j;
    j["n0"] = rep.n0;
    j["n1"] = rep.n1;
    j["n"] = rep.n;
    j["N"] = rep.N.str();
    j["s"] = rep.s;
    j["C"] = rep.C.str();
    j["T_c0"] = rep.T0.str();
    j["T_c1"] = rep.T1.str();
    j["lower_lhs"] = rep.lower_lhs.str();
    j["middle"] = rep.middle.str();
    j["upper_rhs"] = rep.upper_rhs.str();
    j["lower_ok"] = rep.lower_ok;
    j["upper_ok"] = rep.upper_ok;
    j["pass"] = rep.pass();
    return j;
}

Json error_json(const std::string& code, const std::string& message, int line, int col) {
    Json j;
    j["error"] = Json{{"code", code}, {"message", message}};
    if (line > 0) {
        j["error"]["line"] = line;
        j["error"]["col"] = col;
    }
    return j;
}

template Json singular_report_json<Rational>(const SingularReport<Rational>&);
template Json singular_report_json<RatFunc>(const SingularReport<RatFunc>&);
template Json resolution_trace_json<Rational>(const ResolutionTrace<Rational>&);
template Json resolution_trace_json<RatFunc>(const ResolutionTrace<RatFunc>&);
template Json points_json<Rational>(const std::vector<ProjPoint<Rational>>&);
template Json points_json<RatFunc>(const std::vector<ProjPoint<RatFunc>>&);

}  // namespace aode
