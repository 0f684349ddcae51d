#include "qtcomb/json_io.hpp"

namespace qtcomb {

Json polynomial_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["q"] = m.q;
        term["t"] = m.t;
        term["z"] = m.z;
        term["c"] = c;
        terms.push_back(std::move(term));
    }
    return terms;
}

Json path_json(const DecoratedLabelledPath& p) {
    Json out;
    out["area_word"] = p.path.area_word;
    out["labels"] = p.labels;
    out["dv"] = p.dv;
    out["area"] = area(p);
    out["dinv"] = dinv(p);
    out["diagonal_word"] = diagonal_word(p).str();
    return out;
}

Json report_json(const CheckReport& report, bool with_elapsed) {
    Json out;
    out["name"] = report.name;
    Json params;
    params["n"] = report.params.n;
    if (report.params.k) params["k"] = *report.params.k;
    if (report.params.j) params["j"] = *report.params.j;
    out["params"] = std::move(params);
    out["passed"] = report.passed;
    out["lhs"] = polynomial_json(report.lhs);
    out["rhs"] = polynomial_json(report.rhs);
    out["witness"] = report.witness ? Json(*report.witness) : Json(nullptr);
    if (with_elapsed) out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

}  // namespace qtcomb
