#include "powersum/json_io.hpp"

namespace powersum {

Json poly_json(const UniPoly& p, std::string_view var) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"var", std::string(var)}, {"coeffs", std::move(coeffs)}};
}

Json rational_coefficient_json(const RationalCoefficient& c) {
    return Json{{"num", poly_json(c.num, "t")}, {"tExp", c.tExp}};
}

Json xpolynomial_json(const XPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_coefficient_json(c));
    return Json{{"var", "x"}, {"coeffs", std::move(coeffs)}};
}

namespace {

Json cell_json(const SumCell& c) { return Json::array({c.k, c.j, c.n}); }

}  // namespace

Json conjecture1_json(const Conjecture1Report& r) {
    Json skipped = Json::array();
    for (const auto& s : r.skipped) skipped.push_back(cell_json(s.cell));
    Json counterexamples = Json::array();
    for (const auto& c : r.counterexamples)
        counterexamples.push_back(Json{{"cell", cell_json(c.cell)},
                                       {"lhs", c.lhs.to_string()},
                                       {"rhs", c.rhs.to_string()}});
    return Json{{"grid", Json{{"kmax", r.kmax}, {"jmax", r.jmax}, {"nmax", r.nmax}, {"budget", r.budget}}},
                {"verified", r.verified},
                {"skipped", std::move(skipped)},
                {"counterexamples", std::move(counterexamples)}};
}

Json violation_json(const ConjectureViolation& v) {
    Json witness = Json::object();
    for (const auto& [key, value] : v.witness) witness[key] = value;
    return Json{{"conjecture", v.conjecture}, {"clause", v.clause}, {"witness", std::move(witness)}};
}

Json recovered_json(const RecoveredP& p) {
    Json validation = Json::array();
    for (const auto& [j, n] : p.validation) validation.push_back(Json::array({j, n}));
    return Json{{"k", p.k}, {"poly", xpolynomial_json(p.poly)}, {"validation", std::move(validation)}};
}

Json structure_json(const StructureReport& r) {
    Json fits = Json::array();
    for (const auto& f : r.fits) {
        Json alphas = Json::array();
        for (const auto& a : f.alphas) alphas.push_back(a.to_string());
        fits.push_back(Json{{"j", f.j}, {"m", f.m}, {"l", f.l}, {"alphas", std::move(alphas)}});
    }
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(violation_json(v));
    return Json{{"k", r.k},
                {"fits", std::move(fits)},
                {"alphaCount", r.alpha_count},
                {"expectedCount", r.expected_count},
                {"violations", std::move(violations)}};
}

Json venn_json(const VennFactorization& v) {
    return Json{{"k", v.k}, {"cK", v.cK.to_string()}, {"vK", poly_json(v.vK, "n")}};
}

Json genocchi_eval_json(const GenocchiEvalReport& r) {
    return Json{{"k", r.k},
                {"pAtT2", r.p_at_t2.to_string()},
                {"signedValue", r.signed_value.to_string()},
                {"tuenterConstant", r.tuenter_constant.to_string()},
                {"minusGenocchi", r.minus_genocchi.to_string()},
                {"signedIdentity", r.signed_identity},
                {"plainIdentity", r.plain_identity}};
}

namespace {

std::string status_str(PaperComparisonStatus s) {
    switch (s) {
        case PaperComparisonStatus::kMatch: return "match";
        case PaperComparisonStatus::kKnownTypo: return "paper-typo-suspected";
        case PaperComparisonStatus::kMismatch: return "mismatch";
    }
    return "mismatch";
}

}  // namespace

Json conjecture43_json(const Conjecture43Report& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"j", e.j},
                               {"tPoly", poly_json(e.t_poly, "t")},
                               {"bigSMatch", e.big_s_match}});
    Json brackets = Json::array();
    for (const auto& b : r.bracket_checks)
        brackets.push_back(Json{{"tPower", b.tPower},
                                {"derived", poly_json(b.derived, "j")},
                                {"printed", poly_json(b.printed, "j")},
                                {"status", status_str(b.status)}});
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(violation_json(v));
    return Json{{"k", r.k},
                {"entries", std::move(entries)},
                {"bracketChecks", std::move(brackets)},
                {"violations", std::move(violations)}};
}

}  // namespace powersum
