#include "c2ext/report.hpp"

namespace c2ext {

Json report_header(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["convention"] = ExtAlgebra::convention();
    return j;
}

Json json_ring(const RingSpec& ring) {
    Json vars = Json::array();
    for (const RingSpec::Variable& v : ring.variables())
        vars.push_back({{"name", v.name}, {"weight", v.weight}});
    return vars;
}

Json json_generators(const std::vector<Polynomial>& gens) {
    Json out = Json::array();
    for (const Polynomial& g : gens) out.push_back(format_polynomial(g));
    return out;
}

Json json_hilbert(const GradedQuotient& q) {
    Json j;
    j["dims"] = q.hilbert().dims;
    j["truncation"] = q.truncation();
    int top = q.certified_top_degree();
    if (top >= 0) j["certified_top_degree"] = top;
    return j;
}

Json json_ci(const CiReport& ci) {
    Json j;
    switch (ci.verdict) {
        case CiVerdict::YesCertifiedToD:
            j["verdict"] = "yes-certified-to-" + std::to_string(ci.certified_to);
            break;
        case CiVerdict::No: j["verdict"] = "no"; break;
        case CiVerdict::Unknown: j["verdict"] = "unknown"; break;
    }
    j["reason"] = ci.reason;
    return j;
}

Json json_minimal_generators(const MinimalGenerators& mg) {
    Json j;
    j["total"] = mg.total;
    Json per = Json::array();
    for (const auto& [d, count] : mg.per_degree)
        per.push_back({{"degree", d}, {"count", count}});
    j["per_degree"] = per;
    j["redundant"] = mg.redundant;
    return j;
}

Json json_betti(const FreeResolution& res) {
    Json rows = Json::array();
    for (const BettiEntry& e : res.betti_table())
        rows.push_back({{"i", e.level}, {"j", e.internal_degree}, {"beta", e.count},
                        {"certified", e.certified}});
    Json j;
    j["entries"] = rows;
    j["P"] = res.homological_bound();
    j["D"] = res.internal_bound();
    return j;
}

Json json_poincare(const PoincareSeries& ps) {
    Json j;
    j["coefficients"] = ps.coefficients;
    j["row_complete"] = ps.complete;
    return j;
}

Json json_verify(const VerifyReport& vr) {
    Json j;
    j["ok"] = vr.ok();
    j["d_squared_zero"] = vr.composes_to_zero;
    j["exact"] = vr.exact;
    j["minimal"] = vr.minimal;
    j["violations"] = vr.violations;
    return j;
}

Json json_ext_table(const ExtAlgebra& ext) {
    Json j;
    Json dims = Json::array();
    for (int i = 0; i <= ext.truncation(); ++i) dims.push_back(ext.dim(i));
    j["dims"] = dims;
    Json basis = Json::array();
    for (const ExtBasisElement& e : ext.basis())
        basis.push_back({{"level", e.level}, {"internal_degree", e.internal_degree},
                         {"label", e.label}});
    j["basis"] = basis;
    Json products = Json::array();
    for (int p = 1; p <= ext.truncation(); ++p) {
        for (int q = 1; p + q <= ext.truncation(); ++q) {
            for (std::size_t a = 0; a < ext.dim(p); ++a) {
                for (std::size_t b = 0; b < ext.dim(q); ++b) {
                    std::size_t u = ext.global_index(p, a);
                    std::size_t v = ext.global_index(q, b);
                    const QVector& coeffs = ext.product(u, v);
                    Json target = Json::array();
                    for (const Rational& c : coeffs) target.push_back(to_string(c));
                    products.push_back({{"p", p},
                                        {"q", q},
                                        {"left_label", ext.element(u).label},
                                        {"right_label", ext.element(v).label},
                                        {"target_coeffs", target}});
                }
            }
        }
    }
    j["products"] = products;
    j["convention"] = ExtAlgebra::convention();
    return j;
}

Json json_commutative_quotient(const CommutativeQuotientReport& report) {
    Json j;
    j["ext_dims"] = report.ext_dims;
    j["quotient_dims"] = report.quotient_dims;
    j["growth_degree"] = report.growth_degree;
    j["variety_dim_estimate"] = report.variety_dim_estimate;
    j["estimate_is_heuristic"] = true;
    j["surviving_generators"] = report.surviving_generators;
    j["model"] = "commutator_quotient_truncated";
    return j;
}

Json json_ci_presentation(const CIPresentation& pres) {
    Json j;
    Json alphas = Json::array();
    for (std::size_t i = 0; i < pres.n; ++i) alphas.push_back("a" + std::to_string(i + 1));
    Json betas = Json::array();
    for (std::size_t jj = 0; jj < pres.r; ++jj) betas.push_back("b" + std::to_string(jj + 1));
    j["alphas"] = alphas;
    j["betas"] = betas;
    Json relations = Json::array();
    for (std::size_t i = 0; i < pres.n; ++i) {
        for (std::size_t k = i; k < pres.n; ++k) {
            QVector constants = pres.relation_constants(i, k);
            Json coeffs = Json::array();
            for (const Rational& c : constants) coeffs.push_back(to_string(c));
            relations.push_back({{"i", i + 1}, {"k", k + 1}, {"beta_coeffs", coeffs}});
        }
    }
    j["relations"] = relations;
    j["dims"] = pres.dims;
    j["relation_degrees"] = pres.relation_degrees;
    j["tensor_form_deg3"] = pres.cor_deg3_form;
    j["convention"] = pres.convention;
    return j;
}

Json json_quotient_target(const QuotientTarget& target) {
    Json j;
    j["n"] = target.n;
    j["r"] = target.r;
    j["dims"] = target.dims;
    j["tensor_form"] = target.tensor_form;
    return j;
}

Json json_tate_verify(const TateVerifyReport& report) {
    Json j;
    j["ok"] = report.ok();
    j["d_squared_zero"] = report.d_squared_zero;
    j["exact"] = report.exact;
    j["violations"] = report.violations;
    return j;
}

}  // namespace c2ext
