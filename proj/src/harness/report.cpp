#include "sdepth/harness/report.hpp"

#include "sdepth/errors.hpp"

namespace sdepth::harness {

using nlohmann::json;

json to_json(const Rational& r)
{
    return {{"num", r.numerator()}, {"den", r.denominator()}};
}

Rational rational_from_json(const json& j)
{
    try {
        const auto den = j.at("den").get<std::int64_t>();
        if (den == 0)
            throw InputError("rational with zero denominator");
        return Rational(j.at("num").get<std::int64_t>(), den);
    } catch (const json::exception& e) {
        throw InputError(std::string("rational: ") + e.what());
    }
}

json to_json(const geom::Point& p)
{
    return std::vector<double>(p.coords().begin(), p.coords().end());
}

json to_json(const depth::DepthReport& r)
{
    return {{"containing", r.containing}, {"total", r.total}, {"fraction", to_json(r.fraction())},
            {"value", r.value()}};
}

json to_json(const depth::MCEstimate& e)
{
    return {{"samples", e.samples}, {"hits", e.hits}, {"estimate", e.estimate},
            {"ci95", {e.ci_low, e.ci_high}}, {"seed", e.seed}};
}

json to_json(const selection::BoundSpec& b)
{
    return {{"d", b.d}, {"kind", selection::to_string(b.kind)}, {"value", to_json(b.value)},
            {"decimal", to_double(b.value)}};
}

json to_json(const selection::DeepPointResult& r)
{
    json j{{"point", to_json(r.point)},
           {"depth", to_json(r.report)},
           {"strategy", selection::to_string(r.strategy)},
           {"candidates_evaluated", r.candidates_evaluated},
           {"heuristic", r.heuristic()}};
    if (r.certified_max) {
        j["certified_max"] = to_json(*r.certified_max);
        j["attains_certified"] = r.attains_certified();
    }
    return j;
}

json to_json(const selection::VerificationReport& r)
{
    return {{"pass", r.pass},
            {"bound", to_json(r.bound)},
            {"tolerance", to_json(r.tolerance)},
            {"threshold", to_json(r.threshold())},
            {"deep_point", to_json(r.deep)},
            {"config_hash", r.config_hash}};
}

json to_json(const selection::McVerificationReport& r)
{
    return {{"pass", r.pass},
            {"bound", to_json(r.bound)},
            {"tolerance", r.tolerance},
            {"witness", to_json(r.witness)},
            {"estimate", to_json(r.estimate)},
            {"candidates", r.candidates}};
}

json to_json(const tverberg::TverbergCertificate& c)
{
    return {{"witness", to_json(c.witness)}, {"parts", c.parts}};
}

} // namespace sdepth::harness
