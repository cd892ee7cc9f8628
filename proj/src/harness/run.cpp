#include "sdepth/harness/run.hpp"

#include <chrono>
#include <fstream>

#include "sdepth/depth/depth.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/harness/generator.hpp"
#include "sdepth/harness/io.hpp"
#include "sdepth/harness/report.hpp"
#include "sdepth/selection/verify.hpp"
#include "sdepth/tverberg/tverberg.hpp"

namespace sdepth::harness {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

GeneratorSpec load_spec(const RunConfig& c)
{
    GeneratorSpec spec;
    if (c.spec) {
        std::ifstream in(*c.spec);
        if (!in)
            throw InputError("cannot open " + c.spec->string());
        try {
            spec = GeneratorSpec::from_json(json::parse(in));
        } catch (const json::parse_error& e) {
            throw InputError(std::string("generator spec: ") + e.what());
        }
    } else {
        spec = make_spec(c.dim, c.size, c.measure, c.kind == selection::BoundKind::TwoCoincide);
    }
    spec.general_position = spec.general_position || c.general_position;
    return spec;
}

json config_json(const RunConfig& c)
{
    json j{{"mode", to_string(c.mode)},
           {"seed", c.seed},
           {"dim", c.dim},
           {"size", c.size},
           {"measure", c.measure},
           {"kind", selection::to_string(c.kind)},
           {"samples", c.samples},
           {"candidates", c.candidates},
           {"instances", c.instances},
           {"r", c.r},
           {"general_position", c.general_position}};
    j["strategy"] = c.strategy ? json(selection::to_string(*c.strategy)) : json(nullptr);
    j["tolerance"] = c.tolerance ? to_json(*c.tolerance) : json(nullptr);
    j["input"] = c.input ? json(c.input->string()) : json(nullptr);
    j["spec"] = c.spec ? json(c.spec->string()) : json(nullptr);
    j["query"] = c.query ? to_json(*c.query) : json(nullptr);
    return j;
}

selection::SearchOptions search_options(const RunConfig& c, std::size_t d, std::uint64_t seed)
{
    selection::SearchOptions o;
    o.strategy = c.strategy.value_or(selection::default_strategy(d));
    o.seed = seed;
    o.threads = c.threads;
    return o;
}

struct Entry {
    json payload;
    bool pass = true;
    std::optional<Rational> fraction;
};

Entry depth_entry(const RunConfig& c, const depth::ColoredConfiguration& cfg)
{
    const auto rep = depth::colorful_depth_exact(cfg, *c.query);
    return {{{"query", to_json(*c.query)}, {"depth", to_json(rep)}}, true, rep.fraction()};
}

Entry deepest_entry(const RunConfig& c, const depth::ColoredConfiguration& cfg, std::uint64_t seed)
{
    const auto res = selection::find_deep_point(cfg, search_options(c, cfg.dim(), seed));
    const auto b = selection::bound(cfg.dim(), selection::BoundKind::General);
    return {{{"deep_point", to_json(res)},
             {"bound", to_json(b)},
             {"meets_bound", !(res.report.fraction() < b.value)}},
            true,
            res.report.fraction()};
}

Entry verify_entry(const RunConfig& c, const depth::ColoredConfiguration& cfg, std::uint64_t seed)
{
    const auto rep = selection::verify_selection(cfg, c.kind, c.tolerance, search_options(c, cfg.dim(), seed));
    return {to_json(rep), rep.pass, rep.deep.report.fraction()};
}

Entry tverberg_entry(const RunConfig& c, const depth::ColoredConfiguration& cfg, std::uint64_t seed)
{
    const std::size_t d = cfg.dim();
    tverberg::ExtractOptions opt;
    const std::uint64_t need = tverberg::greedy_class_size(c.r, d);
    opt.mode = cfg.min_class_size() >= need ? tverberg::ExtractMode::Guaranteed : tverberg::ExtractMode::BestEffort;
    opt.search = search_options(c, d, seed);
    opt.default_search = false;
    json j{{"r", c.r},
           {"greedy_class_size", need},
           {"asymptotic_T", tverberg::asymptotic_T(c.r, d)},
           {"extract_mode", opt.mode == tverberg::ExtractMode::Guaranteed ? "guaranteed" : "best-effort"}};
    try {
        const auto res = tverberg::extract(cfg, c.r, opt);
        const auto check = tverberg::verify_certificate(cfg, res.certificate, c.r);
        j["deep_point"] = to_json(res.deep);
        j["depth_meets_bound"] = res.depth_meets_bound;
        j["guaranteed_parts"] = res.guaranteed_parts;
        j["certificate"] = to_json(res.certificate);
        j["certificate_verified"] = check.ok;
        if (!check.ok)
            j["certificate_error"] = check.reason;
        return {j, check.ok, res.deep.report.fraction()};
    } catch (const tverberg::ExtractionExhausted& e) {
        j["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
        j["partial_certificate"] = to_json(e.partial());
        return {j, false, std::nullopt};
    }
}

Entry mc_entry(const RunConfig& c, const std::vector<MeasureSampler>& samplers, std::uint64_t seed)
{
    selection::McVerifyOptions opt;
    opt.samples = c.samples;
    opt.candidates = c.candidates;
    opt.seed = seed;
    opt.threads = c.threads;
    const double tol = c.tolerance ? to_double(*c.tolerance) : 0.01;
    const auto rep = selection::verify_selection_mc(samplers, c.kind, tol, opt);
    json j = to_json(rep);
    if (c.query)
        j["query_depth"] = to_json(depth::colorful_depth_mc(samplers, *c.query, c.samples, seed, c.threads));
    return {j, rep.pass, std::nullopt};
}

} // namespace

const char* to_string(Mode m)
{
    switch (m) {
    case Mode::Depth: return "depth";
    case Mode::Deepest: return "deepest";
    case Mode::Verify: return "verify";
    case Mode::Tverberg: return "tverberg";
    case Mode::Mc: return "mc";
    }
    return "?";
}

Mode parse_mode(std::string_view text)
{
    for (auto m : {Mode::Depth, Mode::Deepest, Mode::Verify, Mode::Tverberg, Mode::Mc})
        if (text == to_string(m))
            return m;
    throw InputError("unknown mode '" + std::string(text) + "'");
}

void RunConfig::validate() const
{
    if (dim == 0)
        throw InputError("--dim must be positive");
    if (size == 0)
        throw InputError("--size must be positive");
    if (instances == 0)
        throw InputError("--instances must be positive");
    if (threads == 0)
        throw InputError("--threads must be positive");
    if (mode == Mode::Depth && !query)
        throw InputError("depth mode needs --query");
    if (query && !input && !spec && query->dim() != dim)
        throw InputError("--query dimension differs from --dim");
    if (mode == Mode::Tverberg && r == 0)
        throw InputError("--r must be positive");
    if (mode == Mode::Mc && input)
        throw InputError("mc mode samples measures; use --measure or --spec instead of --in");
    if (mode == Mode::Mc && (samples == 0 || candidates == 0))
        throw InputError("--samples and --candidates must be positive");
    if (tolerance && *tolerance < Rational(0))
        throw InputError("--tolerance must be non-negative");
}

RunOutcome run(const RunConfig& c)
{
    c.validate();
    const auto start = Clock::now();
    RunOutcome out;
    json entries = json::array();
    json seconds = json::array();
    std::size_t passed = 0;
    double fraction_sum = 0;
    std::size_t fraction_count = 0;
    std::optional<Rational> min_fraction;

    const std::size_t count = c.input ? 1 : c.instances;
    std::optional<GeneratorSpec> spec;
    if (!c.input)
        spec = load_spec(c);

    for (std::size_t i = 0; i < count; ++i) {
        const auto t0 = Clock::now();
        const std::uint64_t seed = c.seed + i;
        json e{{"index", i}, {"seed", seed}};
        Entry entry;
        if (c.mode == Mode::Mc) {
            entry = mc_entry(c, spec->samplers, seed);
        } else {
            const auto cfg = c.input ? read_configuration(*c.input) : generate(*spec, seed);
            e["config_hash"] = configuration_hash(cfg);
            e["class_sizes"] = cfg.class_sizes();
            if (c.query && c.query->dim() != cfg.dim())
                throw InputError("--query dimension differs from the instance");
            switch (c.mode) {
            case Mode::Depth: entry = depth_entry(c, cfg); break;
            case Mode::Deepest: entry = deepest_entry(c, cfg, seed); break;
            case Mode::Verify: entry = verify_entry(c, cfg, seed); break;
            case Mode::Tverberg: entry = tverberg_entry(c, cfg, seed); break;
            case Mode::Mc: break;
            }
        }
        e["result"] = std::move(entry.payload);
        e["pass"] = entry.pass;
        passed += entry.pass;
        if (entry.fraction) {
            fraction_sum += to_double(*entry.fraction);
            ++fraction_count;
            if (!min_fraction || *entry.fraction < *min_fraction)
                min_fraction = entry.fraction;
        }
        entries.push_back(std::move(e));
        seconds.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
    }

    json summary{{"instances", count}, {"passed", passed}, {"failed", count - passed}};
    if (fraction_count) {
        summary["mean_fraction"] = fraction_sum / static_cast<double>(fraction_count);
        summary["min_fraction"] = to_json(*min_fraction);
    }
    out.pass = passed == count;
    out.report = {{"schema_version", kSchemaVersion},
                  {"config", config_json(c)},
                  {"instances", std::move(entries)},
                  {"summary", std::move(summary)},
                  {"pass", out.pass},
                  {"timing",
                   {{"threads", c.threads},
                    {"seconds", std::chrono::duration<double>(Clock::now() - start).count()},
                    {"instance_seconds", std::move(seconds)}}}};
    return out;
}

std::string render(const nlohmann::json& report, bool with_timing)
{
    if (with_timing)
        return report.dump(2) + "\n";
    json copy = report;
    copy.erase("timing");
    return copy.dump(2) + "\n";
}

} // namespace sdepth::harness
