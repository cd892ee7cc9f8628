// Command-line front end: one subcommand per run mode, plus `gen` to write instances.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sdepth/errors.hpp"
#include "sdepth/harness/generator.hpp"
#include "sdepth/harness/io.hpp"
#include "sdepth/harness/run.hpp"

using namespace sdepth;

namespace {

constexpr int kExitInput = 2;

geom::Point parse_point(const std::string& text)
{
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError("--query: bad coordinate '" + item + "'");
        }
    }
    return geom::Point(v);
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw InputError("cannot write " + out);
    f << text;
}

struct Options {
    harness::RunConfig run;
    std::string kind = "general";
    std::string strategy;
    std::string tolerance;
    std::string query;
    std::string input;
    std::string spec;
    std::string out;
    bool no_timing = false;
};

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--seed", o.run.seed, "Seed; instance i uses seed + i");
    sub->add_option("--dim", o.run.dim, "Dimension d (d+1 colour classes)");
    sub->add_option("--classes", o.run.dim, "Number of colour classes; sets d = classes - 1")
        ->transform([](std::string v) { return std::to_string(std::stoul(v) - 1); });
    sub->add_option("--size", o.run.size, "Points per class");
    sub->add_option("--measure", o.run.measure, "uniform | gaussian | ball | mixture");
    sub->add_option("--spec", o.spec, "Generator spec (JSON)");
    sub->add_option("--kind", o.kind, "general | two-coincide");
    sub->add_flag("--general-position", o.run.general_position, "Perturb generated instances into general position");
    sub->add_option("--out", o.out, "Output file (default stdout)");
}

void add_run(CLI::App* sub, Options& o)
{
    add_common(sub, o);
    sub->add_option("--in", o.input, "Instance file in canonical format");
    sub->add_option("--instances", o.run.instances, "Generated instances");
    sub->add_option("--strategy", o.strategy, "arrangement-2d | rainbow-centroids | grid-refine");
    sub->add_option("--tolerance", o.tolerance, "Slack below the bound, e.g. 1/10 or 0.02");
    sub->add_option("--samples", o.run.samples, "Monte Carlo samples");
    sub->add_option("--candidates", o.run.candidates, "Monte Carlo candidate points");
    sub->add_option("--threads", o.run.threads, "Worker threads (results do not depend on it)");
    sub->add_option("--query", o.query, "Query point, comma separated");
    sub->add_option("--r", o.run.r, "Tverberg parts");
    sub->add_flag("--no-timing", o.no_timing, "Omit the timing section");
}

harness::RunConfig finish(Options& o)
{
    auto c = o.run;
    c.kind = selection::parse_bound_kind(o.kind);
    if (!o.strategy.empty())
        c.strategy = selection::parse_strategy(o.strategy);
    if (!o.tolerance.empty())
        c.tolerance = parse_rational(o.tolerance);
    if (!o.query.empty())
        c.query = parse_point(o.query);
    if (!o.input.empty())
        c.input = o.input;
    if (!o.spec.empty())
        c.spec = o.spec;
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simplicial and colourful depth: deep points, selection bounds, colourful Tverberg"};
    app.require_subcommand(1);

    Options o;
    auto* gen = app.add_subcommand("gen", "Write one generated instance");
    add_common(gen, o);
    const std::pair<const char*, harness::Mode> modes[] = {
        {"depth", harness::Mode::Depth},       {"deepest", harness::Mode::Deepest},
        {"verify", harness::Mode::Verify},     {"tverberg", harness::Mode::Tverberg},
        {"mc", harness::Mode::Mc},
    };
    const char* help[] = {"Exact colourful depth of --query", "Search for a deepest point",
                          "Check the selection bound on each instance", "Extract r disjoint rainbow simplices",
                          "Monte Carlo verification against sampled measures"};
    std::vector<std::pair<CLI::App*, harness::Mode>> subs;
    for (std::size_t i = 0; i < 5; ++i) {
        auto* sub = app.add_subcommand(modes[i].first, help[i]);
        add_run(sub, o);
        subs.emplace_back(sub, modes[i].second);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*gen) {
            auto c = finish(o);
            harness::GeneratorSpec spec;
            if (c.spec) {
                std::ifstream in(*c.spec);
                if (!in)
                    throw InputError("cannot open " + c.spec->string());
                spec = harness::GeneratorSpec::from_json(nlohmann::json::parse(in));
            } else {
                spec = harness::make_spec(c.dim, c.size, c.measure, c.kind == selection::BoundKind::TwoCoincide);
            }
            spec.general_position = spec.general_position || c.general_position;
            emit(harness::format_configuration(harness::generate(spec, c.seed)), o.out);
            return 0;
        }
        for (auto& [sub, mode] : subs) {
            if (!*sub)
                continue;
            auto c = finish(o);
            c.mode = mode;
            const auto outcome = harness::run(c);
            emit(harness::render(outcome.report, !o.no_timing), o.out);
            return outcome.exit_code();
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
