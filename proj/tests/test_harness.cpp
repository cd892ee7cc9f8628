#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracle.hpp"
#include "sdepth/depth/depth.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/harness/generator.hpp"
#include "sdepth/harness/io.hpp"
#include "sdepth/harness/report.hpp"
#include "sdepth/harness/run.hpp"

using namespace sdepth;
using namespace sdepth::harness;

namespace {

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "sdepth_test_harness";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_text(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

std::size_t parse_error_line(const std::string& text, std::size_t* column = nullptr)
{
    try {
        parse_configuration(text);
    } catch (const ParseError& e) {
        if (column)
            *column = e.column();
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("canonical format round trip")
{
    std::mt19937_64 rng(12);
    for (std::size_t d = 1; d <= 4; ++d) {
        std::vector<std::vector<Point>> classes(d + 1);
        for (auto& cls : classes)
            for (int i = 0; i < 7; ++i) {
                auto p = oracle::uniform_point(rng, d);
                std::vector<double> c(p.coords().begin(), p.coords().end());
                c[0] = c[0] * 1e-300 + (i == 3 ? 5e-324 : 0.0); // subnormals survive too
                classes[&cls - classes.data()].emplace_back(i % 2 ? p : Point(c));
            }
        const depth::ColoredConfiguration cfg(d, classes);
        const std::string text = format_configuration(cfg);
        const auto back = parse_configuration(text);
        CHECK(back == cfg);
        CHECK(format_configuration(back) == text);

        const auto path = scratch("rt" + std::to_string(d) + ".txt");
        write_configuration(cfg, path);
        CHECK(read_configuration(path) == cfg);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2) == "-2");
}

TEST_CASE("parse errors carry positions")
{
    std::size_t col = 0;
    CHECK(parse_error_line("dim 2 classes 3\nclass 0 size 1\n0 nan\n", &col) == 3);
    CHECK(col == 3);
    CHECK(parse_error_line("dim 1 classes 2\nclass 0 size 1\ninf\n") == 3);
    CHECK(parse_error_line("dims 2 classes 3\n", &col) == 1);
    CHECK(col == 1);
    CHECK(parse_error_line("dim 2 classes 3\nclass 0 size 1\n1 2 3\n") == 3);
    CHECK(parse_error_line("dim 2 classes 3\nclass 0 size 2\n1 2\n") == 4);
    CHECK(parse_error_line("dim 1 classes 2\nclass 1 size 1\n0\n") == 2);
    CHECK(parse_error_line("dim 1 classes 2\nclass 0 size 1\n0x1\n") == 3);
    // Wrong class count is a validation error, not a syntax error.
    CHECK_THROWS_AS(parse_configuration("dim 2 classes 4\n"), InputError);
    CHECK_THROWS_AS(parse_configuration("dim 1 classes 2\nclass 0 size 0\nclass 1 size 1\n1\n"), InputError);
    CHECK_THROWS_AS(read_configuration(scratch("missing.txt")), InputError);
}

TEST_CASE("generator")
{
    SUBCASE("one point per class")
    {
        const auto cfg = generate(make_spec(2, 1, "uniform"), 4);
        CHECK(cfg.class_sizes() == std::vector<std::size_t>{1, 1, 1});
        for (const auto& cls : cfg.classes())
            for (double x : cls[0].coords())
                CHECK((x >= 0 && x <= 1));
    }
    SUBCASE("determinism")
    {
        for (const char* m : {"uniform", "gaussian", "ball", "mixture"}) {
            const auto spec = make_spec(3, 9, m);
            CHECK(format_configuration(generate(spec, 77)) == format_configuration(generate(spec, 77)));
            CHECK(format_configuration(generate(spec, 77)) != format_configuration(generate(spec, 78)));
        }
    }
    SUBCASE("last two classes coincide")
    {
        const auto cfg = generate(make_spec(2, 10, "gaussian", true), 1);
        CHECK(cfg.last_two_coincide());
        CHECK_FALSE(generate(make_spec(2, 10, "gaussian"), 1).last_two_coincide());
    }
    SUBCASE("general position by perturbation")
    {
        GeneratorSpec spec;
        spec.dim = 2;
        spec.sizes = {3, 3, 3};
        spec.samplers.assign(3, MeasureSampler::point_mass(Point{1, 1}));
        CHECK_FALSE(in_general_position(generate(spec, 0)));
        spec.general_position = true;
        const auto cfg = generate(spec, 0);
        CHECK(in_general_position(cfg));
        CHECK(format_configuration(cfg) == format_configuration(generate(spec, 0)));
        spec.max_retries = 0;
        CHECK_THROWS_AS(generate(spec, 0), DegeneracyError);

        const depth::ColoredConfiguration collinear(2, {{{0, 0}}, {{1, 1}}, {{2, 2}}});
        CHECK_FALSE(in_general_position(collinear));
    }
    SUBCASE("spec JSON round trip")
    {
        auto spec = make_spec(2, 5, "mixture", true);
        spec.general_position = true;
        const auto back = GeneratorSpec::from_json(spec.to_json());
        CHECK(back.to_json() == spec.to_json());
        CHECK(format_configuration(generate(back, 3)) == format_configuration(generate(spec, 3)));
    }
    SUBCASE("validation")
    {
        auto spec = make_spec(2, 5, "uniform");
        spec.sizes.pop_back();
        CHECK_THROWS_AS(generate(spec, 0), InputError);
        CHECK_THROWS_AS(make_spec(2, 5, "cauchy"), InputError);
        CHECK_THROWS_AS(GeneratorSpec::from_json(nlohmann::json{{"dim", 2}}), InputError);
    }
}

TEST_CASE("run: depth of a hand-checked instance")
{
    // Unit square corners split into colours. (0.5, 0.5) is in every rainbow triangle except the
    // flat one on x = 0. As binary64, 0.9 + 0.1 > 1, so (0.9, 0.1) is only in the lower-right one.
    const auto path = scratch("square.txt");
    write_text(path, "dim 2 classes 3\nclass 0 size 1\n0 0\nclass 1 size 2\n1 0\n0 1\nclass 2 size 2\n1 1\n0 1\n");
    RunConfig c;
    c.mode = Mode::Depth;
    c.input = path;
    c.query = Point{0.5, 0.5};
    auto out = run(c);
    auto d = out.report["instances"][0]["result"]["depth"];
    CHECK(d["containing"] == 3);
    CHECK(d["total"] == 4);
    CHECK(out.exit_code() == 0);
    c.query = Point{0.9, 0.1};
    out = run(c);
    CHECK(out.report["instances"][0]["result"]["depth"]["containing"] == 1);
}

TEST_CASE("run: stored fractions match recomputation")
{
    RunConfig c;
    c.mode = Mode::Verify;
    c.size = 12;
    c.instances = 3;
    c.seed = 40;
    const auto out = run(c);
    CHECK(out.report["schema_version"] == kSchemaVersion);
    for (const auto& e : out.report["instances"]) {
        const auto cfg = generate(make_spec(2, 12, "uniform"), e["seed"].get<std::uint64_t>());
        CHECK(configuration_hash(cfg) == e["config_hash"]);
        const auto& deep = e["result"]["deep_point"];
        const Point w(deep["point"].get<std::vector<double>>());
        const auto rep = depth::colorful_depth_exact(cfg, w);
        CHECK(rational_from_json(deep["depth"]["fraction"]) == rep.fraction());
        CHECK(e["pass"] == true);
    }
}

TEST_CASE("run: reports do not depend on thread count")
{
    for (auto mode : {Mode::Deepest, Mode::Verify, Mode::Tverberg, Mode::Mc}) {
        CAPTURE(to_string(mode));
        RunConfig c;
        c.mode = mode;
        c.size = mode == Mode::Tverberg ? 13 : 10;
        c.r = 2;
        c.instances = 2;
        c.samples = 20000;
        c.candidates = 8;
        c.seed = 5;
        c.threads = 1;
        const auto one = render(run(c).report, false);
        c.threads = 3;
        const auto three = render(run(c).report, false);
        CHECK(one == three);
    }
    RunConfig g;
    g.mode = Mode::Verify;
    g.dim = 3;
    g.size = 5;
    g.strategy = selection::Strategy::GridRefine;
    const auto one = render(run(g).report, false);
    g.threads = 2;
    CHECK(render(run(g).report, false) == one);
}

TEST_CASE("run: tverberg outcomes")
{
    RunConfig c;
    c.mode = Mode::Tverberg;
    c.size = 4;
    c.r = 1;
    const auto out = run(c);
    const auto& res = out.report["instances"][0]["result"];
    CHECK(res["certificate"]["parts"].size() == 1);
    CHECK(res["certificate_verified"] == true);
    CHECK(out.exit_code() == 0);

    const auto path = scratch("apart.txt");
    write_text(path, "dim 1 classes 2\nclass 0 size 2\n0\n10\nclass 1 size 2\n1\n11\n");
    c.input = path;
    c.r = 2;
    const auto fail = run(c);
    CHECK(fail.exit_code() == 1);
    CHECK(fail.report["instances"][0]["result"]["error"]["code"] == "extraction_exhausted");
    CHECK(fail.report["instances"][0]["result"]["partial_certificate"]["parts"].size() == 1);
}

TEST_CASE("run: configuration validation")
{
    RunConfig c;
    c.mode = Mode::Depth;
    CHECK_THROWS_AS(run(c), InputError);
    c.query = Point{0, 0, 0};
    CHECK_THROWS_AS(run(c), InputError);
    RunConfig v;
    v.mode = Mode::Verify;
    v.instances = 0;
    CHECK_THROWS_AS(run(v), InputError);
    v.instances = 1;
    v.dim = 3;
    v.strategy = selection::Strategy::Arrangement2d;
    CHECK_THROWS_AS(run(v), InputError);
    CHECK(parse_mode("mc") == Mode::Mc);
    CHECK_THROWS_AS(parse_mode("plot"), InputError);
}
