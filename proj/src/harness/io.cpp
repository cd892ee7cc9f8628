#include "sdepth/harness/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sdepth/errors.hpp"

namespace sdepth::harness {
namespace {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    bool next_line()
    {
        if (pos_ >= text_.size())
            return false;
        const auto nl = text_.find('\n', pos_);
        const auto end = nl == std::string_view::npos ? text_.size() : nl;
        line_ = text_.substr(pos_, end - pos_);
        if (!line_.empty() && line_.back() == '\r')
            line_.remove_suffix(1);
        pos_ = end + 1;
        ++line_no_;
        col_ = 0;
        return true;
    }

    // Next whitespace-separated token; empty at end of line.
    std::string_view token()
    {
        while (col_ < line_.size() && (line_[col_] == ' ' || line_[col_] == '\t'))
            ++col_;
        tok_col_ = col_;
        while (col_ < line_.size() && line_[col_] != ' ' && line_[col_] != '\t')
            ++col_;
        return line_.substr(tok_col_, col_ - tok_col_);
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, tok_col_ + 1, what); }

    void expect(std::string_view word)
    {
        const auto t = token();
        if (t != word)
            fail("expected '" + std::string(word) + "', found '" + std::string(t) + "'");
    }

    std::size_t count()
    {
        const auto t = token();
        std::size_t v = 0;
        const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || p != t.data() + t.size())
            fail("expected a non-negative integer, found '" + std::string(t) + "'");
        return v;
    }

    double number()
    {
        const auto t = token();
        double v = 0;
        const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty())
            fail("missing coordinate");
        if (ec != std::errc() || p != t.data() + t.size())
            fail("malformed coordinate '" + std::string(t) + "'");
        if (!std::isfinite(v))
            fail("non-finite coordinate '" + std::string(t) + "'");
        return v;
    }

    void end_of_line()
    {
        if (!token().empty())
            fail("unexpected trailing text");
    }

    void require_line(const char* what)
    {
        if (!next_line())
            throw ParseError(line_no_ + 1, 1, std::string("unexpected end of input, expected ") + what);
    }

private:
    std::string_view text_;
    std::string_view line_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
    std::size_t col_ = 0;
    std::size_t tok_col_ = 0;
};

} // namespace

std::string format_double(double x)
{
    char buf[32];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

std::string format_configuration(const ColoredConfiguration& cfg)
{
    std::string out = "dim " + std::to_string(cfg.dim()) + " classes " + std::to_string(cfg.class_count()) + "\n";
    for (std::size_t i = 0; i < cfg.class_count(); ++i) {
        const auto& cls = cfg.cls(i);
        out += "class " + std::to_string(i) + " size " + std::to_string(cls.size()) + "\n";
        for (const auto& x : cls) {
            for (std::size_t j = 0; j < x.dim(); ++j) {
                if (j)
                    out += ' ';
                out += format_double(x[j]);
            }
            out += '\n';
        }
    }
    return out;
}

ColoredConfiguration parse_configuration(std::string_view text)
{
    Lexer lex(text);
    lex.require_line("header");
    lex.expect("dim");
    const std::size_t d = lex.count();
    if (d == 0)
        lex.fail("dimension must be positive");
    lex.expect("classes");
    const std::size_t k = lex.count();
    lex.end_of_line();
    if (k != d + 1)
        throw InputError("configuration in R^" + std::to_string(d) + " needs " + std::to_string(d + 1)
                         + " classes, header declares " + std::to_string(k));

    std::vector<std::vector<geom::Point>> classes(k);
    std::vector<double> coords(d);
    for (std::size_t i = 0; i < k; ++i) {
        lex.require_line("class header");
        lex.expect("class");
        if (lex.count() != i)
            lex.fail("class index out of order, expected " + std::to_string(i));
        lex.expect("size");
        const std::size_t n = lex.count();
        lex.end_of_line();
        classes[i].reserve(n);
        for (std::size_t r = 0; r < n; ++r) {
            lex.require_line("coordinates");
            for (auto& c : coords)
                c = lex.number();
            lex.end_of_line();
            classes[i].emplace_back(coords);
        }
    }
    while (lex.next_line())
        lex.end_of_line();
    return ColoredConfiguration(d, std::move(classes));
}

ColoredConfiguration read_configuration(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_configuration(ss.str());
}

void write_configuration(const ColoredConfiguration& cfg, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << format_configuration(cfg);
}

std::string configuration_hash(const ColoredConfiguration& cfg)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : format_configuration(cfg)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace sdepth::harness
