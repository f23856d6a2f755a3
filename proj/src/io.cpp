#include "nhr/io.hpp"

#include "nhr/constructions.hpp"
#include "nhr/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace nhr {

namespace {

    int parse_int(std::string_view s, long long line)
    {
        int value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
            throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(s) + "'", line);
        return value;
    }

    std::vector<std::string_view> words(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    // Non-empty lines with their 1-based numbers; '#' starts a comment.
    std::vector<std::pair<long long, std::string_view>> lines_of(std::string_view text)
    {
        std::vector<std::pair<long long, std::string_view>> out;
        long long number = 0;
        while (!text.empty()) {
            const auto nl = text.find('\n');
            auto line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++number;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            if (!words(line).empty()) out.emplace_back(number, line);
        }
        return out;
    }

    int parse_header(const std::vector<std::pair<long long, std::string_view>>& lines)
    {
        if (lines.empty()) throw Error(ErrorKind::Parse, "missing 'n <count>' header", 1);
        const auto w = words(lines[0].second);
        if (w.size() != 2 || w[0] != "n") throw Error(ErrorKind::Parse, "expected 'n <count>'", lines[0].first);
        const int n = parse_int(w[1], lines[0].first);
        if (n < 0 || n > kMaxVertices)
            throw Error(ErrorKind::SizeLimit, "order " + std::to_string(n) + " outside [0, 64]", lines[0].first);
        return n;
    }

}  // namespace

std::string write_graph(const SimpleGraph& g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph parse_graph(std::string_view text)
{
    const auto lines = lines_of(text);
    const int n = parse_header(lines);
    SimpleGraph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [number, line] = lines[i];
        const auto w = words(line);
        if (w.size() != 3 || w[0] != "e") throw Error(ErrorKind::Parse, "expected 'e <i> <j>'", number);
        const int u = parse_int(w[1], number);
        const int v = parse_int(w[2], number);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw Error(ErrorKind::Parse, "bad edge " + std::to_string(u) + " " + std::to_string(v), number);
        g.add_edge(u, v);
    }
    return g;
}

std::string write_colouring(const TwoColouring& col)
{
    std::string out = "n " + std::to_string(col.order()) + '\n';
    int column = 0;
    for (int i = 1; i < col.order(); ++i)
        for (int j = 0; j < i; ++j) {
            out += col.colour(i, j) == Colour::Red ? 'R' : 'B';
            if (++column == 80) {
                out += '\n';
                column = 0;
            }
        }
    if (column) out += '\n';
    return out;
}

TwoColouring parse_colouring(std::string_view text)
{
    const auto lines = lines_of(text);
    const int n = parse_header(lines);
    SimpleGraph red(n);
    const std::size_t expected = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    std::size_t seen = 0;
    int i = 1;
    int j = 0;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        for (char ch : lines[l].second) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch != 'R' && ch != 'B')
                throw Error(ErrorKind::Parse, std::string("unexpected character '") + ch + "'", lines[l].first);
            if (seen == expected) throw Error(ErrorKind::Parse, "too many edge colours", lines[l].first);
            if (ch == 'R') red.add_edge(i, j);
            ++seen;
            if (++j == i) {
                ++i;
                j = 0;
            }
        }
    }
    if (seen != expected)
        throw Error(ErrorKind::Parse,
                    "expected " + std::to_string(expected) + " edge colours, got " + std::to_string(seen),
                    lines.back().first);
    return TwoColouring::from_red_graph(red);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Precondition, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Precondition, "cannot write " + path.string());
    out << text;
}

PatternGraph parse_pattern(std::string_view spec)
{
    const std::string name(spec);
    if (spec.starts_with('@')) return PatternGraph(parse_graph(read_text_file(std::string(spec.substr(1)))), name);
    auto number = [&](std::size_t prefix) {
        const int v = parse_int(spec.substr(prefix), 1);
        if (v < 0) throw Error(ErrorKind::Parse, "negative size in pattern '" + name + "'");
        return v;
    };
    if (spec.starts_with("Hk")) return build_Hk(number(2));
    if (spec.size() >= 2) {
        switch (spec[0]) {
        case 'K': return PatternGraph(SimpleGraph::complete(number(1)), name);
        case 'P': return PatternGraph(SimpleGraph::path(number(1)), name);
        case 'C': return PatternGraph(SimpleGraph::cycle(number(1)), name);
        case 'E': return PatternGraph(SimpleGraph::empty(number(1)), name);
        default: break;
        }
    }
    throw Error(ErrorKind::Parse, "unknown pattern '" + name + "'");
}

}  // namespace nhr
