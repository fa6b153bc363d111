#include "chromspec/formats.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace chromspec::graphs {

namespace {

std::string_view strip_line_ending(std::string_view s) {
    if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

// Lines without their endings; handles both LF and CRLF.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(strip_line_ending(text.substr(pos)));
            break;
        }
        lines.push_back(strip_line_ending(text.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    return lines;
}

bool is_blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<long> parse_long(std::string_view tok) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

} // namespace

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
    const std::string_view line = strip_line_ending(text);
    if (line.empty()) throw ParseError(ParseError::Kind::truncated, 0, "empty graph6 input");

    const unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == 126)
        throw ParseError(ParseError::Kind::long_form, 0,
                         "long-form graph6 (n >= 63) is not supported");
    if (header < 63 || header > 126)
        throw ParseError(ParseError::Kind::bad_char, 0, "graph6 byte 0 out of range 63..126");

    const int n = int(header) - 63;
    if (n < 1)
        throw ParseError(ParseError::Kind::bad_header, 0, "graph6 order must be >= 1");

    const std::size_t bits_needed = std::size_t(n) * (n - 1) / 2;
    const std::size_t bytes_needed = (bits_needed + 5) / 6;
    if (line.size() - 1 < bytes_needed)
        throw ParseError(ParseError::Kind::truncated, line.size(),
                         "graph6 bit stream truncated: expected " +
                             std::to_string(bytes_needed) + " data bytes, got " +
                             std::to_string(line.size() - 1));
    if (line.size() - 1 > bytes_needed)
        throw ParseError(ParseError::Kind::trailing_data, 1 + bytes_needed,
                         "unexpected bytes after graph6 bit stream");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte_pos = 1 + bit / 6;
            const unsigned char b = static_cast<unsigned char>(line[byte_pos]);
            if (b < 63 || b > 126)
                throw ParseError(ParseError::Kind::bad_char, byte_pos,
                                 "graph6 byte " + std::to_string(byte_pos) +
                                     " out of range 63..126");
            const unsigned value = unsigned(b) - 63;
            if ((value >> (5 - bit % 6)) & 1u) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n >= 63)
        throw ValidationError("graph6 short form supports only n < 63, got n = " +
                              std::to_string(n));
    std::string out;
    out.push_back(char(n + 63));
    unsigned group = 0;
    int group_bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++group_bits == 6) {
                out.push_back(char(group + 63));
                group = 0;
                group_bits = 0;
            }
        }
    }
    if (group_bits > 0) out.push_back(char((group << (6 - group_bits)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// DIMACS .col
// ---------------------------------------------------------------------------

Graph parse_dimacs(std::string_view text) {
    const auto lines = split_lines(text);
    int n = -1;
    std::vector<std::pair<int, int>> edges;

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t lineno = idx + 1;
        const std::string_view line = lines[idx];
        if (is_blank(line)) continue;
        const auto toks = tokens_of(line);

        if (toks[0] == "c") continue;

        if (toks[0] == "p") {
            if (n != -1)
                throw ParseError(ParseError::Kind::duplicate_header, lineno,
                                 "duplicate p-line at line " + std::to_string(lineno));
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(ParseError::Kind::bad_header, lineno,
                                 "expected 'p edge N M' at line " + std::to_string(lineno));
            const auto nv = parse_long(toks[2]);
            const auto ne = parse_long(toks[3]);
            if (!nv || !ne || *nv < 1 || *ne < 0)
                throw ParseError(ParseError::Kind::bad_header, lineno,
                                 "bad p-line counts at line " + std::to_string(lineno));
            n = int(*nv);
            continue;
        }

        if (toks[0] == "e") {
            if (n == -1)
                throw ParseError(ParseError::Kind::missing_header, lineno,
                                 "e-line before p-line at line " + std::to_string(lineno));
            if (toks.size() != 3)
                throw ParseError(ParseError::Kind::bad_line, lineno,
                                 "expected 'e u v' at line " + std::to_string(lineno));
            const auto u = parse_long(toks[1]);
            const auto v = parse_long(toks[2]);
            if (!u || !v)
                throw ParseError(ParseError::Kind::bad_integer, lineno,
                                 "bad vertex number at line " + std::to_string(lineno));
            if (*u < 1 || *u > n || *v < 1 || *v > n)
                throw ParseError(ParseError::Kind::vertex_range, lineno,
                                 "vertex out of range 1.." + std::to_string(n) + " at line " +
                                     std::to_string(lineno));
            if (*u == *v)
                throw ParseError(ParseError::Kind::self_loop, lineno,
                                 "self-loop at line " + std::to_string(lineno));
            edges.emplace_back(int(*u) - 1, int(*v) - 1); // shift to 0-based
            continue;
        }

        throw ParseError(ParseError::Kind::bad_line, lineno,
                         "unrecognized line type at line " + std::to_string(lineno));
    }

    if (n == -1)
        throw ParseError(ParseError::Kind::missing_header, lines.size(),
                         "missing 'p edge N M' line");
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Edge list
// ---------------------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    const auto lines = split_lines(text);
    int n = -1;
    std::vector<std::pair<int, int>> edges;

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t lineno = idx + 1;
        const std::string_view line = lines[idx];
        if (is_blank(line)) continue;
        const auto toks = tokens_of(line);

        if (n == -1) {
            if (toks.size() != 1)
                throw ParseError(ParseError::Kind::bad_header, lineno,
                                 "expected a single vertex count on line " +
                                     std::to_string(lineno));
            const auto nv = parse_long(toks[0]);
            if (!nv || *nv < 1)
                throw ParseError(ParseError::Kind::bad_integer, lineno,
                                 "bad vertex count at line " + std::to_string(lineno));
            n = int(*nv);
            continue;
        }

        if (toks.size() != 2)
            throw ParseError(ParseError::Kind::bad_line, lineno,
                             "expected 'u v' at line " + std::to_string(lineno));
        const auto u = parse_long(toks[0]);
        const auto v = parse_long(toks[1]);
        if (!u || !v)
            throw ParseError(ParseError::Kind::bad_integer, lineno,
                             "bad vertex number at line " + std::to_string(lineno));
        if (*u < 0 || *u >= n || *v < 0 || *v >= n)
            throw ParseError(ParseError::Kind::vertex_range, lineno,
                             "vertex out of range 0.." + std::to_string(n - 1) + " at line " +
                                 std::to_string(lineno));
        if (*u == *v)
            throw ParseError(ParseError::Kind::self_loop, lineno,
                             "self-loop at line " + std::to_string(lineno));
        edges.emplace_back(int(*u), int(*v));
    }

    if (n == -1)
        throw ParseError(ParseError::Kind::missing_header, lines.size(),
                         "missing vertex count line");
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Detection
// ---------------------------------------------------------------------------

std::string_view format_name(FileFormat f) noexcept {
    switch (f) {
    case FileFormat::graph6:
        return "graph6";
    case FileFormat::dimacs:
        return "dimacs";
    case FileFormat::edge_list:
        return "edge-list";
    }
    return "unknown";
}

FileFormat detect_format(std::string_view text) {
    const auto lines = split_lines(text);
    for (const auto& raw : lines) {
        if (is_blank(raw)) continue;
        // DIMACS comment lines are 'c' alone or 'c' followed by whitespace;
        // a graph6 line starting with 'c' has a payload character next.
        if (raw == "c" || (raw.size() >= 2 && raw[0] == 'c' &&
                           std::isspace(static_cast<unsigned char>(raw[1])))) {
            continue;
        }
        const auto toks = tokens_of(raw);
        if (toks.size() >= 2 && toks[0] == "p" && toks[1] == "edge") return FileFormat::dimacs;
        if (toks.size() == 1 && parse_long(toks[0])) return FileFormat::edge_list;
        return FileFormat::graph6;
    }
    return FileFormat::graph6;
}

Graph parse_as(std::string_view text, FileFormat format) {
    switch (format) {
    case FileFormat::graph6:
        return parse_graph6(text);
    case FileFormat::dimacs:
        return parse_dimacs(text);
    case FileFormat::edge_list:
        return parse_edge_list(text);
    }
    throw ValidationError("unknown input format");
}

Graph parse_auto(std::string_view text) { return parse_as(text, detect_format(text)); }

} // namespace chromspec::graphs
