#include <fstream>
#include <istream>

#include "kms/error.hpp"
#include "kms/graph.hpp"

namespace kms {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
    const int value = static_cast<unsigned char>(c);
    if (value < 63 || value > 126)
        throw Error(ErrorCode::byte_out_of_range, "byte " + std::to_string(value) + " outside 63..126");
    return value - 63;
}

std::string_view trim_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    return line;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    line = trim_line(line);
    if (line.empty()) throw Error(ErrorCode::malformed_length, "empty graph6 line");

    std::size_t pos = 0;
    long n = decode_byte(line[pos++]);
    if (n == 63) {
        // N(n) = 126 followed by three 6-bit groups; the 8-byte form starts with 126 126.
        if (line.size() < 4) throw Error(ErrorCode::malformed_length, "truncated size field");
        if (line[1] == '~') throw Error(ErrorCode::order_exceeds_cap, "order beyond 258047");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(line[pos++]);
    }
    if (n > kMaxOrder)
        throw Error(ErrorCode::order_exceeds_cap, "order " + std::to_string(n) + " exceeds " +
                                                      std::to_string(kMaxOrder));

    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    const std::size_t body = (pairs + 5) / 6;
    if (line.size() - pos < body)
        throw Error(ErrorCode::malformed_length,
                    "expected " + std::to_string(body) + " data bytes, got " + std::to_string(line.size() - pos));
    if (line.size() - pos > body) {
        // still validate the bytes so an out-of-range character is reported as such
        for (std::size_t i = pos; i < line.size(); ++i) decode_byte(line[i]);
        throw Error(ErrorCode::trailing_garbage, std::to_string(line.size() - pos - body) + " extra bytes");
    }

    std::vector<int> groups(body);
    for (std::size_t i = 0; i < body; ++i) groups[i] = decode_byte(line[pos + i]);
    auto bit_at = [&](std::size_t bit) { return (groups[bit / 6] >> (5 - bit % 6)) & 1; };

    // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int u = 0; u < j; ++u, ++bit) {
            if (!bit_at(bit)) continue;
            rows[u] |= 1ULL << j;
            rows[j] |= 1ULL << u;
        }
    }
    for (; bit < body * 6; ++bit)
        if (bit_at(bit)) throw Error(ErrorCode::malformed_length, "non-zero padding bits");
    return Graph::from_rows(std::move(rows));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int u = 0; u < j; ++u) {
            group = (group << 1) | (g.adjacent(u, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view view = trim_line(line);
        if (view.empty()) continue;
        out.push_back(parse_graph6(view));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
    return read_graph6_stream(in);
}

}  // namespace kms
