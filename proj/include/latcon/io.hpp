#pragma once

// Plain-text lattice files and DOT output.
//
//   # comment lines and blank lines are ignored
//   5          <- element count
//   0 1        <- i j : i is below j (covers or any comparabilities)
//   ...
//
// Indices are 0-based. LF or CRLF is accepted; LF is written.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

struct LatticeFile {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::string> comments;  // without the leading '#'
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<long long> parse_integers(std::string_view line, int line_no) {
    std::vector<long long> out;
    while (true) {
        line = trim(line);
        if (line.empty()) break;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc() || (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
            throw ParseError(line_no, "expected integers, got '" + std::string(line) + "'");
        out.push_back(v);
        line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    }
    return out;
}

}  // namespace detail

inline LatticeFile parse_lattice_file_text(std::string_view text) {
    LatticeFile file;
    bool have_n = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::string_view body = detail::trim(line);
        if (body.empty()) continue;
        if (body.front() == '#') {
            file.comments.emplace_back(detail::trim(body.substr(1)));
            continue;
        }
        const std::vector<long long> nums = detail::parse_integers(body, line_no);
        if (!have_n) {
            if (nums.size() != 1) throw ParseError(line_no, "first line must hold the element count");
            if (nums[0] < 1 || nums[0] > kMaxElements)
                throw ParseError(line_no, "element count must be within 1.." + std::to_string(kMaxElements));
            file.n = static_cast<int>(nums[0]);
            have_n = true;
            continue;
        }
        if (nums.size() != 2) throw ParseError(line_no, "expected a pair 'i j'");
        for (long long v : nums)
            if (v < 0 || v >= file.n)
                throw ParseError(line_no, "index " + std::to_string(v) + " out of range");
        file.pairs.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    if (!have_n) throw ParseError(line_no, "missing element count");
    return file;
}

// CycleError and NotLatticeError propagate from validation.
inline Lattice parse_lattice_file(std::string_view text) {
    const LatticeFile file = parse_lattice_file_text(text);
    return validate_lattice(Poset::from_covers(file.n, file.pairs));
}

inline std::string serialize_lattice(const Lattice& l, const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << l.size() << '\n';
    for (auto [a, b] : l.poset().covers()) out << a << ' ' << b << '\n';
    return out.str();
}

// "-" reads standard input.
inline std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IOError", "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IOError", "cannot write " + path);
    out << text;
}

inline Lattice read_lattice(const std::string& path) { return parse_lattice_file(read_text(path)); }

// Same format, without requiring a lattice.
inline Poset read_poset(const std::string& path) {
    const LatticeFile file = parse_lattice_file_text(read_text(path));
    return Poset::from_covers(file.n, file.pairs);
}

// Length of the longest chain from the bottom to each element.
inline std::vector<int> heights(const Lattice& l) {
    std::vector<int> h(static_cast<std::size_t>(l.size()), 0);
    for (int x : linear_extension(l.poset()))
        bits::for_each(l.poset().upper_covers(x), [&](int y) { h[y] = std::max(h[y], h[x] + 1); });
    return h;
}

// Hasse diagram, edges oriented upward, one rank group per height.
inline std::string emit_dot(const Lattice& l, const std::string& name = "lattice") {
    const std::vector<int> h = heights(l);
    const int levels = l.size() == 0 ? 0 : *std::max_element(h.begin(), h.end()) + 1;
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (int level = 0; level < levels; ++level) {
        out << "  { rank=same;";
        for (int x = 0; x < l.size(); ++x)
            if (h[x] == level) out << ' ' << x << ';';
        out << " }\n";
    }
    for (auto [a, b] : l.poset().covers()) out << "  " << a << " -> " << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace latcon
