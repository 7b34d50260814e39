#include "ccode/code_file.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "ccode/errors.hpp"

namespace ccode {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() != '#') {
            lines.push_back({number, std::string(line)});
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

int parse_int(const Line& line, std::string_view token, int column) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line.number, column, "expected an integer, got '" +
                                                  std::string(token) + "'");
    }
    return value;
}

int expect_keyword_line(const Line& line, const std::string& key) {
    std::istringstream iss(line.text);
    std::string word, value, extra;
    iss >> word >> value;
    if (word != key) {
        throw ParseError(line.number, 1, "expected '" + key + "', got '" + word + "'");
    }
    if (value.empty() || iss >> extra) {
        throw ParseError(line.number, 1, "'" + key + "' takes exactly one value");
    }
    return parse_int(line, value, static_cast<int>(key.size()) + 2);
}

EdgeSet parse_pairs(const Line& line, std::size_t prefix_len) {
    EdgeSet pairs;
    std::istringstream iss(line.text.substr(prefix_len));
    std::string token;
    while (iss >> token) {
        std::size_t comma = token.find(',');
        if (comma == std::string::npos || comma == 0 || comma == token.size() - 1) {
            throw ParseError(line.number, static_cast<int>(prefix_len) + 1,
                             "expected 'x,y', got '" + token + "'");
        }
        int x = parse_int(line, std::string_view(token).substr(0, comma),
                          static_cast<int>(prefix_len) + 1);
        int y = parse_int(line, std::string_view(token).substr(comma + 1),
                          static_cast<int>(prefix_len) + 1);
        pairs.push_back(make_edge(x, y));
    }
    return pairs;
}

}  // namespace

std::string write_code_file(const ArrayCode& code) {
    std::ostringstream out;
    out << "ccode/v1\n";
    out << "length " << code.length << "\n";
    out << "kappa " << code.kappa << "\n";
    for (int i = 0; i < code.kappa; ++i) {
        out << "S" << i << ":";
        for (const auto& [x, y] : normalized(code.base_columns[i])) {
            out << " " << x << "," << y;
        }
        out << "\n";
    }
    return out.str();
}

ArrayCode parse_code_file(std::string_view text, bool verify) {
    const auto lines = content_lines(text);
    std::size_t at = 0;
    auto next_line = [&]() -> const Line& {
        if (at >= lines.size()) {
            throw ParseError(lines.empty() ? 1 : lines.back().number + 1, 1,
                             "unexpected end of file");
        }
        return lines[at++];
    };

    const Line& header = next_line();
    if (header.text != "ccode/v1") {
        throw ParseError(header.number, 1, "expected header 'ccode/v1'");
    }
    const int length = expect_keyword_line(next_line(), "length");
    const int kappa = expect_keyword_line(next_line(), "kappa");
    if (length < 4 || length % 2 != 0) {
        throw ValidationError("length must be an even integer >= 4");
    }
    if (kappa < 1 || length % kappa != 0) {
        throw ValidationError("kappa must divide the length");
    }

    ArrayCode code{length, kappa, {}};
    for (int i = 0; i < kappa; ++i) {
        const Line& line = next_line();
        const std::string prefix = "S" + std::to_string(i) + ":";
        if (line.text.rfind(prefix, 0) != 0) {
            throw ParseError(line.number, 1, "expected '" + prefix + " ...'");
        }
        code.base_columns.push_back(parse_pairs(line, prefix.size()));
    }
    if (at != lines.size()) {
        throw ParseError(lines[at].number, 1,
                         "unexpected content after column lines");
    }

    if (kappa == 1) {
        if (!validate_even_starter(code.base_columns[0], length)) {
            throw ValidationError("S0 is not a valid even starter over Z_" +
                                  std::to_string(length));
        }
    } else {
        if (!validate_multi_starter(MultiStarter{length, kappa, code.base_columns})) {
            throw ValidationError("columns do not form a valid even " +
                                  std::to_string(kappa) + "-starter over Z_" +
                                  std::to_string(length));
        }
    }
    if (verify && !verify_condition1(code)) {
        throw ValidationError("code fails the two-column condition");
    }
    for (auto& column : code.base_columns) normalize_edges(column);
    return code;
}

}  // namespace ccode
