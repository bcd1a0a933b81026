#include "toda/parse.hpp"

#include <cstdlib>
#include <stdexcept>

#include "toda/errors.hpp"

namespace toda {

namespace {

// Reads a signed decimal starting at pos; returns the value and advances pos.
double read_number(const std::string& s, size_t& pos) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw DomainError("parse_complex: malformed number in '" + s + "'");
    pos += size_t(end - begin);
    return v;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
    if (text.empty()) throw DomainError("parse_complex: empty string");
    size_t pos = 0;
    // bare "i", "+i", "-i"
    auto bare_i = [&](size_t p) {
        return p + 1 == text.size() && text[p] == 'i';
    };
    if (bare_i(0)) return {0.0, 1.0};
    if ((text[0] == '+' || text[0] == '-') && bare_i(1))
        return {0.0, text[0] == '-' ? -1.0 : 1.0};

    const double first = read_number(text, pos);
    if (pos == text.size()) return {first, 0.0};
    if (text[pos] == 'i') {
        if (pos + 1 != text.size())
            throw DomainError("parse_complex: trailing characters in '" + text + "'");
        return {0.0, first};
    }
    if (text[pos] != '+' && text[pos] != '-')
        throw DomainError("parse_complex: expected sign before imaginary part in '" + text + "'");
    if (bare_i(pos + 1)) return {first, text[pos] == '-' ? -1.0 : 1.0};
    const double second = read_number(text, pos);
    if (pos + 1 != text.size() || text[pos] != 'i')
        throw DomainError("parse_complex: imaginary part must end in 'i' in '" + text + "'");
    return {first, second};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    std::vector<std::complex<double>> out;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_complex(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::pair<int, int> parse_int_range(const std::string& text) {
    const size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace toda
