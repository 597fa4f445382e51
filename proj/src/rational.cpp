#include "cutgap/rational.hpp"

#include <cctype>

namespace cutgap {

std::string rat_to_string(const Rat& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

namespace {

bool parse_integer(const std::string& s, size_t begin, size_t end, BigInt& out) {
    if (begin >= end) return false;
    size_t i = begin;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = (s[i] == '-');
        ++i;
    }
    if (i >= end) return false;
    BigInt v = 0;
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

}  // namespace

std::optional<Rat> rat_from_string(const std::string& s) {
    size_t slash = s.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_integer(s, 0, s.size(), num)) return std::nullopt;
    } else {
        if (!parse_integer(s, 0, slash, num)) return std::nullopt;
        if (!parse_integer(s, slash + 1, s.size(), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    return Rat(num, den);
}

}  // namespace cutgap
