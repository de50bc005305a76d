#include "hmv/rat.hpp"

#include <cctype>

namespace hmv {

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n <= 0) throw error("factorize: argument must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (divides(p, n)) {
            n = exact_div(n, p);
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw parse_error("empty rational");
    size_t pos = 0;
    auto integer = [&]() -> std::string {
        std::string d;
        if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) d += t[pos++];
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) d += t[pos++];
        if (pos == start) throw parse_error("bad rational: " + std::string(s));
        return d;
    };
    std::string num = integer();
    std::string den = "1";
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        den = integer();
    }
    if (pos != t.size()) throw parse_error("bad rational: " + std::string(s));
    Rat q{Int(num), Int(den)};
    if (q.get_den() == 0) throw parse_error("zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

} // namespace hmv
