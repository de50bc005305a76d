#include "hmv/io.hpp"

#include <cctype>

namespace hmv {

namespace {

std::string strip_ws(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t;
}

// additive terms with their signs, split at depth zero
std::vector<std::pair<int, std::string>> split_terms(const std::string& t) {
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sign = 1;
    std::string cur;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (c == '(' || c == '<' || c == '[') ++depth;
        if (c == ')' || c == '>' || c == ']') --depth;
        if (depth == 0 && (c == '+' || c == '-') && i > 0 && !cur.empty() &&
            (std::isdigit(static_cast<unsigned char>(t[i - 1])) || t[i - 1] == ')' ||
             std::isalpha(static_cast<unsigned char>(t[i - 1])))) {
            terms.emplace_back(sign, cur);
            cur.clear();
            sign = (c == '-') ? -1 : 1;
            continue;
        }
        cur += c;
    }
    if (!cur.empty()) terms.emplace_back(sign, cur);
    return terms;
}

struct SymbolTerm {
    Rat coeff;
    std::string symbol; // "" for a plain rational
};

// COEFF ['*' SYMBOL] | SYMBOL, with SYMBOL one of sqrt(N), g, i
SymbolTerm parse_term(const std::string& t) {
    if (t.empty()) throw parse_error("empty term");
    size_t star = t.find('*');
    std::string num = t, sym;
    if (star != std::string::npos) {
        num = t.substr(0, star);
        sym = t.substr(star + 1);
    } else if (std::isalpha(static_cast<unsigned char>(t[0])) ||
               (t[0] == '-' && t.size() > 1 && std::isalpha(static_cast<unsigned char>(t[1])))) {
        sym = (t[0] == '-') ? t.substr(1) : t;
        return {Rat(t[0] == '-' ? -1 : 1), sym};
    }
    return {parse_rat(num), sym};
}

Int sqrt_arg(const std::string& sym) {
    if (sym.size() < 7 || sym.substr(0, 5) != "sqrt(" || sym.back() != ')')
        throw parse_error("bad symbol: " + sym);
    return Int(sym.substr(5, sym.size() - 6));
}

} // namespace

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '<' || c == '[') ++depth;
        if (c == ')' || c == '>' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    out.push_back(cur);
    return out;
}

QuadElem parse_quad(std::string_view s, const Int& rad) {
    std::string t = strip_ws(s);
    if (t.empty()) throw parse_error("empty quadratic element");
    Rat u(0), v(0);
    for (const auto& [sign, term] : split_terms(t)) {
        SymbolTerm st = parse_term(term);
        Rat c = Rat(sign) * st.coeff;
        if (st.symbol.empty())
            u += c;
        else if (st.symbol.substr(0, 5) == "sqrt(") {
            if (sqrt_arg(st.symbol) != rad)
                throw parse_error("sqrt radicand does not match the context: " + st.symbol);
            v += c;
        } else
            throw parse_error("unexpected symbol: " + st.symbol);
    }
    return QuadElem(rad, u, v);
}

PCElem parse_pc(std::string_view s, const Int& rad) {
    std::string t = strip_ws(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw parse_error("pseudo-cubic element must be (x ; q)");
    auto parts = split_top_level(t.substr(1, t.size() - 2), ';');
    if (parts.size() != 2) throw parse_error("pseudo-cubic element must be (x ; q)");
    return PCElem(parse_quad(parts[0], rad), parse_rat(parts[1]));
}

QIdeal parse_ideal(std::string_view s, const Disc& D) {
    std::string t = strip_ws(s);
    if (t.size() < 2 || t.front() != '<' || t.back() != '>')
        throw parse_error("ideal must be <n, a + b*g>");
    auto parts = split_top_level(t.substr(1, t.size() - 2), ',');
    if (parts.size() != 2) throw parse_error("ideal must be <n, a + b*g>");
    Rat n = parse_rat(parts[0]);
    Rat a(0), b(0);
    for (const auto& [sign, term] : split_terms(parts[1])) {
        SymbolTerm st = parse_term(term);
        Rat c = Rat(sign) * st.coeff;
        if (st.symbol.empty())
            a += c;
        else if (st.symbol == "g")
            b += c;
        else
            throw parse_error("unexpected symbol in ideal: " + st.symbol);
    }
    if (n.get_den() != 1 || a.get_den() != 1 || b.get_den() != 1)
        throw parse_error("ideal entries must be integers");
    return QIdeal(D, n.get_num(), a.get_num(), b.get_num());
}

Mat2K parse_mat2k(std::string_view s, const Int& rad) {
    auto parts = split_top_level(strip_ws(s), ',');
    if (parts.size() != 4) throw parse_error("2x2 matrix needs 4 entries");
    return Mat2K(parse_quad(parts[0], rad), parse_quad(parts[1], rad), parse_quad(parts[2], rad),
                 parse_quad(parts[3], rad));
}

ZMat parse_zmat2(std::string_view s) {
    auto parts = split_top_level(strip_ws(s), ',');
    if (parts.size() != 4) throw parse_error("2x2 matrix needs 4 entries");
    ZMat m(2, 2);
    for (int i = 0; i < 4; ++i) {
        Rat q = parse_rat(parts[static_cast<size_t>(i)]);
        if (q.get_den() != 1) throw parse_error("integer matrix entry expected");
        m(i / 2, i % 2) = q.get_num();
    }
    return m;
}

ProjPoint parse_proj_point(std::string_view s) {
    std::string t = strip_ws(s);
    if (t == "inf" || t == "infinity") return ProjPoint::infinity();
    Rat re(0), im(0);
    for (const auto& [sign, term] : split_terms(t)) {
        SymbolTerm st = parse_term(term);
        Rat c = Rat(sign) * st.coeff;
        if (st.symbol.empty())
            re += c;
        else if (st.symbol == "i")
            im += c;
        else
            throw parse_error("unexpected symbol in point: " + st.symbol);
    }
    return ProjPoint::finite(GaussRat(re, im));
}

std::string proj_point_str(const ProjPoint& p) { return p.str(); }

} // namespace hmv
