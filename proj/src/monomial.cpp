#include "trireg/monomial.hpp"

#include <cctype>

#include "trireg/error.hpp"

namespace trireg {

Ordering grevlex_compare(const Monomial& m1, const Monomial& m2) {
    int d1 = m1.degree(), d2 = m2.degree();
    if (d1 != d2) return d1 > d2 ? Ordering::GT : Ordering::LT;
    int diff[3] = {m1.a - m2.a, m1.b - m2.b, m1.c - m2.c};
    for (int i = 2; i >= 0; --i) {
        if (diff[i] != 0) return diff[i] < 0 ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

Ordering lex_compare(const Monomial& m1, const Monomial& m2) {
    int d1 = m1.degree(), d2 = m2.degree();
    if (d1 != d2) return d1 > d2 ? Ordering::GT : Ordering::LT;
    int diff[3] = {m1.a - m2.a, m1.b - m2.b, m1.c - m2.c};
    for (int i = 0; i < 3; ++i) {
        if (diff[i] != 0) return diff[i] > 0 ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

std::string to_string(const Monomial& m) {
    if (m.degree() == 0) return "1";
    std::string s;
    auto var = [&s](char v, int e) {
        if (e == 0) return;
        s.push_back(v);
        if (e > 1) s += "^" + std::to_string(e);
    };
    var('x', m.a);
    var('y', m.b);
    var('z', m.c);
    return s;
}

Monomial parse_monomial(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) fail_input("empty monomial");
    if (s == "1") return {};

    Monomial m;
    std::size_t pos = 0;
    int seen = 0;  // index of the last variable consumed, keeps x,y,z order
    while (pos < s.size()) {
        char v = s[pos];
        int idx = v == 'x' ? 1 : v == 'y' ? 2 : v == 'z' ? 3 : 0;
        if (idx == 0 || idx <= seen) {
            fail_input("bad monomial '" + text + "' at position " +
                       std::to_string(pos) + ": unexpected '" +
                       std::string(1, v) + "'");
        }
        seen = idx;
        ++pos;
        int exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
                fail_input("bad monomial '" + text + "' at position " +
                           std::to_string(pos) + ": expected exponent");
            }
            exp = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                exp = exp * 10 + (s[pos] - '0');
                if (exp > 1000000) fail_input("exponent too large in '" + text + "'");
                ++pos;
            }
        }
        if (idx == 1) m.a = exp;
        if (idx == 2) m.b = exp;
        if (idx == 3) m.c = exp;
    }
    return m;
}

std::vector<Monomial> monomials_of_degree(int degree) {
    std::vector<Monomial> out;
    for (int a = degree; a >= 0; --a) {
        for (int b = degree - a; b >= 0; --b) {
            out.push_back({a, b, degree - a - b});
        }
    }
    return out;
}

}  // namespace trireg
