#ifndef TRIREG_MONOMIAL_HPP
#define TRIREG_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace trireg {

// A monomial x^a y^b z^c with non-negative exponents.  Monomials of degree
// d-1 label upward unit triangles of the side-d triangular board, monomials
// of degree d-2 label downward ones, and monomials of degree d label grid
// vertices (each triangle's label is the gcd of its vertex labels).
struct Monomial {
    int a = 0;
    int b = 0;
    int c = 0;

    int degree() const { return a + b + c; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    bool divides(const Monomial& m) const {
        return a <= m.a && b <= m.b && c <= m.c;
    }

    Monomial times(const Monomial& m) const {
        return {a + m.a, b + m.b, c + m.c};
    }

    // Exact quotient; caller guarantees divisibility.
    Monomial over(const Monomial& m) const {
        return {a - m.a, b - m.b, c - m.c};
    }
};

inline Monomial gcd(const Monomial& m, const Monomial& n) {
    return {std::min(m.a, n.a), std::min(m.b, n.b), std::min(m.c, n.c)};
}

enum class Ordering { LT, EQ, GT };

// Graded reverse-lexicographic comparison with x > y > z: higher degree
// wins; within a degree m1 > m2 iff the last non-zero entry of the
// exponent difference is negative.
Ordering grevlex_compare(const Monomial& m1, const Monomial& m2);

// Plain lexicographic comparison (x > y > z), degree-graded.  Within one
// degree this is the top-to-bottom, left-to-right reading order of the
// board, which is the order used for matrix rows and columns.
Ordering lex_compare(const Monomial& m1, const Monomial& m2);

inline bool grevlex_less(const Monomial& m1, const Monomial& m2) {
    return grevlex_compare(m1, m2) == Ordering::LT;
}
inline bool grevlex_greater(const Monomial& m1, const Monomial& m2) {
    return grevlex_compare(m1, m2) == Ordering::GT;
}
inline bool lex_less(const Monomial& m1, const Monomial& m2) {
    return lex_compare(m1, m2) == Ordering::LT;
}
inline bool lex_greater(const Monomial& m1, const Monomial& m2) {
    return lex_compare(m1, m2) == Ordering::GT;
}

// Total order usable as a std container comparator (descending lex).
struct LexDescending {
    bool operator()(const Monomial& m1, const Monomial& m2) const {
        return lex_greater(m1, m2);
    }
};
struct GrevlexDescending {
    bool operator()(const Monomial& m1, const Monomial& m2) const {
        return grevlex_greater(m1, m2);
    }
};

// "x^3y^4z^5", "xy", "z^2", "1".
std::string to_string(const Monomial& m);

// Parses the grammar ("x" ["^" int])? ("y" ["^" int])? ("z" ["^" int])?
// with at least one variable, or the literal "1".  Whitespace is ignored.
// Throws Error(bad_input) with the offending position on failure.
Monomial parse_monomial(const std::string& text);

// All monomials of the given total degree, in descending lex order.
std::vector<Monomial> monomials_of_degree(int degree);

}  // namespace trireg

#endif
