#ifndef TRIREG_MATRIX_HPP
#define TRIREG_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace trireg {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix of exact integers.  Row/column orders are fixed by the
// callers that build them (descending lex for bi-adjacency, ascending
// grevlex for lattice-path start/end points).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> entries_;
};

inline constexpr int kDefaultPermanentCap = 30;

// Exact permanent by Ryser's formula with Gray-code subset iteration;
// the 0x0 matrix has permanent 1.  Throws Error(resource_cap) when the
// dimension exceeds `cap` (the cost is 2^n) and Error(bad_input) when the
// matrix is not square.
BigInt permanent(const IntMatrix& m, int cap = kDefaultPermanentCap);

// Exact determinant by Bareiss fraction-free elimination; 0x0 gives 1.
BigInt determinant(const IntMatrix& m);

// Rows of space-separated integers, one row per line.
std::string to_text(const IntMatrix& m);

// Nested JSON arrays; entries are JSON numbers when they fit 64 bits and
// decimal strings otherwise.
std::string to_json(const IntMatrix& m);

}  // namespace trireg

#endif
