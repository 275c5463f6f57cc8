#include "trireg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "trireg/error.hpp"

namespace trireg {

namespace {

// Gray-code Ryser on native integers.  Requires row sums to fit int64 and
// their running product to fit int128; the caller has checked the bounds.
BigInt ryser_fast(const IntMatrix& m) {
    int n = m.rows();
    std::vector<std::int64_t> col(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            col[static_cast<std::size_t>(j) * n + i] = static_cast<std::int64_t>(m.at(i, j));
        }
    }
    std::vector<std::int64_t> sums(n, 0);
    int zero_count = n;
    BigInt total = 0;
    std::uint64_t subset = 0;
    std::uint64_t iterations = (1ull << n) - 1;
    for (std::uint64_t it = 1; it <= iterations; ++it) {
        int j = static_cast<int>(__builtin_ctzll(it));
        std::uint64_t bit = 1ull << j;
        const std::int64_t* cj = &col[static_cast<std::size_t>(j) * n];
        if (subset & bit) {
            subset ^= bit;
            for (int i = 0; i < n; ++i) {
                bool was_zero = sums[i] == 0;
                sums[i] -= cj[i];
                zero_count += (sums[i] == 0) - was_zero;
            }
        } else {
            subset |= bit;
            for (int i = 0; i < n; ++i) {
                bool was_zero = sums[i] == 0;
                sums[i] += cj[i];
                zero_count += (sums[i] == 0) - was_zero;
            }
        }
        if (zero_count > 0) continue;
        __int128 prod = 1;
        for (int i = 0; i < n; ++i) prod *= sums[i];
        int popcount = __builtin_popcountll(subset);
        if ((n - popcount) % 2 == 0) {
            total += BigInt(prod);
        } else {
            total -= BigInt(prod);
        }
    }
    return total;
}

BigInt ryser_big(const IntMatrix& m) {
    int n = m.rows();
    std::vector<BigInt> sums(n, 0);
    BigInt total = 0;
    std::uint64_t subset = 0;
    std::uint64_t iterations = (1ull << n) - 1;
    for (std::uint64_t it = 1; it <= iterations; ++it) {
        int j = static_cast<int>(__builtin_ctzll(it));
        std::uint64_t bit = 1ull << j;
        bool add = !(subset & bit);
        subset ^= bit;
        for (int i = 0; i < n; ++i) {
            if (add) {
                sums[i] += m.at(i, j);
            } else {
                sums[i] -= m.at(i, j);
            }
        }
        BigInt prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= sums[i];
        if (prod == 0) continue;
        int popcount = __builtin_popcountll(subset);
        if ((n - popcount) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    return total;
}

bool fits_fast_path(const IntMatrix& m) {
    int n = m.rows();
    if (n > 62) return false;
    // Bound the running product of row sums by the product of per-row
    // absolute sums; stay well under the int128 limit.
    long double log_bound = 0;
    for (int i = 0; i < n; ++i) {
        long double row_abs = 0;
        for (int j = 0; j < n; ++j) {
            const BigInt& e = m.at(i, j);
            if (e > (std::numeric_limits<std::int64_t>::max)() ||
                e < (std::numeric_limits<std::int64_t>::min)()) {
                return false;
            }
            row_abs += std::abs(static_cast<long double>(static_cast<std::int64_t>(e)));
        }
        if (row_abs > 1e15L) return false;
        log_bound += std::log2(row_abs > 1 ? row_abs : 2);
    }
    return log_bound < 120;
}

}  // namespace

BigInt permanent(const IntMatrix& m, int cap) {
    if (!m.square()) fail_input("permanent requires a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    if (n > cap || n > 62) {
        throw Error(ErrorCode::resource_cap,
                    "permanent of a " + std::to_string(n) + "x" + std::to_string(n) +
                        " matrix exceeds the cap of " + std::to_string(std::min(cap, 62)));
    }
    return fits_fast_path(m) ? ryser_fast(m) : ryser_big(m);
}

BigInt determinant(const IntMatrix& m) {
    if (!m.square()) fail_input("determinant requires a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (w.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev;  // exact by Bareiss
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

std::string to_text(const IntMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const IntMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out << ',';
        out << '[';
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            const BigInt& e = m.at(i, j);
            bool fits = e >= (std::numeric_limits<std::int64_t>::min)() &&
                        e <= (std::numeric_limits<std::int64_t>::max)();
            if (fits) {
                out << e;
            } else {
                out << '"' << e << '"';
            }
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace trireg
