#include "qv/numtheory.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qv {

std::vector<std::int64_t> count_sq_signed(int k, std::int64_t nmax) {
    if (k < 1 || k > 4) throw std::invalid_argument("count_sq_signed supports 1 <= k <= 4");
    std::vector<std::int64_t> acc(static_cast<std::size_t>(nmax) + 1, 0);
    // chi[n] = sum over x with x^2 = n of (-1)^x: 1 at 0, 2*(-1)^r at r^2.
    std::vector<std::int64_t> chi(acc.size(), 0);
    chi[0] = 1;
    for (std::int64_t r = 1; r * r <= nmax; ++r) chi[static_cast<std::size_t>(r * r)] = (r % 2 == 0) ? 2 : -2;
    std::vector<std::int64_t> cur = chi;
    for (int i = 1; i < k; ++i) {
        std::vector<std::int64_t> next(acc.size(), 0);
        for (std::size_t a = 0; a < cur.size(); ++a) {
            if (cur[a] == 0) continue;
            for (std::size_t b = 0; a + b < next.size(); ++b) {
                if (chi[b] == 0) continue;
                next[a + b] += cur[a] * chi[b];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::int64_t> count_sq_unsigned(int k, std::int64_t nmax) {
    if (k < 1 || k > 4) throw std::invalid_argument("count_sq_unsigned supports 1 <= k <= 4");
    std::vector<std::int64_t> chi(static_cast<std::size_t>(nmax) + 1, 0);
    chi[0] = 1;
    for (std::int64_t r = 1; r * r <= nmax; ++r) chi[static_cast<std::size_t>(r * r)] = 2;
    std::vector<std::int64_t> cur = chi;
    for (int i = 1; i < k; ++i) {
        std::vector<std::int64_t> next(chi.size(), 0);
        for (std::size_t a = 0; a < cur.size(); ++a) {
            if (cur[a] == 0) continue;
            for (std::size_t b = 0; a + b < next.size(); ++b) {
                if (chi[b] == 0) continue;
                next[a + b] += cur[a] * chi[b];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::int64_t> count_tri(int k, std::int64_t nmax) {
    if (k < 1 || k > 4) throw std::invalid_argument("count_tri supports 1 <= k <= 4");
    std::vector<std::int64_t> tri(static_cast<std::size_t>(nmax) + 1, 0);
    for (std::int64_t m = 0; m * (m + 1) / 2 <= nmax; ++m) tri[static_cast<std::size_t>(m * (m + 1) / 2)] = 1;
    std::vector<std::int64_t> cur = tri;
    for (int i = 1; i < k; ++i) {
        std::vector<std::int64_t> next(tri.size(), 0);
        for (std::size_t a = 0; a < cur.size(); ++a) {
            if (cur[a] == 0) continue;
            for (std::size_t b = 0; a + b < next.size(); ++b) {
                if (tri[b] == 0) continue;
                next[a + b] += cur[a] * tri[b];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool legendre_excluded(std::int64_t n) {
    if (n < 0) return false;
    while (n % 4 == 0) n /= 4;
    return n % 8 == 7;
}

std::vector<std::int64_t> pentagonal_coeffs(std::int64_t nmax) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(nmax), 0);
    if (nmax <= 0) return coeffs;
    coeffs[0] = 1;
    for (std::int64_t i = 1; i < nmax; ++i) {
        // multiply by (1 - q^i)
        for (std::int64_t e = nmax - 1; e >= i; --e) coeffs[static_cast<std::size_t>(e)] -= coeffs[static_cast<std::size_t>(e - i)];
    }
    return coeffs;
}

}  // namespace qv
