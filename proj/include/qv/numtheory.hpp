#pragma once

#include <cstdint>
#include <vector>

namespace qv {

// Brute-force arithmetic oracles. Implemented with plain integer loops,
// deliberately independent of the series engine, so that the coefficient
// cross-checks rest on evidence from a second route.

// Entry n: sum over (x_1..x_k) in Z^k with sum x_i^2 = n of (-1)^(x_1+...+x_k).
std::vector<std::int64_t> count_sq_signed(int k, std::int64_t nmax);

// Entry n: number of (m_1..m_k), m_i >= 0, with sum m_i (m_i+1)/2 = n.
std::vector<std::int64_t> count_tri(int k, std::int64_t nmax);

// Unsigned r_k(n): representations of n as a sum of k integer squares.
std::vector<std::int64_t> count_sq_unsigned(int k, std::int64_t nmax);

// True iff n = 4^k (8l + 7).
bool legendre_excluded(std::int64_t n);

// Coefficients of prod_{i>=1} (1 - q^i) up to (excluding) nmax, by direct
// polynomial multiplication over int64.
std::vector<std::int64_t> pentagonal_coeffs(std::int64_t nmax);

}  // namespace qv
