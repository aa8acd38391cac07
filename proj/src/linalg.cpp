#include "towers/linalg.hpp"

#include <cstdint>
#include <numeric>

namespace towers {
namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_mod(r, b);
        b = mul_mod(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const BigInt& v) {
    return mpz_fdiv_ui(v.get_mpz_t(), kPrime);
}

}  // namespace

std::size_t rank_mod_prime(const IntegerMatrix& rows, std::size_t cols) {
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        auto& r = m.emplace_back(cols, 0);
        for (std::size_t c = 0; c < cols && c < row.size(); ++c) r[c] = reduce(row[c]);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint64_t inv = pow_mod(m[rank][c], kPrime - 2);
        for (std::size_t j = c; j < cols; ++j) m[rank][j] = mul_mod(m[rank][j], inv);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const std::uint64_t f = m[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = mul_mod(f, m[rank][j]);
                m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + kPrime - sub;
            }
        }
        ++rank;
    }
    return rank;
}

IntegerMatrix rational_nullspace(const IntegerMatrix& rows, std::size_t cols) {
    std::vector<std::vector<BigRational>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        auto& r = m.emplace_back(cols, BigRational(0));
        for (std::size_t c = 0; c < cols && c < row.size(); ++c) r[c] = BigRational(row[c]);
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const BigRational inv = 1 / m[rank][c];
        for (std::size_t j = c; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || sgn(m[i][c]) == 0) continue;
            const BigRational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m[rank][j]) != 0) m[i][j] -= f * m[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    IntegerMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<BigRational> v(cols, BigRational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];

        BigInt denom_lcm = 1;
        for (const auto& x : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
        std::vector<BigInt> iv(cols);
        BigInt g = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            iv[c] = v[c].get_num() * (denom_lcm / v[c].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[c].get_mpz_t());
        }
        int last_sign = 0;
        for (std::size_t c = cols; c-- > 0;)
            if (sgn(iv[c]) != 0) {
                last_sign = sgn(iv[c]);
                break;
            }
        if (last_sign < 0) g = -g;
        for (auto& x : iv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        basis.push_back(std::move(iv));
    }
    return basis;
}

}  // namespace towers
