#include "towers/asymptotics.hpp"

#include <cmath>
#include <vector>

#include "towers/errors.hpp"

namespace towers {
namespace {

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// Richardson extrapolant of depth m anchored at index n from values
/// v(n), ..., v(n+m), removing the 1/n, ..., 1/n^m terms of the tail.
BigRational richardson(const std::vector<BigRational>& values, long long n, int m) {
    BigRational acc = 0;
    for (int j = 0; j <= m; ++j) {
        BigInt weight;
        mpz_pow_ui(weight.get_mpz_t(), BigInt(static_cast<long>(n + j)).get_mpz_t(), static_cast<unsigned long>(m));
        BigRational term(weight * (((m + j) % 2 == 0) ? 1 : -1),
                         factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(m - j)));
        term.canonicalize();
        acc += term * values[static_cast<std::size_t>(j)];
    }
    return acc;
}

double natural_log(const BigInt& v) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
    return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace

AsymptoticEstimate estimate_asymptotics(const Sequence& s, int depth) {
    if (depth < 0) throw InputError("Richardson depth must be non-negative");
    const std::size_t needed = static_cast<std::size_t>(4 * depth + 8);
    if (s.terms.size() < needed)
        throw InputError("asymptotic estimation at depth " + std::to_string(depth) + " needs " +
                         std::to_string(needed) + " terms");

    const long long last = s.last_index();
    // ratios r(n) = a(n+1)/a(n) for n = anchor-1 .. last-1
    const long long anchor = last - 1 - depth;
    for (long long n = anchor - 1; n <= last; ++n)
        if (sgn(s.at(n)) == 0) throw InputError("zero term at index " + std::to_string(n) + " inside the ratio window");

    std::vector<BigRational> ratios;
    for (long long n = anchor - 1; n < last; ++n) {
        BigRational q(s.at(n + 1), s.at(n));
        q.canonicalize();
        ratios.push_back(std::move(q));
    }
    const std::vector<BigRational> prev_ratios(ratios.begin(), ratios.end() - 1);
    const std::vector<BigRational> tail_ratios(ratios.begin() + 1, ratios.end());

    AsymptoticEstimate est;
    est.depth = depth;
    est.digits = static_cast<std::size_t>(30 + 10 * depth);
    est.index = anchor;
    est.mu = richardson(tail_ratios, anchor, depth);
    const BigRational mu_prev = richardson(prev_ratios, anchor - 1, depth);
    est.mu_stability = abs(est.mu - mu_prev);

    if (sgn(est.mu) == 0) throw InputError("growth estimate is zero");
    auto exponent_terms = [&](const std::vector<BigRational>& rs, long long start) {
        std::vector<BigRational> out;
        for (std::size_t j = 0; j < rs.size(); ++j) {
            BigRational u = BigRational(static_cast<long>(start + static_cast<long long>(j))) * (rs[j] / est.mu - 1);
            out.push_back(std::move(u));
        }
        return out;
    };
    est.theta = richardson(exponent_terms(tail_ratios, anchor), anchor, depth);
    const BigRational theta_prev = richardson(exponent_terms(prev_ratios, anchor - 1), anchor - 1, depth);
    est.theta_stability = abs(est.theta - theta_prev);

    if (sgn(est.mu) > 0 && sgn(s.at(last)) > 0) {
        const double log_c = natural_log(s.at(last)) - static_cast<double>(last) * std::log(est.mu.get_d()) -
                             est.theta.get_d() * std::log(static_cast<double>(last));
        est.amplitude = std::exp(log_c);
    }
    return est;
}

std::string to_decimal_string(const BigRational& value, std::size_t significant_digits) {
    if (sgn(value) == 0) return "0";
    const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(static_cast<double>(significant_digits) * 3.33) + 64;
    mpf_class f(value, bits);
    mp_exp_t exp10 = 0;
    std::string digits = f.get_str(exp10, 10, significant_digits);
    std::string sign;
    if (!digits.empty() && digits.front() == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // get_str drops trailing zeros; exp10 is the decimal point position.
    if (exp10 > 0 && static_cast<std::size_t>(exp10) <= significant_digits) {
        const auto point = static_cast<std::size_t>(exp10);
        if (digits.size() <= point) return sign + digits + std::string(point - digits.size(), '0');
        return sign + digits.substr(0, point) + "." + digits.substr(point);
    }
    if (exp10 <= 0 && exp10 > -6) return sign + "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
    std::string mantissa = digits.substr(0, 1);
    if (digits.size() > 1) mantissa += "." + digits.substr(1);
    return sign + mantissa + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

}  // namespace towers
