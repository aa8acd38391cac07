#include "towers/algebra.hpp"

#include "towers/errors.hpp"
#include "towers/linalg.hpp"
#include "towers/series_engine.hpp"

namespace towers {
namespace {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

IntPoly t_power(std::size_t power, const BigInt& c = 1) { return IntPoly::monomial(power, c); }

/// t^i (1+H)^i as a polynomial in H.
BivariatePolynomial shifted_binomial_power(int i) {
    std::vector<IntPoly> coeffs;
    for (int j = 0; j <= i; ++j) coeffs.push_back(t_power(static_cast<std::size_t>(i), binomial(i, j)));
    return BivariatePolynomial(std::move(coeffs));
}

const BivariatePolynomial kVariable = BivariatePolynomial::monomial(1, IntPoly(1));

void require_algebra_support(const PieceSet& pieces) {
    if (pieces.rule() == InterfaceRule::NoExactAlignment && !pieces.is_single_size())
        throw UnsupportedConfiguration("no-exact-alignment equations exist only for a single piece size");
}

BivariatePolynomial raw_defining_polynomial(const PieceSet& pieces) {
    require_algebra_support(pieces);
    if (pieces.rule() == InterfaceRule::NoExactAlignment) {
        const int k = pieces.max_size();
        // y - t^k ((1+y)^k - y)
        return kVariable - shifted_binomial_power(k) + kVariable.scaled(t_power(static_cast<std::size_t>(k)));
    }
    BivariatePolynomial e = kVariable;
    for (int i : pieces.sizes()) e -= shifted_binomial_power(i);
    return e;
}

/// D(t, H) with P = H / D.
BivariatePolynomial pyramid_denominator_poly(const PieceSet& pieces) {
    BivariatePolynomial d(IntPoly(1));
    if (pieces.rule() == InterfaceRule::NoExactAlignment) {
        return d - kVariable.scaled(IntPoly(BigInt(pieces.max_size() - 1)));
    }
    for (int i : pieces.sizes())
        if (i > 1) d -= shifted_binomial_power(i).scaled(IntPoly(BigInt(i - 1)));
    return d;
}

/// y-independent factor A of the relation y A(t, H) - H.
BivariatePolynomial relation_multiplier(const PieceSet& pieces, ShapeClass shape) {
    BivariatePolynomial a = pyramid_denominator_poly(pieces);
    if (shape == ShapeClass::Tower) a = a * (BivariatePolynomial(IntPoly(1)) - kVariable);
    return a;
}

IntegerSeries to_series(const IntPoly& p, std::size_t order) {
    IntegerSeries s(order);
    for (std::size_t i = 0; i < p.coeffs().size() && i <= order; ++i) s[i] = p.coeffs()[i];
    return s;
}

BivariatePolynomial from_unknowns(const std::vector<BigInt>& v, int y_degree, int t_deg) {
    std::vector<IntPoly> coeffs;
    for (int j = 0; j <= y_degree; ++j) {
        std::vector<BigInt> c(v.begin() + j * (t_deg + 1), v.begin() + (j + 1) * (t_deg + 1));
        coeffs.emplace_back(std::move(c));
    }
    return BivariatePolynomial(std::move(coeffs));
}

}  // namespace

BivariatePolynomial normalize(const BivariatePolynomial& q) {
    if (q.is_zero()) return q;
    BigInt g = 0;
    for (const auto& c : q.coeffs())
        for (const auto& x : c.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (leading_sign(q) < 0) g = -g;
    std::vector<IntPoly> coeffs;
    for (const auto& c : q.coeffs()) coeffs.push_back(divide_coefficients(c, g));
    return BivariatePolynomial(std::move(coeffs));
}

int t_degree(const BivariatePolynomial& q) {
    int d = -1;
    for (const auto& c : q.coeffs()) d = std::max(d, c.degree());
    return d;
}

BivariatePolynomial defining_polynomial_H(const PieceSet& pieces) {
    return normalize(raw_defining_polynomial(pieces));
}

BivariatePolynomial shape_relation_at(const PieceSet& pieces, ShapeClass shape, long y) {
    require_algebra_support(pieces);
    if (shape == ShapeClass::HalfPyramid) throw InputError("half-pyramids need no elimination");
    return relation_multiplier(pieces, shape).scaled(IntPoly(BigInt(y))) - kVariable;
}

BivariatePolynomial shape_resultant(const PieceSet& pieces, ShapeClass shape) {
    require_algebra_support(pieces);
    if (shape == ShapeClass::HalfPyramid) throw InputError("half-pyramids need no elimination");
    const BivariatePolynomial e = raw_defining_polynomial(pieces);
    const int generic_degree = std::max(relation_multiplier(pieces, shape).degree(), 1);
    // deg_y Res <= deg_H E
    const std::size_t needed = static_cast<std::size_t>(e.degree()) + 1;

    std::vector<long> points;
    std::vector<IntPoly> values;
    for (long y = 1; points.size() < needed; ++y) {
        const BivariatePolynomial g = shape_relation_at(pieces, shape, y);
        if (g.degree() != generic_degree) continue;  // specialisation would drop the degree
        points.push_back(y);
        values.push_back(resultant(e, g));
    }

    // Newton divided differences; for integer nodes and an integer
    // polynomial every difference quotient is exact.
    const std::size_t n = points.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            values[i] = divide_coefficients(values[i] - values[i - 1], BigInt(points[i] - points[i - j]));

    BivariatePolynomial result(values[n - 1]);
    for (std::size_t j = n - 1; j-- > 0;) {
        const BivariatePolynomial node(std::vector<IntPoly>{IntPoly(BigInt(-points[j])), IntPoly(1)});
        result = result * node + BivariatePolynomial(values[j]);
    }
    return result;
}

IntegerSeries substitute_series(const BivariatePolynomial& q, const IntegerSeries& s) {
    const std::size_t order = s.order();
    IntegerSeries acc(order);
    for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it) acc = acc * s + to_series(*it, order);
    return acc;
}

bool verify_annihilator(const BivariatePolynomial& q, const IntegerSeries& s) {
    if (q.degree() < 1) return false;
    return substitute_series(q, s).is_zero();
}

BivariatePolynomial annihilating_polynomial(const PieceSet& pieces, ShapeClass shape, std::size_t verify_order,
                                            const EliminationOptions& options) {
    require_algebra_support(pieces);
    const IntegerSeries series = solve_all_shapes(pieces, verify_order).of(shape);

    if (shape == ShapeClass::HalfPyramid) {
        BivariatePolynomial e = defining_polynomial_H(pieces);
        if (!verify_annihilator(e, series))
            throw ConsistencyError("defining polynomial does not vanish on the half-pyramid series");
        return e;
    }

    const BivariatePolynomial raw = shape_resultant(pieces, shape);
    if (raw.is_zero()) throw ConsistencyError("resultant vanished identically");
    if (raw.degree() > options.max_degree)
        throw FactorizationLimit("resultant y-degree " + std::to_string(raw.degree()) + " exceeds cap " +
                                 std::to_string(options.max_degree));

    const BivariatePolynomial pp = primitive_part(raw);
    BivariatePolynomial sqf = pp;
    const BivariatePolynomial g = ring_gcd(pp, pp.derivative());
    if (g.degree() > 0) {
        if (!try_exact_div(pp, g, sqf)) throw ConsistencyError("squarefree reduction failed");
        sqf = primitive_part(sqf);
    }
    sqf = normalize(sqf);

    // Look for a proper divisor vanishing on the series, smallest y-degree
    // first, then smallest t-degree.
    const int max_t = t_degree(sqf);
    std::vector<IntegerSeries> powers{IntegerSeries::constant(verify_order, 1)};
    for (int d = 1; d < sqf.degree(); ++d) {
        while (static_cast<int>(powers.size()) <= d) powers.push_back(powers.back() * series);
        for (int dt = 0; dt <= max_t; ++dt) {
            const std::size_t unknowns = static_cast<std::size_t>((d + 1) * (dt + 1));
            if (unknowns + options.guard > verify_order + 1) break;
            IntegerMatrix rows(verify_order + 1, std::vector<BigInt>(unknowns, BigInt(0)));
            for (std::size_t m = 0; m <= verify_order; ++m)
                for (int j = 0; j <= d; ++j)
                    for (int l = 0; l <= dt && static_cast<std::size_t>(l) <= m; ++l)
                        rows[m][static_cast<std::size_t>(j * (dt + 1) + l)] = powers[j][m - l];
            if (rank_mod_prime(rows, unknowns) == unknowns) continue;
            for (const auto& v : rational_nullspace(rows, unknowns)) {
                BivariatePolynomial cand = from_unknowns(v, d, dt);
                if (cand.degree() < 1) continue;
                cand = normalize(primitive_part(cand));
                BivariatePolynomial quotient;
                if (try_exact_div(sqf, cand, quotient) && verify_annihilator(cand, series)) return cand;
            }
        }
    }

    if (!verify_annihilator(sqf, series))
        throw ConsistencyError("no factor of the resultant vanishes on the " + std::string(to_string(shape)) +
                               " series");
    return sqf;
}

}  // namespace towers
