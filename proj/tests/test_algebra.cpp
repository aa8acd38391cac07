#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "towers/algebra.hpp"
#include "towers/errors.hpp"
#include "towers/series_engine.hpp"

using namespace towers;

namespace {

IntPoly tpoly(std::initializer_list<long> c) { return IntPoly(std::vector<BigInt>(c.begin(), c.end())); }

BivariatePolynomial ypoly(std::initializer_list<IntPoly> c) { return BivariatePolynomial(std::vector<IntPoly>(c)); }

/// Determinant over Q by Gaussian elimination.
BigRational determinant(std::vector<std::vector<BigRational>> m) {
    const std::size_t n = m.size();
    BigRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const BigRational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Resultant of two univariate polynomials (ascending coefficients) as the
/// Sylvester determinant.
BigRational sylvester(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    const std::size_t n = da + db;
    std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n, BigRational(0)));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t j = 0; j <= da; ++j) m[r][r + j] = a[da - j];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t j = 0; j <= db; ++j) m[db + r][r + j] = b[db - j];
    return determinant(std::move(m));
}

std::vector<BigRational> at_t(const BivariatePolynomial& q, const BigRational& t) {
    std::vector<BigRational> out;
    for (const auto& c : q.coeffs()) out.push_back(c.evaluate(t));
    while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
    return out;
}

const ShapeClass kShapes[] = {ShapeClass::HalfPyramid, ShapeClass::Pyramid, ShapeClass::Tower};

}  // namespace

TEST_CASE("univariate polynomial helpers") {
    const IntPoly a = tpoly({-2, 0, 1});  // t^2 - 2
    CHECK(a.degree() == 2);
    CHECK(a.derivative() == tpoly({0, 2}));
    CHECK(a.evaluate(BigInt(3)) == 7);
    IntPoly q;
    CHECK(try_exact_div(a * tpoly({1, 1}), tpoly({1, 1}), q));
    CHECK(q == a);
    CHECK_FALSE(try_exact_div(a, tpoly({1, 1}), q));
    CHECK(ring_gcd(tpoly({-1, 0, 1}), tpoly({1, 2, 1})) == tpoly({1, 1}));
    CHECK(ring_gcd(tpoly({0, 6}), tpoly({0, 0, 4})) == tpoly({0, 2}));
    CHECK(content(tpoly({-6, 0, -4})) == -2);
    CHECK(primitive_part(tpoly({-6, 0, -4})) == tpoly({3, 0, 2}));
    // (x-1)(x-2) against x-3 and against 2x-1
    CHECK(resultant(tpoly({2, -3, 1}), tpoly({-3, 1})) == 2);
    CHECK(resultant(tpoly({2, -3, 1}), tpoly({-1, 2})) == 3);
    CHECK(resultant(tpoly({2, -3, 1}), tpoly({-1, 1})) == 0);
    CHECK(resultant(tpoly({-3, 1}), tpoly({2, -3, 1})) == 2);
}

TEST_CASE("defining polynomials") {
    CHECK(defining_polynomial_H(PieceSet({2})) == ypoly({tpoly({0, 0, 1}), tpoly({-1, 0, 2}), tpoly({0, 0, 1})}));
    CHECK(defining_polynomial_H(PieceSet({2}, InterfaceRule::NoExactAlignment)) ==
          ypoly({tpoly({0, 0, 1}), tpoly({-1, 0, 1}), tpoly({0, 0, 1})}));
    CHECK(defining_polynomial_H(PieceSet({1})) == ypoly({tpoly({0, 1}), tpoly({-1, 1})}));
    for (const auto& set : {PieceSet({2}), PieceSet({3}), PieceSet({1, 2}), PieceSet({2, 3}), PieceSet({1, 2, 3}),
                            PieceSet({5}), PieceSet({1, 4})})
        CHECK(defining_polynomial_H(set).degree() == set.max_size());
    CHECK_THROWS_AS(defining_polynomial_H(PieceSet({1, 2}, InterfaceRule::NoExactAlignment)),
                    UnsupportedConfiguration);
}

TEST_CASE("dimer tower annihilators") {
    const auto all = annihilating_polynomial(PieceSet({2}), ShapeClass::Tower, 200);
    CHECK(all == ypoly({tpoly({0, 0, 1}), tpoly({-1, 0, 4})}));
    const auto strict = annihilating_polynomial(PieceSet({2}, InterfaceRule::NoExactAlignment), ShapeClass::Tower, 200);
    CHECK(strict == ypoly({tpoly({0, 0, 1}), tpoly({-1, 0, 3})}));
    CHECK(annihilating_polynomial(PieceSet({2, 3}), ShapeClass::HalfPyramid, 50) ==
          defining_polynomial_H(PieceSet({2, 3})));
}

TEST_CASE("annihilators vanish on the series") {
    std::vector<PieceSet> sets{PieceSet({1}), PieceSet({2}), PieceSet({3}), PieceSet({1, 2}), PieceSet({2, 3}),
                               PieceSet({1, 2, 3}), PieceSet({2}, InterfaceRule::NoExactAlignment),
                               PieceSet({3}, InterfaceRule::NoExactAlignment)};
    for (const auto& set : sets) {
        const auto series = solve_all_shapes(set, 200);
        for (ShapeClass shape : kShapes) {
            const auto q = annihilating_polynomial(set, shape, 200);
            CHECK(q == normalize(q));
            CHECK(verify_annihilator(q, series.of(shape)));
            // a proper annihilator has no constant-in-y-only factor left
            CHECK(q.degree() >= 1);
        }
    }
}

TEST_CASE("verify_annihilator negatives") {
    const auto dimers = solve_all_shapes(PieceSet({2}), 60);
    CHECK_FALSE(verify_annihilator(defining_polynomial_H(PieceSet({1})), dimers.half));
    CHECK_FALSE(verify_annihilator(BivariatePolynomial(IntPoly(1)), dimers.half));
    CHECK_FALSE(verify_annihilator(BivariatePolynomial(), dimers.half));
    CHECK(verify_annihilator(ypoly({tpoly({0, 0, 1}), tpoly({-1, 0, 4})}), dimers.tower));
}

TEST_CASE("symbolic resultant matches Sylvester determinants at rational points") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    for (const auto& set : {PieceSet({2}), PieceSet({1, 2}), PieceSet({2, 3}), PieceSet({1, 2, 3}),
                            PieceSet({2}, InterfaceRule::NoExactAlignment)}) {
        for (ShapeClass shape : {ShapeClass::Pyramid, ShapeClass::Tower}) {
            const auto symbolic = shape_resultant(set, shape);
            const auto e = defining_polynomial_H(set);
            int generic = 0;
            for (long y : {1, 2, 3}) generic = std::max(generic, shape_relation_at(set, shape, y).degree());
            for (int trial = 0; trial < 20; ++trial) {
                BigRational t(num(rng), den(rng));
                t.canonicalize();
                const long y = num(rng);
                const auto g = shape_relation_at(set, shape, y);
                const auto ea = at_t(e, t);
                const auto gb = at_t(g, t);
                if (ea.size() != static_cast<std::size_t>(e.degree()) + 1 ||
                    gb.size() != static_cast<std::size_t>(g.degree()) + 1)
                    continue;  // leading coefficient vanished at this point
                if (g.degree() != generic) continue;  // specialisation lowered deg_H G
                const BigRational expected = sylvester(ea, gb);
                BigRational value = 0;
                for (int j = symbolic.degree(); j >= 0; --j)
                    value = value * y + symbolic.coeffs()[static_cast<std::size_t>(j)].evaluate(t);
                // normalization of E may flip its sign; Res is homogeneous of degree deg G in E
                const bool equal = value == expected;
                const bool negated = value == -expected;
                CHECK((equal || negated));
            }
        }
    }
}

TEST_CASE("elimination errors") {
    CHECK_THROWS_AS(shape_resultant(PieceSet({2}), ShapeClass::HalfPyramid), InputError);
    CHECK_THROWS_AS(annihilating_polynomial(PieceSet({1, 2}, InterfaceRule::NoExactAlignment), ShapeClass::Tower, 50),
                    UnsupportedConfiguration);
    EliminationOptions tight;
    tight.max_degree = 1;
    CHECK_THROWS_AS(annihilating_polynomial(PieceSet({2, 3}), ShapeClass::Tower, 50, tight), FactorizationLimit);
}

TEST_CASE("substitution") {
    const IntegerSeries s(5, {0, 1, 1});
    const auto q = ypoly({tpoly({1}), tpoly({0, 1})});  // 1 + t y
    CHECK(substitute_series(q, s).coeffs() == std::vector<BigInt>{1, 0, 1, 1, 0, 0});
}
