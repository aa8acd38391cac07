#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "towers/errors.hpp"
#include "towers/series_engine.hpp"

using namespace towers;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> prefix(const std::vector<BigInt>& v, std::size_t n) { return {v.begin(), v.begin() + n}; }

/// H_{j+1} = rhs(H_j) from H_0 = 0, run order + 1 times, with plain
/// truncated multiplication only.
template <class C>
TruncatedSeries<C> literal_iteration(const PieceSet& pieces, std::size_t order, std::vector<C> markers) {
    using S = TruncatedSeries<C>;
    S h(order);
    const bool noalign = pieces.rule() == InterfaceRule::NoExactAlignment;
    for (std::size_t step = 0; step <= order; ++step) {
        S one_plus_h = h;
        one_plus_h[0] += C(1);
        S next(order);
        for (std::size_t s = 0; s < pieces.sizes().size(); ++s) {
            const int size = pieces.sizes()[s];
            S power = S::constant(order, C(1));
            for (int e = 0; e < size; ++e) power = power * one_plus_h;
            if (noalign) power -= h;
            S term = power.shifted(static_cast<std::size_t>(size));
            for (std::size_t i = 0; i <= order; ++i) next[i] += markers[s] * term[i];
        }
        h = next;
    }
    return h;
}

const std::vector<PieceSet>& acceptance_sets() {
    static const std::vector<PieceSet> sets{PieceSet({2}), PieceSet({3}), PieceSet({1, 2}), PieceSet({2, 3}),
                                            PieceSet({1, 2, 3})};
    return sets;
}

}  // namespace

TEST_CASE("series arithmetic") {
    const IntegerSeries a(6, big({1, 1}));
    const IntegerSeries inv = a.reciprocal();
    CHECK(inv.coeffs() == big({1, -1, 1, -1, 1, -1, 1}));
    CHECK((a * inv) == IntegerSeries::constant(6, 1));
    CHECK(a.pow(5) == a * a * a * a * a);
    const IntegerSeries b(6, big({2, 3, 0, 1}));
    CHECK(b.pow(3) == b * b * b);
    CHECK(b.shifted(2).coeffs() == big({0, 0, 2, 3, 0, 1, 0}));
    CHECK(IntegerSeries(6, big({-1, 4})).reciprocal() * IntegerSeries(6, big({-1, 4})) ==
          IntegerSeries::constant(6, 1));
    CHECK_THROWS_AS(b.reciprocal(), ConsistencyError);
    CHECK_THROWS_AS(a + IntegerSeries(5), ConsistencyError);
    CHECK(IntegerSeries::monomial(3, 5, 1).is_zero());
}

TEST_CASE("half-pyramid examples") {
    const auto h = solve_half_pyramids(PieceSet({2}), 8);
    CHECK(h.coeffs() == big({0, 0, 1, 0, 2, 0, 5, 0, 14}));

    const auto m = solve_half_pyramids(PieceSet({2}, InterfaceRule::NoExactAlignment), 10);
    CHECK(coefficients_by_pieces(m, PieceSet({2})) == big({1, 1, 2, 4, 9}));

    for (const auto& set : acceptance_sets()) CHECK(solve_half_pyramids(set, 0).is_zero());
    CHECK_THROWS_AS(solve_half_pyramids(PieceSet({1, 2}, InterfaceRule::NoExactAlignment), 5),
                    UnsupportedConfiguration);
    CHECK_THROWS_AS(solve_half_pyramids_weighted(PieceSet({2}, InterfaceRule::NoExactAlignment), 5),
                    UnsupportedConfiguration);
}

TEST_CASE("online solver equals the literal fixed-point iteration") {
    std::vector<PieceSet> sets = acceptance_sets();
    sets.emplace_back(std::vector<int>{1});
    sets.emplace_back(std::vector<int>{3}, InterfaceRule::NoExactAlignment);
    for (const auto& set : sets) {
        const std::vector<BigInt> ones(set.sizes().size(), BigInt(1));
        CHECK(solve_half_pyramids(set, 40) == literal_iteration<BigInt>(set, 40, ones));
    }
    for (const auto& set : acceptance_sets()) {
        std::vector<ZPolynomial> markers;
        for (std::size_t s = 0; s < set.sizes().size(); ++s) markers.push_back(ZPolynomial::variable(s));
        CHECK(solve_half_pyramids_weighted(set, 12) == literal_iteration<ZPolynomial>(set, 12, markers));
    }
}

TEST_CASE("pyramids and towers") {
    const PieceSet dimers({2});
    const auto all = solve_all_shapes(dimers, 40);
    CHECK(prefix(coefficients_by_pieces(all.pyramid, dimers), 3) == big({1, 3, 10}));
    const auto towers = coefficients_by_pieces(all.tower, dimers);
    for (unsigned n = 1; n <= 8; ++n) CHECK(towers[n - 1] == closed_form_dimer_towers(InterfaceRule::AllInterfaces, n));

    const PieceSet triple({3});
    CHECK(coefficients_by_pieces(solve_all_shapes(triple, 6).pyramid, triple)[1] == 5);

    const PieceSet ones({1});
    const auto unit = solve_all_shapes(ones, 10);
    CHECK(unit.pyramid == unit.half);
    for (std::size_t n = 1; n <= 10; ++n) {
        BigInt expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), 2, n - 1);
        CHECK(unit.tower[n] == expected);
    }

    const PieceSet strict({2}, InterfaceRule::NoExactAlignment);
    CHECK(prefix(coefficients_by_pieces(solve_all_shapes(strict, 20).tower, strict), 4) == big({1, 3, 9, 27}));
}

TEST_CASE("coefficients by pieces") {
    CHECK(coefficients_by_pieces(IntegerSeries(6), PieceSet({2})) == big({0, 0, 0}));
    CHECK_THROWS_AS(coefficients_by_pieces(IntegerSeries(6), PieceSet({1, 2})), UnsupportedConfiguration);
    CHECK_THROWS_AS(coefficients_by_pieces(IntegerSeries(6, big({0, 1})), PieceSet({2})), ConsistencyError);
}

TEST_CASE("closed forms") {
    CHECK(closed_form_half_pyramids(2, 3) == 5);
    CHECK(closed_form_half_pyramids(3, 2) == 3);
    CHECK(closed_form_pyramids(2, 2) == 3);
    CHECK(closed_form_pyramids(3, 2) == 5);
    CHECK(closed_form_dimer_towers(InterfaceRule::AllInterfaces, 3) == 16);
    CHECK(closed_form_dimer_towers(InterfaceRule::NoExactAlignment, 4) == 27);
    for (unsigned n = 1; n <= 20; ++n) {
        CHECK(closed_form_half_pyramids(1, n) == 1);
        CHECK(closed_form_pyramids(1, n) == 1);
    }
    CHECK(closed_form_dimer_towers(InterfaceRule::AllInterfaces, 1) == 1);
    CHECK(closed_form_dimer_towers(InterfaceRule::NoExactAlignment, 1) == 1);
    CHECK_THROWS_AS(closed_form_pyramids(0, 2), InputError);
    CHECK_THROWS_AS(closed_form_half_pyramids(2, 0), InputError);
}

TEST_CASE("closed forms against the series") {
    for (unsigned k = 1; k <= 5; ++k) {
        const PieceSet single({static_cast<int>(k)});
        const auto all = solve_all_shapes(single, 50 * k);
        const auto half = coefficients_by_pieces(all.half, single);
        const auto pyr = coefficients_by_pieces(all.pyramid, single);
        for (unsigned n = 1; n <= 50; ++n) {
            CHECK(half[n - 1] == closed_form_half_pyramids(k, n));
            CHECK(pyr[n - 1] == closed_form_pyramids(k, n));
        }
    }
}

TEST_CASE("residuals, relations and ordering") {
    std::vector<PieceSet> sets = acceptance_sets();
    sets.emplace_back(std::vector<int>{2}, InterfaceRule::NoExactAlignment);
    for (const auto& set : sets) {
        const auto all = solve_all_shapes(set, 120);
        CHECK(half_pyramid_residual(all.half, set).is_zero());
        const auto one = IntegerSeries::constant(120, 1);
        CHECK(all.tower * (one - all.half) == all.pyramid);
        CHECK(all.pyramid * pyramid_denominator(all.half, set) == all.half);
        for (std::size_t i = 0; i <= 120; ++i) {
            CHECK(sgn(all.half[i]) >= 0);
            CHECK(all.half[i] <= all.pyramid[i]);
            CHECK(all.pyramid[i] <= all.tower[i]);
        }
        IntegerSeries wrong = all.half;
        wrong[7] += 1;
        CHECK_FALSE(half_pyramid_residual(wrong, set).is_zero());
    }
}

TEST_CASE("weighted series") {
    for (const auto& set : acceptance_sets()) {
        const auto plain = solve_all_shapes(set, 24);
        const auto weighted = solve_all_shapes_weighted(set, 24);
        CHECK(evaluate_at_ones(weighted.half) == plain.half);
        CHECK(evaluate_at_ones(weighted.pyramid) == plain.pyramid);
        CHECK(evaluate_at_ones(weighted.tower) == plain.tower);
        CHECK(half_pyramid_residual(weighted.half, set).is_zero());
        for (std::size_t i = 0; i <= 24; ++i)
            for (const auto& [e, c] : weighted.tower[i].terms()) {
                std::size_t area = 0;
                for (std::size_t s = 0; s < e.size(); ++s) area += e[s] * static_cast<std::size_t>(set.sizes()[s]);
                CHECK(area == i);
            }
    }
    const auto dimer = solve_half_pyramids_weighted(PieceSet({2}), 4);
    CHECK(dimer[2] == ZPolynomial::variable(0));
    CHECK(dimer[4] == ZPolynomial::monomial({2}, 2));
}

TEST_CASE("counting by pieces") {
    for (const auto& set : acceptance_sets()) {
        const std::size_t pieces = 8;
        const auto shared = solve_all_shapes_weighted(set, pieces * static_cast<std::size_t>(set.max_size()),
                                                      MarkerMode::Shared);
        const auto direct = solve_all_shapes_by_pieces(set, pieces);
        for (auto shape : {ShapeClass::HalfPyramid, ShapeClass::Pyramid, ShapeClass::Tower}) {
            const auto counts = counts_by_pieces(shared.of(shape), pieces);
            for (std::size_t n = 1; n <= pieces; ++n) CHECK(counts[n - 1] == direct.of(shape)[n]);
            if (set.is_single_size()) {
                const auto remapped = coefficients_by_pieces(
                    solve_all_shapes(set, pieces * static_cast<std::size_t>(set.max_size())).of(shape), set);
                for (std::size_t n = 1; n <= pieces; ++n) CHECK(remapped[n - 1] == direct.of(shape)[n]);
            }
        }
    }
    const PieceSet strict({2}, InterfaceRule::NoExactAlignment);
    const auto s = solve_all_shapes_by_pieces(strict, 6);
    CHECK(s.tower.coeffs() == big({0, 1, 3, 9, 27, 81, 243}));
}
