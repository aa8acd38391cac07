#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "towers/enumerator.hpp"
#include "towers/errors.hpp"
#include "towers/series_engine.hpp"

using namespace towers;

namespace {

const ShapeClass kShapes[] = {ShapeClass::HalfPyramid, ShapeClass::Pyramid, ShapeClass::Tower};

std::vector<BigInt> values(const std::map<int, BigInt>& m) {
    std::vector<BigInt> v;
    for (const auto& [k, x] : m) v.push_back(x);
    return v;
}

}  // namespace

TEST_CASE("dimer towers by pieces") {
    const auto towers = collect_towers({PieceSet({2}), ShapeClass::Tower, BoundKind::ByPieceCount, 2, false});
    CHECK(towers.size() == 5);
    CHECK(std::count_if(towers.begin(), towers.end(), [](const Tower& t) { return t.piece_count() == 2; }) == 4);

    const auto counts = count_towers({PieceSet({2}), ShapeClass::Tower, BoundKind::ByPieceCount, 3, false});
    CHECK(values(counts) == std::vector<BigInt>{1, 4, 16});

    const auto strict = count_towers(
        {PieceSet({2}, InterfaceRule::NoExactAlignment), ShapeClass::Tower, BoundKind::ByPieceCount, 4, false});
    CHECK(strict.at(4) == 27);
    CHECK(values(strict) == std::vector<BigInt>{1, 3, 9, 27});
}

TEST_CASE("small cases") {
    const auto single = collect_towers({PieceSet({1}), ShapeClass::Tower, BoundKind::ByPieceCount, 1, false});
    REQUIRE(single.size() == 1);
    CHECK(single[0].to_intervals() == RawFloors{{{0, 1}}});

    const auto half = count_towers({PieceSet({2}), ShapeClass::HalfPyramid, BoundKind::ByPieceCount, 3, false});
    CHECK(values(half) == std::vector<BigInt>{1, 2, 5});

    CHECK(collect_towers({PieceSet({2}), ShapeClass::Tower, BoundKind::ByArea, 1, false}).empty());
    CHECK(count_towers({PieceSet({2}), ShapeClass::Tower, BoundKind::ByArea, 1, false}).at(1) == 0);
    CHECK_THROWS_AS(collect_towers({PieceSet({2}), ShapeClass::Tower, BoundKind::ByArea, 0, false}), InputError);
}

TEST_CASE("emitted towers are legal, canonical, unique and sorted") {
    for (const auto& set : {PieceSet({2}), PieceSet({1, 2, 3}), PieceSet({2, 3}, InterfaceRule::NoExactAlignment)}) {
        for (ShapeClass shape : kShapes) {
            const auto towers = collect_towers({set, shape, BoundKind::ByArea, 9, false});
            CHECK_FALSE(towers.empty());
            std::set<std::string> seen;
            for (std::size_t i = 0; i < towers.size(); ++i) {
                const Tower& t = towers[i];
                CHECK(is_legal_tower(t, set, shape));
                CHECK(t.floors().front().front().left == 0);
                CHECK(t.area() <= 9);
                CHECK(seen.insert(t.to_string()).second);
                if (i > 0) CHECK(towers[i - 1] < t);
            }
        }
    }
}

TEST_CASE("removing the top floor keeps a legal tower") {
    for (const auto& set : {PieceSet({1, 2}), PieceSet({3}), PieceSet({2}, InterfaceRule::NoExactAlignment)}) {
        for (ShapeClass shape : kShapes) {
            enumerate_towers({set, shape, BoundKind::ByArea, 9, false}, [&](const Tower& t) {
                if (t.floor_count() < 2) return;
                std::vector<Floor> floors = t.floors();
                floors.pop_back();
                CHECK(is_legal_tower(Tower(std::move(floors)), set, shape));
            });
        }
    }
}

TEST_CASE("counts agree with the series up to area 12") {
    for (const auto& set : {PieceSet({2}), PieceSet({3}), PieceSet({1, 2}), PieceSet({2, 3}), PieceSet({1, 2, 3})}) {
        const auto series = solve_all_shapes(set, 12);
        for (ShapeClass shape : kShapes) {
            const auto counts = count_towers({set, shape, BoundKind::ByArea, 12, false});
            for (const auto& [area, c] : counts) CHECK(c == series.of(shape)[static_cast<std::size_t>(area)]);
        }
    }
}

TEST_CASE("thread count does not change counts") {
    const EnumerationQuery q{PieceSet({1, 2, 3}), ShapeClass::Tower, BoundKind::ByArea, 10, false};
    const auto reference = count_towers(q, 0);
    CHECK(count_towers(q, 1) == reference);
    CHECK(count_towers(q, 3) == reference);
    CHECK(count_towers(q, 8) == reference);
}

TEST_CASE("weight polynomials") {
    const auto dimers = weight_polynomial({PieceSet({2}), ShapeClass::Tower, BoundKind::ByArea, 2, true});
    CHECK(dimers.at(2) == ZPolynomial::variable(0));
    CHECK(dimers.at(1).is_zero());

    const PieceSet mixed({1, 2});
    const auto w = weight_polynomial({mixed, ShapeClass::Tower, BoundKind::ByArea, 2, true});
    CHECK(w.at(2).coefficient({0, 1}) == 1);
    CHECK(w.at(2).coefficient({2}) > 0);
    CHECK(w.at(2).evaluate_at_ones() ==
          count_towers({mixed, ShapeClass::Tower, BoundKind::ByArea, 2, false}).at(2));

    CHECK_THROWS_AS(weight_polynomial({mixed, ShapeClass::Tower, BoundKind::ByPieceCount, 2, true}), InputError);
}

TEST_CASE("weight profile z1^2 z2^2 z3^2 occurs at area 12") {
    const auto w = weight_polynomial({PieceSet({1, 2, 3}), ShapeClass::Tower, BoundKind::ByArea, 12, true});
    CHECK(w.at(12).coefficient({2, 2, 2}) > 0);
}

TEST_CASE("weighted consistency") {
    for (const auto& set : {PieceSet({1, 2}), PieceSet({2, 3}), PieceSet({1, 2, 3})}) {
        for (ShapeClass shape : kShapes) {
            const auto w = weight_polynomial({set, shape, BoundKind::ByArea, 9, true});
            const auto c = count_towers({set, shape, BoundKind::ByArea, 9, false});
            for (const auto& [area, p] : w) CHECK(p.evaluate_at_ones() == c.at(area));
        }
    }
}

TEST_CASE("multi-size no-alignment enumeration runs") {
    const PieceSet set({1, 2}, InterfaceRule::NoExactAlignment);
    const auto strict = count_towers({set, ShapeClass::Tower, BoundKind::ByArea, 8, false});
    const auto loose = count_towers({PieceSet({1, 2}), ShapeClass::Tower, BoundKind::ByArea, 8, false});
    for (int a = 1; a <= 8; ++a) CHECK(strict.at(a) <= loose.at(a));
    CHECK(strict.at(2) == 2);  // [0,1][1,2] and [0,2]; stacked monomers are aligned
}
