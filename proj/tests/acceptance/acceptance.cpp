// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "towers/algebra.hpp"
#include "towers/asymptotics.hpp"
#include "towers/enumerator.hpp"
#include "towers/holonomic.hpp"
#include "towers/series_engine.hpp"

using namespace towers;

namespace {

const ShapeClass kShapes[] = {ShapeClass::HalfPyramid, ShapeClass::Pyramid, ShapeClass::Tower};

std::vector<PieceSet> oracle_sets() {
    return {PieceSet({2}), PieceSet({3}), PieceSet({1, 2}), PieceSet({2, 3}), PieceSet({1, 2, 3})};
}

BigInt power(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// Collects failures; `note` keeps the first one for the report line.
struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool condition, const std::string& what) {
        if (condition || !ok) {
            ok = ok && condition;
            return;
        }
        ok = false;
        note = what;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

std::string label(const PieceSet& set, ShapeClass shape) { return set.describe() + " " + std::string(to_string(shape)); }

// ---- criteria ---------------------------------------------------------

void dimer_towers(Outcome& o, InterfaceRule rule, unsigned base) {
    const PieceSet dimers({2}, rule);
    const auto series = coefficients_by_pieces(solve_all_shapes(dimers, 1000).tower, dimers);
    o.require(series.size() == 500, "series length");
    for (unsigned n = 1; n <= 500 && o.ok; ++n)
        o.require(series[n - 1] == power(base, n - 1), "series coefficient n=" + std::to_string(n));
}

void criterion1(Outcome& o) {
    const auto counts = count_towers({PieceSet({2}), ShapeClass::Tower, BoundKind::ByPieceCount, 7, false});
    for (int n = 1; n <= 7; ++n)
        o.require(counts.at(n) == power(4, static_cast<unsigned long>(n - 1)), "brute force n=" + std::to_string(n));
    dimer_towers(o, InterfaceRule::AllInterfaces, 4);
}

void criterion2(Outcome& o) {
    std::size_t four = 0;
    enumerate_towers({PieceSet({2}, InterfaceRule::NoExactAlignment), ShapeClass::Tower, BoundKind::ByPieceCount, 4,
                      false},
                     [&](const Tower& t) { four += t.piece_count() == 4; });
    o.require(four == 27, "brute force found " + std::to_string(four) + " towers with four pieces");
    dimer_towers(o, InterfaceRule::NoExactAlignment, 3);
}

void criterion3(Outcome& o) {
    for (unsigned k = 1; k <= 5; ++k) {
        const PieceSet single({static_cast<int>(k)});
        const auto all = solve_all_shapes(single, 50 * k);
        const auto half = coefficients_by_pieces(all.half, single);
        const auto pyr = coefficients_by_pieces(all.pyramid, single);
        for (unsigned n = 1; n <= 50; ++n) {
            const std::string at = " k=" + std::to_string(k) + " n=" + std::to_string(n);
            o.require(half[n - 1] == closed_form_half_pyramids(k, n), "half-pyramids" + at);
            o.require(pyr[n - 1] == closed_form_pyramids(k, n), "pyramids" + at);
        }
    }
}

void criterion4(Outcome& o) {
    for (const auto& set : oracle_sets()) {
        const auto plain = solve_all_shapes(set, 12);
        const auto weighted = solve_all_shapes_weighted(set, 10);
        for (ShapeClass shape : kShapes) {
            const auto counts = count_towers({set, shape, BoundKind::ByArea, 12, false});
            for (int a = 1; a <= 12; ++a)
                o.require(counts.at(a) == plain.of(shape)[static_cast<std::size_t>(a)],
                          label(set, shape) + " area " + std::to_string(a));
            const auto weights = weight_polynomial({set, shape, BoundKind::ByArea, 10, true});
            for (int a = 1; a <= 10; ++a)
                o.require(weights.at(a) == weighted.of(shape)[static_cast<std::size_t>(a)],
                          label(set, shape) + " weights at area " + std::to_string(a));
        }
    }
}

void criterion5(Outcome& o) {
    const PieceSet ones({1});
    const auto counts = count_towers({ones, ShapeClass::Tower, BoundKind::ByPieceCount, 10, false});
    const auto series = solve_all_shapes(ones, 10).tower;
    for (int n = 1; n <= 10; ++n) {
        const BigInt expected = power(2, static_cast<unsigned long>(n - 1));
        o.require(counts.at(n) == expected, "brute force n=" + std::to_string(n));
        o.require(series[static_cast<std::size_t>(n)] == expected, "series n=" + std::to_string(n));
    }
}

void criterion6(Outcome& o) {
    struct Case {
        InterfaceRule rule;
        long slope;
    };
    for (const Case c : {Case{InterfaceRule::AllInterfaces, 4}, Case{InterfaceRule::NoExactAlignment, 3}}) {
        const PieceSet dimers({2}, c.rule);
        const auto q = annihilating_polynomial(dimers, ShapeClass::Tower, 200);
        // (1 - c t^2) y - t^2, compared after normalization
        const BivariatePolynomial expected(
            std::vector<IntPoly>{IntPoly(std::vector<BigInt>{0, 0, -1}), IntPoly(std::vector<BigInt>{1, 0, -c.slope})});
        o.require(q == normalize(expected), dimers.describe() + " returned a different polynomial");
        o.require(verify_annihilator(q, solve_all_shapes(dimers, 200).tower), dimers.describe() + " does not vanish");
    }
}

std::vector<std::pair<std::string, Sequence>> guess_sequences(std::size_t length) {
    std::vector<std::pair<std::string, Sequence>> out;
    for (const auto& set : oracle_sets()) {
        const bool single = set.is_single_size();
        const auto all = solve_all_shapes(set, single ? length * static_cast<std::size_t>(set.max_size()) : length);
        for (ShapeClass shape : kShapes) {
            const auto& s = all.of(shape);
            std::vector<BigInt> terms = single ? coefficients_by_pieces(s, set)
                                               : std::vector<BigInt>(s.coeffs().begin() + 1, s.coeffs().end());
            terms.resize(length);
            out.emplace_back(label(set, shape) + (single ? " by pieces" : " by area"), Sequence{1, terms, ""});
        }
    }
    return out;
}

void criterion7(Outcome& o) {
    constexpr std::size_t kGuess = 60;
    constexpr std::size_t kHeldOut = 200;
    constexpr std::size_t kTarget = 50000;
    constexpr long long kSpot = 300;
    const auto sequences = guess_sequences(static_cast<std::size_t>(kSpot));
    for (const auto& [name, s] : sequences) {
        const auto start = std::chrono::steady_clock::now();
        const Sequence prefix{1, {s.terms.begin(), s.terms.begin() + kGuess}, name};
        const Sequence checked{1, {s.terms.begin(), s.terms.begin() + kGuess + kHeldOut}, name};
        const auto rec = guess_recurrence_auto(prefix);
        o.require(rec.has_value(), name + ": no recurrence from 60 terms");
        if (!rec) continue;
        o.require(verify_recurrence(*rec, checked), name + ": fails on the 200 held-out terms");
        BigInt spot;
        long long last = 0;
        try {
            for_each_extension(*rec, prefix, kTarget, [&](long long n, const BigInt& v) {
                if (n == kSpot) spot = v;
                last = n;
            });
        } catch (const std::exception& e) {
            o.require(false, name + ": extension failed: " + e.what());
            continue;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(last == static_cast<long long>(kTarget), name + ": extension stopped early");
        o.require(spot == s.at(kSpot), name + ": term 300 differs from the series");
        o.require(secs < 300, name + ": took longer than 5 minutes");
        std::cout << "    " << std::left << std::setw(34) << name << " (r,d)=(" << rec->order << ',' << rec->degree
                  << ")  " << std::fixed << std::setprecision(2) << secs << " s\n";
    }
}

void criterion8(Outcome& o) {
    constexpr std::size_t kTerms = 2000;
    const BigRational micro(1, 1000000);
    const BigRational centi(1, 100);

    Sequence catalan{0, {}, "catalan"};
    BigInt c = 1;
    for (long n = 0; static_cast<std::size_t>(n) < kTerms; ++n) {
        catalan.terms.push_back(c);
        c = c * (4 * n + 2) / (n + 2);
    }

    // Motzkin numbers: guessed from the no-alignment dimer half-pyramid
    // series and extended by the recurrence.
    const PieceSet strict({2}, InterfaceRule::NoExactAlignment);
    auto seed = coefficients_by_pieces(solve_half_pyramids(strict, 120), strict);
    const Sequence head{1, seed, "motzkin"};
    const auto rec = guess_recurrence_auto(head);
    o.require(rec.has_value(), "no recurrence for the Motzkin series");
    if (!rec) return;
    const Sequence motzkin = extend_sequence(*rec, head, kTerms);

    for (const auto& [name, s, mu] : {std::tuple{"Catalan", catalan, 4L}, std::tuple{"Motzkin", motzkin, 3L}}) {
        const auto start = std::chrono::steady_clock::now();
        const auto est = estimate_asymptotics(s);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(abs(est.mu - mu) <= micro, std::string(name) + ": mu off");
        o.require(abs(est.theta + BigRational(3, 2)) <= centi, std::string(name) + ": theta off");
        o.require(secs < 60, std::string(name) + ": too slow");
        std::cout << "    " << name << ": mu = " << to_decimal_string(est.mu, 25)
                  << ", theta = " << to_decimal_string(est.theta, 25) << '\n';
    }
}

void criterion9(Outcome& o) {
    constexpr std::size_t kOrder = 200;
    constexpr std::size_t kWeightedOrder = 40;
    for (const auto& set : oracle_sets()) {
        const auto all = solve_all_shapes(set, kOrder);
        o.require(half_pyramid_residual(all.half, set).is_zero(), set.describe() + ": H residual");
        for (std::size_t i = 0; i <= kOrder; ++i) {
            o.require(sgn(all.half[i]) >= 0 && all.half[i] <= all.pyramid[i] && all.pyramid[i] <= all.tower[i],
                      set.describe() + ": order violated at t^" + std::to_string(i));
        }
        const auto weighted = solve_all_shapes_weighted(set, kWeightedOrder);
        o.require(half_pyramid_residual(weighted.half, set).is_zero(), set.describe() + ": weighted H residual");
        const auto plain = solve_all_shapes(set, kWeightedOrder);
        for (ShapeClass shape : kShapes)
            o.require(evaluate_at_ones(weighted.of(shape)) == plain.of(shape),
                      label(set, shape) + ": weighted series at z = 1 differs");
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "dimer towers, all interfaces: 4^(n-1)", 60, criterion1},
        {2, "dimer towers, no exact alignment: 27 and 3^(n-1)", 60, criterion2},
        {3, "closed forms for k = 1..5, n <= 50", 30, criterion3},
        {4, "oracle equivalence by area <= 12, weights <= 10", 300, criterion4},
        {5, "S={1} towers: 2^(n-1)", 10, criterion5},
        {6, "annihilators of dimer towers", 30, criterion6},
        {7, "guess from 60, verify on 200, extend to 50000", 300 * 15, criterion7},
        {8, "asymptotics of Catalan and Motzkin numbers", 120, criterion8},
        {9, "residuals, H <= P <= M, weighted/plain agreement", 60, criterion9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_seconds) o.require(false, "over the time limit");
        failures += !o.ok;
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << std::fixed
             << std::setprecision(2) << secs << " s]";
        if (!o.ok) line << "  " << o.note;
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
