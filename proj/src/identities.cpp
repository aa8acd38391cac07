#include "towers/identities.hpp"

#include <algorithm>

#include "towers/errors.hpp"
#include "towers/series_engine.hpp"

namespace towers {

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

const IdentityCheck* IdentityReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

Json IdentityReport::to_json() const {
    Json j;
    j["passed"] = all_passed();
    Json list = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        if (!c.passed) e["counterexample"] = c.counterexample;
        list.push_back(std::move(e));
    }
    j["checks"] = std::move(list);
    if (const auto* f = first_failure()) j["first_counterexample"] = f->counterexample;
    return j;
}

std::vector<PieceSet> identity_piece_sets() {
    return {PieceSet({2}), PieceSet({3}), PieceSet({1, 2}), PieceSet({2, 3}), PieceSet({1, 2, 3})};
}

namespace {

constexpr ShapeClass kShapes[] = {ShapeClass::HalfPyramid, ShapeClass::Pyramid, ShapeClass::Tower};

Json mismatch(const std::string& what, const PieceSet& pieces, ShapeClass shape, long long index,
              const std::string& expected, const std::string& got) {
    Json j;
    j["what"] = what;
    j["sizes"] = pieces.sizes();
    j["rule"] = to_string(pieces.rule());
    j["shape"] = to_string(shape);
    j["index"] = index;
    j["expected"] = expected;
    j["got"] = got;
    return j;
}

/// Collects results of one named check; the first mismatch is kept.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

    void fail(Json counterexample) {
        if (!check_.passed) return;
        check_.passed = false;
        check_.counterexample = std::move(counterexample);
    }
    void compared(std::size_t n = 1) { comparisons_ += n; }
    IdentityCheck done() {
        check_.detail = std::to_string(comparisons_) + " comparisons";
        return std::move(check_);
    }

private:
    IdentityCheck check_;
    std::size_t comparisons_ = 0;
};

template <class Body>
IdentityCheck guarded(const std::string& name, Body body) {
    CheckBuilder b(name);
    try {
        body(b);
    } catch (const std::exception& e) {
        b.fail(Json{{"what", "exception"}, {"message", e.what()}});
    }
    return b.done();
}

ShapeSeries<BigInt> plain_series(const PieceSet& pieces, std::size_t order, bool corrupt) {
    auto all = solve_all_shapes(pieces, order);
    if (corrupt && pieces == PieceSet({2}) && order >= 4) all.tower[4] += 1;
    return all;
}

}  // namespace

IdentityReport verify_identities(const IdentityOptions& opt) {
    if (opt.max_area < 1 || opt.max_pieces < 1) throw InputError("identity bounds must be positive");
    IdentityReport report;
    const auto sets = identity_piece_sets();
    const std::size_t order = std::max<std::size_t>(opt.series_order, static_cast<std::size_t>(opt.max_area));

    report.checks.push_back(guarded("oracle: enumerated counts by area equal series coefficients", [&](CheckBuilder& b) {
        for (const auto& pieces : sets) {
            const auto all = plain_series(pieces, static_cast<std::size_t>(opt.max_area), opt.corrupt_series);
            for (ShapeClass shape : kShapes) {
                const auto counts =
                    count_towers({pieces, shape, BoundKind::ByArea, opt.max_area, false}, opt.threads);
                for (const auto& [area, c] : counts) {
                    b.compared();
                    const BigInt& s = all.of(shape)[static_cast<std::size_t>(area)];
                    if (c != s) b.fail(mismatch("count by area", pieces, shape, area, to_decimal(c), to_decimal(s)));
                }
            }
        }
    }));

    report.checks.push_back(guarded("oracle: weight polynomials equal weighted series", [&](CheckBuilder& b) {
        const int area = std::min(opt.max_area, 10);
        for (const auto& pieces : sets) {
            const auto all = solve_all_shapes_weighted(pieces, static_cast<std::size_t>(area));
            for (ShapeClass shape : kShapes) {
                const auto weights = weight_polynomial({pieces, shape, BoundKind::ByArea, area, true});
                for (const auto& [a, w] : weights) {
                    b.compared();
                    const ZPolynomial& s = all.of(shape)[static_cast<std::size_t>(a)];
                    if (!(w == s))
                        b.fail(mismatch("weight polynomial", pieces, shape, a, s.to_string(pieces.sizes()),
                                        w.to_string(pieces.sizes())));
                }
            }
        }
    }));

    report.checks.push_back(guarded("dimer towers by pieces: 4^(n-1) and 3^(n-1)", [&](CheckBuilder& b) {
        for (InterfaceRule rule : {InterfaceRule::AllInterfaces, InterfaceRule::NoExactAlignment}) {
            const PieceSet dimers({2}, rule);
            const auto counts = count_towers({dimers, ShapeClass::Tower, BoundKind::ByPieceCount, opt.max_pieces, false},
                                             opt.threads);
            auto tower = plain_series(dimers, order, opt.corrupt_series).tower;
            const auto by_pieces = coefficients_by_pieces(tower, dimers);
            for (const auto& [n, c] : counts) {
                b.compared();
                const BigInt expected = closed_form_dimer_towers(rule, static_cast<unsigned>(n));
                if (c != expected)
                    b.fail(mismatch("enumerated dimer towers", dimers, ShapeClass::Tower, n, to_decimal(expected),
                                    to_decimal(c)));
            }
            for (std::size_t n = 1; n <= by_pieces.size(); ++n) {
                b.compared();
                const BigInt expected = closed_form_dimer_towers(rule, static_cast<unsigned>(n));
                if (by_pieces[n - 1] != expected)
                    b.fail(mismatch("series dimer towers", dimers, ShapeClass::Tower, static_cast<long long>(n),
                                    to_decimal(expected), to_decimal(by_pieces[n - 1])));
            }
        }
    }));

    report.checks.push_back(guarded("monomer towers: 2^(n-1)", [&](CheckBuilder& b) {
        const PieceSet ones({1});
        const int bound = std::min(opt.max_pieces + 3, 10);
        const auto counts = count_towers({ones, ShapeClass::Tower, BoundKind::ByArea, bound, false}, opt.threads);
        const auto tower = solve_all_shapes(ones, static_cast<std::size_t>(bound)).tower;
        for (const auto& [n, c] : counts) {
            b.compared(2);
            BigInt expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
            if (c != expected || tower[static_cast<std::size_t>(n)] != expected)
                b.fail(mismatch("monomer towers", ones, ShapeClass::Tower, n, to_decimal(expected),
                                to_decimal(c) + " / " + to_decimal(tower[static_cast<std::size_t>(n)])));
        }
    }));

    report.checks.push_back(guarded("closed forms: Fuss-Catalan half-pyramids and pyramids", [&](CheckBuilder& b) {
        for (int k = 1; k <= 5; ++k) {
            const PieceSet single({k});
            const auto all = solve_all_shapes(single, static_cast<std::size_t>(50 * k));
            const auto half = coefficients_by_pieces(all.half, single);
            const auto pyr = coefficients_by_pieces(all.pyramid, single);
            for (unsigned n = 1; n <= 50; ++n) {
                b.compared(2);
                const BigInt eh = closed_form_half_pyramids(static_cast<unsigned>(k), n);
                const BigInt ep = closed_form_pyramids(static_cast<unsigned>(k), n);
                if (half[n - 1] != eh)
                    b.fail(mismatch("half-pyramids", single, ShapeClass::HalfPyramid, n, to_decimal(eh),
                                    to_decimal(half[n - 1])));
                if (pyr[n - 1] != ep)
                    b.fail(mismatch("pyramids", single, ShapeClass::Pyramid, n, to_decimal(ep), to_decimal(pyr[n - 1])));
            }
        }
    }));

    std::vector<PieceSet> series_sets = sets;
    series_sets.emplace_back(std::vector<int>{2}, InterfaceRule::NoExactAlignment);

    report.checks.push_back(guarded("residuals, relations and H <= P <= M", [&](CheckBuilder& b) {
        for (const auto& pieces : series_sets) {
            const auto all = plain_series(pieces, order, opt.corrupt_series);
            b.compared();
            const auto residual = half_pyramid_residual(all.half, pieces);
            if (!residual.is_zero()) {
                std::size_t i = 0;
                while (is_zero(residual[i])) ++i;
                b.fail(mismatch("H-equation residual", pieces, ShapeClass::HalfPyramid, static_cast<long long>(i), "0",
                                to_decimal(residual[i])));
            }
            b.compared();
            const auto one = IntegerSeries::constant(order, 1);
            const auto m_relation = all.tower * (one - all.half) - all.pyramid;
            if (!m_relation.is_zero())
                b.fail(mismatch("M(1-H) = P", pieces, ShapeClass::Tower, -1, "0", "non-zero"));
            b.compared();
            const auto p_relation = all.pyramid * pyramid_denominator(all.half, pieces) - all.half;
            if (!p_relation.is_zero())
                b.fail(mismatch("P D = H", pieces, ShapeClass::Pyramid, -1, "0", "non-zero"));
            for (std::size_t i = 0; i <= order; ++i) {
                b.compared();
                if (sgn(all.half[i]) < 0 || all.half[i] > all.pyramid[i] || all.pyramid[i] > all.tower[i])
                    b.fail(mismatch("0 <= H <= P <= M", pieces, ShapeClass::Tower, static_cast<long long>(i),
                                    "ordered", to_decimal(all.half[i]) + " " + to_decimal(all.pyramid[i]) + " " +
                                                   to_decimal(all.tower[i])));
            }
        }
    }));

    report.checks.push_back(guarded("weighted series at z = 1 equal plain series", [&](CheckBuilder& b) {
        const std::size_t weighted_order = std::min<std::size_t>(order, 30);
        for (const auto& pieces : sets) {
            const auto plain = solve_all_shapes(pieces, weighted_order);
            const auto weighted = solve_all_shapes_weighted(pieces, weighted_order);
            for (ShapeClass shape : kShapes) {
                b.compared();
                const auto collapsed = evaluate_at_ones(weighted.of(shape));
                if (!(collapsed == plain.of(shape)))
                    b.fail(mismatch("z = 1 collapse", pieces, shape, -1, "plain series", "different"));
            }
        }
    }));

    report.checks.push_back(guarded("annihilating polynomials vanish on the series", [&](CheckBuilder& b) {
        for (const auto& pieces : series_sets) {
            const auto all = plain_series(pieces, order, opt.corrupt_series);
            for (ShapeClass shape : kShapes) {
                b.compared();
                const auto q = annihilating_polynomial(pieces, shape, order);
                if (!verify_annihilator(q, all.of(shape)))
                    b.fail(mismatch("annihilator", pieces, shape, -1, "0", polynomial_to_json(q).dump()));
            }
        }
    }));

    report.checks.push_back(guarded("recurrences guessed from 60 terms hold on 200 more", [&](CheckBuilder& b) {
        for (const auto& pieces : series_sets) {
            const bool single = pieces.is_single_size();
            const std::size_t needed = 260;
            const std::size_t series_order = single ? needed * static_cast<std::size_t>(pieces.max_size()) : needed;
            const auto all = plain_series(pieces, series_order, opt.corrupt_series);
            for (ShapeClass shape : kShapes) {
                std::vector<BigInt> terms = single
                    ? coefficients_by_pieces(all.of(shape), pieces)
                    : std::vector<BigInt>(all.of(shape).coeffs().begin() + 1, all.of(shape).coeffs().end());
                terms.resize(needed);
                const Sequence prefix{1, {terms.begin(), terms.begin() + 60}, ""};
                const Sequence full{1, terms, ""};
                b.compared();
                const auto rec = guess_recurrence_auto(prefix);
                if (!rec) {
                    b.fail(mismatch("guess", pieces, shape, 60, "recurrence", "none"));
                    continue;
                }
                if (!verify_recurrence(*rec, full))
                    b.fail(mismatch("held-out verification", pieces, shape, 260, "holds",
                                    recurrence_to_json(*rec).dump()));
            }
        }
    }));

    return report;
}

}  // namespace towers
