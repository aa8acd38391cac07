#include "towers/series_engine.hpp"

#include "towers/errors.hpp"

namespace towers {

IntegerSeries evaluate_at_ones(const WeightedSeries& s) {
    IntegerSeries r(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) r[i] = s[i].evaluate_at_ones();
    return r;
}

namespace {

void require_series_support(const PieceSet& pieces) {
    if (pieces.rule() == InterfaceRule::NoExactAlignment && !pieces.is_single_size())
        throw UnsupportedConfiguration(
            "no-exact-alignment series are only defined for a single piece size");
}

template <class C>
struct PlainMarkers {
    C operator()(int) const { return C(1); }
};

struct WeightMarkers {
    const PieceSet& pieces;
    MarkerMode mode;
    ZPolynomial operator()(int size) const {
        return ZPolynomial::variable(mode == MarkerMode::Shared ? 0 : pieces.index_of(size));
    }
};

/// Online solution of the half-pyramid equation: coefficient n of H from
/// coefficients below n of the powers (1+H)^i, each power advanced by the
/// power recurrence as soon as its inputs exist.
template <class C, class Marker>
TruncatedSeries<C> solve_online(const PieceSet& pieces, std::size_t order, Marker marker, bool unit_shift = false) {
    const auto& sizes = pieces.sizes();
    const bool noalign = pieces.rule() == InterfaceRule::NoExactAlignment;
    TruncatedSeries<C> h(order);
    // powers[s][m] = [t^m] (1+H)^{sizes[s]}
    std::vector<std::vector<C>> powers(sizes.size());
    for (auto& g : powers) {
        g.reserve(order + 1);
        g.push_back(C(1));
    }
    std::vector<C> markers;
    for (int size : sizes) markers.push_back(marker(size));

    auto advance = [&](std::size_t s, std::size_t m) {
        auto& g = powers[s];
        const unsigned e = static_cast<unsigned>(sizes[s]);
        while (g.size() <= m) {
            const std::size_t k = g.size();
            C acc(0);
            for (std::size_t j = 1; j <= k; ++j) {
                if (is_zero(h[j])) continue;
                const long w = static_cast<long>((e + 1) * j) - static_cast<long>(k);
                if (w == 0) continue;
                acc += (h[j] * g[k - j]) * w;
            }
            detail::divide_exact(acc, k);
            g.push_back(std::move(acc));
        }
    };

    for (std::size_t n = 1; n <= order; ++n) {
        C value(0);
        for (std::size_t s = 0; s < sizes.size(); ++s) {
            const std::size_t size = unit_shift ? 1 : static_cast<std::size_t>(sizes[s]);
            if (n < size) continue;
            advance(s, n - size);
            if (noalign) {
                value += powers[s][n - size];
                value -= h[n - size];
            } else {
                value += markers[s] * powers[s][n - size];
            }
        }
        h[n] = std::move(value);
    }
    return h;
}

template <class C, class Marker>
TruncatedSeries<C> weighted_power_sum(const TruncatedSeries<C>& h, const PieceSet& pieces, Marker marker,
                                      bool pyramid_weights, bool unit_shift = false) {
    const std::size_t n = h.order();
    TruncatedSeries<C> one_plus_h = h;
    one_plus_h[0] += C(1);
    TruncatedSeries<C> sum(n);
    for (int size : pieces.sizes()) {
        const long weight = pyramid_weights ? size - 1 : 1;
        const std::size_t shift = unit_shift ? 1 : static_cast<std::size_t>(size);
        if (weight == 0 || shift > n) continue;
        TruncatedSeries<C> term = one_plus_h.pow(static_cast<unsigned>(size)).shifted(shift);
        const C m = marker(size) * weight;
        for (std::size_t i = 0; i <= n; ++i)
            if (!is_zero(term[i])) sum[i] += m * term[i];
    }
    return sum;
}

template <class C, class Marker>
TruncatedSeries<C> pyramids_impl(const TruncatedSeries<C>& h, const PieceSet& pieces, Marker marker) {
    const std::size_t n = h.order();
    auto one = TruncatedSeries<C>::constant(n, C(1));
    if (pieces.rule() == InterfaceRule::NoExactAlignment) {
        require_series_support(pieces);
        TruncatedSeries<C> scaled = h;
        for (std::size_t i = 0; i <= n; ++i) scaled[i] *= static_cast<long>(pieces.max_size() - 1);
        return h / (one - scaled);
    }
    return h / (one - weighted_power_sum(h, pieces, marker, true));
}

template <class C, class Marker>
TruncatedSeries<C> residual_impl(const TruncatedSeries<C>& h, const PieceSet& pieces, Marker marker) {
    const std::size_t n = h.order();
    if (pieces.rule() == InterfaceRule::NoExactAlignment) {
        require_series_support(pieces);
        const int k = pieces.max_size();
        TruncatedSeries<C> one_plus_h = h;
        one_plus_h[0] += C(1);
        auto rhs = (one_plus_h.pow(static_cast<unsigned>(k)) - h).shifted(k);
        return h - rhs;
    }
    (void)n;
    return h - weighted_power_sum(h, pieces, marker, false);
}

}  // namespace

IntegerSeries solve_half_pyramids(const PieceSet& pieces, std::size_t order) {
    require_series_support(pieces);
    return solve_online<BigInt>(pieces, order, PlainMarkers<BigInt>{});
}

WeightedSeries solve_half_pyramids_weighted(const PieceSet& pieces, std::size_t order, MarkerMode mode) {
    if (pieces.rule() == InterfaceRule::NoExactAlignment)
        throw UnsupportedConfiguration("weighted series are defined for all interfaces only");
    return solve_online<ZPolynomial>(pieces, order, WeightMarkers{pieces, mode});
}

IntegerSeries pyramid_denominator(const IntegerSeries& h, const PieceSet& pieces) {
    auto one = IntegerSeries::constant(h.order(), 1);
    if (pieces.rule() == InterfaceRule::NoExactAlignment) {
        require_series_support(pieces);
        IntegerSeries scaled = h;
        for (std::size_t i = 0; i <= h.order(); ++i) scaled[i] *= pieces.max_size() - 1;
        return one - scaled;
    }
    return one - weighted_power_sum(h, pieces, PlainMarkers<BigInt>{}, true);
}

WeightedSeries pyramid_denominator(const WeightedSeries& h, const PieceSet& pieces, MarkerMode mode) {
    auto one = WeightedSeries::constant(h.order(), ZPolynomial(1));
    return one - weighted_power_sum(h, pieces, WeightMarkers{pieces, mode}, true);
}

IntegerSeries series_pyramids(const IntegerSeries& h, const PieceSet& pieces) {
    return pyramids_impl(h, pieces, PlainMarkers<BigInt>{});
}

WeightedSeries series_pyramids(const WeightedSeries& h, const PieceSet& pieces, MarkerMode mode) {
    if (pieces.rule() == InterfaceRule::NoExactAlignment)
        throw UnsupportedConfiguration("weighted series are defined for all interfaces only");
    return pyramids_impl(h, pieces, WeightMarkers{pieces, mode});
}

ShapeSeries<BigInt> solve_all_shapes(const PieceSet& pieces, std::size_t order) {
    ShapeSeries<BigInt> s;
    s.half = solve_half_pyramids(pieces, order);
    s.pyramid = series_pyramids(s.half, pieces);
    s.tower = series_towers(s.pyramid, s.half);
    return s;
}

ShapeSeries<ZPolynomial> solve_all_shapes_weighted(const PieceSet& pieces, std::size_t order, MarkerMode mode) {
    ShapeSeries<ZPolynomial> s;
    s.half = solve_half_pyramids_weighted(pieces, order, mode);
    s.pyramid = series_pyramids(s.half, pieces, mode);
    s.tower = series_towers(s.pyramid, s.half);
    return s;
}

ShapeSeries<BigInt> solve_all_shapes_by_pieces(const PieceSet& pieces, std::size_t max_pieces) {
    require_series_support(pieces);
    ShapeSeries<BigInt> s;
    s.half = solve_online<BigInt>(pieces, max_pieces, PlainMarkers<BigInt>{}, true);
    auto one = IntegerSeries::constant(max_pieces, 1);
    if (pieces.rule() == InterfaceRule::NoExactAlignment) {
        IntegerSeries scaled = s.half;
        for (std::size_t i = 0; i <= max_pieces; ++i) scaled[i] *= pieces.max_size() - 1;
        s.pyramid = s.half / (one - scaled);
    } else {
        s.pyramid = s.half / (one - weighted_power_sum(s.half, pieces, PlainMarkers<BigInt>{}, true, true));
    }
    s.tower = series_towers(s.pyramid, s.half);
    return s;
}

IntegerSeries half_pyramid_residual(const IntegerSeries& h, const PieceSet& pieces) {
    return residual_impl(h, pieces, PlainMarkers<BigInt>{});
}

WeightedSeries half_pyramid_residual(const WeightedSeries& h, const PieceSet& pieces) {
    if (pieces.rule() == InterfaceRule::NoExactAlignment)
        throw UnsupportedConfiguration("weighted series are defined for all interfaces only");
    return residual_impl(h, pieces, WeightMarkers{pieces, MarkerMode::PerSize});
}

std::vector<BigInt> coefficients_by_pieces(const IntegerSeries& s, const PieceSet& pieces) {
    if (!pieces.is_single_size())
        throw UnsupportedConfiguration("re-indexing by piece count needs a single piece size");
    const std::size_t k = static_cast<std::size_t>(pieces.max_size());
    std::vector<BigInt> out;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i % k != 0) {
            if (!is_zero(s[i]))
                throw ConsistencyError("non-zero coefficient of t^" + std::to_string(i) +
                                       " off the piece-count grid");
            continue;
        }
        if (i > 0) out.push_back(s[i]);
    }
    return out;
}

std::vector<BigInt> counts_by_pieces(const WeightedSeries& s, std::size_t max_pieces) {
    std::vector<BigInt> out(max_pieces, BigInt(0));
    for (std::size_t i = 0; i <= s.order(); ++i) {
        auto degrees = s[i].by_total_degree();
        for (std::size_t d = 1; d < degrees.size() && d <= max_pieces; ++d) out[d - 1] += degrees[d];
    }
    return out;
}

namespace {

void require_positive(unsigned k, unsigned n) {
    if (k < 1 || n < 1) throw InputError("closed forms need k >= 1 and n >= 1");
}

}  // namespace

BigInt closed_form_half_pyramids(unsigned k, unsigned n) {
    require_positive(k, n);
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k) * n, n);
    const unsigned long denom = static_cast<unsigned long>(k) * n - n + 1;
    detail::divide_exact(b, denom);
    return b;
}

BigInt closed_form_pyramids(unsigned k, unsigned n) {
    require_positive(k, n);
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k) * n, n);
    detail::divide_exact(b, k);
    return b;
}

BigInt closed_form_dimer_towers(InterfaceRule rule, unsigned n) {
    require_positive(1, n);
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), rule == InterfaceRule::AllInterfaces ? 4 : 3, n - 1);
    return r;
}

}  // namespace towers
