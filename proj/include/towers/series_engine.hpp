#pragma once

#include <cstddef>
#include <vector>

#include "towers/core_model.hpp"
#include "towers/series.hpp"

namespace towers {

/// How piece markers enter weighted series: one marker per size, or a
/// single shared marker counting pieces regardless of size.
enum class MarkerMode { PerSize, Shared };

/// Half-pyramid generating function H, solved coefficient by coefficient
/// from H = sum_{i in S} t^i (1+H)^i, or H = t^k((1+H)^k - H) under
/// NoExactAlignment (single size only; UnsupportedConfiguration otherwise).
IntegerSeries solve_half_pyramids(const PieceSet& pieces, std::size_t order);

/// Weighted H = sum_{i in S} t^i z_i (1+H)^i. AllInterfaces only.
WeightedSeries solve_half_pyramids_weighted(const PieceSet& pieces, std::size_t order,
                                            MarkerMode mode = MarkerMode::PerSize);

/// The series t^i z_i summed with weight w(i) over S, used for both the
/// half-pyramid right-hand side and the pyramid denominator.
IntegerSeries pyramid_denominator(const IntegerSeries& h, const PieceSet& pieces);
WeightedSeries pyramid_denominator(const WeightedSeries& h, const PieceSet& pieces, MarkerMode mode);

/// P = H / (1 - sum (i-1) t^i z_i (1+H)^i), or H / (1 - (k-1) H) under NoExactAlignment.
IntegerSeries series_pyramids(const IntegerSeries& h, const PieceSet& pieces);
WeightedSeries series_pyramids(const WeightedSeries& h, const PieceSet& pieces,
                               MarkerMode mode = MarkerMode::PerSize);

/// M = P / (1 - H).
template <class C>
TruncatedSeries<C> series_towers(const TruncatedSeries<C>& p, const TruncatedSeries<C>& h) {
    return p / (TruncatedSeries<C>::constant(h.order(), C(1)) - h);
}

template <class C>
struct ShapeSeries {
    TruncatedSeries<C> half;
    TruncatedSeries<C> pyramid;
    TruncatedSeries<C> tower;

    const TruncatedSeries<C>& of(ShapeClass shape) const {
        switch (shape) {
            case ShapeClass::HalfPyramid: return half;
            case ShapeClass::Pyramid: return pyramid;
            case ShapeClass::Tower: return tower;
        }
        return tower;
    }
};

ShapeSeries<BigInt> solve_all_shapes(const PieceSet& pieces, std::size_t order);
ShapeSeries<ZPolynomial> solve_all_shapes_weighted(const PieceSet& pieces, std::size_t order,
                                                   MarkerMode mode = MarkerMode::PerSize);

/// Series in a single marker u counting pieces: every z_i mapped to u and
/// t set to 1, which is finite coefficientwise. Coefficient n is the number
/// of objects with n pieces, for n <= max_pieces.
ShapeSeries<BigInt> solve_all_shapes_by_pieces(const PieceSet& pieces, std::size_t max_pieces);

/// Residual of the half-pyramid equation: H - rhs(H). Zero iff H solves it.
IntegerSeries half_pyramid_residual(const IntegerSeries& h, const PieceSet& pieces);
WeightedSeries half_pyramid_residual(const WeightedSeries& h, const PieceSet& pieces);

/// Re-indexes a single-size series by piece count: entry n-1 holds the
/// coefficient of t^{kn}, for n = 1..order/k. Throws UnsupportedConfiguration
/// for multi-size sets and ConsistencyError if an off-grid coefficient is
/// non-zero.
std::vector<BigInt> coefficients_by_pieces(const IntegerSeries& s, const PieceSet& pieces);

/// Piece-count sequence from a Shared-marker weighted series: entry n-1
/// holds the number of objects with n pieces, for n = 1..max_pieces.
/// Complete whenever max_pieces * max(S) <= order.
std::vector<BigInt> counts_by_pieces(const WeightedSeries& s, std::size_t max_pieces);

/// (kn)! / (n! (kn - n + 1)!)
BigInt closed_form_half_pyramids(unsigned k, unsigned n);
/// binomial(kn, n) / k
BigInt closed_form_pyramids(unsigned k, unsigned n);
/// 4^{n-1} with all interfaces, 3^{n-1} without exact alignment.
BigInt closed_form_dimer_towers(InterfaceRule rule, unsigned n);

}  // namespace towers
