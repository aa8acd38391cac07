#pragma once

#include <cstddef>

#include "towers/core_model.hpp"
#include "towers/polynomial.hpp"
#include "towers/series.hpp"

namespace towers {

/// Polynomial in an outer variable y whose coefficients lie in Z[t].
using BivariatePolynomial = UPoly<IntPoly>;

/// Integer content 1 and a positive leading t-coefficient of the leading
/// y-coefficient. Zero stays zero.
BivariatePolynomial normalize(const BivariatePolynomial& q);

/// Largest t-degree among the coefficients.
int t_degree(const BivariatePolynomial& q);

/// E(t, y) = y - sum_{i in S} t^i (1+y)^i, or y - t^k((1+y)^k - y) under
/// NoExactAlignment, normalized. Plain counting only.
BivariatePolynomial defining_polynomial_H(const PieceSet& pieces);

/// Res_H(E(t, H), G(t, H, y)) before any clean-up, where G is the
/// shape's cleared-denominator relation (y D - H for pyramids,
/// y (1-H) D - H for towers). Throws for HalfPyramid, which needs no
/// elimination.
BivariatePolynomial shape_resultant(const PieceSet& pieces, ShapeClass shape);

/// The relation G(t, H, y) specialised at an integer y, as a polynomial in
/// H over Z[t].
BivariatePolynomial shape_relation_at(const PieceSet& pieces, ShapeClass shape, long y);

struct EliminationOptions {
    /// Hard cap on the y-degree handed to factor selection.
    int max_degree = 12;
    /// Equations beyond the unknown count demanded before a candidate
    /// divisor is trusted.
    std::size_t guard = 10;
};

/// Irreducible polynomial Q(t, y) with Q(t, F) = 0 for the shape's
/// generating function F. The resultant is stripped of its Z[t]-content,
/// reduced to its squarefree part, and the factor vanishing on the series
/// (to order verify_order) is selected; a lower-degree divisor is looked
/// for by exact linear algebra on the series before the squarefree part
/// itself is accepted.
BivariatePolynomial annihilating_polynomial(const PieceSet& pieces, ShapeClass shape, std::size_t verify_order,
                                            const EliminationOptions& options = {});

/// True iff Q involves y and Q(t, s(t)) = 0 mod t^{order+1}.
bool verify_annihilator(const BivariatePolynomial& q, const IntegerSeries& s);

/// Q(t, s(t)) truncated at the series order.
IntegerSeries substitute_series(const BivariatePolynomial& q, const IntegerSeries& s);

}  // namespace towers
