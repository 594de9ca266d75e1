#pragma once

#include <span>
#include <vector>

#include "mcode/linalg.hpp"
#include "mcode/poly.hpp"
#include "mcode/vanishing.hpp"

namespace mcode {

// Monic univariate polynomial vanishing exactly on the given duplicate-free
// points: prod (x - a).
MultiPoly vanishing_poly(const Field& field, std::span<const FieldElem> points);

// Lagrange indicator functions h_i of the point set: deg h_i = s - 1 and
// h_i(a_j) = delta_ij. Computed as G / (G'(a_i) (x - a_i)).
std::vector<MultiPoly> indicator_polys(const Field& field, std::span<const FieldElem> points);

// Hermite interpolation basis of order r >= 1 on a univariate point set:
// per site a_i, polynomials h_{i,0}, ..., h_{i,r-1} of degree <= r*s - 1 with
//     hasse_derivative(h_{i,n}, l) at a_j  ==  delta_ij * delta_nl
// for all sites j and orders l in [0, r-1]. An order-r basis here serves the
// derivative orders {0, ..., r-1}; the recursion starts from
// h_{i,r-1} = (x - a_i)^{r-1} h_i^r and works downward.
struct HermiteBasis {
    std::vector<FieldElem> points;
    int order = 1;
    MultiPoly vanishing;                      // G
    std::vector<MultiPoly> indicators;        // h_i
    std::vector<std::vector<MultiPoly>> polys;      // polys[i][n]
    std::vector<std::vector<FieldElem>> top_coeffs;  // Coeff(polys[i][n], x^{rs-1})
};

HermiteBasis hermite_basis(const Field& field, std::span<const FieldElem> points, int order);

// Univariate Hermite bases for every axis of a grid, the raw material of the
// tensor-product basis h_{a,i}(x) = prod_j h_{S_j, a_j, i_j}(x_j).
class GridHermite {
  public:
    GridHermite(const Grid& grid, int order);

    const Grid& grid() const { return *grid_; }
    int order() const { return order_; }
    const HermiteBasis& axis(int j) const { return axes_[j]; }

    // Index of a point coordinate inside its component set.
    size_t site_index(int axis, FieldElem value) const;

    // The tensor-product basis polynomial for grid point a and box index i.
    MultiPoly product_poly(std::span<const FieldElem> point, const ExpVec& box_index) const;

  private:
    const Grid* grid_;
    int order_;
    std::vector<HermiteBasis> axes_;
};

// Top-coefficient matrices of the tensor Hermite basis at one grid point.
// full[u][v] = lambda^a_{i_u + i_v} over the graded-lex ordering i_0, ...,
// i_{r^m - 1} of the box [0, r-1]^m, where lambda^a_i is the coefficient of
// x_1^{r s_1 - 1} ... x_m^{r s_m - 1} in h_{a,i} (zero outside the box).
// It is symmetric and upper anti-triangular with constant nonzero
// anti-diagonal (prod_j G_j'(a_j))^{-r}, hence invertible. corner is the
// submatrix of the last t rows and first t columns, t = binom(m+r-1, m).
struct LambdaMatrix {
    std::vector<FieldElem> point;
    Matrix full;    // r^m x r^m
    Matrix corner;  // t x t
};

LambdaMatrix lambda_matrix(const GridHermite& gh, std::span<const FieldElem> point);
LambdaMatrix lambda_matrix(const Grid& grid, int order, std::span<const FieldElem> point);

}  // namespace mcode
