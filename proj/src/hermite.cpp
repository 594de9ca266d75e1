#include "mcode/hermite.hpp"

#include <set>
#include <stdexcept>

namespace mcode {

namespace {

// Quotient of the monic univariate f by (x - a); the division is exact when
// f(a) = 0.
MultiPoly divide_by_linear(const MultiPoly& f, FieldElem a) {
    const Field& F = f.field();
    const int deg = f.degree();
    std::vector<FieldElem> coeffs(deg + 1, F.zero());
    for (const auto& [e, c] : f.terms()) coeffs[e[0]] = c;
    // Synthetic division.
    std::vector<FieldElem> q(deg, F.zero());
    FieldElem carry = F.zero();
    for (int i = deg; i-- > 0;) {
        carry = F.add(coeffs[i + 1], F.mul(a, carry));
        q[i] = carry;
    }
    MultiPoly out(F, 1);
    for (int i = 0; i < deg; ++i) out.add_term(ExpVec{i}, q[i]);
    return out;
}

}  // namespace

MultiPoly vanishing_poly(const Field& field, std::span<const FieldElem> points) {
    if (points.empty()) throw std::invalid_argument("vanishing polynomial of an empty set");
    std::set<FieldElem> seen(points.begin(), points.end());
    if (seen.size() != points.size())
        throw std::invalid_argument("vanishing polynomial requires distinct points");
    MultiPoly g = MultiPoly::constant(field, 1, field.one());
    for (FieldElem a : points) {
        MultiPoly linear(field, 1);
        linear.add_term(ExpVec{1}, field.one());
        linear.add_term(ExpVec{0}, field.neg(a));
        g = g * linear;
    }
    return g;
}

std::vector<MultiPoly> indicator_polys(const Field& field, std::span<const FieldElem> points) {
    const MultiPoly g = vanishing_poly(field, points);
    const MultiPoly g_prime = hasse_derivative(g, ExpVec{1});
    std::vector<MultiPoly> result;
    result.reserve(points.size());
    for (FieldElem a : points) {
        const FieldElem scale = field.inverse(g_prime.eval(std::vector<FieldElem>{a}));
        result.push_back(divide_by_linear(g, a).scaled(scale));
    }
    return result;
}

HermiteBasis hermite_basis(const Field& field, std::span<const FieldElem> points, int order) {
    if (order < 1) throw std::invalid_argument("Hermite basis order must be at least 1");
    HermiteBasis basis{{points.begin(), points.end()},
                       order,
                       vanishing_poly(field, points),
                       indicator_polys(field, points),
                       {},
                       {}};
    const int s = static_cast<int>(points.size());
    for (int i = 0; i < s; ++i) {
        const FieldElem a = points[i];
        MultiPoly shifted(field, 1);  // x - a_i
        shifted.add_term(ExpVec{1}, field.one());
        shifted.add_term(ExpVec{0}, field.neg(a));

        const MultiPoly power = pow(basis.indicators[i], order);  // h_i^r
        // Hasse derivatives of h_i^r at a_i, orders 1 .. r-1, used by the
        // downward recursion.
        std::vector<FieldElem> derivs(order, field.zero());
        for (int d = 1; d < order; ++d)
            derivs[d] = hasse_derivative(power, ExpVec{d}).eval(std::vector<FieldElem>{a});

        std::vector<MultiPoly> site(order, MultiPoly(field, 1));
        for (int n = order - 1; n >= 0; --n) {
            MultiPoly h = pow(shifted, n) * power;
            for (int k = n + 1; k < order; ++k)
                h -= site[k].scaled(derivs[k - n]);
            site[n] = std::move(h);
        }

        const ExpVec top{order * s - 1};
        std::vector<FieldElem> tops;
        tops.reserve(order);
        for (int n = 0; n < order; ++n) tops.push_back(site[n].coeff(top));
        basis.polys.push_back(std::move(site));
        basis.top_coeffs.push_back(std::move(tops));
    }
    return basis;
}

GridHermite::GridHermite(const Grid& grid, int order) : grid_(&grid), order_(order) {
    if (order < 1) throw std::invalid_argument("Hermite basis order must be at least 1");
    axes_.reserve(grid.vars());
    for (int j = 0; j < grid.vars(); ++j)
        axes_.push_back(hermite_basis(grid.field(), grid.component(j), order));
}

size_t GridHermite::site_index(int axis, FieldElem value) const {
    const auto& pts = axes_[axis].points;
    for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == value) return i;
    throw std::invalid_argument("point coordinate is not in the grid");
}

MultiPoly GridHermite::product_poly(std::span<const FieldElem> point,
                                    const ExpVec& box_index) const {
    const int m = grid_->vars();
    if (static_cast<int>(point.size()) != m || static_cast<int>(box_index.size()) != m)
        throw std::invalid_argument("point or index has wrong length");
    MultiPoly h = MultiPoly::constant(grid_->field(), m, grid_->field().one());
    for (int j = 0; j < m; ++j) {
        if (box_index[j] < 0 || box_index[j] >= order_)
            throw std::out_of_range("box index outside [0, r-1]^m");
        const size_t site = site_index(j, point[j]);
        h = h * embed_univariate(axes_[j].polys[site][box_index[j]], m, j);
    }
    return h;
}

LambdaMatrix lambda_matrix(const GridHermite& gh, std::span<const FieldElem> point) {
    const Grid& grid = gh.grid();
    const Field& F = grid.field();
    const int m = grid.vars();
    const int r = gh.order();

    const DecreasingSet box = DecreasingSet::box(std::vector<int>(m, r - 1));
    const std::vector<ExpVec>& order = box.elements();
    const size_t dim = order.size();  // r^m

    // By separability the top coefficient of the product basis polynomial is
    // the product of the per-axis top coefficients; no m-variate product is
    // ever formed here.
    std::vector<size_t> sites(m);
    for (int j = 0; j < m; ++j) sites[j] = gh.site_index(j, point[j]);
    auto lambda_at = [&](const ExpVec& idx) {
        FieldElem v = F.one();
        for (int j = 0; j < m; ++j) v = F.mul(v, gh.axis(j).top_coeffs[sites[j]][idx[j]]);
        return v;
    };

    LambdaMatrix out{{point.begin(), point.end()}, Matrix(F, dim, dim), Matrix(F, 0, 0)};
    ExpVec sum(m);
    for (size_t u = 0; u < dim; ++u)
        for (size_t v = 0; v < dim; ++v) {
            bool in_box = true;
            for (int j = 0; j < m; ++j) {
                sum[j] = order[u][j] + order[v][j];
                if (sum[j] > r - 1) in_box = false;
            }
            if (in_box) out.full(u, v) = lambda_at(sum);
        }

    // t = binom(m+r-1, m): the number of box indices of total degree < r,
    // which the graded order places first.
    size_t simplex = 0;
    for (const ExpVec& e : order)
        if (total_degree(e) < r) ++simplex;
    out.corner = out.full.submatrix(dim - simplex, dim, 0, simplex);
    return out;
}

LambdaMatrix lambda_matrix(const Grid& grid, int order, std::span<const FieldElem> point) {
    return lambda_matrix(GridHermite(grid, order), point);
}

}  // namespace mcode
