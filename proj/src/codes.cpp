#include "mcode/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mcode {

namespace {

long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long acc = 1;
    for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

std::vector<ExpVec> box_monomials(const std::vector<int>& bounds, long long max_degree) {
    std::vector<ExpVec> out;
    for (int b : bounds)
        if (b < 0) return out;
    if (max_degree < 0) return out;
    ExpVec e(bounds.size(), 0);
    while (true) {
        if (total_degree(e) <= max_degree) out.push_back(e);
        size_t j = 0;
        while (j < bounds.size() && e[j] == bounds[j]) {
            e[j] = 0;
            ++j;
        }
        if (j == bounds.size()) break;
        ++e[j];
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

void check_dual_range(const Grid& grid, int r, long long k) {
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    const long long n_cap = degree_cap(grid, r);
    if (k < 1 || k > n_cap)
        throw std::invalid_argument("degree bound k must lie in [1, N] for dual constructions");
}

std::vector<LambdaMatrix> all_lambda_matrices(const GridHermite& gh) {
    const Grid& grid = gh.grid();
    std::vector<LambdaMatrix> out;
    out.reserve(grid.size());
    for (size_t a = 0; a < grid.size(); ++a) out.push_back(lambda_matrix(gh, grid.point(a)));
    return out;
}

// row-vector times matrix
std::vector<FieldElem> vec_times(const std::vector<FieldElem>& v, const Matrix& m) {
    const Field& F = m.field();
    std::vector<FieldElem> out(m.cols(), F.zero());
    for (size_t u = 0; u < v.size(); ++u) {
        if (v[u] == F.zero()) continue;
        for (size_t w = 0; w < m.cols(); ++w) out[w] = F.add(out[w], F.mul(v[u], m(u, w)));
    }
    return out;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool rational_leq(const Rational& lhs, long long rhs) { return lhs.num <= rhs * lhs.den; }

long long degree_cap(const Grid& grid, int r) {
    long long n = 0;
    for (int j = 0; j < grid.vars(); ++j)
        n += static_cast<long long>(r) * static_cast<long long>(grid.component_size(j)) - 1;
    return n;
}

std::vector<ExpVec> monomial_basis(const Grid& grid, const DecreasingSet& j_set, long long k) {
    if (j_set.empty()) throw std::invalid_argument("code requires a non-empty derivative set");
    if (k < 0) throw std::invalid_argument("degree bound k must be non-negative");
    std::vector<ExpVec> result = footprint(grid, j_set);
    std::erase_if(result, [k](const ExpVec& e) { return total_degree(e) >= k; });
    return result;
}

size_t dimension(const Grid& grid, const DecreasingSet& j_set, long long k) {
    return monomial_basis(grid, j_set, k).size();
}

long long dimension_formula(int m, int r, int s, long long k) {
    if (m < 1 || r < 1 || s < 1) throw std::invalid_argument("parameters must be positive");
    const long long rs = static_cast<long long>(r) * s;
    if (k < 0 || k > m * (rs - 1))
        throw std::invalid_argument("closed formula requires 0 <= k <= m(rs-1)");
    // Monomials of the box [0, rs-1]^m with degree < k, by inclusion-exclusion
    // on the coordinates that overflow.
    long long total = 0;
    for (long long t = 0; t < k; ++t)
        for (int i = 0; i <= m; ++i) {
            const long long term = binom_ll(m, i) * binom_ll(t - i * rs + m - 1, t - i * rs);
            total += (i % 2 == 0) ? term : -term;
        }
    return total;
}

CodeMatrix generator_matrix(const Grid& grid, const DecreasingSet& j_set, long long k) {
    if (grid.vars() != j_set.vars())
        throw std::invalid_argument("grid and derivative set have different variable counts");
    const Field& F = grid.field();
    const size_t t = j_set.size();
    const size_t n = grid.size();
    const std::vector<ExpVec> basis = monomial_basis(grid, j_set, k);

    Matrix mat(F, 0, t * n);
    std::vector<FieldElem> row(t * n);
    for (const ExpVec& exp : basis) {
        const MultiPoly f = MultiPoly::monomial(F, exp, F.one());
        for (size_t a = 0; a < n; ++a) {
            const std::vector<FieldElem> jet = hasse_jet(f, grid.point(a), j_set);
            std::copy(jet.begin(), jet.end(), row.begin() + a * t);
        }
        mat.append_row(row);
    }
    return {std::move(mat), t};
}

CodeMatrix dual_box_generator(const Grid& grid, int r, long long k) {
    check_dual_range(grid, r, k);
    const Field& F = grid.field();
    const int m = grid.vars();
    const size_t n = grid.size();
    const DecreasingSet box = DecreasingSet::box(std::vector<int>(m, r - 1));
    const size_t width = box.size();  // r^m

    const GridHermite gh(grid, r);
    const std::vector<LambdaMatrix> lambdas = all_lambda_matrices(gh);
    const std::vector<ExpVec> basis = monomial_basis(grid, box, degree_cap(grid, r) - k + 1);

    Matrix mat(F, 0, width * n);
    std::vector<FieldElem> row(width * n);
    for (const ExpVec& exp : basis) {
        const MultiPoly g = MultiPoly::monomial(F, exp, F.one());
        for (size_t a = 0; a < n; ++a) {
            const std::vector<FieldElem> jet = hasse_jet(g, grid.point(a), box);
            const std::vector<FieldElem> block = vec_times(jet, lambdas[a].full);
            std::copy(block.begin(), block.end(), row.begin() + a * width);
        }
        mat.append_row(row);
    }
    return {std::move(mat), width};
}

DecreasingSet dual_perp_set(int vars, int r) {
    if (vars < 1 || r < 1) throw std::invalid_argument("parameters must be positive");
    const long long limit = static_cast<long long>(vars - 1) * (r - 1);
    std::vector<ExpVec> elems = box_monomials(std::vector<int>(vars, r - 1), limit);
    std::erase_if(elems, [limit](const ExpVec& e) { return total_degree(e) >= limit; });
    return DecreasingSet(vars, std::move(elems));
}

DualBasis dual_basis_polys(const Grid& grid, int r, long long k) {
    check_dual_range(grid, r, k);
    const Field& F = grid.field();
    const int m = grid.vars();
    const long long budget = degree_cap(grid, r) - k;

    std::vector<MultiPoly> axis_vanishing;
    for (int j = 0; j < m; ++j)
        axis_vanishing.push_back(embed_univariate(vanishing_poly(F, grid.component(j)), m, j));

    DualBasis out;
    std::set<ExpVec> seen_initials;
    for (const ExpVec& u : dual_perp_set(m, r).border()) {
        long long prefix_degree = 0;
        std::vector<int> bounds(m);
        for (int j = 0; j < m; ++j) {
            const long long s_j = static_cast<long long>(grid.component_size(j));
            prefix_degree += u[j] * s_j;
            bounds[j] = static_cast<int>((r - u[j]) * s_j - 1);
        }
        MultiPoly prefix = MultiPoly::constant(F, m, F.one());
        for (int j = 0; j < m; ++j)
            if (u[j] > 0) prefix = prefix * pow(axis_vanishing[j], u[j]);

        ExpVec initial(m);
        for (const ExpVec& i : box_monomials(bounds, budget - prefix_degree)) {
            MultiPoly g = prefix * MultiPoly::monomial(F, i, F.one());
            for (int j = 0; j < m; ++j)
                initial[j] = i[j] + u[j] * static_cast<int>(grid.component_size(j));
            out.family.push_back(g);
            if (seen_initials.insert(initial).second) out.selected.push_back(std::move(g));
        }
    }
    return out;
}

CodeMatrix parity_check_matrix(const Grid& grid, int r, long long k) {
    check_dual_range(grid, r, k);
    const Field& F = grid.field();
    const int m = grid.vars();
    const size_t n = grid.size();

    const DecreasingSet box = DecreasingSet::box(std::vector<int>(m, r - 1));
    const DecreasingSet perp = dual_perp_set(m, r);
    std::vector<ExpVec> eval_orders;
    for (const ExpVec& e : box.elements())
        if (!perp.contains(e)) eval_orders.push_back(e);
    const size_t t = eval_orders.size();  // binom(m+r-1, m)

    const GridHermite gh(grid, r);
    const std::vector<LambdaMatrix> lambdas = all_lambda_matrices(gh);

    Matrix mat(F, 0, t * n);
    std::vector<FieldElem> row(t * n);
    for (const MultiPoly& g : dual_basis_polys(grid, r, k).selected) {
        for (size_t a = 0; a < n; ++a) {
            const std::vector<FieldElem> jet = hasse_jet(g, grid.point(a), eval_orders);
            const std::vector<FieldElem> block = vec_times(jet, lambdas[a].corner);
            std::copy(block.begin(), block.end(), row.begin() + a * t);
        }
        mat.append_row(row);
    }
    return {std::move(mat), t};
}

CodeMatrix nullspace_dual_oracle(const CodeMatrix& gen) {
    return {nullspace(gen.mat), gen.block_width};
}

size_t folded_weight(std::span<const FieldElem> v, size_t block_width) {
    if (block_width == 0 || v.size() % block_width != 0)
        throw std::invalid_argument("vector length is not a multiple of the block width");
    const FieldElem zero{0};
    size_t weight = 0;
    for (size_t b = 0; b < v.size(); b += block_width)
        for (size_t i = 0; i < block_width; ++i)
            if (v[b + i] != zero) {
                ++weight;
                break;
            }
    return weight;
}

bool distance_searchable(const CodeMatrix& code, uint64_t cap) {
    const uint64_t q = code.mat.field().size();
    uint64_t count = 1;
    for (size_t i = 0; i < rank(code.mat); ++i) {
        if (count > cap / q) return false;
        count *= q;
    }
    return count <= cap;
}

size_t min_folded_distance(const CodeMatrix& code, uint64_t cap) {
    const Field& F = code.mat.field();
    const Matrix basis = row_space_basis(code.mat);
    const size_t r = basis.rows();
    if (r == 0) throw std::invalid_argument("the zero code has no minimum distance");
    if (!distance_searchable(code, cap))
        throw std::length_error("codeword count exceeds the exhaustive search cap");

    const size_t cols = basis.cols();
    const uint32_t q = F.size();
    std::vector<std::vector<FieldElem>> partial(r + 1,
                                                std::vector<FieldElem>(cols, F.zero()));
    size_t best = cols / code.block_width + 1;

    // Depth-first over coefficient vectors; level L extends the partial sum
    // with c * row_L for every field element c.
    auto descend = [&](auto&& self, size_t level, bool nonzero) -> void {
        if (level == r) {
            if (nonzero) best = std::min(best, folded_weight(partial[r], code.block_width));
            return;
        }
        for (uint32_t c = 0; c < q; ++c) {
            const FieldElem coeff = F.element(c);
            if (coeff == F.zero()) {
                partial[level + 1] = partial[level];
            } else {
                for (size_t j = 0; j < cols; ++j)
                    partial[level + 1][j] = F.add(partial[level][j], F.mul(coeff, basis(level, j)));
            }
            self(self, level + 1, nonzero || coeff != F.zero());
        }
    };
    descend(descend, 0, false);
    return best;
}

Rational sz_primal_bound(int s, int m, int r, long long k) {
    if (s < 1 || m < 1 || r < 1 || k < 1) throw std::invalid_argument("parameters must be positive");
    long long n = 1;
    for (int i = 0; i < m; ++i) n *= s;
    // n - (k-1) s^{m-1} / r
    return Rational(static_cast<long long>(r) * n - (k - 1) * (n / s), r);
}

Rational sz_dual_bound(int s, int m, int r, long long k) {
    if (s < 1 || m < 1 || r < 1 || k < 1) throw std::invalid_argument("parameters must be positive");
    long long n = 1;
    for (int i = 0; i < m; ++i) n *= s;
    const long long rs = static_cast<long long>(r) * s;
    const long long deficiency = static_cast<long long>(m) * (rs - 1) - k;
    return Rational(n * (rs - deficiency), rs);
}

CodeMatrix apply_isometry(const CodeMatrix& code, std::span<const size_t> sigma,
                          std::span<const Matrix> blocks) {
    const Field& F = code.mat.field();
    const size_t t = code.block_width;
    const size_t n = code.mat.cols() / t;
    if (sigma.size() != n || blocks.size() != n)
        throw std::invalid_argument("isometry needs one permutation entry and block per position");
    std::vector<bool> hit(n, false);
    for (size_t i : sigma) {
        if (i >= n || hit[i]) throw std::invalid_argument("sigma is not a permutation");
        hit[i] = true;
    }
    for (const Matrix& b : blocks) {
        if (b.rows() != t || b.cols() != t) throw std::invalid_argument("block has wrong shape");
        if (rank(b) != t) throw std::domain_error("isometry block is singular");
    }

    Matrix out(F, code.mat.rows(), code.mat.cols());
    std::vector<FieldElem> block(t);
    for (size_t row = 0; row < code.mat.rows(); ++row)
        for (size_t pos = 0; pos < n; ++pos) {
            for (size_t i = 0; i < t; ++i) block[i] = code.mat(row, sigma[pos] * t + i);
            const std::vector<FieldElem> image = vec_times(block, blocks[pos]);
            for (size_t i = 0; i < t; ++i) out(row, pos * t + i) = image[i];
        }
    return {std::move(out), t};
}

}  // namespace mcode
