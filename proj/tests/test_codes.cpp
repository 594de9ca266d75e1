#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "mcode/codes.hpp"

using namespace mcode;

namespace {

Field gf(uint32_t p) { return Field({p, 1, {}}); }

std::vector<FieldElem> row_of(std::initializer_list<uint32_t> vals, const Field& f) {
    std::vector<FieldElem> out;
    for (uint32_t v : vals) out.push_back(f.element(v));
    return out;
}

}  // namespace

TEST_CASE("monomial bases") {
    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    const DecreasingSet j2 = DecreasingSet::classical(2, 2);

    const std::vector<ExpVec> basis = monomial_basis(s22, j2, 4);
    const std::vector<ExpVec> expected = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1},
                                          {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};
    CHECK(basis == expected);

    CHECK(monomial_basis(s22, j2, 1) == std::vector<ExpVec>{{0, 0}});

    const size_t expected_dims[] = {0, 1, 3, 6, 10, 12};
    for (long long k = 0; k <= 5; ++k) CHECK(dimension(s22, j2, k) == expected_dims[k]);
}

TEST_CASE("dimension against the closed box formula") {
    CHECK(dimension_formula(2, 2, 2, 4) == 10);
    CHECK_THROWS_AS(dimension_formula(2, 2, 2, 7), std::invalid_argument);

    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    const DecreasingSet box = DecreasingSet::box({1, 1});
    for (long long k = 0; k <= 6; ++k)
        CHECK(static_cast<long long>(dimension(s22, box, k)) == dimension_formula(2, 2, 2, k));

    // Saturation: past N the code is the total space.
    CHECK(dimension(s22, box, 7) == box.size() * s22.size());
    CHECK(dimension(s22, DecreasingSet::classical(2, 2), 40) == 12);

    // Reed-Solomon specialization.
    const Field f5 = gf(5);
    const Grid line = Grid::full(f5, 1);
    for (long long k = 1; k <= 5; ++k)
        CHECK(dimension(line, DecreasingSet::classical(1, 1), k) == static_cast<size_t>(k));

    const Field f3 = gf(3);
    const Grid s33 = Grid::full(f3, 2);
    for (long long k = 0; k <= 10; ++k)
        CHECK(static_cast<long long>(dimension(s33, DecreasingSet::box({1, 1}), k)) ==
              dimension_formula(2, 2, 3, k));
}

TEST_CASE("generator matrix rows are jets of basis monomials") {
    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    const CodeMatrix gen = generator_matrix(s22, DecreasingSet::classical(2, 2), 4);
    CHECK(gen.block_width == 3);
    CHECK(gen.mat.rows() == 10);
    CHECK(gen.mat.cols() == 12);
    CHECK(rank(gen.mat) == 10);

    // f = x sits at basis index 1, f = xy at index 4.
    CHECK(gen.mat.row(1) == row_of({0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0}, f2));
    CHECK(gen.mat.row(4) == row_of({0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1}, f2));

    // k = 1: the constant polynomial alone, one (1,0,...,0) block per point.
    const CodeMatrix constant = generator_matrix(s22, DecreasingSet::classical(2, 2), 1);
    CHECK(constant.mat.rows() == 1);
    CHECK(constant.mat.row(0) == row_of({1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0}, f2));
}

TEST_CASE("dual of the box code") {
    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    const CodeMatrix dual = dual_box_generator(s22, 2, 4);
    CHECK(dual.block_width == 4);
    CHECK(dual.mat.cols() == 16);
    CHECK(rank(dual.mat) == 16 - 10);

    const CodeMatrix primal = generator_matrix(s22, DecreasingSet::box({1, 1}), 4);
    CHECK((primal.mat * dual.mat.transpose()).is_zero());
    CHECK(same_row_space(dual.mat, nullspace(primal.mat)));

    CHECK_THROWS_AS(dual_box_generator(s22, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(dual_box_generator(s22, 2, 7), std::invalid_argument);
}

TEST_CASE("constraint sets of the dual description") {
    CHECK(dual_perp_set(2, 2).elements() == std::vector<ExpVec>{{0, 0}});
    CHECK(dual_perp_set(1, 2).empty());
    CHECK(dual_perp_set(1, 5).empty());
    CHECK(dual_perp_set(2, 3).elements() == std::vector<ExpVec>{{0, 0}, {1, 0}, {0, 1}});
    // |perp| = r^m - binom(m+r-1, m)
    CHECK(dual_perp_set(2, 3).size() == 9 - 6);
    CHECK(dual_perp_set(3, 2).size() == 8 - 4);
}

TEST_CASE("dual basis polynomials for the worked example") {
    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    CHECK(dual_perp_set(2, 2).border() == std::vector<ExpVec>{{1, 0}, {0, 1}});

    const DualBasis basis = dual_basis_polys(s22, 2, 4);
    REQUIRE(basis.selected.size() == 2);
    MultiPoly g1(f2, 2);  // x^2 + x
    g1.add_term({2, 0}, f2.one());
    g1.add_term({1, 0}, f2.one());
    MultiPoly g2(f2, 2);  // y^2 + y
    g2.add_term({0, 2}, f2.one());
    g2.add_term({0, 1}, f2.one());
    CHECK(basis.selected[0] == g1);
    CHECK(basis.selected[1] == g2);
}

TEST_CASE("selected dual polynomials count the dual dimension") {
    for (uint32_t p : {2u, 3u}) {
        const Field f = gf(p);
        for (int m : {1, 2}) {
            const Grid grid = Grid::full(f, m);
            for (int r : {1, 2}) {
                const long long n_cap = degree_cap(grid, r);
                const DecreasingSet j_r = DecreasingSet::classical(m, r);
                for (long long k = 1; k <= n_cap; ++k) {
                    const DualBasis basis = dual_basis_polys(grid, r, k);
                    const size_t dim = dimension(grid, j_r, k);
                    CHECK(basis.selected.size() == j_r.size() * grid.size() - dim);
                    // Distinct graded-lex initials, all inside the box footprint.
                    std::set<ExpVec> initials;
                    for (const MultiPoly& g : basis.selected) {
                        const ExpVec& init = g.leading_exponent();
                        initials.insert(init);
                        for (int j = 0; j < m; ++j)
                            CHECK(init[j] <= r * static_cast<int>(grid.component_size(j)) - 1);
                    }
                    CHECK(initials.size() == basis.selected.size());
                }
            }
        }
    }
}

TEST_CASE("worked parity-check matrix") {
    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    const CodeMatrix h = parity_check_matrix(s22, 2, 4);
    REQUIRE(h.mat.rows() == 2);
    CHECK(h.block_width == 3);
    CHECK(h.mat.row(0) == row_of({0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1}, f2));
    CHECK(h.mat.row(1) == row_of({0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0}, f2));

    const CodeMatrix gen = generator_matrix(s22, DecreasingSet::classical(2, 2), 4);
    CHECK((gen.mat * h.mat.transpose()).is_zero());
    CHECK(rank(gen.mat) + rank(h.mat) == 12);
}

TEST_CASE("univariate duals reverse the blocks over full fields") {
    // For S = GF(q) and r = 2 the dual code consists of the reversed blocks
    // (g'(a), g(a)) over deg g < 2q - k.
    for (uint32_t q : {2u, 3u, 5u}) {
        const Field f = gf(q);
        const Grid line = Grid::full(f, 1);
        const long long n_cap = 2 * static_cast<long long>(q) - 1;
        for (long long k = 1; k <= n_cap; ++k) {
            const CodeMatrix h = parity_check_matrix(line, 2, k);
            Matrix reversed(f, 0, 2 * q);
            std::vector<FieldElem> row(2 * q);
            for (long long d = 0; d < 2 * q - k; ++d) {
                const MultiPoly g = MultiPoly::monomial(f, {static_cast<int>(d)}, f.one());
                const MultiPoly g1 = hasse_derivative(g, {1});
                for (uint32_t a = 0; a < q; ++a) {
                    const std::vector<FieldElem> pt{f.element(a)};
                    row[2 * a] = g1.eval(pt);
                    row[2 * a + 1] = g.eval(pt);
                }
                reversed.append_row(row);
            }
            CHECK(same_row_space(h.mat, reversed));
        }
    }
}

TEST_CASE("univariate dual at multiplicity 3 over GF(2)") {
    const Field f2 = gf(2);
    const Grid line = Grid::full(f2, 1);
    const CodeMatrix h = parity_check_matrix(line, 3, 3);
    // Row space of ((g''+g')(a), (g'+g)(a), g(a))_a for g in {1, x, x^2}.
    Matrix expected(f2, 0, 6);
    std::vector<FieldElem> row(6);
    for (int d = 0; d <= 2; ++d) {
        const MultiPoly g = MultiPoly::monomial(f2, {d}, f2.one());
        const MultiPoly g1 = hasse_derivative(g, {1});
        const MultiPoly g2 = hasse_derivative(g, {2});
        for (uint32_t a = 0; a < 2; ++a) {
            const std::vector<FieldElem> pt{f2.element(a)};
            row[3 * a] = f2.add(g2.eval(pt), g1.eval(pt));
            row[3 * a + 1] = f2.add(g1.eval(pt), g.eval(pt));
            row[3 * a + 2] = g.eval(pt);
        }
        expected.append_row(row);
    }
    CHECK(same_row_space(h.mat, expected));

    // The plain reversed-block word for g = x^2 is not a dual codeword here.
    const CodeMatrix gen = generator_matrix(line, DecreasingSet::classical(1, 3), 3);
    const Matrix word = Matrix::from_rows(f2, 6, {row_of({1, 0, 0, 1, 0, 1}, f2)});
    CHECK(!(gen.mat * word.transpose()).is_zero());
}

TEST_CASE("nullspace oracle") {
    const Field f2 = gf(2);
    const CodeMatrix id{Matrix::identity(f2, 3), 1};
    CHECK(nullspace_dual_oracle(id).mat.rows() == 0);

    Matrix rep(f2, 1, 2);
    rep(0, 0) = f2.one();
    rep(0, 1) = f2.one();
    const CodeMatrix repetition{rep, 1};
    const CodeMatrix dual = nullspace_dual_oracle(repetition);
    REQUIRE(dual.mat.rows() == 1);
    CHECK(dual.mat.row(0) == row_of({1, 1}, f2));

    const Grid s22 = Grid::full(f2, 2);
    const CodeMatrix gen = generator_matrix(s22, DecreasingSet::classical(2, 2), 4);
    CHECK(same_row_space(parity_check_matrix(s22, 2, 4).mat,
                         nullspace_dual_oracle(gen).mat));
}

TEST_CASE("folded weights and exhaustive distance") {
    const Field f2 = gf(2);
    CHECK(folded_weight(row_of({0, 0, 1, 0, 0, 1}, f2), 2) == 2);
    CHECK(folded_weight(row_of({0, 0, 0, 0}, f2), 2) == 0);
    CHECK_THROWS_AS(folded_weight(row_of({1, 0, 0}, f2), 2), std::invalid_argument);

    // Repetition code M(GF(2), 1, 1) has folded distance 2.
    const Grid line = Grid::full(f2, 1);
    const CodeMatrix rep = generator_matrix(line, DecreasingSet::classical(1, 1), 1);
    CHECK(min_folded_distance(rep) == 2);

    // The worked dual has three nonzero codewords, all of folded weight 4.
    const Grid s22 = Grid::full(f2, 2);
    const CodeMatrix h = parity_check_matrix(s22, 2, 4);
    CHECK(min_folded_distance(h) == 4);

    CHECK_THROWS_AS(min_folded_distance(h, 2), std::length_error);
    CHECK(distance_searchable(h, 4));
    CHECK(!distance_searchable(h, 3));
    const CodeMatrix zero{Matrix(f2, 0, 4), 2};
    CHECK_THROWS_AS(min_folded_distance(zero), std::invalid_argument);
}

TEST_CASE("Schwartz-Zippel bounds") {
    CHECK(sz_primal_bound(2, 2, 2, 4) == Rational(1, 1));
    CHECK(sz_dual_bound(2, 2, 2, 4) == Rational(2, 1));
    // Zero deficiency: the dual bound reaches the full length.
    CHECK(sz_dual_bound(2, 2, 2, 6) == Rational(4, 1));
    CHECK(sz_primal_bound(3, 1, 2, 3) == Rational(2, 1));  // RS-like
    CHECK(rational_leq(Rational(7, 3), 3));
    CHECK(!rational_leq(Rational(7, 3), 2));

    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    CHECK(rational_leq(sz_dual_bound(2, 2, 2, 4),
                       static_cast<long long>(min_folded_distance(parity_check_matrix(s22, 2, 4)))));
}

TEST_CASE("isometries preserve folded weight and commute with duality") {
    std::mt19937_64 rng(83);
    const Field f3 = gf(3);
    const Grid s33 = Grid::full(f3, 2);
    const CodeMatrix gen = generator_matrix(s33, DecreasingSet::classical(2, 2), 5);
    const size_t t = gen.block_width;
    const size_t n = gen.mat.cols() / t;

    // Identity isometry.
    std::vector<size_t> id_sigma(n);
    std::iota(id_sigma.begin(), id_sigma.end(), 0);
    std::vector<Matrix> id_blocks(n, Matrix::identity(f3, t));
    CHECK(apply_isometry(gen, id_sigma, id_blocks).mat == gen.mat);

    // Random isometry: shuffled blocks, random invertible matrices.
    std::vector<size_t> sigma = id_sigma;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Matrix> blocks;
    for (size_t i = 0; i < n; ++i) {
        Matrix b(f3, t, t);
        do {
            for (size_t u = 0; u < t; ++u)
                for (size_t v = 0; v < t; ++v) b(u, v) = f3.element(rng() % 3);
        } while (rank(b) < t);
        blocks.push_back(b);
    }
    const CodeMatrix image = apply_isometry(gen, sigma, blocks);
    for (size_t row = 0; row < gen.mat.rows(); ++row)
        CHECK(folded_weight(image.mat.row(row), t) == folded_weight(gen.mat.row(row), t));

    // phi(C)^perp = psi(C^perp) with inverse-transpose blocks.
    std::vector<Matrix> inv_t_blocks;
    for (const Matrix& b : blocks) inv_t_blocks.push_back(inverse(b.transpose()));
    const CodeMatrix lhs = nullspace_dual_oracle(image);
    const CodeMatrix rhs =
        apply_isometry(nullspace_dual_oracle(gen), sigma, inv_t_blocks);
    CHECK(same_row_space(lhs.mat, rhs.mat));

    // Singular block rejected.
    std::vector<Matrix> bad = blocks;
    bad[0] = Matrix(f3, t, t);
    CHECK_THROWS_AS(apply_isometry(gen, sigma, bad), std::domain_error);
    std::vector<size_t> bad_sigma = sigma;
    bad_sigma[0] = bad_sigma[1];
    CHECK_THROWS_AS(apply_isometry(gen, bad_sigma, blocks), std::invalid_argument);
}

TEST_CASE("box dual is equivalent to a box code") {
    // Applying the inverse lambda blocks to the box dual recovers the box
    // code with the complementary degree bound.
    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    const int r = 2;
    const long long k = 4;
    const long long n_cap = degree_cap(s22, r);

    const CodeMatrix dual = dual_box_generator(s22, r, k);
    const size_t n = s22.size();
    std::vector<size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    const GridHermite gh(s22, r);
    std::vector<Matrix> blocks;
    for (size_t a = 0; a < n; ++a)
        blocks.push_back(inverse(lambda_matrix(gh, s22.point(a)).full));

    const CodeMatrix unwrapped = apply_isometry(dual, sigma, blocks);
    const CodeMatrix box_gen =
        generator_matrix(s22, DecreasingSet::box({r - 1, r - 1}), n_cap - k + 1);
    CHECK(same_row_space(unwrapped.mat, box_gen.mat));
}

TEST_CASE("puncturing the box code yields the classical code") {
    for (uint32_t p : {2u, 3u}) {
        const Field f = gf(p);
        const Grid grid = Grid::full(f, 2);
        const int r = 2;
        for (long long k : {2ll, 4ll}) {
            const CodeMatrix box = generator_matrix(grid, DecreasingSet::box({1, 1}), k);
            const DecreasingSet j_r = DecreasingSet::classical(2, r);
            const CodeMatrix classical = generator_matrix(grid, j_r, k);
            // First binom(m+r-1,m) = 3 coordinates of each width-4 block.
            std::vector<size_t> keep;
            for (size_t b = 0; b < grid.size(); ++b)
                for (size_t i = 0; i < 3; ++i) keep.push_back(4 * b + i);
            CHECK(same_row_space(select_columns(box.mat, keep), classical.mat));
        }
    }
}

TEST_CASE("shortening identity behind the dual theorem") {
    // (pi_I(C))^perp = pi_I(C^perp  intersect  ker pi_complement) on the box
    // code, with I the simplex coordinates of every block.
    const Field f2 = gf(2);
    const Grid grid = Grid::full(f2, 2);
    const int r = 2;
    const long long k = 4;

    const CodeMatrix box = generator_matrix(grid, DecreasingSet::box({1, 1}), k);
    std::vector<size_t> keep, drop;
    for (size_t b = 0; b < grid.size(); ++b) {
        for (size_t i = 0; i < 3; ++i) keep.push_back(4 * b + i);
        drop.push_back(4 * b + 3);
    }
    const Matrix punctured = select_columns(box.mat, keep);
    const Matrix lhs = nullspace(punctured);

    const Matrix box_dual = nullspace(box.mat);
    const Matrix shortened = row_space_vanishing_on(box_dual, drop);
    const Matrix rhs = select_columns(shortened, keep);
    CHECK(same_row_space(lhs, rhs));

    // And this is exactly the parity check of M(S, r, k).
    CHECK(same_row_space(lhs, parity_check_matrix(grid, r, k).mat));
}

TEST_CASE("duality holds over an extension field") {
    const Field f4 = Field({2, 2, {1, 1, 1}});
    const Grid line = Grid::full(f4, 1);
    for (long long k = 1; k <= 7; ++k) {  // N = 2*4 - 1
        const CodeMatrix h = parity_check_matrix(line, 2, k);
        const CodeMatrix gen = generator_matrix(line, DecreasingSet::classical(1, 2), k);
        CHECK(same_row_space(h.mat, nullspace_dual_oracle(gen).mat));
    }
    const Grid plane = random_subgrid(f4, std::vector<int>{2, 3}, 5);
    for (long long k = 1; k <= degree_cap(plane, 2); ++k) {
        const CodeMatrix h = parity_check_matrix(plane, 2, k);
        const CodeMatrix gen = generator_matrix(plane, DecreasingSet::classical(2, 2), k);
        CHECK(same_row_space(h.mat, nullspace_dual_oracle(gen).mat));
    }
}

TEST_CASE("generator and dimension work for general decreasing sets") {
    // A staircase set that is neither simplex nor box.
    const DecreasingSet stairs(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}});
    const Field f3 = gf(3);
    const Grid grid = Grid::full(f3, 2);
    CHECK(footprint(grid, stairs).size() == stairs.size() * grid.size());
    for (long long k : {1ll, 3ll, 5ll, 50ll}) {
        const CodeMatrix gen = generator_matrix(grid, stairs, k);
        CHECK(gen.block_width == 5);
        CHECK(rank(gen.mat) == dimension(grid, stairs, k));
    }
    CHECK(dimension(grid, stairs, 50) == stairs.size() * grid.size());
}

TEST_CASE("duality in three variables") {
    // m = 3, r = 3 drives the dual basis through border elements u with a
    // coordinate equal to r, whose monomial boxes are empty.
    const Field f2 = gf(2);
    const Grid cube = Grid::full(f2, 3);
    const DecreasingSet perp = dual_perp_set(3, 3);
    CHECK(perp.size() == 27 - 10);
    bool saw_full_power = false;
    for (const ExpVec& u : perp.border())
        for (int x : u) saw_full_power |= x == 3;
    CHECK(saw_full_power);

    const DecreasingSet j3 = DecreasingSet::classical(3, 3);
    for (long long k : {1ll, 5ll, 9ll}) {
        const CodeMatrix h = parity_check_matrix(cube, 3, k);
        const CodeMatrix gen = generator_matrix(cube, j3, k);
        CHECK(same_row_space(h.mat, nullspace_dual_oracle(gen).mat));
        CHECK(rank(h.mat) + rank(gen.mat) == gen.mat.cols());
    }

    for (long long k : {2ll, 6ll}) {
        const CodeMatrix h = parity_check_matrix(cube, 2, k);
        const CodeMatrix gen = generator_matrix(cube, DecreasingSet::classical(3, 2), k);
        CHECK(same_row_space(h.mat, nullspace_dual_oracle(gen).mat));
    }
}

TEST_CASE("rank, monomial count and closed formula agree") {
    for (uint32_t p : {2u, 3u}) {
        const Field f = gf(p);
        for (int m : {1, 2}) {
            const Grid grid = Grid::full(f, m);
            for (int r : {1, 2}) {
                const DecreasingSet box = DecreasingSet::box(std::vector<int>(m, r - 1));
                const long long n_cap = degree_cap(grid, r);
                for (long long k = 1; k <= n_cap; ++k) {
                    for (const DecreasingSet& j_set : {DecreasingSet::classical(m, r), box}) {
                        const CodeMatrix gen = generator_matrix(grid, j_set, k);
                        CHECK(rank(gen.mat) == monomial_basis(grid, j_set, k).size());
                        CHECK(rank(gen.mat) == dimension(grid, j_set, k));
                    }
                    CHECK(static_cast<long long>(dimension(grid, box, k)) ==
                          dimension_formula(m, r, static_cast<int>(p), k));
                }
            }
        }
    }
}

TEST_CASE("dual dimension sequence is not a multiplicity-code dimension sequence") {
    const Field f2 = gf(2);
    const Grid s22 = Grid::full(f2, 2);
    const DecreasingSet j2 = DecreasingSet::classical(2, 2);
    std::set<size_t> primal_dims;
    for (long long k = 0; k <= 5; ++k) primal_dims.insert(dimension(s22, j2, k));
    CHECK(primal_dims == std::set<size_t>{0, 1, 3, 6, 10, 12});
    const size_t dual_dims[] = {12, 11, 9, 6, 2, 0};
    for (long long k = 0; k <= 5; ++k)
        CHECK(dual_dims[k] == 12 - dimension(s22, j2, k));
    for (size_t d : {11u, 9u, 2u}) CHECK(!primal_dims.count(d));
}
