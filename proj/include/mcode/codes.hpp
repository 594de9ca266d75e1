#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcode/hermite.hpp"
#include "mcode/linalg.hpp"
#include "mcode/vanishing.hpp"

namespace mcode {

// Generator or parity-check matrix with the codeword block structure: column
// blocks of width block_width, one per grid point in grid order; columns
// inside a block follow the graded-lex order of the derivative set.
struct CodeMatrix {
    Matrix mat;
    size_t block_width;
};

// Exact rational value, used for the Schwartz-Zippel distance bounds.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);  // normalizes; throws on zero denominator

    friend bool operator==(const Rational&, const Rational&) = default;
};

bool rational_leq(const Rational& lhs, long long rhs);  // lhs <= rhs

// N = sum_j (r s_j - 1): the largest degree bound before the box code of
// multiplicity r on this grid saturates to the total space.
long long degree_cap(const Grid& grid, int r);

// Footprint monomials of total degree < k, sorted graded-lex. Their jets are
// a basis of the code, so the count is the code dimension. k = 0 gives the
// zero code; large k saturates to the full footprint.
std::vector<ExpVec> monomial_basis(const Grid& grid, const DecreasingSet& j_set, long long k);

size_t dimension(const Grid& grid, const DecreasingSet& j_set, long long k);

// Closed-form dimension of the box code [0,r-1]^m on a grid with equal
// component sizes s, valid for 0 <= k <= m(rs-1).
long long dimension_formula(int m, int r, int s, long long k);

// One row per basis monomial; the row lists the monomial's Hasse jets over
// all grid points.
CodeMatrix generator_matrix(const Grid& grid, const DecreasingSet& j_set, long long k);

// Generator of the dual of the box code of multiplicity r and degree k:
// rows ((jet of g over the box at a) * M_a)_a for g over the degree-(N-k)
// box monomial basis. Requires 1 <= k <= N.
CodeMatrix dual_box_generator(const Grid& grid, int r, long long k);

// Derivative orders forced to vanish in the dual description:
// J_{(m-1)(r-1)} intersected with the box [0,r-1]^m.
DecreasingSet dual_perp_set(int vars, int r);

// The polynomial family behind the dual basis: family lists every
// prod_j G_j^{u_j} * x^i over u in the border of the perp set with i inside
// the shrunken box and degree budget; selected keeps the first polynomial
// per initial monomial (u, then i, in graded-lex order), giving exactly
// dim(dual) polynomials with pairwise-distinct initials.
struct DualBasis {
    std::vector<MultiPoly> family;    // A^k
    std::vector<MultiPoly> selected;  // B^k
};

DualBasis dual_basis_polys(const Grid& grid, int r, long long k);

// Parity-check matrix of the multiplicity code M(S, r, k): one row per
// selected dual polynomial g, with per-point blocks
// (g^(i)(a))_{i in [0,r-1]^m \ perp, graded-lex} * N_a. Requires 1 <= k <= N.
CodeMatrix parity_check_matrix(const Grid& grid, int r, long long k);

// Brute-force dual: canonical basis of {v : G v^T = 0} by exact Gaussian
// elimination, independent of the Hermite machinery.
CodeMatrix nullspace_dual_oracle(const CodeMatrix& gen);

// Number of nonzero width-t blocks.
size_t folded_weight(std::span<const FieldElem> v, size_t block_width);

constexpr uint64_t kDefaultDistanceCap = uint64_t(1) << 20;

// Whether |F|^rank stays within the codeword enumeration cap.
bool distance_searchable(const CodeMatrix& code, uint64_t cap = kDefaultDistanceCap);

// Minimum folded weight over all nonzero codewords, by exhaustive
// enumeration of the row space. Refuses (std::length_error) beyond the cap.
size_t min_folded_distance(const CodeMatrix& code, uint64_t cap = kDefaultDistanceCap);

// Lower bound (1 - (k-1)/(rs)) n on the folded distance of M(S,r,k) for
// equal component sizes s, n = s^m.
Rational sz_primal_bound(int s, int m, int r, long long k);

// Lower bound (1 - (m(rs-1)-k)/(rs)) n on the folded distance of the dual.
Rational sz_dual_bound(int s, int m, int r, long long k);

// Folded-metric isometry: block i of the image is (old block sigma(i)) * A_i.
// Blocks must be invertible and sigma a permutation of the block positions.
CodeMatrix apply_isometry(const CodeMatrix& code, std::span<const size_t> sigma,
                          std::span<const Matrix> blocks);

}  // namespace mcode
