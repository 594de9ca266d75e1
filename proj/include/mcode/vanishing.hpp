#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcode/poly.hpp"

namespace mcode {

// Finite downward-closed subset of N^m: j <= i coordinatewise and i in the
// set imply j is in the set. Elements are kept sorted in graded-lex order.
// The empty set is legal (it shows up as the constraint set of univariate
// duals); code constructions require non-empty sets and check separately.
class DecreasingSet {
  public:
    DecreasingSet(int vars, std::vector<ExpVec> elements);

    // { i : |i| < r }, the simplex of derivative orders below r.
    static DecreasingSet classical(int vars, int r);
    // { i : i <= corner coordinatewise }.
    static DecreasingSet box(const std::vector<int>& corner);

    int vars() const { return vars_; }
    size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<ExpVec>& elements() const { return elements_; }
    bool contains(const ExpVec& e) const;

    // Minimal elements of the complement N^m \ J (coordinatewise order).
    std::vector<ExpVec> border() const;

    friend bool operator==(const DecreasingSet&, const DecreasingSet&) = default;

  private:
    int vars_;
    std::vector<ExpVec> elements_;
};

// Cartesian evaluation set S = S_1 x ... x S_m of duplicate-free subsets of
// one field. Points are enumerated with the first coordinate varying fastest,
// so for S = {0,1}^2 the order is (0,0), (1,0), (0,1), (1,1).
class Grid {
  public:
    Grid(const Field& field, std::vector<std::vector<FieldElem>> components);
    static Grid full(const Field& field, int vars);

    const Field& field() const { return *field_; }
    int vars() const { return static_cast<int>(components_.size()); }
    size_t size() const;  // |S|
    size_t component_size(int j) const { return components_[j].size(); }
    const std::vector<FieldElem>& component(int j) const { return components_[j]; }
    std::vector<FieldElem> point(size_t index) const;

  private:
    const Field* field_;
    std::vector<std::vector<FieldElem>> components_;
};

// Deterministic subgrid with the given per-variable sizes, drawn from the
// field with a seeded generator.
Grid random_subgrid(const Field& field, std::span<const int> sizes, uint64_t seed);

// Reduced Groebner basis { prod_j G_j(x_j)^{u_j} : u in B_J } of the ideal of
// polynomials whose J-indexed Hasse derivatives vanish on all of S. Valid for
// any monomial ordering; initial monomials are x^{u_j s_j}.
struct GroebnerBasis {
    std::vector<ExpVec> border;             // u, in graded-lex order
    std::vector<ExpVec> initial_exponents;  // u_j * s_j
    std::vector<MultiPoly> generators;
};

GroebnerBasis groebner_basis(const Grid& grid, const DecreasingSet& j_set);

// Monomials outside the initial ideal of I(S;J), sorted graded-lex. Their
// count is always |J| * |S|.
std::vector<ExpVec> footprint(const Grid& grid, const DecreasingSet& j_set);

// Remainder of multivariate Euclidean division by the Groebner basis:
// supported on footprint monomials, same Hasse jets on S for all orders in J,
// degree never increases, idempotent on footprint-supported input.
MultiPoly reduce(const MultiPoly& f, const GroebnerBasis& basis);
MultiPoly reduce(const MultiPoly& f, const Grid& grid, const DecreasingSet& j_set);

std::vector<FieldElem> hasse_jet(const MultiPoly& f, std::span<const FieldElem> point,
                                 const DecreasingSet& j_set);

}  // namespace mcode
