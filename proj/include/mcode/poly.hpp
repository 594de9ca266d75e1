#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "mcode/field.hpp"

namespace mcode {

// Exponent vector (i_1, ..., i_m) of a monomial x_1^{i_1} ... x_m^{i_m}.
using ExpVec = std::vector<int>;

int total_degree(const ExpVec& e);

// Graded lexicographic order: first by total degree, ties broken by scanning
// exponents from the last coordinate down to the first; the vector with the
// smaller exponent at the first differing coordinate is the smaller monomial.
// For m = 2 this sorts (0,0) < (1,0) < (0,1) < (2,0) < (1,1) < (0,2) < ...
std::strong_ordering monomial_compare(const ExpVec& a, const ExpVec& b);

struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return monomial_compare(a, b) == std::strong_ordering::less;
    }
};

// Binomial coefficient reduced into the field, built by the Pascal recurrence
// (rows are cached per characteristic and grown on demand).
FieldElem binomial_in_field(const Field& f, uint32_t n, uint32_t k);

// Sparse multivariate polynomial over a fixed field: a map from exponent
// vectors to nonzero coefficients. The zero polynomial has an empty map, so
// equality of polynomials is equality of maps.
class MultiPoly {
  public:
    using TermMap = std::map<ExpVec, FieldElem, GrlexLess>;

    MultiPoly(const Field& field, int vars);
    static MultiPoly constant(const Field& field, int vars, FieldElem c);
    static MultiPoly monomial(const Field& field, ExpVec exps, FieldElem c);
    static MultiPoly variable(const Field& field, int vars, int index);

    const Field& field() const { return *field_; }
    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;
    FieldElem coeff(const ExpVec& e) const;
    const TermMap& terms() const { return terms_; }
    const ExpVec& leading_exponent() const;  // graded-lex initial; throws on zero
    FieldElem leading_coeff() const;

    void add_term(const ExpVec& e, FieldElem c);

    FieldElem eval(std::span<const FieldElem> point) const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator-() const;
    MultiPoly scaled(FieldElem c) const;

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
        return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
    }

  private:
    const Field* field_;
    int vars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& f, int n);

// Lift a univariate polynomial onto axis `var` of an m-variate ring.
MultiPoly embed_univariate(const MultiPoly& f, int vars, int var);

// i-th Hasse derivative: Coeff(f^(i), x^j) = binom(j+i, i) Coeff(f, x^{j+i}),
// equivalently the coefficient of y^i in f(x+y).
MultiPoly hasse_derivative(const MultiPoly& f, const ExpVec& order);

// (f^(i)(a))_i over the given derivative orders, in the order supplied.
std::vector<FieldElem> hasse_jet(const MultiPoly& f, std::span<const FieldElem> point,
                                 std::span<const ExpVec> orders);

}  // namespace mcode
