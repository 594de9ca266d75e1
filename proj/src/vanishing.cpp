#include "mcode/vanishing.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "mcode/hermite.hpp"

namespace mcode {

namespace {

bool leq_coordinatewise(const ExpVec& a, const ExpVec& b) {
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

void sort_grlex(std::vector<ExpVec>& v) {
    std::sort(v.begin(), v.end(), GrlexLess{});
}

// Every exponent vector in the box [0, bound_1] x ... x [0, bound_m],
// enumerated into `out` by a simple odometer.
void enumerate_box(const std::vector<int>& bounds, std::vector<ExpVec>& out) {
    const size_t m = bounds.size();
    for (int b : bounds)
        if (b < 0) return;  // empty box
    ExpVec e(m, 0);
    while (true) {
        out.push_back(e);
        size_t j = 0;
        while (j < m && e[j] == bounds[j]) {
            e[j] = 0;
            ++j;
        }
        if (j == m) break;
        ++e[j];
    }
}

}  // namespace

DecreasingSet::DecreasingSet(int vars, std::vector<ExpVec> elements)
    : vars_(vars), elements_(std::move(elements)) {
    if (vars_ < 1) throw std::invalid_argument("decreasing set needs at least one variable");
    std::set<ExpVec> lookup;
    for (const ExpVec& e : elements_) {
        if (static_cast<int>(e.size()) != vars_)
            throw std::invalid_argument("decreasing set element has wrong length");
        for (int x : e)
            if (x < 0) throw std::invalid_argument("decreasing set element has negative entry");
        if (!lookup.insert(e).second)
            throw std::invalid_argument("decreasing set has duplicate elements");
    }
    // Downward closure: every lower neighbor of every element must be present.
    for (const ExpVec& e : elements_) {
        ExpVec below = e;
        for (int j = 0; j < vars_; ++j) {
            if (e[j] == 0) continue;
            --below[j];
            if (!lookup.count(below)) throw std::invalid_argument("set is not downward closed");
            ++below[j];
        }
    }
    sort_grlex(elements_);
}

DecreasingSet DecreasingSet::classical(int vars, int r) {
    if (vars < 1) throw std::invalid_argument("decreasing set needs at least one variable");
    if (r < 0) throw std::invalid_argument("multiplicity must be non-negative");
    std::vector<ExpVec> elems;
    if (r > 0) enumerate_box(std::vector<int>(vars, r - 1), elems);
    std::erase_if(elems, [r](const ExpVec& e) { return total_degree(e) >= r; });
    return DecreasingSet(vars, std::move(elems));
}

DecreasingSet DecreasingSet::box(const std::vector<int>& corner) {
    if (corner.empty()) throw std::invalid_argument("decreasing set needs at least one variable");
    std::vector<ExpVec> elems;
    enumerate_box(corner, elems);
    return DecreasingSet(static_cast<int>(corner.size()), std::move(elems));
}

bool DecreasingSet::contains(const ExpVec& e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e, GrlexLess{});
}

std::vector<ExpVec> DecreasingSet::border() const {
    // Candidates live in the box bounded by the componentwise maximum plus
    // one: a larger coordinate would leave a lower neighbor outside J.
    std::vector<int> bounds(vars_, 0);
    for (const ExpVec& e : elements_)
        for (int j = 0; j < vars_; ++j) bounds[j] = std::max(bounds[j], e[j] + 1);
    std::vector<ExpVec> candidates;
    enumerate_box(bounds, candidates);

    std::vector<ExpVec> result;
    for (const ExpVec& e : candidates) {
        if (contains(e)) continue;
        bool minimal = true;
        ExpVec below = e;
        for (int j = 0; j < vars_ && minimal; ++j) {
            if (e[j] == 0) continue;
            --below[j];
            minimal = contains(below);
            ++below[j];
        }
        if (minimal) result.push_back(e);
    }
    sort_grlex(result);
    return result;
}

Grid::Grid(const Field& field, std::vector<std::vector<FieldElem>> components)
    : field_(&field), components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("grid needs at least one component set");
    for (const auto& s : components_) {
        if (s.empty()) throw std::invalid_argument("grid component sets must be non-empty");
        std::set<FieldElem> seen(s.begin(), s.end());
        if (seen.size() != s.size())
            throw std::invalid_argument("grid component sets must be duplicate-free");
        for (FieldElem a : s)
            if (a.rep >= field.size())
                throw std::invalid_argument("grid element outside the field");
    }
}

Grid Grid::full(const Field& field, int vars) {
    std::vector<FieldElem> all;
    all.reserve(field.size());
    for (uint32_t i = 0; i < field.size(); ++i) all.push_back(field.element(i));
    return Grid(field, std::vector<std::vector<FieldElem>>(vars, all));
}

size_t Grid::size() const {
    size_t n = 1;
    for (const auto& s : components_) n *= s.size();
    return n;
}

std::vector<FieldElem> Grid::point(size_t index) const {
    std::vector<FieldElem> p(components_.size());
    for (size_t j = 0; j < components_.size(); ++j) {
        p[j] = components_[j][index % components_[j].size()];
        index /= components_[j].size();
    }
    return p;
}

Grid random_subgrid(const Field& field, std::span<const int> sizes, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<FieldElem>> components;
    for (int s : sizes) {
        if (s < 1 || static_cast<uint32_t>(s) > field.size())
            throw std::invalid_argument("subgrid component size out of range");
        std::vector<FieldElem> all;
        for (uint32_t i = 0; i < field.size(); ++i) all.push_back(field.element(i));
        // Hand-rolled Fisher-Yates: std::shuffle is implementation-defined,
        // and seeded grids should reproduce across platforms.
        for (size_t i = all.size(); i-- > 1;) std::swap(all[i], all[rng() % (i + 1)]);
        all.resize(s);
        components.push_back(std::move(all));
    }
    return Grid(field, std::move(components));
}

GroebnerBasis groebner_basis(const Grid& grid, const DecreasingSet& j_set) {
    if (grid.vars() != j_set.vars())
        throw std::invalid_argument("grid and derivative set have different variable counts");
    const Field& F = grid.field();
    const int m = grid.vars();

    std::vector<MultiPoly> axis_vanishing;
    axis_vanishing.reserve(m);
    for (int j = 0; j < m; ++j)
        axis_vanishing.push_back(embed_univariate(vanishing_poly(F, grid.component(j)), m, j));

    GroebnerBasis basis{j_set.border(), {}, {}};
    for (const ExpVec& u : basis.border) {
        MultiPoly g = MultiPoly::constant(F, m, F.one());
        ExpVec initial(m, 0);
        for (int j = 0; j < m; ++j) {
            if (u[j] > 0) g = g * pow(axis_vanishing[j], u[j]);
            initial[j] = u[j] * static_cast<int>(grid.component_size(j));
        }
        basis.initial_exponents.push_back(std::move(initial));
        basis.generators.push_back(std::move(g));
    }
    return basis;
}

std::vector<ExpVec> footprint(const Grid& grid, const DecreasingSet& j_set) {
    if (grid.vars() != j_set.vars())
        throw std::invalid_argument("grid and derivative set have different variable counts");
    const int m = grid.vars();
    const std::vector<ExpVec> border = j_set.border();

    // For each axis the border contains the pure power (max_j + 1) e_j, so
    // the footprint sits inside the box below those initials.
    std::vector<int> bounds(m, 0);
    for (const ExpVec& u : border)
        for (int j = 0; j < m; ++j)
            bounds[j] = std::max(bounds[j], u[j] * static_cast<int>(grid.component_size(j)) - 1);

    std::vector<ExpVec> box;
    enumerate_box(bounds, box);

    std::vector<ExpVec> result;
    for (const ExpVec& e : box) {
        bool inside = true;
        for (const ExpVec& u : border) {
            bool divisible = true;
            for (int j = 0; j < m; ++j)
                if (e[j] < u[j] * static_cast<int>(grid.component_size(j))) {
                    divisible = false;
                    break;
                }
            if (divisible) {
                inside = false;
                break;
            }
        }
        if (inside) result.push_back(e);
    }
    sort_grlex(result);
    return result;
}

MultiPoly reduce(const MultiPoly& f, const GroebnerBasis& basis) {
    MultiPoly remainder(f.field(), f.vars());
    MultiPoly work = f;
    ExpVec quotient_exp(f.vars());
    while (!work.is_zero()) {
        const ExpVec lead = work.leading_exponent();
        const FieldElem lead_coeff = work.leading_coeff();
        size_t divisor = basis.generators.size();
        for (size_t g = 0; g < basis.generators.size(); ++g)
            if (leq_coordinatewise(basis.initial_exponents[g], lead)) {
                divisor = g;
                break;
            }
        if (divisor == basis.generators.size()) {
            remainder.add_term(lead, lead_coeff);
            work.add_term(lead, f.field().neg(lead_coeff));
            continue;
        }
        for (int j = 0; j < f.vars(); ++j)
            quotient_exp[j] = lead[j] - basis.initial_exponents[divisor][j];
        // Generators are monic, so the cancelling multiple is just c * x^q * g.
        work -= basis.generators[divisor] *
                MultiPoly::monomial(f.field(), quotient_exp, lead_coeff);
    }
    return remainder;
}

MultiPoly reduce(const MultiPoly& f, const Grid& grid, const DecreasingSet& j_set) {
    return reduce(f, groebner_basis(grid, j_set));
}

std::vector<FieldElem> hasse_jet(const MultiPoly& f, std::span<const FieldElem> point,
                                 const DecreasingSet& j_set) {
    return hasse_jet(f, point, std::span<const ExpVec>(j_set.elements()));
}

}  // namespace mcode
