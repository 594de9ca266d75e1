#include "mcode/jobs.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "mcode/io.hpp"

namespace mcode {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

Grid make_grid(const JobSpec& job, const Field& field) {
    if (job.grid == "full") return Grid::full(field, job.m);
    if (job.grid.rfind("random:", 0) == 0) {
        const std::vector<int> sizes = parse_int_list(job.grid.substr(7));
        if (static_cast<int>(sizes.size()) != job.m)
            throw std::invalid_argument("random grid needs one size per variable");
        return random_subgrid(field, sizes, job.seed);
    }
    return grid_from_json(load_json_file(job.grid), field);
}

DecreasingSet make_derivative_set(const JobSpec& job) {
    if (job.j_descriptor == "classical") return DecreasingSet::classical(job.m, job.r);
    if (job.j_descriptor.rfind("box:", 0) == 0) {
        const std::vector<int> corner = parse_int_list(job.j_descriptor.substr(4));
        if (static_cast<int>(corner.size()) != job.m)
            throw std::invalid_argument("box descriptor needs one entry per variable");
        return DecreasingSet::box(corner);
    }
    return decreasing_set_from_json(load_json_file(job.j_descriptor));
}

void emit(const JobSpec& job, const std::string& text, std::ostream& out) {
    if (job.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(job.out_path);
    if (!file) throw std::invalid_argument("cannot write file: " + job.out_path);
    file << text;
}

std::string render_matrix(const JobSpec& job, const CodeMatrix& code,
                          const std::vector<MultiPoly>* basis) {
    if (job.format == "json") {
        json j = to_json(code);
        if (basis) {
            json polys = json::array();
            for (const MultiPoly& g : *basis) polys.push_back(poly_to_string(g));
            j["basis"] = polys;
        }
        return j.dump(2) + "\n";
    }
    std::string text;
    if (basis) {
        for (const MultiPoly& g : *basis) text += "# basis: " + poly_to_string(g) + "\n";
    }
    text += job.format == "csv" ? code_matrix_csv(code) : code_matrix_pretty(code);
    return text;
}

// Degree bound at which this code saturates to the total space.
long long saturation_degree(const Grid& grid, const DecreasingSet& j_set) {
    long long top = 0;
    for (const ExpVec& e : footprint(grid, j_set))
        top = std::max(top, static_cast<long long>(total_degree(e)));
    return top + 1;
}

std::optional<long long> closed_formula_value(const Grid& grid, const DecreasingSet& j_set,
                                              long long k) {
    // The closed formula covers the box set with equal component sizes.
    const size_t s = grid.component_size(0);
    for (int j = 1; j < grid.vars(); ++j)
        if (grid.component_size(j) != s) return std::nullopt;
    const std::vector<int> corner(grid.vars(), j_set.elements().back()[0]);
    if (!(j_set == DecreasingSet::box(corner))) return std::nullopt;
    const int r = corner[0] + 1;
    const long long cap = static_cast<long long>(grid.vars()) * (r * static_cast<long long>(s) - 1);
    if (k > cap) return std::nullopt;
    return dimension_formula(grid.vars(), r, static_cast<int>(s), k);
}

int run_gen(const JobSpec& job, const Field& field, std::ostream& out, std::ostream& err) {
    const Grid grid = make_grid(job, field);
    const DecreasingSet j_set = make_derivative_set(job);
    if (job.k >= saturation_degree(grid, j_set))
        err << "warning: degree bound " << job.k
            << " saturates the code; emitting the total space\n";
    emit(job, render_matrix(job, generator_matrix(grid, j_set, job.k), nullptr), out);
    return 0;
}

int run_dual(const JobSpec& job, const Field& field, std::ostream& out) {
    if (job.j_descriptor != "classical")
        throw std::invalid_argument("dual construction applies to classical multiplicity sets");
    const Grid grid = make_grid(job, field);
    const CodeMatrix h = parity_check_matrix(grid, job.r, job.k);
    if (job.show_basis) {
        const DualBasis basis = dual_basis_polys(grid, job.r, job.k);
        emit(job, render_matrix(job, h, &basis.selected), out);
    } else {
        emit(job, render_matrix(job, h, nullptr), out);
    }
    return 0;
}

int run_dim(const JobSpec& job, const Field& field, std::ostream& out) {
    const Grid grid = make_grid(job, field);
    const DecreasingSet j_set = make_derivative_set(job);
    const size_t dim = dimension(grid, j_set, job.k);
    const std::optional<long long> formula = closed_formula_value(grid, j_set, job.k);
    if (job.format == "json") {
        json j{{"dimension", dim}};
        if (formula) j["closed_formula"] = *formula;
        emit(job, j.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << dim << "\n";
        if (formula)
            os << "closed formula: " << *formula
               << (static_cast<long long>(dim) == *formula ? " (agrees)" : " (MISMATCH)") << "\n";
        emit(job, os.str(), out);
    }
    if (formula && static_cast<long long>(dim) != *formula) return 1;
    return 0;
}

int run_check(const JobSpec& job, const Field& field, std::ostream& out) {
    if (job.j_descriptor != "classical")
        throw std::invalid_argument("check applies to classical multiplicity sets");
    const Grid grid = make_grid(job, field);
    const CodeMatrix gen = generator_matrix(grid, DecreasingSet::classical(job.m, job.r), job.k);
    const CodeMatrix h = job.h_path.empty()
                             ? parity_check_matrix(grid, job.r, job.k)
                             : code_matrix_from_json(load_json_file(job.h_path), field);
    if (h.mat.cols() != gen.mat.cols())
        throw std::invalid_argument("parity-check matrix has the wrong length");

    const bool orthogonal = (gen.mat * h.mat.transpose()).is_zero();
    const bool complementary = rank(gen.mat) + rank(h.mat) == gen.mat.cols();
    out << "G H^T = 0: " << (orthogonal ? "yes" : "NO") << "\n";
    out << "rank(G) + rank(H) = length: " << (complementary ? "yes" : "NO") << "\n";
    return orthogonal && complementary ? 0 : 1;
}

void print_bounds(const Grid& grid, int r, long long k, std::ostream& os) {
    const size_t s = grid.component_size(0);
    for (int j = 1; j < grid.vars(); ++j)
        if (grid.component_size(j) != s)
            throw std::invalid_argument("distance bounds require equal component sizes");
    const Rational primal = sz_primal_bound(static_cast<int>(s), grid.vars(), r, k);
    const Rational dual = sz_dual_bound(static_cast<int>(s), grid.vars(), r, k);
    os << "primal distance bound: " << primal.num << "/" << primal.den << "\n";
    os << "dual distance bound: " << dual.num << "/" << dual.den << "\n";
}

int run_distance(const JobSpec& job, const Field& field, std::ostream& out) {
    if (job.j_descriptor != "classical")
        throw std::invalid_argument("distance applies to classical multiplicity sets");
    const Grid grid = make_grid(job, field);
    std::ostringstream os;
    const CodeMatrix gen = generator_matrix(grid, DecreasingSet::classical(job.m, job.r), job.k);
    if (distance_searchable(gen, job.cap))
        os << "primal folded distance: " << min_folded_distance(gen, job.cap) << "\n";
    else
        os << "primal folded distance: not searched (cap exceeded)\n";
    const CodeMatrix h = parity_check_matrix(grid, job.r, job.k);
    if (h.mat.rows() == 0)
        os << "dual folded distance: dual is the zero code\n";
    else if (distance_searchable(h, job.cap))
        os << "dual folded distance: " << min_folded_distance(h, job.cap) << "\n";
    else
        os << "dual folded distance: not searched (cap exceeded)\n";
    print_bounds(grid, job.r, job.k, os);
    emit(job, os.str(), out);
    return 0;
}

int run_bounds(const JobSpec& job, const Field& field, std::ostream& out) {
    const Grid grid = make_grid(job, field);
    std::ostringstream os;
    print_bounds(grid, job.r, job.k, os);
    emit(job, os.str(), out);
    return 0;
}

}  // namespace

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t e) {
    static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},           {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},     {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{3, 2}, {1, 0, 1}},           {{3, 3}, {1, 2, 0, 1}},
        {{5, 2}, {2, 0, 1}},           {{7, 2}, {1, 0, 1}},
    };
    const auto it = table.find({p, e});
    if (it == table.end())
        throw std::invalid_argument("no default modulus for this field; supply one");
    return it->second;
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        FieldSpec spec = job.field;
        if (spec.e > 1 && spec.modulus.empty()) spec.modulus = default_modulus(spec.p, spec.e);
        const Field field(spec);
        switch (job.command) {
            case JobSpec::Command::Gen:
                return run_gen(job, field, out, err);
            case JobSpec::Command::Dual:
                return run_dual(job, field, out);
            case JobSpec::Command::Dim:
                return run_dim(job, field, out);
            case JobSpec::Command::Check:
                return run_check(job, field, out);
            case JobSpec::Command::Distance:
                return run_distance(job, field, out);
            case JobSpec::Command::Bounds:
                return run_bounds(job, field, out);
        }
        throw std::invalid_argument("unknown command");
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace mcode
