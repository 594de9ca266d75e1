#include "mcode/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mcode {

using nlohmann::json;

json to_json(const FieldSpec& spec) {
    json j{{"p", spec.p}, {"e", spec.e}};
    j["modulus"] = spec.modulus;
    return j;
}

FieldSpec field_spec_from_json(const json& j) {
    FieldSpec spec;
    spec.p = j.at("p").get<uint32_t>();
    spec.e = j.value("e", 1u);
    if (j.contains("modulus")) spec.modulus = j["modulus"].get<std::vector<uint32_t>>();
    return spec;
}

json to_json(const DecreasingSet& set) {
    json elems = json::array();
    for (const ExpVec& e : set.elements()) elems.push_back(e);
    return {{"m", set.vars()}, {"elements", elems}};
}

DecreasingSet decreasing_set_from_json(const json& j) {
    const int m = j.at("m").get<int>();
    std::vector<ExpVec> elems;
    for (const auto& e : j.at("elements")) elems.push_back(e.get<ExpVec>());
    return DecreasingSet(m, std::move(elems));
}

json to_json(const Grid& grid) {
    json sets = json::array();
    for (int j = 0; j < grid.vars(); ++j) {
        json component = json::array();
        for (FieldElem a : grid.component(j)) component.push_back(a.rep);
        sets.push_back(component);
    }
    return {{"field", to_json(grid.field().spec())}, {"sets", sets}};
}

Grid grid_from_json(const json& j, const Field& field) {
    if (field_spec_from_json(j.at("field")) != field.spec())
        throw std::invalid_argument("grid file field does not match the requested field");
    std::vector<std::vector<FieldElem>> components;
    for (const auto& set : j.at("sets")) {
        std::vector<FieldElem> component;
        for (const auto& v : set) component.push_back(field.element(v.get<uint32_t>()));
        components.push_back(std::move(component));
    }
    return Grid(field, std::move(components));
}

json to_json(const CodeMatrix& code) {
    json rows = json::array();
    for (size_t i = 0; i < code.mat.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < code.mat.cols(); ++j) row.push_back(code.mat(i, j).rep);
        rows.push_back(row);
    }
    return {{"field", to_json(code.mat.field().spec())},
            {"block_width", code.block_width},
            {"columns", code.mat.cols()},
            {"rows", rows}};
}

CodeMatrix code_matrix_from_json(const json& j, const Field& field) {
    if (field_spec_from_json(j.at("field")) != field.spec())
        throw std::invalid_argument("matrix file field does not match the requested field");
    const size_t block_width = j.at("block_width").get<size_t>();
    const size_t cols = j.at("columns").get<size_t>();
    Matrix mat(field, 0, cols);
    std::vector<FieldElem> row(cols);
    for (const auto& jrow : j.at("rows")) {
        if (jrow.size() != cols) throw std::invalid_argument("matrix row has wrong length");
        for (size_t i = 0; i < cols; ++i) row[i] = field.element(jrow[i].get<uint32_t>());
        mat.append_row(row);
    }
    return {std::move(mat), block_width};
}

namespace {

void write_rows(const CodeMatrix& code, std::ostream& os, const char* entry_sep,
                const char* block_sep, const char* row_open, const char* row_close) {
    for (size_t i = 0; i < code.mat.rows(); ++i) {
        os << row_open;
        for (size_t j = 0; j < code.mat.cols(); ++j) {
            if (j > 0) os << (j % code.block_width == 0 ? block_sep : entry_sep);
            os << code.mat(i, j).rep;
        }
        os << row_close << '\n';
    }
}

}  // namespace

std::string code_matrix_csv(const CodeMatrix& code) {
    std::ostringstream os;
    write_rows(code, os, ",", "|", "", "");
    return os.str();
}

std::string code_matrix_pretty(const CodeMatrix& code) {
    std::ostringstream os;
    write_rows(code, os, " ", " | ", "[ ", " ]");
    return os.str();
}

namespace {

std::string var_name(int vars, int index) {
    if (vars <= 3) {
        const char* names[] = {"x", "y", "z"};
        return names[index];
    }
    return "x" + std::to_string(index + 1);
}

struct PolyParser {
    const Field& field;
    int vars;
    const std::string& text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool consume(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long parse_int() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in polynomial text");
        return std::stoll(text.substr(start, pos - start));
    }

    int parse_var() {
        skip_space();
        if (pos >= text.size()) throw std::invalid_argument("expected variable");
        const char c = text[pos];
        if (c == 'y' && vars <= 3) {
            ++pos;
            return 1;
        }
        if (c == 'z' && vars <= 3) {
            ++pos;
            return 2;
        }
        if (c != 'x') throw std::invalid_argument("expected variable in polynomial text");
        ++pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const int index = static_cast<int>(parse_int()) - 1;
            if (index < 0 || index >= vars) throw std::invalid_argument("variable index out of range");
            return index;
        }
        return 0;
    }

    // Prime fields read coefficients as integers mod p; extension fields read
    // packed canonical representatives in [0, p^e).
    FieldElem parse_coeff() {
        const long long v = parse_int();
        if (field.degree() == 1) return field.from_int(v);
        if (v < 0 || static_cast<uint64_t>(v) >= field.size())
            throw std::invalid_argument("coefficient representative outside the field");
        return field.element(static_cast<uint32_t>(v));
    }

    void parse_term(MultiPoly& acc) {
        FieldElem coeff = field.one();
        ExpVec exps(vars, 0);
        bool first = true;
        while (true) {
            skip_space();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff = field.mul(coeff, parse_coeff());
            } else {
                const int v = parse_var();
                int e = 1;
                if (consume('^')) e = static_cast<int>(parse_int());
                exps[v] += e;
            }
            first = false;
            if (!consume('*')) break;
        }
        if (first) throw std::invalid_argument("empty term in polynomial text");
        acc.add_term(exps, coeff);
    }

    MultiPoly parse() {
        MultiPoly acc(field, vars);
        skip_space();
        if (pos >= text.size()) throw std::invalid_argument("empty polynomial text");
        parse_term(acc);
        while (consume('+')) parse_term(acc);
        skip_space();
        if (pos != text.size()) throw std::invalid_argument("trailing characters in polynomial text");
        return acc;
    }
};

}  // namespace

std::string poly_to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest term first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        const bool has_vars = total_degree(e) > 0;
        const bool unit = c == f.field().one();
        if (!unit || !has_vars) os << c.rep;
        bool star = !unit || !has_vars;
        for (int j = 0; j < f.vars(); ++j) {
            if (e[j] == 0) continue;
            if (star) os << "*";
            star = true;
            os << var_name(f.vars(), j);
            if (e[j] > 1) os << "^" << e[j];
        }
    }
    return os.str();
}

MultiPoly poly_from_string(const Field& field, int vars, const std::string& text) {
    PolyParser parser{field, vars, text};
    return parser.parse();
}

json to_json(const MultiPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"coeff", c.rep}, {"exps", e}});
    return terms;
}

MultiPoly poly_from_json(const json& j, const Field& field, int vars) {
    MultiPoly out(field, vars);
    for (const auto& term : j)
        out.add_term(term.at("exps").get<ExpVec>(),
                     field.element(term.at("coeff").get<uint32_t>()));
    return out;
}

}  // namespace mcode
