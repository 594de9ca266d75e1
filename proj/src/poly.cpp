#include "mcode/poly.hpp"

#include <mutex>
#include <stdexcept>

namespace mcode {

int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

std::strong_ordering monomial_compare(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("monomial_compare: mismatched variable counts");
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da <=> db;
    for (size_t j = a.size(); j-- > 0;)
        if (a[j] != b[j]) return a[j] <=> b[j];
    return std::strong_ordering::equal;
}

namespace {

// Pascal triangle mod p; the additive recurrence stays exact after reduction.
class PascalTable {
  public:
    explicit PascalTable(uint32_t p) : p_(p) { rows_.push_back({1 % p}); }

    uint32_t get(uint32_t n, uint32_t k) {
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            std::vector<uint32_t> row(prev.size() + 1, 1 % p_);
            for (size_t j = 1; j + 1 < row.size(); ++j) row[j] = (prev[j - 1] + prev[j]) % p_;
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

  private:
    uint32_t p_;
    std::vector<std::vector<uint32_t>> rows_;
};

uint32_t binom_mod_p(uint32_t n, uint32_t k, uint32_t p) {
    if (k > n) return 0;
    static std::mutex mutex;
    static std::map<uint32_t, PascalTable> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = tables.find(p);
    if (it == tables.end()) it = tables.emplace(p, PascalTable(p)).first;
    return it->second.get(n, k);
}

}  // namespace

FieldElem binomial_in_field(const Field& f, uint32_t n, uint32_t k) {
    return f.from_int(binom_mod_p(n, k, f.characteristic()));
}

MultiPoly::MultiPoly(const Field& field, int vars) : field_(&field), vars_(vars) {
    if (vars < 1) throw std::invalid_argument("polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(const Field& field, int vars, FieldElem c) {
    MultiPoly f(field, vars);
    f.add_term(ExpVec(vars, 0), c);
    return f;
}

MultiPoly MultiPoly::monomial(const Field& field, ExpVec exps, FieldElem c) {
    MultiPoly f(field, static_cast<int>(exps.size()));
    f.add_term(exps, c);
    return f;
}

MultiPoly MultiPoly::variable(const Field& field, int vars, int index) {
    if (index < 0 || index >= vars) throw std::out_of_range("variable index out of range");
    ExpVec e(vars, 0);
    e[index] = 1;
    return monomial(field, std::move(e), field.one());
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    bool any = false;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[var]);
        any = true;
    }
    return any ? d : -1;
}

FieldElem MultiPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
}

const ExpVec& MultiPoly::leading_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

FieldElem MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

void MultiPoly::add_term(const ExpVec& e, FieldElem c) {
    if (static_cast<int>(e.size()) != vars_)
        throw std::invalid_argument("exponent vector length must equal variable count");
    if (c == field_->zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == field_->zero()) terms_.erase(it);
    }
}

FieldElem MultiPoly::eval(std::span<const FieldElem> point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("evaluation point length must equal variable count");
    FieldElem acc = field_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElem term = c;
        for (int j = 0; j < vars_; ++j)
            if (e[j] > 0) term = field_->mul(term, field_->pow(point[j], e[j]));
        acc = field_->add(acc, term);
    }
    return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (vars_ != rhs.vars_ || !same_field(*field_, *rhs.field_))
        throw std::invalid_argument("polynomial arithmetic across different rings");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    if (vars_ != rhs.vars_ || !same_field(*field_, *rhs.field_))
        throw std::invalid_argument("polynomial arithmetic across different rings");
    for (const auto& [e, c] : rhs.terms_) add_term(e, field_->neg(c));
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*field_, vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, field_->neg(c));
    return out;
}

MultiPoly MultiPoly::scaled(FieldElem c) const {
    MultiPoly out(*field_, vars_);
    if (c == field_->zero()) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, field_->mul(coeff, c));
    return out;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    if (lhs.vars_ != rhs.vars_ || !same_field(*lhs.field_, *rhs.field_))
        throw std::invalid_argument("polynomial arithmetic across different rings");
    MultiPoly out(*lhs.field_, lhs.vars_);
    ExpVec e(lhs.vars_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int j = 0; j < lhs.vars_; ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, lhs.field_->mul(ca, cb));
        }
    }
    return out;
}

MultiPoly pow(const MultiPoly& f, int n) {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly result = MultiPoly::constant(f.field(), f.vars(), f.field().one());
    for (int i = 0; i < n; ++i) result = result * f;
    return result;
}

MultiPoly embed_univariate(const MultiPoly& f, int vars, int var) {
    if (f.vars() != 1) throw std::invalid_argument("embed_univariate expects one variable");
    if (var < 0 || var >= vars) throw std::out_of_range("target variable index out of range");
    MultiPoly out(f.field(), vars);
    ExpVec e(vars, 0);
    for (const auto& [exp, c] : f.terms()) {
        e[var] = exp[0];
        out.add_term(e, c);
    }
    return out;
}

MultiPoly hasse_derivative(const MultiPoly& f, const ExpVec& order) {
    if (static_cast<int>(order.size()) != f.vars())
        throw std::invalid_argument("derivative order length must equal variable count");
    const Field& F = f.field();
    MultiPoly out(F, f.vars());
    ExpVec shifted(f.vars());
    for (const auto& [e, c] : f.terms()) {
        FieldElem factor = F.one();
        bool ok = true;
        for (int j = 0; j < f.vars() && ok; ++j) {
            if (e[j] < order[j]) {
                ok = false;
                break;
            }
            shifted[j] = e[j] - order[j];
            factor = F.mul(factor, binomial_in_field(F, e[j], order[j]));
        }
        if (ok) out.add_term(shifted, F.mul(c, factor));
    }
    return out;
}

std::vector<FieldElem> hasse_jet(const MultiPoly& f, std::span<const FieldElem> point,
                                 std::span<const ExpVec> orders) {
    std::vector<FieldElem> jet;
    jet.reserve(orders.size());
    for (const ExpVec& i : orders) jet.push_back(hasse_derivative(f, i).eval(point));
    return jet;
}

}  // namespace mcode
