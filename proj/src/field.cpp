#include "mcode/field.hpp"

#include <array>
#include <stdexcept>

namespace mcode {

namespace {

constexpr uint32_t kMaxFieldSize = 1u << 16;
constexpr uint32_t kMaxExtensionDegree = 16;  // p >= 2 forces e <= 16 under the size cap

// Dense univariate polynomials over GF(p), little-endian coefficients.
using PPoly = std::vector<uint32_t>;

void strip(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly mul_mod(const PPoly& a, const PPoly& b, const PPoly& modulus, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    const size_t e = modulus.size() - 1;  // modulus is monic of degree e
    for (size_t i = prod.size(); i-- > e;) {
        const uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < e; ++j)
            prod[i - e + j] =
                static_cast<uint32_t>((prod[i - e + j] + uint64_t(p - modulus[j]) * c) % p);
    }
    prod.resize(e);
    strip(prod);
    return prod;
}

PPoly pow_mod(PPoly base, uint64_t n, const PPoly& modulus, uint32_t p) {
    PPoly result{1};
    while (n > 0) {
        if (n & 1) result = mul_mod(result, base, modulus, p);
        base = mul_mod(base, base, modulus, p);
        n >>= 1;
    }
    return result;
}

PPoly poly_rem(PPoly a, const PPoly& b, uint32_t p, uint32_t lead_inv) {
    strip(a);
    while (a.size() >= b.size()) {
        const uint64_t factor = uint64_t(a.back()) * lead_inv % p;
        const size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<uint32_t>((a[shift + j] + (p - 1) * factor % p * b[j]) % p);
        strip(a);
    }
    return a;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
    // p is prime and a != 0
    uint64_t result = 1, base = a, n = p - 2;
    while (n > 0) {
        if (n & 1) result = result * base % p;
        base = base * base % p;
        n >>= 1;
    }
    return static_cast<uint32_t>(result);
}

PPoly poly_gcd(PPoly a, PPoly b, uint32_t p) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        PPoly r = poly_rem(a, b, p, inv_mod_p(b.back(), p));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

uint32_t eval_mod_p(const PPoly& f, uint32_t x, uint32_t p) {
    uint64_t acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return static_cast<uint32_t>(acc);
}

bool is_irreducible(const PPoly& f, uint32_t p) {
    const size_t e = f.size() - 1;
    if (e <= 3) {
        // A quadratic or cubic is reducible exactly when it has a root.
        for (uint32_t a = 0; a < p; ++a)
            if (eval_mod_p(f, a, p) == 0) return false;
        return true;
    }
    // No irreducible factor of degree <= e/2: gcd(f, x^(p^i) - x) must be
    // constant for every i up to e/2.
    for (size_t i = 1; 2 * i <= e; ++i) {
        PPoly t{0, 1};  // x
        for (size_t s = 0; s < i; ++s) t = pow_mod(t, p, f, p);
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;  // t = x^(p^i) - x
        strip(t);
        PPoly g = poly_gcd(f, t, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; uint64_t(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field::Field(const FieldSpec& spec) : spec_(spec), p_(spec.p), e_(spec.e) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (e_ < 1) throw std::invalid_argument("extension degree must be at least 1");
    if (e_ > kMaxExtensionDegree) throw std::invalid_argument("field size exceeds 2^16");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > kMaxFieldSize) throw std::invalid_argument("field size exceeds 2^16");
    }
    q_ = static_cast<uint32_t>(q);
    if (e_ == 1) {
        if (!spec.modulus.empty())
            throw std::invalid_argument("modulus only applies to extension fields");
        return;
    }
    if (spec.modulus.size() != e_ + 1)
        throw std::invalid_argument("extension field requires a monic modulus of degree e");
    if (spec.modulus.back() % p_ != 1) throw std::invalid_argument("modulus must be monic");
    for (uint32_t c : spec.modulus)
        if (c >= p_) throw std::invalid_argument("modulus coefficients must lie in [0,p)");
    if (!is_irreducible(spec.modulus, p_))
        throw std::invalid_argument("modulus is reducible over GF(p)");
}

FieldElem Field::element(uint32_t index) const {
    if (index >= q_) throw std::out_of_range("element index exceeds field size");
    return {index};
}

FieldElem Field::from_int(int64_t v) const {
    int64_t r = v % p_;
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r)};
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    if (e_ == 1) return {(a.rep + b.rep) % p_};
    uint32_t out = 0, scale = 1, x = a.rep, y = b.rep;
    for (uint32_t i = 0; i < e_; ++i) {
        out += (x % p_ + y % p_) % p_ * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElem Field::neg(FieldElem a) const {
    if (e_ == 1) return {(p_ - a.rep) % p_};
    uint32_t out = 0, scale = 1, x = a.rep;
    for (uint32_t i = 0; i < e_; ++i) {
        out += (p_ - x % p_) % p_ * scale;
        x /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    if (e_ == 1) return {static_cast<uint32_t>(uint64_t(a.rep) * b.rep % p_)};
    std::array<uint32_t, 2 * kMaxExtensionDegree> prod{};
    std::array<uint32_t, kMaxExtensionDegree> da{}, db{};
    uint32_t x = a.rep, y = b.rep;
    for (uint32_t i = 0; i < e_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    for (uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + uint64_t(da[i]) * db[j]) % p_);
    }
    const auto& mod = spec_.modulus;
    for (uint32_t i = 2 * e_ - 2; i >= e_ && i < 2 * e_; --i) {
        const uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (uint32_t j = 0; j < e_; ++j)
            prod[i - e_ + j] =
                static_cast<uint32_t>((prod[i - e_ + j] + uint64_t(p_ - mod[j]) * c) % p_);
    }
    uint32_t out = 0, scale = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        out += prod[i] * scale;
        scale *= p_;
    }
    return {out};
}

FieldElem Field::pow(FieldElem a, uint64_t n) const {
    FieldElem result = one();
    FieldElem base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

FieldElem Field::inverse(FieldElem a) const {
    if (a == zero()) throw std::domain_error("division by zero in finite field");
    return pow(a, q_ - 2);
}

std::string Field::to_string(FieldElem a) const { return std::to_string(a.rep); }

}  // namespace mcode
