#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mcode {

// Element of a finite field in canonical form, packed into one integer.
// For GF(p) this is the value in [0,p); for GF(p^e) it is the base-p
// packing c0 + c1*p + ... + c_{e-1}*p^{e-1} of the coefficient vector of
// the residue modulo the field's defining polynomial. Two elements are
// equal exactly when their packed representatives are equal.
struct FieldElem {
    uint32_t rep = 0;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

struct FieldSpec {
    uint32_t p = 2;
    uint32_t e = 1;
    std::vector<uint32_t> modulus;  // coefficients c0..ce, monic; required iff e > 1

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// GF(p) or GF(p^e) with a user-supplied irreducible modulus. Immutable after
// construction; every operation is pure, so a single Field may be shared
// freely across threads. Sizes are capped at p^e <= 2^16.
class Field {
  public:
    explicit Field(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return e_; }
    uint32_t size() const { return q_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }

    // i-th element of the canonical enumeration, i in [0, size()).
    FieldElem element(uint32_t index) const;
    // v mod p, embedded in the prime subfield.
    FieldElem from_int(int64_t v) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inverse(FieldElem a) const;  // throws std::domain_error on zero
    FieldElem pow(FieldElem a, uint64_t n) const;  // 0^0 = 1

    std::string to_string(FieldElem a) const;

    friend bool operator==(const Field& lhs, const Field& rhs) { return lhs.spec_ == rhs.spec_; }

  private:
    FieldSpec spec_;
    uint32_t p_ = 2;
    uint32_t e_ = 1;
    uint32_t q_ = 2;
};

// True when both polynomials/matrices built over these handles may be mixed.
inline bool same_field(const Field& a, const Field& b) { return &a == &b || a == b; }

bool is_prime(uint32_t n);

}  // namespace mcode
