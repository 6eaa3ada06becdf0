#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace gal {

// Base-field descriptor: p == 0 is the rationals, otherwise the prime field GF(p).
struct FieldTag {
    std::uint32_t p = 0;

    bool rational() const { return p == 0; }
    bool finite() const { return p != 0; }

    friend bool operator==(FieldTag a, FieldTag b) { return a.p == b.p; }
    friend bool operator!=(FieldTag a, FieldTag b) { return a.p != b.p; }

    std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

bool is_prime_u32(std::uint32_t n);

// Exact element of Q or GF(p).  Rational values are canonical (lowest terms,
// positive denominator); residues live in [0, p) with p < 2^31 so products fit
// in unsigned 64-bit intermediates.
class Scalar {
public:
    Scalar() : tag_{0}, r_(0) {}  // rational zero
    explicit Scalar(FieldTag tag) : tag_(tag), r_(0) {}
    Scalar(FieldTag tag, long v);
    Scalar(mpq_class q) : tag_{0}, q_(std::move(q)), r_(0) { q_.canonicalize(); }
    static Scalar from_mpz(FieldTag tag, const mpz_class& v);

    FieldTag tag() const { return tag_; }
    bool is_zero() const { return tag_.finite() ? r_ == 0 : q_ == 0; }
    bool is_one() const { return tag_.finite() ? r_ == 1 : q_ == 1; }

    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar inv() const;
    Scalar pow(unsigned long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    static void check_same(const Scalar& a, const Scalar& b);
    FieldTag tag_;
    mpq_class q_;
    std::uint64_t r_;
};

inline Scalar scalar_zero(FieldTag tag) { return Scalar(tag); }
inline Scalar scalar_one(FieldTag tag) { return Scalar(tag, 1); }

}  // namespace gal
