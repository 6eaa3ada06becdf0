#include "scalar.hpp"

namespace gal {

namespace {

std::uint64_t mulmod_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, so a*b < 2^62
}

std::uint64_t powmod_p(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_p(r, a, p);
        a = mulmod_p(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // deterministic Miller-Rabin for n < 3,215,031,751 with bases 2,3,5,7
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod_p(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_p(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Scalar::Scalar(FieldTag tag, long v) : tag_(tag), r_(0) {
    if (tag_.finite()) {
        long m = v % static_cast<long>(tag_.p);
        if (m < 0) m += tag_.p;
        r_ = static_cast<std::uint64_t>(m);
    } else {
        q_ = v;
    }
}

Scalar Scalar::from_mpz(FieldTag tag, const mpz_class& v) {
    if (tag.rational()) return Scalar(mpq_class(v));
    mpz_class m = v % tag.p;
    if (m < 0) m += tag.p;
    Scalar s(tag);
    s.r_ = m.get_ui();
    return s;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (a.tag_ != b.tag_)
        fail(ErrKind::Input, "field-tag mismatch: " + a.tag_.str() + " vs " + b.tag_.str());
}

Scalar Scalar::operator-() const {
    Scalar r(tag_);
    if (tag_.finite())
        r.r_ = r_ == 0 ? 0 : tag_.p - r_;
    else
        r.q_ = -q_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    Scalar r(a.tag_);
    if (a.tag_.finite())
        r.r_ = (a.r_ + b.r_) % a.tag_.p;
    else
        r.q_ = a.q_ + b.q_;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    Scalar r(a.tag_);
    if (a.tag_.finite())
        r.r_ = (a.r_ + a.tag_.p - b.r_) % a.tag_.p;
    else
        r.q_ = a.q_ - b.q_;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    Scalar r(a.tag_);
    if (a.tag_.finite())
        r.r_ = mulmod_p(a.r_, b.r_, a.tag_.p);
    else
        r.q_ = a.q_ * b.q_;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) fail(ErrKind::Input, "inversion of zero in " + tag_.str());
    Scalar r(tag_);
    if (tag_.finite()) {
        r.r_ = powmod_p(r_, tag_.p - 2, tag_.p);
    } else {
        r.q_ = 1 / q_;
    }
    return r;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar r = scalar_one(tag_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_.finite() ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::str() const {
    if (tag_.finite()) return std::to_string(r_);
    return q_.get_str();
}

}  // namespace gal
