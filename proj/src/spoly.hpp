#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace gal {

// Dense univariate polynomial over Q or GF(p), low degree first, trimmed so the
// leading coefficient is nonzero (the zero polynomial has an empty vector).
class DensePoly {
public:
    explicit DensePoly(FieldTag tag) : tag_(tag) {}
    DensePoly(FieldTag tag, std::vector<Scalar> coeffs);
    static DensePoly from_ints(FieldTag tag, const std::vector<long>& coeffs);
    static DensePoly x(FieldTag tag);
    static DensePoly constant(Scalar s);

    FieldTag tag() const { return tag_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const;
    Scalar leading() const;
    bool is_monic() const;

    DensePoly operator-() const;
    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    DensePoly scaled(const Scalar& s) const;
    DensePoly monic() const;

    friend bool operator==(const DensePoly& a, const DensePoly& b);
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    Scalar eval(const Scalar& x) const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    FieldTag tag_;
    std::vector<Scalar> c_;
};

// divrem: a = q*b + r with deg r < deg b; throws on zero divisor.
std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b);
DensePoly poly_mod(const DensePoly& a, const DensePoly& b);
// monic gcd
DensePoly poly_gcd(DensePoly a, DensePoly b);
DensePoly derivative(const DensePoly& f);
DensePoly powmod(const DensePoly& base, const mpz_class& e, const DensePoly& mod);
// f(x + c)
DensePoly shift_poly(const DensePoly& f, const Scalar& c);

// Monic product of the distinct irreducible factors of f.  In characteristic p
// the gcd(f, f') = f case is handled by p-th-root descent.
DensePoly squarefree_part(const DensePoly& f);

// Irreducible factorization over GF(p): squarefree split, distinct-degree split,
// and randomized equal-degree split.  Factors are monic, sorted; the product of
// factors^multiplicity times the leading unit reproduces f.
std::vector<std::pair<DensePoly, int>> factor_finite(const DensePoly& f, std::mt19937_64& rng);

enum class Irred { Irreducible, Reducible, Unknown };

struct IrredVerdict {
    Irred status = Irred::Unknown;
    DensePoly witness;  // a proper factor when status == Reducible
    std::string method;
    IrredVerdict() : witness(FieldTag{0}) {}
};

// Decisive over GF(p).  Over Q runs a battery: rational-root test, Eisenstein
// on small shifts, degree-set intersection modulo good primes, and a bounded
// search for small-degree monic integer factors.
IrredVerdict classify_irreducible(const DensePoly& f);

}  // namespace gal
