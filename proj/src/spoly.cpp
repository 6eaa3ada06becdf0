#include "spoly.hpp"

#include <algorithm>
#include <bitset>

namespace gal {

DensePoly::DensePoly(FieldTag tag, std::vector<Scalar> coeffs) : tag_(tag), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (s.tag() != tag_) fail(ErrKind::Input, "coefficient field-tag mismatch");
    trim();
}

DensePoly DensePoly::from_ints(FieldTag tag, const std::vector<long>& coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(tag, v);
    return DensePoly(tag, std::move(c));
}

DensePoly DensePoly::x(FieldTag tag) { return from_ints(tag, {0, 1}); }

DensePoly DensePoly::constant(Scalar s) {
    DensePoly r(s.tag());
    if (!s.is_zero()) r.c_.push_back(std::move(s));
    return r;
}

void DensePoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar DensePoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return scalar_zero(tag_);
    return c_[i];
}

Scalar DensePoly::leading() const {
    if (c_.empty()) return scalar_zero(tag_);
    return c_.back();
}

bool DensePoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

DensePoly DensePoly::operator-() const {
    DensePoly r(tag_);
    r.c_.reserve(c_.size());
    for (const auto& s : c_) r.c_.push_back(-s);
    return r;
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    if (a.tag_ != b.tag_) fail(ErrKind::Input, "field-tag mismatch in polynomial addition");
    DensePoly r(a.tag_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), scalar_zero(a.tag_));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.tag_ != b.tag_) fail(ErrKind::Input, "field-tag mismatch in polynomial product");
    DensePoly r(a.tag_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, scalar_zero(a.tag_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

DensePoly DensePoly::scaled(const Scalar& s) const {
    DensePoly r(tag_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& ci : c_) r.c_.push_back(ci * s);
    return r;
}

DensePoly DensePoly::monic() const {
    if (is_zero()) fail(ErrKind::Input, "monic() of zero polynomial");
    return scaled(leading().inv());
}

bool operator==(const DensePoly& a, const DensePoly& b) {
    if (a.tag_ != b.tag_ || a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Scalar DensePoly::eval(const Scalar& x) const {
    Scalar r = scalar_zero(tag_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string DensePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Scalar ci = coeff(i);
        if (ci.is_zero()) continue;
        std::string cs = ci.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) cs = cs.substr(1);
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b) {
    if (a.tag() != b.tag()) fail(ErrKind::Input, "field-tag mismatch in division");
    if (b.is_zero()) fail(ErrKind::Input, "division by zero polynomial");
    std::vector<Scalar> rc(a.coeffs());
    int db = b.degree();
    Scalar lc_inv = b.leading().inv();
    std::vector<Scalar> qc;
    int da = static_cast<int>(rc.size()) - 1;
    if (da >= db) qc.assign(da - db + 1, scalar_zero(a.tag()));
    for (int i = da; i >= db; --i) {
        if (rc[i].is_zero()) continue;
        Scalar f = rc[i] * lc_inv;
        qc[i - db] = f;
        for (int j = 0; j <= db; ++j) rc[i - db + j] = rc[i - db + j] - f * b.coeff(j);
    }
    return {DensePoly(a.tag(), std::move(qc)), DensePoly(a.tag(), std::move(rc))};
}

DensePoly poly_mod(const DensePoly& a, const DensePoly& b) { return divrem(a, b).second; }

DensePoly poly_gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
        DensePoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

DensePoly derivative(const DensePoly& f) {
    DensePoly r(f.tag());
    if (f.degree() < 1) return r;
    std::vector<Scalar> c;
    c.reserve(f.degree());
    for (int i = 1; i <= f.degree(); ++i) c.push_back(f.coeff(i) * Scalar(f.tag(), i));
    return DensePoly(f.tag(), std::move(c));
}

DensePoly powmod(const DensePoly& base, const mpz_class& e, const DensePoly& mod) {
    DensePoly r = DensePoly::from_ints(base.tag(), {1});
    DensePoly b = poly_mod(base, mod);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = poly_mod(r * b, mod);
        k >>= 1;
        if (k > 0) b = poly_mod(b * b, mod);
    }
    return r;
}

DensePoly shift_poly(const DensePoly& f, const Scalar& c) {
    DensePoly r(f.tag());
    DensePoly lin(f.tag(), {c, scalar_one(f.tag())});
    for (int i = f.degree(); i >= 0; --i) r = r * lin + DensePoly::constant(f.coeff(i));
    return r;
}

namespace {

// p-th root of f = g(x^p) over GF(p); residues are their own p-th roots.
DensePoly pth_root(const DensePoly& f) {
    std::uint32_t p = f.tag().p;
    std::vector<Scalar> c;
    for (int i = 0; i <= f.degree(); ++i) {
        if (static_cast<std::uint32_t>(i) % p == 0) {
            c.push_back(f.coeff(i));
        } else if (!f.coeff(i).is_zero()) {
            fail(ErrKind::Internal, "pth_root: polynomial is not a p-th power");
        }
    }
    return DensePoly(f.tag(), std::move(c));
}

DensePoly random_poly(FieldTag tag, int max_deg, std::mt19937_64& rng) {
    std::vector<Scalar> c;
    std::uniform_int_distribution<std::uint64_t> dist(0, tag.p - 1);
    for (int i = 0; i <= max_deg; ++i) c.emplace_back(tag, static_cast<long>(dist(rng)));
    return DensePoly(tag, std::move(c));
}

void equal_degree_split(const DensePoly& f, int d, std::mt19937_64& rng, std::vector<DensePoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uint32_t p = f.tag().p;
    DensePoly one = DensePoly::from_ints(f.tag(), {1});
    for (int attempt = 0; attempt < 512; ++attempt) {
        DensePoly r = random_poly(f.tag(), f.degree() - 1, rng);
        if (r.degree() < 1 && p > 2) continue;
        if (r.is_zero()) continue;
        DensePoly g = poly_gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divrem(f, g).first, d, rng, out);
            return;
        }
        DensePoly s(f.tag());
        if (p == 2) {
            // trace map r + r^2 + ... + r^(2^(d-1)) mod f
            DensePoly t = poly_mod(r, f);
            DensePoly acc = t;
            for (int i = 1; i < d; ++i) {
                t = poly_mod(t * t, f);
                acc = acc + t;
            }
            s = acc;
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            s = powmod(r, e, f) - one;
        }
        DensePoly g2 = poly_gcd(s, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            equal_degree_split(g2, d, rng, out);
            equal_degree_split(divrem(f, g2).first, d, rng, out);
            return;
        }
    }
    fail(ErrKind::Budget, "equal-degree split did not converge");
}

void distinct_degree_factor(DensePoly f, std::mt19937_64& rng, std::vector<DensePoly>& out) {
    std::uint32_t p = f.tag().p;
    DensePoly xp = DensePoly::x(f.tag());
    DensePoly h = poly_mod(xp, f);
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f.monic());
            return;
        }
        h = powmod(h, mpz_class(p), f);
        DensePoly g = poly_gcd(h - xp, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            f = divrem(f, g).first;
            h = poly_mod(h, f);
        }
    }
}

void factor_squarefree_rec(DensePoly f, int mult, std::mt19937_64& rng,
                           std::vector<std::pair<DensePoly, int>>& out) {
    std::uint32_t p = f.tag().p;
    if (f.degree() <= 0) return;
    DensePoly fp = derivative(f);
    if (fp.is_zero()) {
        factor_squarefree_rec(pth_root(f), mult * static_cast<int>(p), rng, out);
        return;
    }
    DensePoly c = poly_gcd(f, fp);
    DensePoly w = divrem(f, c).first.monic();
    int i = 1;
    while (w.degree() > 0) {
        DensePoly y = poly_gcd(w, c);
        DensePoly z = divrem(w, y).first;
        if (z.degree() > 0) {
            std::vector<DensePoly> irr;
            distinct_degree_factor(z.monic(), rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult * i);
        }
        w = std::move(y);
        c = divrem(c, w).first;
        ++i;
    }
    // multiplicities divisible by p survive here as a p-th power
    if (c.degree() > 0) factor_squarefree_rec(pth_root(c), mult * static_cast<int>(p), rng, out);
}

}  // namespace

DensePoly squarefree_part(const DensePoly& f) {
    if (f.is_zero()) fail(ErrKind::Input, "squarefree part of zero polynomial");
    DensePoly g = f.monic();
    if (g.degree() == 0) return g;
    DensePoly gp = derivative(g);
    if (gp.is_zero()) return squarefree_part(pth_root(g));  // char p, g = h(x^p)
    DensePoly c = poly_gcd(g, gp);
    DensePoly w = divrem(g, c).first.monic();
    if (c.degree() == 0) return w;
    // strip w's factors out of c; the remainder collects multiplicities
    // divisible by p and is a p-th power
    while (true) {
        DensePoly h = poly_gcd(c, w);
        if (h.degree() == 0) break;
        c = divrem(c, h).first;
    }
    if (c.degree() == 0) return w;
    return (w * squarefree_part(c)).monic();
}

std::vector<std::pair<DensePoly, int>> factor_finite(const DensePoly& f, std::mt19937_64& rng) {
    if (f.is_zero()) fail(ErrKind::Input, "factorization of zero polynomial");
    if (!f.tag().finite()) fail(ErrKind::Input, "factor_finite requires prime-field coefficients");
    std::vector<std::pair<DensePoly, int>> out;
    if (f.degree() < 1) return out;
    factor_squarefree_rec(f.monic(), 1, rng, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            std::uint64_t ra = a.first.coeff(i).residue(), rb = b.first.coeff(i).residue();
            if (ra != rb) return ra < rb;
        }
        return a.second < b.second;
    });
    return out;
}

// ---------------------------------------------------------------------------
// irreducibility battery over Q
// ---------------------------------------------------------------------------

namespace {

// primitive integer model (content 1, positive leading coefficient)
std::vector<mpz_class> integer_model(const DensePoly& f) {
    mpz_class lcm_den = 1;
    for (const auto& s : f.coeffs()) {
        mpz_class den = s.rat().get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> F;
    F.reserve(f.coeffs().size());
    mpz_class content = 0;
    for (const auto& s : f.coeffs()) {
        mpz_class v = s.rat().get_num() * (lcm_den / s.rat().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        F.push_back(v);
    }
    if (content > 1)
        for (auto& v : F) v /= content;
    if (F.back() < 0)
        for (auto& v : F) v = -v;
    return F;
}

// trial-division prime factorization; returns false when a cofactor > limit^2
// remains that is not certified prime
bool prime_factors(mpz_class n, std::vector<mpz_class>& out, unsigned long limit = 1000000) {
    n = abs(n);
    if (n <= 1) return true;
    for (mpz_class d = 2; d * d <= n && d <= limit; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
            out.push_back(n);
            return true;
        }
        return false;
    }
    return true;
}

bool all_divisors(const mpz_class& n, std::vector<mpz_class>& out, size_t cap = 4096) {
    std::vector<mpz_class> primes;
    if (!prime_factors(n, primes)) return false;
    out.push_back(1);
    mpz_class m = abs(n);
    for (const auto& p : primes) {
        size_t sz = out.size();
        mpz_class pk = p;
        while (m % pk == 0) {
            for (size_t i = 0; i < sz; ++i) {
                out.push_back(out[i] * pk);
                if (out.size() > cap) return false;
            }
            pk *= p;
        }
    }
    return true;
}

mpq_class eval_int_poly(const std::vector<mpz_class>& F, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = F.rbegin(); it != F.rend(); ++it) r = r * x + mpq_class(*it);
    return r;
}

// subset sums of a degree multiset, restricted to 1..n-1
std::bitset<128> subset_sums(const std::vector<int>& degs, int n) {
    std::bitset<128> dp;
    dp.set(0);
    for (int d : degs) dp |= dp << d;
    std::bitset<128> mask;
    for (int i = 1; i < n; ++i) mask.set(i);
    return dp & mask;
}

DensePoly reduce_mod_p(const std::vector<mpz_class>& F, std::uint32_t p) {
    FieldTag tag{p};
    std::vector<Scalar> c;
    c.reserve(F.size());
    for (const auto& v : F) c.push_back(Scalar::from_mpz(tag, v));
    return DensePoly(tag, std::move(c));
}

}  // namespace

IrredVerdict classify_irreducible(const DensePoly& f) {
    if (f.degree() < 1) fail(ErrKind::Input, "irreducibility of a constant polynomial");
    IrredVerdict v;
    if (f.degree() == 1) {
        v.status = Irred::Irreducible;
        v.method = "linear";
        return v;
    }
    if (f.tag().finite()) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        auto fac = factor_finite(f, rng);
        if (fac.size() == 1 && fac[0].second == 1) {
            v.status = Irred::Irreducible;
            v.method = "prime-field factorization";
        } else {
            v.status = Irred::Reducible;
            v.witness = fac[0].first;
            v.method = "prime-field factorization";
        }
        return v;
    }

    const int n = f.degree();
    std::vector<mpz_class> F = integer_model(f);
    FieldTag q{0};

    // rational root test
    bool root_test_complete = true;
    if (F[0] == 0) {
        v.status = Irred::Reducible;
        v.witness = DensePoly::x(q);
        v.method = "rational root";
        return v;
    }
    {
        std::vector<mpz_class> num_divs, den_divs;
        if (all_divisors(F[0], num_divs) && all_divisors(F.back(), den_divs)) {
            for (const auto& p : num_divs) {
                for (const auto& d : den_divs) {
                    for (int sign : {1, -1}) {
                        mpq_class r(sign * p, d);
                        r.canonicalize();
                        if (eval_int_poly(F, r) == 0) {
                            std::vector<Scalar> wc{Scalar(-r), scalar_one(q)};
                            v.status = Irred::Reducible;
                            v.witness = DensePoly(q, std::move(wc));
                            v.method = "rational root";
                            return v;
                        }
                    }
                }
            }
        } else {
            root_test_complete = false;
        }
    }
    if (n <= 3 && root_test_complete) {
        v.status = Irred::Irreducible;
        v.method = "no rational root, degree <= 3";
        return v;
    }

    // Eisenstein on small shifts
    for (long shift : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
        std::vector<mpz_class> G = F;
        if (shift != 0) {
            std::vector<Scalar> fc;
            for (const auto& z : F) fc.emplace_back(mpq_class(z));
            DensePoly g = shift_poly(DensePoly(q, std::move(fc)), Scalar(q, shift));
            G.assign(n + 1, mpz_class(0));
            for (int i = 0; i <= g.degree(); ++i) G[i] = g.coeff(i).rat().get_num();
        }
        if (G[0] == 0) continue;
        mpz_class g = 0;
        for (int i = 0; i < n; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), G[i].get_mpz_t());
        if (g <= 1) continue;
        std::vector<mpz_class> ps;
        if (!prime_factors(g, ps)) continue;
        for (const auto& p : ps) {
            if (G.back() % p == 0) continue;
            if (G[0] % (p * p) == 0) continue;
            v.status = Irred::Irreducible;
            v.method = "eisenstein (shift " + std::to_string(shift) + ", p=" + p.get_str() + ")";
            return v;
        }
    }

    // degree sets modulo good primes
    std::bitset<128> feasible;
    for (int i = 1; i < n; ++i) feasible.set(i);
    static const std::uint32_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                            37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    int good = 0;
    std::mt19937_64 rng(0x2545f4914f6cdd1dull);
    for (std::uint32_t p : kPrimes) {
        if (F.back() % p == 0) continue;
        DensePoly fp = reduce_mod_p(F, p);
        if (poly_gcd(fp, derivative(fp)).degree() != 0) continue;
        auto fac = factor_finite(fp, rng);
        std::vector<int> degs;
        for (const auto& [g, m] : fac)
            for (int i = 0; i < m; ++i) degs.push_back(g.degree());
        feasible &= subset_sums(degs, n);
        ++good;
        if (feasible.none()) {
            v.status = Irred::Irreducible;
            v.method = "degree sets mod " + std::to_string(good) + " primes";
            return v;
        }
        if (good >= 8) break;
    }
    if (root_test_complete) feasible.reset(1);

    // bounded search for small-degree monic integer factors
    if (F.back() == 1) {
        mpz_class norm2 = 0;
        for (const auto& z : F) norm2 += z * z;
        mpz_class bound = sqrt(norm2) + 1;
        bool covered = true;
        for (int d = 1; 2 * d <= n; ++d) {
            if (!feasible.test(d)) continue;
            if (d > 3 || bound > 64) {
                covered = false;
                break;
            }
            std::vector<mpz_class> consts;
            if (!all_divisors(F[0], consts, 512)) {
                covered = false;
                break;
            }
            long b = bound.get_si();
            long lim = 3 * b;
            bool found = false;
            DensePoly fq = f;
            auto try_factor = [&](const std::vector<long>& tail, const mpz_class& c0) {
                std::vector<Scalar> gc;
                gc.emplace_back(mpq_class(c0));
                for (long t : tail) gc.emplace_back(q, t);
                gc.push_back(scalar_one(q));
                DensePoly g(q, std::move(gc));
                if (divrem(fq, g).second.is_zero()) {
                    v.status = Irred::Reducible;
                    v.witness = g;
                    v.method = "bounded factor search (degree " + std::to_string(d) + ")";
                    found = true;
                }
                return found;
            };
            for (const auto& cd : consts) {
                for (int sign : {1, -1}) {
                    mpz_class c0 = sign * cd;
                    if (d == 2) {
                        for (long a = -lim; a <= lim && !found; ++a) try_factor({a}, c0);
                    } else {
                        for (long a2 = -lim; a2 <= lim && !found; ++a2)
                            for (long a1 = -lim; a1 <= lim && !found; ++a1) try_factor({a1, a2}, c0);
                    }
                    if (found) return v;
                }
            }
        }
        if (covered) {
            v.status = Irred::Irreducible;
            v.method = "degree sets + bounded factor search";
            return v;
        }
    }

    v.status = Irred::Unknown;
    v.method = "battery indecisive";
    return v;
}

}  // namespace gal
