#include "tilt/matalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tilt {

Vec flatten(const Matrix& m) { return m.data(); }

std::vector<std::size_t> independent_indices(const std::vector<Vec>& vecs, Field f, std::size_t len) {
    RrefResult rr = rref(from_columns(vecs, f, len));
    return {rr.pivots.begin(), rr.pivots.end()};
}

Matrix matrix_power(const Matrix& x, std::size_t k) {
    Matrix r = Matrix::identity(x.field(), x.rows());
    Matrix b = x;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool is_nilpotent(const Matrix& x) { return matrix_power(x, x.rows()).is_zero(); }

// ---------------------------------------------------------------- polynomials

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    Scalar lead_inv = m.back().inverse();
    while (a.size() > dm) {
        Scalar c = a.back() * lead_inv;
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= c * m[i];
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, Field f) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Scalar inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

Poly poly_powmod(Poly base, mpz_class e, const Poly& m, Field f) {
    Poly r{Scalar::one(f)};
    base = poly_mod(base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(poly_mul(r, base, f), m);
        e >>= 1;
        if (e > 0) base = poly_mod(poly_mul(base, base, f), m);
    }
    return r;
}

Scalar poly_eval(const Poly& p, const Scalar& x, Field f) {
    Scalar r = Scalar::zero(f);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// Roots of a squarefree product of linear factors over F_p.
void split_linear(const Poly& g, Field f, std::mt19937_64& rng, std::vector<Scalar>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(-g[0] / g[1]);
        return;
    }
    const mpz_class e = (mpz_class(f.p) - 1) / 2;
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly lin{Scalar::from_int(f, static_cast<long long>(rng() % f.p)), Scalar::one(f)};
        Poly h = poly_powmod(lin, e, g, f);
        if (h.empty()) h = {Scalar::zero(f)};
        h[0] -= Scalar::one(f);
        Poly d = poly_gcd(g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            split_linear(d, f, rng, out);
            Poly q = g;  // g / d by long division
            Poly quot(g.size() - d.size() + 1, Scalar::zero(f));
            for (std::size_t i = quot.size(); i-- > 0;) {
                quot[i] = q[i + d.size() - 1] / d.back();
                for (std::size_t j = 0; j < d.size(); ++j) q[i + j] -= quot[i] * d[j];
            }
            split_linear(quot, f, rng, out);
            return;
        }
    }
    throw std::runtime_error("root splitting did not converge");
}

void divisors(mpz_class n, std::vector<mpz_class>& out, const mpz_class& cap) {
    if (n < 0) n = -n;
    if (n == 0 || n > cap) return;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
}

}  // namespace

Poly minimal_polynomial(const Matrix& x) {
    const Field f = x.field();
    const std::size_t n = x.rows();
    std::vector<Vec> powers;
    Matrix cur = Matrix::identity(f, n);
    for (std::size_t k = 0; k <= n; ++k) {
        powers.push_back(flatten(cur));
        Matrix cols = from_columns(powers, f, n * n);
        auto ns = nullspace_basis(cols);
        if (!ns.empty()) {
            Poly p = ns.front();
            trim(p);
            Scalar inv = p.back().inverse();
            for (auto& c : p) c *= inv;
            return p;
        }
        cur = cur * x;
    }
    throw std::logic_error("minimal polynomial not found");
}

std::vector<Scalar> roots_in_field(const Poly& p, Field f) {
    std::vector<Scalar> out;
    if (p.size() <= 1) return out;
    if (f.is_finite()) {
        if (f.p <= 64) {
            for (std::uint32_t v = 0; v < f.p; ++v)
                if (poly_eval(p, Scalar::from_int(f, v), f).is_zero()) out.push_back(Scalar::from_int(f, v));
            return out;
        }
        Poly xp = poly_powmod(Poly{Scalar::zero(f), Scalar::one(f)}, mpz_class(f.p), p, f);
        if (xp.size() < 2) xp.resize(2, Scalar::zero(f));
        xp[1] -= Scalar::one(f);
        Poly g = poly_gcd(p, xp);
        std::mt19937_64 rng(12345);
        split_linear(g, f, rng, out);
        std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
        return out;
    }
    // rationals: clear denominators, then test candidates a/b with a | constant term, b | leading term
    Poly q = p;
    std::size_t zero_mult = 0;
    while (!q.empty() && q.front().is_zero()) {
        q.erase(q.begin());
        ++zero_mult;
    }
    if (zero_mult) out.push_back(Scalar::zero(f));
    if (q.size() <= 1) return out;
    mpz_class lcm = 1;
    for (auto& c : q) lcm = lcm * c.rational().get_den() / gcd(lcm, c.rational().get_den());
    std::vector<mpz_class> ints;
    for (auto& c : q) ints.push_back(mpz_class(c.rational() * lcm));
    const mpz_class cap("1000000000000");
    std::vector<mpz_class> nums, dens;
    divisors(ints.front(), nums, cap);
    divisors(ints.back(), dens, cap);
    std::vector<mpq_class> found;
    for (auto& a : nums)
        for (auto& b : dens)
            for (int sign : {1, -1}) {
                mpq_class r(a * sign, b);
                r.canonicalize();
                if (std::find(found.begin(), found.end(), r) != found.end()) continue;
                if (poly_eval(q, Scalar::from_rational(f, r), f).is_zero()) found.push_back(r);
            }
    std::sort(found.begin(), found.end());
    for (auto& r : found) out.push_back(Scalar::from_rational(f, r));
    return out;
}

// ---------------------------------------------------------------- radical

namespace {

// Trace of the p^i-th power of an integer lift, modulo p^{i+1}, divided by p^i.
std::uint32_t lifted_trace_value(const Matrix& a, std::uint32_t p, int i) {
    const std::size_t n = a.rows();
    std::uint64_t mod = 1, pi = 1;
    for (int k = 0; k < i; ++k) pi *= p;
    mod = pi * p;
    using Mat = std::vector<std::uint64_t>;
    Mat m(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r * n + c] = a.at(r, c).residue() % mod;
    auto mul = [&](const Mat& x, const Mat& y) {
        Mat z(n * n, 0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) {
                std::uint64_t v = x[r * n + k];
                if (!v) continue;
                for (std::size_t c = 0; c < n; ++c) z[r * n + c] = (z[r * n + c] + v * y[k * n + c]) % mod;
            }
        return z;
    };
    Mat res(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) res[r * n + r] = 1 % mod;
    Mat base = m;
    std::uint64_t e = pi;
    while (e) {
        if (e & 1) res = mul(res, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    std::uint64_t tr = 0;
    for (std::size_t r = 0; r < n; ++r) tr = (tr + res[r * n + r]) % mod;
    if (tr % pi != 0) throw std::logic_error("radical computation: trace not divisible as expected");
    return static_cast<std::uint32_t>(tr / pi);
}

Scalar trace(const Matrix& a) {
    Scalar t = Scalar::zero(a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

}  // namespace

std::vector<Matrix> radical_basis(const std::vector<Matrix>& basis, Field f) {
    if (basis.empty()) return {};
    const std::size_t n = basis.front().rows();
    std::vector<Matrix> ideal;
    {
        std::vector<Vec> flat;
        for (auto& b : basis) flat.push_back(flatten(b));
        for (auto i : independent_indices(flat, f, n * n)) ideal.push_back(basis[i]);
    }
    const std::vector<Matrix> full = ideal;
    int levels = 0;
    if (f.is_finite())
        for (std::uint64_t pw = f.p; pw <= n; pw *= f.p) ++levels;
    for (int i = 0; i <= levels && !ideal.empty(); ++i) {
        Matrix g(f, full.size(), ideal.size());
        for (std::size_t k = 0; k < ideal.size(); ++k)
            for (std::size_t j = 0; j < full.size(); ++j) {
                Matrix prod = ideal[k] * full[j];
                g.at(j, k) = f.is_finite() ? Scalar::from_int(f, lifted_trace_value(prod, f.p, i)) : trace(prod);
            }
        std::vector<Matrix> next;
        for (const Vec& c : nullspace_basis(g)) {
            Matrix x(f, n, n);
            for (std::size_t k = 0; k < ideal.size(); ++k)
                if (!c[k].is_zero()) x = x + ideal[k].scaled(c[k]);
            next.push_back(std::move(x));
        }
        ideal = std::move(next);
    }
    return ideal;
}

// ---------------------------------------------------------------- search

namespace {

// base^exp <= cap, without overflow
bool small_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (acc > cap / base) return false;
        acc *= base;
    }
    return acc <= cap;
}

std::optional<Matrix> split_from(const Matrix& x) {
    const Field f = x.field();
    Poly mp = minimal_polynomial(x);
    for (const Scalar& lam : roots_in_field(mp, f)) {
        Matrix y = x - Matrix::identity(f, x.rows()).scaled(lam);
        if (!is_nilpotent(y)) return y;  // singular because lam is an eigenvalue
    }
    return std::nullopt;
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Scalar>& c, Field f) {
    Matrix x(f, basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!c[k].is_zero()) x = x + basis[k].scaled(c[k]);
    return x;
}

}  // namespace

std::optional<Matrix> find_splitting_element(const std::vector<Matrix>& basis, const std::vector<Matrix>& radical,
                                             Field f, std::uint64_t seed) {
    if (basis.empty()) return std::nullopt;
    const std::size_t n = basis.front().rows();
    std::vector<Vec> flat;
    for (auto& r : radical) flat.push_back(flatten(r));
    const std::size_t rdim = independent_indices(flat, f, n * n).size();
    std::vector<Matrix> comp;
    for (auto& b : basis) {
        flat.push_back(flatten(b));
        if (independent_indices(flat, f, n * n).size() == rdim + comp.size() + 1)
            comp.push_back(b);
        else
            flat.pop_back();
    }
    if (comp.size() <= 1) return std::nullopt;
    for (auto& c : comp)
        if (auto y = split_from(c)) return y;
    std::mt19937_64 rng(seed);
    const std::size_t s = comp.size();
    if (f.is_finite()) {
        if (small_power(f.p, s, 65536)) {
            std::vector<std::uint32_t> digits(s, 0);
            for (;;) {
                std::size_t k = 0;
                while (k < s && ++digits[k] == f.p) digits[k++] = 0;
                if (k == s) break;
                std::vector<Scalar> c;
                for (auto d : digits) c.push_back(Scalar::from_int(f, d));
                if (auto y = split_from(combine(comp, c, f))) return y;
            }
            return std::nullopt;
        }
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < s; ++k) {
            long long v = f.is_finite() ? static_cast<long long>(rng() % f.p) : static_cast<long long>(rng() % 7) - 3;
            c.push_back(Scalar::from_int(f, v));
        }
        if (auto y = split_from(combine(comp, c, f))) return y;
    }
    return std::nullopt;
}

namespace {

bool all_invertible(const std::vector<Matrix>& blocks) {
    for (auto& b : blocks)
        if (b.rows() != b.cols() || b.rank() != b.rows()) return false;
    return true;
}

std::vector<Matrix> combine_blocks(const std::vector<std::vector<Matrix>>& basis, const std::vector<Scalar>& c) {
    std::vector<Matrix> out = basis.front();
    for (std::size_t j = 0; j < out.size(); ++j) {
        Matrix m(out[j].field(), out[j].rows(), out[j].cols());
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!c[k].is_zero()) m = m + basis[k][j].scaled(c[k]);
        out[j] = std::move(m);
    }
    return out;
}

}  // namespace

bool find_invertible(const std::vector<std::vector<Matrix>>& basis, Field f, std::uint64_t seed) {
    if (basis.empty()) return false;
    const std::size_t h = basis.size();
    std::size_t total = 0;
    for (auto& b : basis.front()) {
        if (b.rows() != b.cols()) return false;
        total += b.rows();
    }
    std::mt19937_64 rng(seed);
    const int tries = f.is_finite() ? 64 : 32;
    for (int t = 0; t < tries; ++t) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < h; ++k) {
            long long v = f.is_finite() ? static_cast<long long>(rng() % f.p)
                                        : static_cast<long long>(rng() % 2001) - 1000;
            c.push_back(Scalar::from_int(f, v));
        }
        if (all_invertible(combine_blocks(basis, c))) return true;
    }
    // exhaustive fallback
    std::uint64_t base;
    if (f.is_finite()) {
        base = f.p;
        if (!small_power(f.p, h, 1u << 20)) return false;
    } else {
        // a nonzero polynomial of degree `total` cannot vanish on a grid with total+1 points per axis
        if (h > 4) return false;
        base = total + 1;
    }
    std::vector<std::uint64_t> digits(h, 0);
    for (;;) {
        std::size_t k = 0;
        while (k < h && ++digits[k] == base) digits[k++] = 0;
        if (k == h) break;
        std::vector<Scalar> c;
        for (auto d : digits) c.push_back(Scalar::from_int(f, static_cast<long long>(d)));
        if (all_invertible(combine_blocks(basis, c))) return true;
    }
    return false;
}

}  // namespace tilt
