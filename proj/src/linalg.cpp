#include "tilt/linalg.hpp"

#include <sstream>

namespace tilt {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return Field{p};
}

std::string Field::name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

Scalar::Scalar() : v_(mpq_class(0)) {}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }

Scalar Scalar::from_int(Field f, long long v) {
    Scalar s;
    if (f.is_rational()) {
        s.v_ = mpq_class(mpz_class(std::to_string(v)));
    } else {
        long long r = v % static_cast<long long>(f.p);
        if (r < 0) r += f.p;
        s.v_ = Residue{static_cast<std::uint32_t>(r), f.p};
    }
    return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
    Scalar s;
    if (f.is_rational()) {
        s.v_ = q;
        std::get<mpq_class>(s.v_).canonicalize();
        return s;
    }
    std::uint32_t den = reduce_mpz(q.get_den(), f.p);
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(f.p));
    std::uint64_t num = reduce_mpz(q.get_num(), f.p);
    s.v_ = Residue{static_cast<std::uint32_t>(num * inv_mod(den, f.p) % f.p), f.p};
    return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return from_rational(f, q);
}

Field Scalar::field() const {
    if (auto r = std::get_if<Residue>(&v_)) return Field{r->p};
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->v == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->v == 1;
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (v_.index() != o.v_.index()) throw std::invalid_argument("mixed field tags");
    if (auto r = std::get_if<Residue>(&v_))
        if (r->p != std::get<Residue>(o.v_).p) throw std::invalid_argument("mixed field tags");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s;
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint64_t v = std::uint64_t(r->v) + std::get<Residue>(o.v_).v;
        if (v >= r->p) v -= r->p;
        s.v_ = Residue{static_cast<std::uint32_t>(v), r->p};
    } else {
        s.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    if (auto r = std::get_if<Residue>(&v_))
        s.v_ = Residue{r->v == 0 ? 0 : r->p - r->v, r->p};
    else
        s.v_ = mpq_class(-std::get<mpq_class>(v_));
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s;
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint64_t v = std::uint64_t(r->v) * std::get<Residue>(o.v_).v % r->p;
        s.v_ = Residue{static_cast<std::uint32_t>(v), r->p};
    } else {
        s.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar s;
    if (auto r = std::get_if<Residue>(&v_))
        s.v_ = Residue{inv_mod(r->v, r->p), r->p};
    else
        s.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (auto r = std::get_if<Residue>(&v_)) return r->v == std::get<Residue>(o.v_).v;
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::uint32_t Scalar::residue() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->v;
    throw std::logic_error("residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q;
    throw std::logic_error("rational() on a residue");
}

std::string Scalar::str() const {
    if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->v);
    return std::get<mpq_class>(v_).get_str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), r_(rows), c_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& e) {
    if (e.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < e.size(); ++i) m.a_[i] = Scalar::from_int(f, e[i]);
    return m;
}

Matrix Matrix::column(const Vec& v, Field f) {
    Matrix m(f, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.a_[i] = v[i];
    return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows) {
    std::size_t cols = 0;
    for (auto& p : parts) {
        if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
        cols += p.cols();
    }
    Matrix m(f, rows, cols);
    std::size_t c0 = 0;
    for (auto& p : parts) {
        m.set_block(0, c0, p);
        c0 += p.cols();
    }
    return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols) {
    std::size_t rows = 0;
    for (auto& p : parts) {
        if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += p.rows();
    }
    Matrix m(f, rows, cols);
    std::size_t r0 = 0;
    for (auto& p : parts) {
        m.set_block(r0, 0, p);
        r0 += p.rows();
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product: shape mismatch");
    if (f_ != o.f_) throw std::invalid_argument("mixed field tags");
    Matrix m(f_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) m.at(i, j) += x * y;
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_ || f_ != o.f_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != c_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec out(r_, Scalar::zero(f_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) throw std::out_of_range("block out of range");
    Matrix m(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.r_ > r_ || c0 + m.c_ > c_) throw std::out_of_range("set_block out of range");
    for (std::size_t i = 0; i < m.r_; ++i)
        for (std::size_t j = 0; j < m.c_; ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t Matrix::rank() const { return rref(*this).rank; }

// ---------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
    for (auto& x : m.data())
        if (x.field() != m.field()) throw std::invalid_argument("mixed field tags");
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = c; j < C; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < C; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<Vec> nullspace_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const Field f = m.field();
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : rr.pivots) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        Vec v(m.cols(), Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t k = 0; k < rr.rank; ++k) v[rr.pivots[k]] = -rr.reduced.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const Field f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < b.size(); ++i) aug.at(i, m.cols()) = b[i];
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Scalar::zero(f));
    for (std::size_t k = 0; k < rr.rank; ++k) x[rr.pivots[k]] = rr.reduced.at(k, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug = Matrix::hstack({m, Matrix::identity(m.field(), n)}, m.field(), n);
    RrefResult rr = rref(aug);
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    return rr.reduced.block(0, n, n, n);
}

Matrix column_space(const Matrix& m) {
    RrefResult rr = rref(m);
    Matrix out(m.field(), m.rows(), rr.rank);
    for (std::size_t k = 0; k < rr.rank; ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, k) = m.at(i, rr.pivots[k]);
    return out;
}

Matrix from_columns(const std::vector<Vec>& cols, Field f, std::size_t dim) {
    Matrix m(f, dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

QuotientData quotient_by(const Matrix& sub, std::size_t n, Field f) {
    Matrix w = column_space(sub);
    Matrix aug = Matrix::hstack({w, Matrix::identity(f, n)}, f, n);
    RrefResult rr = rref(aug);
    std::vector<std::size_t> extra;
    for (auto p : rr.pivots)
        if (p >= w.cols()) extra.push_back(p - w.cols());
    QuotientData q;
    q.complement = Matrix(f, n, extra.size());
    for (std::size_t k = 0; k < extra.size(); ++k) q.complement.at(extra[k], k) = Scalar::one(f);
    Matrix basis = Matrix::hstack({w, q.complement}, f, n);
    Matrix inv = *inverse(basis);
    q.projection = inv.block(w.cols(), 0, extra.size(), n);
    return q;
}

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace tilt

namespace tilt {

Matrix right_inverse(const Matrix& m) {
    const Field f = m.field();
    RrefResult rr = rref(m);
    if (rr.rank != m.rows()) throw std::invalid_argument("right_inverse: matrix does not have full row rank");
    Matrix sub(f, m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) sub.at(i, k) = m.at(i, rr.pivots[k]);
    Matrix inv = *inverse(sub);
    Matrix out(f, m.cols(), m.rows());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        for (std::size_t j = 0; j < m.rows(); ++j) out.at(rr.pivots[k], j) = inv.at(k, j);
    return out;
}

}  // namespace tilt
