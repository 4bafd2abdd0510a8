#pragma once
// Exact scalars (rationals or residues mod a word-sized prime) and dense matrices.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tilt {

struct Field {
    std::uint32_t p = 0;  // 0 means the rationals

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p == 0; }
    bool is_finite() const { return p != 0; }
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }
    std::string name() const;
};

class Scalar {
public:
    Scalar();  // rational zero
    static Scalar zero(Field f);
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, long long v);
    static Scalar from_rational(Field f, const mpq_class& q);
    static Scalar parse(Field f, const std::string& text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Residue as an integer in [0, p); rationals throw.
    std::uint32_t residue() const;
    const mpq_class& rational() const;
    std::string str() const;

private:
    struct Residue {
        std::uint32_t v;
        std::uint32_t p;
    };
    std::variant<mpq_class, Residue> v_;
    void check_same(const Scalar& o) const;
};

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& entries);
    static Matrix column(const Vec& v, Field f);
    static Matrix hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows);
    static Matrix vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols);

    Field field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    Vec apply(const Vec& v) const;

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;
    bool is_zero() const;
    std::size_t rank() const;

    const std::vector<Scalar>& data() const { return a_; }

private:
    Field f_{};
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    std::size_t rank = 0;
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
// Basis of the kernel, one column vector per entry.
std::vector<Vec> nullspace_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// Columns of a matrix whose span is the column space of m (a subset of m's columns).
Matrix column_space(const Matrix& m);
// Matrix whose columns are the given vectors (dimension `dim` when the list is empty).
Matrix from_columns(const std::vector<Vec>& cols, Field f, std::size_t dim);
// For a subspace W (independent columns) of k^n: a complement basis C such that [W C] is invertible,
// and the projection Q (rows = dim C) with Q*W = 0, Q*C = I.
struct QuotientData {
    Matrix complement;  // n x q
    Matrix projection;  // q x n
};
QuotientData quotient_by(const Matrix& sub, std::size_t n, Field f);

// Right inverse of a matrix with full row rank.
Matrix right_inverse(const Matrix& m);

Vec zero_vec(Field f, std::size_t n);
bool is_zero_vec(const Vec& v);

}  // namespace tilt
