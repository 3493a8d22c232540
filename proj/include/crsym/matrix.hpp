#ifndef CRSYM_MATRIX_HPP
#define CRSYM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "crsym/rational.hpp"

namespace crsym {

/// Dense matrix over the Gaussian rationals, row-major. All arithmetic is
/// exact; shape mismatches throw std::invalid_argument.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix identity(size_t n);
    static ExactMatrix zero(size_t rows, size_t cols) { return {rows, cols}; }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    GaussianRational& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const GaussianRational& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    GaussianRational& operator()(size_t i, size_t j) { return at(i, j); }
    const GaussianRational& operator()(size_t i, size_t j) const { return at(i, j); }

    const std::vector<GaussianRational>& entries() const { return e_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_hermitian() const;

    ExactMatrix transpose() const;
    ExactMatrix conj() const;
    ExactMatrix conj_transpose() const;
    /// Inverse via Gauss-Jordan; throws std::domain_error if singular.
    ExactMatrix inverse() const;

    ExactMatrix block(size_t i0, size_t j0, size_t r, size_t c) const;
    void set_block(size_t i0, size_t j0, const ExactMatrix& m);

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const GaussianRational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
    friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator-(const ExactMatrix& a);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<GaussianRational> e_;
};

/// Commutator XY - YX.
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

/// Block-diagonal assembly, top-left to bottom-right.
ExactMatrix block_diag(const std::vector<ExactMatrix>& blocks);

/// If b = c*a for a (unique) scalar c, return c; A zero `a` matches only zero
/// `b` (with c = 0). Returns nullopt when no exact scalar exists.
std::optional<GaussianRational> proportionality_ratio(const ExactMatrix& a, const ExactMatrix& b);

/// a^k = 0 for some k <= rows(a).
bool is_nilpotent(const ExactMatrix& a);

}  // namespace crsym

#endif
