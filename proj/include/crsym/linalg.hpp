#ifndef CRSYM_LINALG_HPP
#define CRSYM_LINALG_HPP

#include <functional>
#include <optional>
#include <vector>

#include "crsym/matrix.hpp"

namespace crsym {

struct RrefResult {
    size_t rank;
    ExactMatrix reduced;
    std::vector<size_t> pivots;  // pivot column per pivot row
};

/// Unique reduced row-echelon form (exact Gauss-Jordan).
RrefResult rref(const ExactMatrix& m);

/// Subspace of a matrix space, stored as the RREF basis of the row-major
/// vectorizations. The basis is the unique canonical representative of the
/// span, so subspace equality is basis equality.
class MatrixSubspace {
public:
    MatrixSubspace() : rows_(0), cols_(0) {}
    MatrixSubspace(size_t rows, size_t cols) : rows_(rows), cols_(cols) {}

    static MatrixSubspace span(size_t rows, size_t cols, const std::vector<ExactMatrix>& generators);
    static MatrixSubspace full(size_t rows, size_t cols);

    size_t dim() const { return basis_.size(); }
    size_t ambient_rows() const { return rows_; }
    size_t ambient_cols() const { return cols_; }
    const std::vector<ExactMatrix>& basis() const { return basis_; }

    /// Residual of x after eliminating the pivot entries; zero iff member.
    ExactMatrix reduce(const ExactMatrix& x) const;
    bool contains(const ExactMatrix& x) const;
    bool contains_subspace(const MatrixSubspace& other) const;
    /// Coefficients c with x = sum c_k basis_k, or nullopt.
    std::optional<std::vector<GaussianRational>> membership(const ExactMatrix& x) const;

    MatrixSubspace sum(const MatrixSubspace& other) const;

    friend bool operator==(const MatrixSubspace& a, const MatrixSubspace& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const MatrixSubspace& a, const MatrixSubspace& b) { return !(a == b); }

private:
    size_t rows_, cols_;
    std::vector<ExactMatrix> basis_;
    std::vector<std::pair<size_t, size_t>> pivots_;
};

/// Kernel {x : Mx = 0} as a subspace of column vectors (ambient cols x 1).
MatrixSubspace kernel(const ExactMatrix& m);

/// One linear condition on an unknown matrix X. With a target T the condition
/// reads map(X) = eta * T for a fresh scalar unknown eta; without a target it
/// reads map(X) = 0.
struct LinearCondition {
    std::function<ExactMatrix(const ExactMatrix&)> map;
    std::optional<ExactMatrix> target;
};

/// Solution space of a homogeneous system in (X, eta_1..eta_t), X ranging over
/// all rows x cols matrices and one eta per condition that carries a target.
class AugmentedSolution {
public:
    AugmentedSolution(size_t rows, size_t cols, size_t scalars, MatrixSubspace space)
        : rows_(rows), cols_(cols), scalars_(scalars), space_(std::move(space)) {}

    size_t matrix_rows() const { return rows_; }
    size_t matrix_cols() const { return cols_; }
    size_t num_scalars() const { return scalars_; }
    size_t dim() const { return space_.dim(); }

    /// The solution space itself, as column vectors (vec X | eta_1..eta_t).
    const MatrixSubspace& augmented() const { return space_; }

    /// X-part of the k-th basis vector.
    ExactMatrix matrix_part(size_t k) const;
    /// (eta_1..eta_t) of the k-th basis vector.
    std::vector<GaussianRational> scalar_part(size_t k) const;
    /// Canonical span of the X-parts (the projection to X-coordinates).
    MatrixSubspace projected() const;

private:
    size_t rows_, cols_, scalars_;
    MatrixSubspace space_;
};

/// Solve the joint homogeneous system given by `conditions` over an unknown
/// rows x cols matrix, with one extra scalar unknown per targeted condition.
/// Throws std::invalid_argument if a condition's output shape disagrees with
/// its target.
AugmentedSolution solve_with_scalars(size_t rows, size_t cols,
                                     const std::vector<LinearCondition>& conditions);

}  // namespace crsym

#endif
