#include "crsym/linalg.hpp"

#include <stdexcept>

namespace crsym {

RrefResult rref(const ExactMatrix& m) {
    ExactMatrix a(m);
    size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = c; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        GaussianRational d = a.at(r, c);
        for (size_t j = c; j < cols; ++j) a.at(r, j) /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            GaussianRational f = a.at(i, c);
            for (size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {pivots.size(), std::move(a), std::move(pivots)};
}

MatrixSubspace kernel(const ExactMatrix& m) {
    RrefResult rr = rref(m);
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<ExactMatrix> gens;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        ExactMatrix v(cols, 1);
        v.at(c, 0) = 1;
        for (size_t r = 0; r < rr.pivots.size(); ++r)
            v.at(rr.pivots[r], 0) = -rr.reduced.at(r, c);
        gens.push_back(std::move(v));
    }
    MatrixSubspace ks = MatrixSubspace::span(cols, 1, gens);
    return ks;
}

MatrixSubspace MatrixSubspace::span(size_t rows, size_t cols,
                                    const std::vector<ExactMatrix>& generators) {
    MatrixSubspace s(rows, cols);
    if (generators.empty()) return s;
    ExactMatrix stacked(generators.size(), rows * cols);
    for (size_t g = 0; g < generators.size(); ++g) {
        const ExactMatrix& m = generators[g];
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument("MatrixSubspace::span: generator shape mismatch");
        for (size_t k = 0; k < rows * cols; ++k) stacked.at(g, k) = m.entries()[k];
    }
    RrefResult rr = rref(stacked);
    for (size_t r = 0; r < rr.rank; ++r) {
        ExactMatrix b(rows, cols);
        for (size_t k = 0; k < rows * cols; ++k) b.at(k / cols, k % cols) = rr.reduced.at(r, k);
        s.basis_.push_back(std::move(b));
        s.pivots_.emplace_back(rr.pivots[r] / cols, rr.pivots[r] % cols);
    }
    return s;
}

MatrixSubspace MatrixSubspace::full(size_t rows, size_t cols) {
    std::vector<ExactMatrix> gens;
    gens.reserve(rows * cols);
    for (size_t k = 0; k < rows * cols; ++k) {
        ExactMatrix e(rows, cols);
        e.at(k / cols, k % cols) = 1;
        gens.push_back(std::move(e));
    }
    return span(rows, cols, gens);
}

ExactMatrix MatrixSubspace::reduce(const ExactMatrix& x) const {
    if (x.rows() != rows_ || x.cols() != cols_)
        throw std::invalid_argument("MatrixSubspace::reduce: shape mismatch");
    ExactMatrix r(x);
    for (size_t k = 0; k < basis_.size(); ++k) {
        const GaussianRational& c = r.at(pivots_[k].first, pivots_[k].second);
        if (!c.is_zero()) r -= c * basis_[k];
    }
    return r;
}

bool MatrixSubspace::contains(const ExactMatrix& x) const { return reduce(x).is_zero(); }

bool MatrixSubspace::contains_subspace(const MatrixSubspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::optional<std::vector<GaussianRational>> MatrixSubspace::membership(const ExactMatrix& x) const {
    if (x.rows() != rows_ || x.cols() != cols_)
        throw std::invalid_argument("MatrixSubspace::membership: shape mismatch");
    ExactMatrix r(x);
    std::vector<GaussianRational> coeff(basis_.size());
    for (size_t k = 0; k < basis_.size(); ++k) {
        coeff[k] = r.at(pivots_[k].first, pivots_[k].second);
        if (!coeff[k].is_zero()) r -= coeff[k] * basis_[k];
    }
    if (!r.is_zero()) return std::nullopt;
    return coeff;
}

MatrixSubspace MatrixSubspace::sum(const MatrixSubspace& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("MatrixSubspace::sum: ambient shape mismatch");
    std::vector<ExactMatrix> gens(basis_);
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(rows_, cols_, gens);
}

ExactMatrix AugmentedSolution::matrix_part(size_t k) const {
    const ExactMatrix& v = space_.basis().at(k);
    ExactMatrix m(rows_, cols_);
    for (size_t t = 0; t < rows_ * cols_; ++t) m.at(t / cols_, t % cols_) = v.at(t, 0);
    return m;
}

std::vector<GaussianRational> AugmentedSolution::scalar_part(size_t k) const {
    const ExactMatrix& v = space_.basis().at(k);
    std::vector<GaussianRational> out(scalars_);
    for (size_t t = 0; t < scalars_; ++t) out[t] = v.at(rows_ * cols_ + t, 0);
    return out;
}

MatrixSubspace AugmentedSolution::projected() const {
    std::vector<ExactMatrix> gens;
    gens.reserve(dim());
    for (size_t k = 0; k < dim(); ++k) gens.push_back(matrix_part(k));
    return MatrixSubspace::span(rows_, cols_, gens);
}

AugmentedSolution solve_with_scalars(size_t rows, size_t cols,
                                     const std::vector<LinearCondition>& conditions) {
    size_t nmat = rows * cols;
    size_t nsc = 0;
    for (const auto& c : conditions)
        if (c.target) ++nsc;
    size_t nunk = nmat + nsc;

    // evaluate every condition on the unit unknowns to build the system columns
    std::vector<std::vector<GaussianRational>> cols_out(nunk);
    ExactMatrix zero(rows, cols);
    std::vector<ExactMatrix> zero_images;
    zero_images.reserve(conditions.size());
    for (const auto& c : conditions) {
        ExactMatrix img = c.map(zero);
        if (c.target && (img.rows() != c.target->rows() || img.cols() != c.target->cols()))
            throw std::invalid_argument("solve_with_scalars: condition output shape "
                                        "disagrees with its target");
        zero_images.push_back(std::move(img));
    }
    size_t total_rows = 0;
    for (const auto& img : zero_images) total_rows += img.rows() * img.cols();

    for (size_t k = 0; k < nunk; ++k) {
        std::vector<GaussianRational> col;
        col.reserve(total_rows);
        if (k < nmat) {
            ExactMatrix e(rows, cols);
            e.at(k / cols, k % cols) = 1;
            for (const auto& c : conditions) {
                ExactMatrix img = c.map(e);
                for (const auto& v : img.entries()) col.push_back(v);
            }
        } else {
            size_t which = k - nmat;  // index among targeted conditions
            size_t seen = 0;
            for (size_t ci = 0; ci < conditions.size(); ++ci) {
                const auto& c = conditions[ci];
                size_t sz = zero_images[ci].rows() * zero_images[ci].cols();
                if (c.target && seen++ == which)
                    for (const auto& v : c.target->entries()) col.push_back(-v);
                else
                    for (size_t t = 0; t < sz; ++t) col.emplace_back(0);
            }
        }
        cols_out[k] = std::move(col);
    }

    ExactMatrix sys(total_rows, nunk);
    for (size_t k = 0; k < nunk; ++k)
        for (size_t r = 0; r < total_rows; ++r) sys.at(r, k) = cols_out[k][r];
    MatrixSubspace ker = kernel(sys);
    return AugmentedSolution(rows, cols, nsc, ker);
}

}  // namespace crsym
