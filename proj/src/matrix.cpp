#include "crsym/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace crsym {

namespace {
void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}
}  // namespace

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ExactMatrix: ragged initializer");
        for (const auto& v : r) e_.push_back(v);
    }
}

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool ExactMatrix::is_hermitian() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].conj();
    return m;
}

ExactMatrix ExactMatrix::conj_transpose() const { return conj().transpose(); }

ExactMatrix ExactMatrix::inverse() const {
    require(is_square(), "inverse: matrix not square");
    size_t n = rows_;
    ExactMatrix a(*this);
    ExactMatrix inv = identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        GaussianRational d = a.at(col, col);
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            GaussianRational f = a.at(i, col);
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

ExactMatrix ExactMatrix::block(size_t i0, size_t j0, size_t r, size_t c) const {
    require(i0 + r <= rows_ && j0 + c <= cols_, "block: out of range");
    ExactMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

void ExactMatrix::set_block(size_t i0, size_t j0, const ExactMatrix& m) {
    require(i0 + m.rows() <= rows_ && j0 + m.cols() <= cols_, "set_block: out of range");
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "operator+: shape mismatch");
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "operator-: shape mismatch");
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
    for (auto& v : e_) v *= s;
    return *this;
}

ExactMatrix operator-(const ExactMatrix& a) {
    ExactMatrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = -a.e_[k];
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.cols_ == b.rows_, "operator*: shape mismatch");
    ExactMatrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const GaussianRational& bkj = b.at(k, j);
                if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << to_string(at(i, j));
        }
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

ExactMatrix block_diag(const std::vector<ExactMatrix>& blocks) {
    size_t n = 0;
    for (const auto& b : blocks) {
        require(b.is_square(), "block_diag: blocks must be square");
        n += b.rows();
    }
    ExactMatrix m(n, n);
    size_t off = 0;
    for (const auto& b : blocks) {
        m.set_block(off, off, b);
        off += b.rows();
    }
    return m;
}

bool is_nilpotent(const ExactMatrix& a) {
    if (!a.is_square()) return false;
    ExactMatrix p = a;
    for (size_t k = 1; k <= a.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * a;
    }
    return p.is_zero();
}

std::optional<GaussianRational> proportionality_ratio(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    GaussianRational c;
    bool found = false;
    for (size_t i = 0; i < a.rows() && !found; ++i)
        for (size_t j = 0; j < a.cols() && !found; ++j)
            if (!a.at(i, j).is_zero()) {
                c = b.at(i, j) / a.at(i, j);
                found = true;
            }
    if (!found) return b.is_zero() ? std::optional<GaussianRational>(GaussianRational(0)) : std::nullopt;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (b.at(i, j) != c * a.at(i, j)) return std::nullopt;
    return c;
}

}  // namespace crsym
