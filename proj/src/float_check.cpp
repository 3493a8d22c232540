#include "crsym/float_check.hpp"

#include <complex>
#include <vector>

namespace crsym {

size_t float_rank(const ExactMatrix& m, double tol) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::complex<double>>> a(rows, std::vector<std::complex<double>>(cols));
    double maxabs = 0.0;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            a[i][j] = m.at(i, j).to_complex_double();
            maxabs = std::max(maxabs, std::abs(a[i][j]));
        }
    double cutoff = tol * std::max(1.0, maxabs);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t best = rank;
        double best_mag = std::abs(a[rank][c]);
        for (size_t i = rank + 1; i < rows; ++i)
            if (std::abs(a[i][c]) > best_mag) {
                best = i;
                best_mag = std::abs(a[i][c]);
            }
        if (best_mag <= cutoff) continue;
        std::swap(a[best], a[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            std::complex<double> f = a[i][c] / a[rank][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace crsym
