#ifndef CRSYM_CANONICAL_HPP
#define CRSYM_CANONICAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "crsym/matrix.hpp"

namespace crsym {

/// Primitive matrix families of the canonical form.
enum class Primitive { J, S, T, M, N, IAlt, D };

/// Build one primitive:
///   J     m x m Jordan block with eigenvalue lambda
///   S     m x m anti-diagonal ones
///   T     J with lambda = 0
///   M     J_{lambda,m} for real lambda, else 2m x 2m [[0, J_{lambda^2,m}],[I, 0]]
///   N     S_m for real lambda, else S_{2m}
///   IAlt  diag(+1,-1,+1,...) starting at +1
///   D     Diag(m/2, m/2-1, ..., m/2-m+1)
/// lambda is ignored for kinds S, T, IAlt, D. Kind M enforces the quadrant
/// convention Re(lambda) >= 0, Im(lambda) >= 0.
ExactMatrix build_primitive(Primitive kind, const GaussianRational& lambda, size_t m);

struct BlockSpec {
    GaussianRational lambda;
    size_t m = 1;
    int epsilon = 1;

    /// Contribution to n-1: m for real lambda, 2m otherwise.
    size_t size() const { return lambda.is_real() ? m : 2 * m; }
};

struct SymbolSpec {
    std::vector<BlockSpec> blocks;

    size_t dim() const {  // n - 1
        size_t s = 0;
        for (const auto& b : blocks) s += b.size();
        return s;
    }
    size_t n() const { return dim() + 1; }
    bool nilpotent() const {  // A nilpotent iff every lambda vanishes
        for (const auto& b : blocks)
            if (!b.lambda.is_zero()) return false;
        return true;
    }
    /// Throws SpecError when a block violates the conventions (m >= 1,
    /// epsilon in {-1,1}, Re >= 0 and Im >= 0, at least one block).
    void validate() const;
};

/// H = direct sum of eps_i N_{lambda_i, m_i}, A = direct sum of M_{lambda_i, m_i}.
std::pair<ExactMatrix, ExactMatrix> build_pair(const SymbolSpec& spec);

struct PairDiagnostic {
    bool ok = true;
    std::string message;
};

/// H Hermitian nondegenerate, H*conj(A) symmetric, A*H^{-1} symmetric.
PairDiagnostic validate_pair(const ExactMatrix& h, const ExactMatrix& a);

/// Regularity: A*conj(A)*A lies in C*A (zero counts).
bool is_regular(const ExactMatrix& h, const ExactMatrix& a);

/// Per-block-pair dimension count d(i,j), 0-based indices, i <= j.
size_t d_pair(const SymbolSpec& spec, size_t i, size_t j);
size_t d_total(const SymbolSpec& spec);

}  // namespace crsym

#endif
