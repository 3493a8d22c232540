#ifndef CRSYM_CATALOG_HPP
#define CRSYM_CATALOG_HPP

#include <functional>
#include <string>

#include "crsym/canonical.hpp"

namespace crsym {

struct CatalogEntry {
    std::string name;
    SymbolSpec spec;
};

/// Deterministic catalog for the regularity / intersection-algebra sweeps:
/// every canonical spec with n-1 <= 3 over lambda in {0,1,2,3,i,2i,1+i} and
/// both signs, plus a fixed slice of larger specs up to n-1 = 6.
std::vector<CatalogEntry> regularity_catalog();

/// Every canonical spec with n-1 in {3,4,5}, same lambda set, both signs.
std::vector<CatalogEntry> exhaustive_catalog_345();

/// Non-regular specs for the reduced-datum search, including the diagonal
/// family and nilpotent-block families.
std::vector<CatalogEntry> nonregular_catalog();

/// The maximally symmetric model spec: [(1,1,+1)] for n = 2, else
/// (0,2,+1) + (0,1,+1)^(n-3).
SymbolSpec maximal_regular_spec(size_t n);

/// True iff the block multiset is {(0,2,.)} + {(0,1,.)}^(n-3) in any order
/// and with any signs.
bool is_maximal_shape(const SymbolSpec& spec);

/// Run catalog items in a worker pool; fn(index) must be thread-safe.
void parallel_for(size_t count, unsigned jobs, const std::function<void(size_t)>& fn);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    size_t checked = 0;
    std::string detail;
    double seconds = 0.0;
};

/// Acceptance criteria 1..6. jobs = 0 means hardware concurrency.
CriterionResult run_criterion(int id, unsigned jobs);
std::vector<int> criteria_matching(const std::string& filter);

}  // namespace crsym

#endif
