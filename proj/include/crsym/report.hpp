#ifndef CRSYM_REPORT_HPP
#define CRSYM_REPORT_HPP

#include "crsym/json_io.hpp"

namespace crsym {

struct ReportOptions {
    size_t k_max = 6;
    size_t search_limit = 20000;
    size_t max_found = 3;
    bool with_float = false;
};

/// Full machine-readable report for one spec: regularity, intersection
/// algebra dimensions, d_total, dim g00, reduced-datum search summary,
/// prolongation per found datum, and the paper's bound checks.
Json build_report(const SymbolSpec& spec, const ReportOptions& options);

/// Schema the reports validate against (shipped copy lives in data/).
Json report_schema();

}  // namespace crsym

#endif
