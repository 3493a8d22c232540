#include "crsym/report.hpp"

#include "crsym/catalog.hpp"
#include "crsym/intersection.hpp"
#include "crsym/prolongation.hpp"

namespace crsym {

Json build_report(const SymbolSpec& spec, const ReportOptions& options) {
    spec.validate();
    auto [h, a] = build_pair(spec);
    size_t n = spec.n();
    bool regular = is_regular(h, a);
    bool nilpotent = spec.nilpotent();

    Json rep;
    rep["spec"] = to_json(spec);
    rep["n"] = n;
    rep["regular"] = regular;

    IntersectionAlgebra alg = compute_A(h, a);
    {
        Json inter;
        Json dims;
        dims["full"] = alg.full.dim();
        dims["orth"] = alg.orth.dim();
        dims["scal"] = alg.scal.dim();
        inter["dims"] = std::move(dims);
        inter["d_total"] = d_total(spec);
        inter["regular"] = regular;
        if (nilpotent)
            inter["eta_coupled"] = "nilpotent";
        else
            inter["eta_coupled"] = check_eta_coupling(alg, a);
        rep["intersection"] = std::move(inter);
    }

    CRSymbol sym = assemble_symbol(spec);
    rep["dim_g00"] = sym.g00.dim();

    SearchOptions sopt;
    sopt.limit = options.search_limit;
    sopt.max_found = options.max_found;
    std::vector<ReducedDatum> data = search(spec, sopt);
    {
        Json sr;
        sr["found_count"] = data.size();
        Json found = Json::array();
        for (const auto& d : data) found.push_back(to_json(d, options.with_float));
        sr["found"] = std::move(found);
        sr["note"] = "bounded lattice search over {A^o, A}; exhaustiveness not claimed";
        rep["reduced_search"] = std::move(sr);
    }

    Json prolongs = Json::array();
    std::vector<ProlongationReport> datum_reports;
    for (size_t k = 0; k < data.size(); ++k) {
        ReducedSymbol rs = build_g0_red(h, a, data[k]);
        ProlongationReport pr = universal(rs.space, rs.generators, options.k_max);
        Json jp = to_json(pr);
        jp["datum"] = k;
        jp["dim_g0red"] = rs.g0red.dim();
        prolongs.push_back(std::move(jp));
        datum_reports.push_back(std::move(pr));
    }
    rep["prolongation"] = std::move(prolongs);

    // bound checks
    Json bounds;
    {
        Json b;
        size_t bound = n * n - 4 * n + 6;
        b["bound"] = bound;
        b["value"] = alg.full.dim();
        b["pass"] = alg.full.dim() <= bound;
        bounds["dim_A_le_n2_4n_6"] = std::move(b);
    }
    {
        // universal prolongation of the flat symbol of this spec
        std::vector<ExactMatrix> g0 = sym.g00.basis();
        g0.push_back(sym.x_plus.matrix);
        g0.push_back(sym.x_minus.matrix);
        ProlongationReport pr = universal(sym.space, g0, options.k_max);
        Json b;
        b["bound"] = n * n + 7;
        if (pr.universal_dim) {
            b["value"] = *pr.universal_dim;
            b["pass"] = *pr.universal_dim <= n * n + 7;
        } else {
            b["value"] = "not reached";
            b["pass"] = false;
        }
        b["dims"] = pr.dims;
        bounds["flat_universal_le_n2_7"] = std::move(b);
    }
    {
        Json b;
        size_t bound = (n - 1) * (n - 1) + 7;
        b["bound"] = bound;
        if (regular || data.empty()) {
            b["pass"] = "n/a";
        } else {
            bool ok = true;
            Json values = Json::array();
            for (const auto& d : data) {
                size_t dim_red = (2 * n - 1) + d.a0.dim() + 3;
                values.push_back(dim_red);
                if (!(dim_red < bound)) ok = false;
            }
            b["values"] = std::move(values);
            b["pass"] = ok;
        }
        bounds["dim_red_lt_nm1_sq_7"] = std::move(b);
    }
    {
        Json b;
        size_t bound = d_total(spec) + 2 * n + (nilpotent ? 4 : 3);
        b["bound"] = bound;
        if (regular || data.empty()) {
            b["pass"] = "n/a";
        } else {
            bool ok = true;
            Json values = Json::array();
            for (size_t k = 0; k < data.size(); ++k) {
                if (datum_reports[k].universal_dim) {
                    values.push_back(*datum_reports[k].universal_dim);
                    if (*datum_reports[k].universal_dim > bound) ok = false;
                } else {
                    values.push_back("not reached");
                    ok = false;
                }
            }
            b["values"] = std::move(values);
            b["pass"] = ok;
        }
        bounds["universal_le_d_total_2n_slack"] = std::move(b);
    }
    rep["bounds"] = std::move(bounds);
    return rep;
}

Json report_schema() {
    static const char* text = R"({
  "type": "object",
  "required": ["spec", "n", "regular", "intersection", "dim_g00",
               "reduced_search", "prolongation", "bounds"],
  "properties": {
    "spec": {
      "type": "object",
      "required": ["blocks"],
      "properties": {
        "blocks": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["lambda", "m", "epsilon"],
            "properties": {
              "lambda": {"type": "object", "required": ["re", "im"],
                         "properties": {"re": {"type": "string"},
                                        "im": {"type": "string"}}},
              "m": {"type": "integer"},
              "epsilon": {"type": "integer", "enum": [1, -1]}
            }
          }
        }
      }
    },
    "n": {"type": "integer"},
    "regular": {"type": "boolean"},
    "intersection": {
      "type": "object",
      "required": ["dims", "d_total", "regular", "eta_coupled"],
      "properties": {
        "dims": {"type": "object", "required": ["full", "orth", "scal"],
                 "properties": {"full": {"type": "integer"},
                                "orth": {"type": "integer"},
                                "scal": {"type": "integer"}}},
        "d_total": {"type": "integer"},
        "regular": {"type": "boolean"},
        "eta_coupled": {"oneOf": [{"type": "boolean"},
                                  {"type": "string", "enum": ["nilpotent"]}]}
      }
    },
    "dim_g00": {"type": "integer"},
    "reduced_search": {
      "type": "object",
      "required": ["found_count", "found", "note"],
      "properties": {"found_count": {"type": "integer"},
                     "found": {"type": "array"},
                     "note": {"type": "string"}}
    },
    "prolongation": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["dims", "universal_dim", "first_zero", "datum", "dim_g0red"],
        "properties": {
          "dims": {"type": "array", "items": {"type": "integer"}},
          "universal_dim": {"oneOf": [{"type": "integer"}, {"type": "string"}]},
          "first_zero": {"oneOf": [{"type": "integer"}, {"type": "string"}]},
          "datum": {"type": "integer"},
          "dim_g0red": {"type": "integer"}
        }
      }
    },
    "bounds": {"type": "object"}
  }
})";
    return Json::parse(text);
}

}  // namespace crsym
