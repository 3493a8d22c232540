#include "crsym/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "crsym/float_check.hpp"
#include "crsym/intersection.hpp"
#include "crsym/prolongation.hpp"

namespace crsym {

namespace {

struct BlockType {
    GaussianRational lambda;
    size_t m;
    int epsilon;
    size_t size;
};

std::vector<GaussianRational> lambda_set() {
    GaussianRational i = GaussianRational::i();
    return {GaussianRational(0), GaussianRational(1), GaussianRational(2), GaussianRational(3),
            i, GaussianRational(2) * i, GaussianRational(1) + i};
}

std::vector<BlockType> block_types(size_t max_size) {
    std::vector<BlockType> types;
    for (const auto& lam : lambda_set()) {
        size_t unit = lam.is_real() ? 1 : 2;
        for (size_t m = 1; m * unit <= max_size; ++m)
            for (int eps : {1, -1}) types.push_back({lam, m, eps, m * unit});
    }
    return types;
}

void enumerate_rec(const std::vector<BlockType>& types, size_t first, size_t remaining,
                   std::vector<BlockSpec>& acc, std::vector<SymbolSpec>& out) {
    if (remaining == 0) {
        SymbolSpec spec{acc};
        bool a_zero = true;
        for (const auto& b : spec.blocks)
            if (!b.lambda.is_zero() || b.m > 1) a_zero = false;
        if (!a_zero) out.push_back(std::move(spec));
        return;
    }
    for (size_t t = first; t < types.size(); ++t) {
        if (types[t].size > remaining) continue;
        acc.push_back({types[t].lambda, types[t].m, types[t].epsilon});
        enumerate_rec(types, t, remaining - types[t].size, acc, out);
        acc.pop_back();
    }
}

std::vector<SymbolSpec> enumerate_specs(size_t total_size) {
    std::vector<BlockType> types = block_types(total_size);
    std::vector<SymbolSpec> out;
    std::vector<BlockSpec> acc;
    enumerate_rec(types, 0, total_size, acc, out);
    return out;
}

std::string spec_name(const SymbolSpec& spec) {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < spec.blocks.size(); ++k) {
        const auto& b = spec.blocks[k];
        if (k) os << ",";
        os << "(" << to_string(b.lambda) << "," << b.m << "," << (b.epsilon > 0 ? "+" : "-")
           << ")";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::vector<CatalogEntry> regularity_catalog() {
    std::vector<CatalogEntry> out;
    for (size_t s : {1, 2, 3})
        for (auto& spec : enumerate_specs(s)) out.push_back({spec_name(spec), std::move(spec)});
    // fixed larger entries, n-1 in {4,5,6}
    GaussianRational i = GaussianRational::i();
    std::vector<SymbolSpec> extra = {
        {{{0, 2, 1}, {0, 1, 1}, {0, 1, 1}}},
        {{{0, 2, 1}, {0, 2, -1}}},
        {{{0, 4, 1}}},
        {{{0, 3, 1}, {1, 1, 1}}},
        {{{1, 2, 1}, {1, 2, -1}}},
        {{{i, 2, 1}}},
        {{{i, 1, 1}, {i, 1, -1}}},
        {{{GaussianRational(1) + i, 1, 1}, {0, 2, 1}}},
        {{{GaussianRational(2) * i, 1, 1}, {2, 2, 1}}},
        {{{0, 2, 1}, {2, 1, 1}, {3, 1, -1}}},
        {{{0, 5, 1}}},
        {{{0, 2, 1}, {0, 2, -1}, {0, 1, 1}}},
        {{{i, 1, 1}, {2, 2, 1}, {0, 1, 1}}},
        {{{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {0, 2, 1}}},
        {{{GaussianRational(1) + i, 2, 1}, {1, 1, -1}}},
        {{{0, 6, 1}}},
        {{{0, 3, 1}, {0, 3, -1}}},
        {{{i, 1, 1}, {2 * i, 1, 1}, {1, 1, 1}, {0, 1, 1}}},
        {{{0, 2, 1}, {0, 2, 1}, {0, 2, 1}}},
        {{{GaussianRational(1) + i, 1, 1}, {GaussianRational(1) + i, 1, -1}, {0, 2, 1}}},
        {{{3, 3, 1}, {3, 2, -1}, {0, 1, 1}}},
        {{{i, 2, 1}, {i, 1, 1}}},
        {{{2, 4, 1}, {2, 1, -1}, {0, 1, 1}}},
        {{{0, 4, 1}, {1, 1, 1}, {0, 1, -1}}},
    };
    for (auto& spec : extra) out.push_back({spec_name(spec), std::move(spec)});
    return out;
}

std::vector<CatalogEntry> exhaustive_catalog_345() {
    std::vector<CatalogEntry> out;
    for (size_t s : {3, 4, 5})
        for (auto& spec : enumerate_specs(s)) out.push_back({spec_name(spec), std::move(spec)});
    return out;
}

std::vector<CatalogEntry> nonregular_catalog() {
    GaussianRational i = GaussianRational::i();
    std::vector<SymbolSpec> specs = {
        {{{1, 1, 1}, {2, 1, 1}}},                    // diagonal family (sec. 5.3 shape)
        {{{1, 1, 1}, {2, 1, 1}, {0, 1, 1}}},
        {{{2, 1, 1}, {3, 1, 1}, {0, 1, -1}}},
        {{{0, 2, 1}, {1, 1, 1}}},                    // nilpotent-block families (5.1 shape)
        {{{0, 2, 1}, {2, 1, 1}}},
        {{{0, 2, 1}, {3, 1, 1}}},
        {{{0, 2, -1}, {2, 1, 1}}},
        {{{0, 2, 1}, {2, 1, -1}}},
        {{{0, 2, 1}, {1, 1, 1}, {0, 1, 1}}},
        {{{0, 3, 1}, {2, 1, 1}}},
        {{{0, 2, 1}, {i, 1, 1}}},
        {{{0, 4, 1}}},                               // single nilpotent block, T^3 not in C*T
        {{{i, 2, 1}}},                               // leading imaginary block (5.2 shape)
        {{{GaussianRational(1) + i, 1, 1}, {GaussianRational(1) + i, 2, 1}}},
    };
    std::vector<CatalogEntry> out;
    for (auto& spec : specs) out.push_back({spec_name(spec), std::move(spec)});
    return out;
}

SymbolSpec maximal_regular_spec(size_t n) {
    if (n < 2) throw SpecError("maximal_regular_spec: n >= 2 required");
    if (n == 2) return {{{1, 1, 1}}};
    SymbolSpec spec{{{0, 2, 1}}};
    for (size_t k = 0; k + 3 < n; ++k) spec.blocks.push_back({0, 1, 1});
    return spec;
}

bool is_maximal_shape(const SymbolSpec& spec) {
    size_t twos = 0, ones = 0;
    for (const auto& b : spec.blocks) {
        if (!b.lambda.is_zero()) return false;
        if (b.m == 2)
            ++twos;
        else if (b.m == 1)
            ++ones;
        else
            return false;
    }
    return twos == 1;
}

void parallel_for(size_t count, unsigned jobs, const std::function<void(size_t)>& fn) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, count ? count : 1);
    if (jobs <= 1) {
        for (size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mutex;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t k = next.fetch_add(1);
                if (k >= count || failed.load()) return;
                try {
                    fn(k);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!failed.exchange(true)) first_error = e.what();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed) throw std::runtime_error("parallel_for worker failed: " + first_error);
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

CriterionResult criterion_regularity(unsigned jobs) {
    auto t0 = Clock::now();
    auto catalog = regularity_catalog();
    std::vector<std::string> failures(catalog.size());
    parallel_for(catalog.size(), jobs, [&](size_t k) {
        const auto& entry = catalog[k];
        CRSymbol sym = assemble_symbol(entry.spec);
        bool lie = is_lie_algebra(sym);
        bool reg = is_regular(sym.h, sym.a);
        if (lie != reg) failures[k] = entry.name;
    });
    CriterionResult r{1, "regularity equivalence", true, catalog.size(), "", 0};
    size_t bad = 0;
    std::string first;
    for (const auto& f : failures)
        if (!f.empty() && bad++ == 0) first = f;
    r.pass = (bad == 0) && catalog.size() >= 200;
    std::ostringstream os;
    os << catalog.size() << " specs";
    if (bad) os << "; " << bad << " mismatches, first at " << first;
    if (catalog.size() < 200) os << "; catalog too small";
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CriterionResult criterion_intersection(unsigned jobs) {
    auto t0 = Clock::now();
    auto catalog = regularity_catalog();
    std::vector<std::string> failures(catalog.size());
    parallel_for(catalog.size(), jobs, [&](size_t k) {
        const auto& entry = catalog[k];
        auto [h, a] = build_pair(entry.spec);
        IntersectionAlgebra alg = compute_A(h, a);
        std::ostringstream why;
        if (alg.orth.dim() != d_total(entry.spec))
            why << "dim A^o=" << alg.orth.dim() << " != d_total=" << d_total(entry.spec) << "; ";
        bool nilp = entry.spec.nilpotent();
        size_t scal_dim = alg.full.dim() - alg.orth.dim();
        if (nilp != (scal_dim == 2) || (!nilp && scal_dim != 1))
            why << "scaling dichotomy broke (scal=" << scal_dim << ", nilpotent=" << nilp
                << "); ";
        if (closed_form_A_orth(entry.spec) != alg.orth) why << "closed form != solver A^o; ";
        if (!why.str().empty()) failures[k] = entry.name + ": " + why.str();
    });
    CriterionResult r{2, "intersection-algebra dimensions and closed form", true, catalog.size(),
                      "", 0};
    size_t bad = 0;
    std::string first;
    for (const auto& f : failures)
        if (!f.empty() && bad++ == 0) first = f;
    r.pass = (bad == 0);
    std::ostringstream os;
    os << catalog.size() << " specs";
    if (bad) os << "; " << bad << " failures, first: " << first;
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CriterionResult criterion_maximality(unsigned jobs) {
    auto t0 = Clock::now();
    auto catalog = exhaustive_catalog_345();
    std::vector<std::string> failures(catalog.size());
    parallel_for(catalog.size(), jobs, [&](size_t k) {
        const auto& entry = catalog[k];
        size_t n = entry.spec.n();
        size_t bound = n * n - 4 * n + 6;
        auto [h, a] = build_pair(entry.spec);
        IntersectionAlgebra alg = compute_A(h, a);
        size_t dim = alg.full.dim();
        bool maximal_shape = is_maximal_shape(entry.spec);
        if (dim > bound)
            failures[k] = entry.name + ": dim A exceeds bound";
        else if ((dim == bound) != maximal_shape)
            failures[k] = entry.name + ": equality case mismatch";
    });
    CriterionResult r{3, "maximal-A lemma (exhaustive n-1 in {3,4,5})", true, catalog.size(), "",
                      0};
    size_t bad = 0;
    std::string first;
    for (const auto& f : failures)
        if (!f.empty() && bad++ == 0) first = f;
    r.pass = (bad == 0);
    std::ostringstream os;
    os << catalog.size() << " specs";
    if (bad) os << "; " << bad << " failures, first: " << first;
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CriterionResult criterion_maximal_prolongation(unsigned jobs) {
    auto t0 = Clock::now();
    CriterionResult r{4, "prolongation of maximal regular symbols", true, 0, "", 0};
    std::ostringstream os;
    struct Case {
        size_t n;
        size_t expected;
    };
    std::vector<Case> cases{{2, 10}, {3, 16}, {4, 23}, {5, 32}};
    std::vector<std::string> lines(cases.size());
    std::vector<char> ok(cases.size(), 0);
    parallel_for(cases.size(), jobs, [&](size_t k) {
        const Case& c = cases[k];
        SymbolSpec spec = maximal_regular_spec(c.n);
        CRSymbol sym = assemble_symbol(spec);
        std::vector<ExactMatrix> g0 = sym.g00.basis();
        g0.push_back(sym.x_plus.matrix);
        g0.push_back(sym.x_minus.matrix);
        ProlongationReport rep = universal(sym.space, g0, 3);
        bool pass = rep.universal_dim && *rep.universal_dim == c.expected &&
                    rep.dims.size() > 3 && rep.dims[3] == 0;
        ok[k] = pass ? 1 : 0;
        std::ostringstream line;
        line << "n=" << c.n << " expected " << c.expected << ", got ";
        if (rep.universal_dim)
            line << *rep.universal_dim;
        else
            line << "no finite universal dim";
        line << " (dims";
        for (size_t d : rep.dims) line << " " << d;
        line << ")";
        lines[k] = line.str();
    });
    r.checked = cases.size();
    bool all = true;
    for (size_t k = 0; k < cases.size(); ++k) {
        if (!ok[k]) all = false;
        if (k) os << "; ";
        os << lines[k];
    }
    r.pass = all;
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CriterionResult criterion_nonregular_vanishing(unsigned jobs) {
    auto t0 = Clock::now();
    auto catalog = nonregular_catalog();
    struct Row {
        std::string name;
        bool nonregular = false;
        size_t found = 0;
        bool ok = true;
        std::string why;
    };
    std::vector<Row> rows(catalog.size());
    parallel_for(catalog.size(), jobs, [&](size_t k) {
        const auto& entry = catalog[k];
        Row row;
        row.name = entry.name;
        auto [h, a] = build_pair(entry.spec);
        row.nonregular = !is_regular(h, a);
        if (!row.nonregular) {
            row.ok = false;
            row.why = "spec unexpectedly regular";
            rows[k] = row;
            return;
        }
        SearchOptions opt;
        opt.max_found = 2;
        std::vector<ReducedDatum> data = search(entry.spec, opt);
        row.found = data.size();
        size_t n = entry.spec.n();
        size_t dt = d_total(entry.spec);
        size_t slack = entry.spec.nilpotent() ? 4 : 3;
        IntersectionAlgebra alg = compute_A(h, a);
        for (const auto& datum : data) {
            // contrapositive of "Omega in A implies regular"
            if (alg.full.contains(datum.omega)) {
                row.ok = false;
                row.why = "verified datum has Omega inside A on a non-regular spec";
                break;
            }
            if (!first_prolongation_vanishes(h, a, datum)) {
                row.ok = false;
                row.why = "g1 != 0";
                break;
            }
            size_t dim_g0red = datum.a0.dim() + 3;
            size_t dim_red = (2 * n - 1) + dim_g0red;
            if (!(dim_red < (n - 1) * (n - 1) + 7)) {
                row.ok = false;
                row.why = "(n-1)^2+7 bound violated";
                break;
            }
            if (!(dim_red <= dt + 2 * n + slack)) {
                row.ok = false;
                row.why = "d_total bound violated";
                break;
            }
        }
        rows[k] = row;
    });
    size_t with_data = 0;
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& row : rows) {
        if (row.found > 0) ++with_data;
        if (!row.ok) {
            all_ok = false;
            os << row.name << ": " << row.why << "; ";
        }
    }
    std::ostringstream detail;
    detail << rows.size() << " specs, " << with_data << " with found data, "
           << rows.size() - with_data << " skipped";
    if (!os.str().empty()) detail << "; failures: " << os.str();
    CriterionResult r{5, "non-regular first prolongation vanishes", all_ok && with_data >= 5,
                      catalog.size(), detail.str(), elapsed(t0)};
    return r;
}

CriterionResult criterion_property_suites(unsigned jobs) {
    auto t0 = Clock::now();
    std::ostringstream why;
    bool pass = true;
    auto check = [&](bool c, const std::string& what) {
        if (!c) {
            pass = false;
            why << what << "; ";
        }
    };

    // Leibniz exactness on returned prolongation elements (regular flat n=3
    // carried to k=2, plus a non-regular reduced symbol to k=1).
    {
        CRSymbol sym = assemble_symbol(maximal_regular_spec(3));
        std::vector<ExactMatrix> g0 = sym.g00.basis();
        g0.push_back(sym.x_plus.matrix);
        g0.push_back(sym.x_minus.matrix);
        GradedState st = make_graded_state(sym.space, g0);
        prolong_step(st);
        prolong_step(st);
        check(leibniz_holds(st, 1) && leibniz_holds(st, 2), "Leibniz exactness (flat n=3)");
    }
    {
        SymbolSpec spec{{{0, 2, 1}, {2, 1, 1}}};
        SearchOptions opt;
        opt.max_found = 1;
        auto data = search(spec, opt);
        check(!data.empty(), "search found no datum for [(0,2),(2,1)]");
        if (!data.empty()) {
            auto [h, a] = build_pair(spec);
            ReducedSymbol rs = build_g0_red(h, a, data[0]);
            GradedState st = make_graded_state(rs.space, rs.generators);
            prolong_step(st);
            check(leibniz_holds(st, 1), "Leibniz exactness (reduced, non-regular)");
            // sigma invariance of A0 and of g_0^red, and the full splitting
            bool a0_inv = true;
            for (const auto& al : data[0].a0.basis())
                if (!data[0].a0.contains(sigma_tilde(h, al))) a0_inv = false;
            check(a0_inv, "A0 not sigma-tilde invariant");
            check(splitting_report(rs).all(), "g0red splitting properties failed");
        }
    }

    // involution and sigma invariances over a catalog slice; commutator
    // closure of A; eta coupling for non-nilpotent A.
    {
        auto catalog = regularity_catalog();
        std::vector<std::string> errs(catalog.size());
        parallel_for(catalog.size(), jobs, [&](size_t k) {
            const auto& entry = catalog[k];
            if (entry.spec.dim() > 4) return;  // keep the suite quick
            CRSymbol sym = assemble_symbol(entry.spec);
            std::ostringstream e;
            if (involution(sym.x_plus.matrix) != sym.x_minus.matrix) e << "X- != inv(X+); ";
            for (const auto& b : sym.g00.basis())
                if (!sym.g00.contains(involution(b))) e << "g00 not sigma-invariant; ";
            IntersectionAlgebra alg = compute_A(sym.h, sym.a);
            const auto& basis = alg.full.basis();
            for (size_t x = 0; x < basis.size(); ++x)
                for (size_t y = x + 1; y < basis.size(); ++y)
                    if (!alg.full.contains(commutator(basis[x], basis[y]))) {
                        e << "A not commutator-closed; ";
                        break;
                    }
            if (!check_eta_coupling(alg, sym.a)) e << "eta != eta' for non-nilpotent A; ";
            errs[k] = e.str();
        });
        for (size_t k = 0; k < errs.size(); ++k)
            if (!errs[k].empty()) check(false, catalog[k].name + ": " + errs[k]);
    }

    // exact vs floating-point rank cross-validation
    {
        std::mt19937_64 rng(20250810);
        size_t bad = 0;
        for (int trial = 0; trial < 100; ++trial) {
            size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
            ExactMatrix m(rows, cols);
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) {
                    long re = static_cast<long>(rng() % 11) - 5;
                    long im = static_cast<long>(rng() % 11) - 5;
                    m.at(i, j) = GaussianRational(Rational(re), Rational(im));
                }
            // plant rank deficiency in half of the trials
            if (trial % 2 == 0 && rows >= 2) {
                for (size_t j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) + m.at(rows / 2, j);
            }
            size_t exact = rref(m).rank;
            size_t approx = float_rank(m, 1e-9);
            if (exact != approx) ++bad;
        }
        check(bad == 0, "float cross-validation disagreed on " + std::to_string(bad) + " cases");
    }

    CriterionResult r{6, "property suites", pass, 0, pass ? "all properties hold" : why.str(),
                      elapsed(t0)};
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, unsigned jobs) {
    switch (id) {
        case 1: return criterion_regularity(jobs);
        case 2: return criterion_intersection(jobs);
        case 3: return criterion_maximality(jobs);
        case 4: return criterion_maximal_prolongation(jobs);
        case 5: return criterion_nonregular_vanishing(jobs);
        case 6: return criterion_property_suites(jobs);
        default: throw std::invalid_argument("run_criterion: id must be 1..6");
    }
}

std::vector<int> criteria_matching(const std::string& filter) {
    struct Tag {
        int id;
        const char* key;
    };
    static const Tag tags[] = {{1, "regularity"}, {2, "intersection"}, {3, "maximality"},
                               {4, "prolongation"}, {5, "nonregular"}, {6, "properties"}};
    std::vector<int> out;
    for (const auto& t : tags) {
        if (filter.empty() || std::string(t.key).find(filter) != std::string::npos ||
            filter == std::to_string(t.id))
            out.push_back(t.id);
    }
    return out;
}

}  // namespace crsym
