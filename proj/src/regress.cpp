#include "ado/regress.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "ado/tables.hpp"

namespace ado {

std::string format_top_term(const CycloNum& c, int exp2) {
    std::string x = exp2 % 2 == 0 ? "x^" + std::to_string(exp2 / 2) : "x^(" + std::to_string(exp2) + "/2)";
    return "(" + format_coeff(c) + ")" + x;
}

namespace {

void run_jobs(std::vector<std::function<RegressLine()>>& jobs, std::vector<RegressLine>& out, int workers) {
    out.resize(jobs.size());
    if (workers <= 0) workers = default_workers();
    workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto work = [&] {
        for (size_t i = next++; i < jobs.size(); i = next++) {
            try {
                out[i] = jobs[i]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::sort(out.begin(), out.end(), [](const RegressLine& a, const RegressLine& b) {
        return a.knot != b.knot ? a.knot < b.knot : a.p < b.p;
    });
}

bool selected(const std::vector<std::string>& subset, const std::string& name) {
    return subset.empty() || std::find(subset.begin(), subset.end(), name) != subset.end();
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<RegressLine> regress_table1(const std::vector<KnotRecord>& cat, const std::vector<std::string>& subset,
                                        int workers) {
    std::vector<std::function<RegressLine()>> jobs;
    for (const Table1Row& row : table1()) {
        if (!selected(subset, row.name)) continue;
        const KnotRecord& rec = find_record(cat, row.name);
        jobs.push_back([&rec, &row] {
            const auto t0 = std::chrono::steady_clock::now();
            const AdoResult r = compute_ado(4, rec, 1);
            const AdoPoly want = table1_poly(row);
            return RegressLine{row.name, 4, r.poly == want && r.checks.all(), pretty_positive(want), pretty_positive(r.poly), since(t0)};
        });
    }
    std::vector<RegressLine> out;
    run_jobs(jobs, out, workers);
    return out;
}

std::vector<RegressLine> regress_table2(const std::vector<KnotRecord>& cat, const std::vector<std::string>& subset,
                                        const std::vector<int>& ps, int workers) {
    std::vector<std::function<RegressLine()>> jobs;
    for (const Table2Row& row : table2()) {
        if (!selected(subset, row.name)) continue;
        const KnotRecord& rec = find_record(cat, row.name);
        for (int p : ps) {
            if (p != 3 && p != 4) throw Error(ErrorKind::InvalidArgument, "table 2 lists p = 3 and p = 4 only");
            jobs.push_back([&rec, &row, p] {
                const auto t0 = std::chrono::steady_clock::now();
                const AdoResult r = compute_ado(p, rec, 1);
                const RingCtx& ring = RingCtx::get(p);
                const CycloNum want = q_polynomial(ring, p == 3 ? row.top_p3 : row.top_p4);
                const int want_exp2 = 2 * row.genus * (p - 1);
                const DegreeData d = degree_data(r.poly);
                return RegressLine{row.name, p, d.top_coeff == want && d.max_exp2 == want_exp2 && r.checks.all(),
                                   format_top_term(want, want_exp2), format_top_term(d.top_coeff, d.max_exp2), since(t0)};
            });
        }
    }
    std::vector<RegressLine> out;
    run_jobs(jobs, out, workers);
    return out;
}

}  // namespace ado
