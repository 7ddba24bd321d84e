#include "sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

namespace qst {

namespace {

int thread_budget(const SweepSpec& spec, size_t work_items) {
    int budget = spec.threads > 0 ? spec.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (budget < 1) budget = 1;
    if (const char* cap = std::getenv("QST_THREADS")) {
        const int parsed = std::atoi(cap);
        if (parsed >= 1 && parsed < budget) budget = parsed;
    }
    if (static_cast<size_t>(budget) > work_items) budget = static_cast<int>(work_items);
    return budget;
}

void validate_ranges(const SweepSpec& spec, CaseKind kind) {
    if (spec.m_lo > spec.m_hi || spec.n_lo > spec.n_hi || spec.m_lo < 1 || spec.n_lo < 1)
        fail(Status::InvalidConfig, "sweep ranges must be non-empty and positive");
    if (kind == CaseKind::SamePartition && spec.m_lo < 2)
        fail(Status::InvalidConfig,
             "same-partition sweeps need m >= 2 (canonical endpoints 0 and 1)");
    if (kind == CaseKind::DiffPartition && spec.backend != Backend::FullSpace &&
        (spec.m_lo < 2 || spec.n_lo < 2))
        fail(Status::InvalidConfig,
             "different-partition sweeps on the subspace backend need m, n >= 2");
}

TransferConfig point_config(const SweepSpec& spec, CaseKind kind, int m, int n) {
    TransferConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.sender = 0;
    cfg.receiver = kind == CaseKind::SamePartition ? 1 : m;
    cfg.eps1 = spec.eps1;
    cfg.eps2 = spec.eps2;
    cfg.backend = spec.backend;
    cfg.pairing = spec.pairing;
    cfg.free_angle = spec.free_angle;
    return cfg;
}

std::string case_suffixed_path(const std::string& path, CaseKind kind) {
    const std::string suffix = kind == CaseKind::SamePartition ? "_same" : "_diff";
    const size_t slash = path.find_last_of("/\\");
    const size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

}  // namespace

std::vector<SweepPoint> sweep_grid(const SweepSpec& spec, CaseKind kind) {
    validate_ranges(spec, kind);
    std::vector<SweepPoint> grid;
    for (int m = spec.m_lo; m <= spec.m_hi; ++m)
        for (int n = spec.n_lo; n <= spec.n_hi; ++n) grid.push_back({m, n, 0.0});

    const int workers = thread_budget(spec, grid.size());
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                grid[i].fidelity =
                    run_transfer(point_config(spec, kind, grid[i].m, grid[i].n)).fidelity;
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return grid;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string out = "m,n,F\n";
    char line[96];
    for (const SweepPoint& p : points) {
        std::snprintf(line, sizeof(line), "%d,%d,%.17g\n", p.m, p.n, p.fidelity);
        out += line;
    }
    return out;
}

std::vector<std::string> run_sweep(const SweepSpec& spec, const std::string& out_path) {
    if (out_path.empty()) fail(Status::InvalidConfig, "sweep needs an output path");
    std::vector<CaseKind> kinds;
    if (spec.cases != SweepCase::Diff) kinds.push_back(CaseKind::SamePartition);
    if (spec.cases != SweepCase::Same) kinds.push_back(CaseKind::DiffPartition);

    std::vector<std::string> written;
    for (CaseKind kind : kinds) {
        const std::string path =
            spec.cases == SweepCase::Both ? case_suffixed_path(out_path, kind) : out_path;
        const std::string body = sweep_csv(sweep_grid(spec, kind));
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << body) || !file.flush()) {
            file.close();
            std::remove(path.c_str());
            fail(Status::IoError, "failed to write sweep output " + path);
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace qst
