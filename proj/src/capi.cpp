#include "qst/qst.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <string>

#include "error.hpp"
#include "sweep.hpp"
#include "transfer.hpp"
#include "verify.hpp"
#include "walk.hpp"

namespace {

thread_local std::string g_last_error;

qst_status status_to_c(qst::Status s) {
    switch (s) {
        case qst::Status::Ok: return QST_OK;
        case qst::Status::InvalidArgument: return QST_ERR_INVALID_ARGUMENT;
        case qst::Status::OutOfRange: return QST_ERR_OUT_OF_RANGE;
        case qst::Status::NonAdjacent: return QST_ERR_NON_ADJACENT;
        case qst::Status::InvalidEpsilon: return QST_ERR_INVALID_EPSILON;
        case qst::Status::BadParity: return QST_ERR_BAD_PARITY;
        case qst::Status::DegenerateSize: return QST_ERR_DEGENERATE_SIZE;
        case qst::Status::InvalidConfig: return QST_ERR_INVALID_CONFIG;
        case qst::Status::SpecMismatch: return QST_ERR_SPEC_MISMATCH;
        case qst::Status::DimensionMismatch: return QST_ERR_DIMENSION_MISMATCH;
        case qst::Status::UnsupportedBasis: return QST_ERR_UNSUPPORTED_BASIS;
        case qst::Status::IoError: return QST_ERR_IO;
        case qst::Status::Internal: return QST_ERR_INTERNAL;
    }
    return QST_ERR_INTERNAL;
}

template <typename Fn>
qst_status guarded(Fn&& fn) {
    try {
        fn();
        return QST_OK;
    } catch (const qst::Error& e) {
        g_last_error = e.what();
        return status_to_c(e.status());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QST_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QST_ERR_INTERNAL;
    }
}

qst_status arg_error(const char* msg) {
    g_last_error = msg;
    return QST_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct qst_config {
    qst::TransferConfig native;
    std::optional<std::string> state_dump;
};

extern "C" {

const char* qst_version(void) { return "1.0.0"; }

const char* qst_status_name(qst_status status) {
    switch (status) {
        case QST_OK: return "ok";
        case QST_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case QST_ERR_OUT_OF_RANGE: return "out_of_range";
        case QST_ERR_NON_ADJACENT: return "non_adjacent";
        case QST_ERR_INVALID_EPSILON: return "invalid_epsilon";
        case QST_ERR_BAD_PARITY: return "bad_parity";
        case QST_ERR_DEGENERATE_SIZE: return "degenerate_size";
        case QST_ERR_INVALID_CONFIG: return "invalid_config";
        case QST_ERR_SPEC_MISMATCH: return "spec_mismatch";
        case QST_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
        case QST_ERR_UNSUPPORTED_BASIS: return "unsupported_basis";
        case QST_ERR_IO: return "io_error";
        case QST_ERR_INTERNAL: return "internal";
        case QST_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    }
    return "unknown";
}

const char* qst_last_error(void) { return g_last_error.c_str(); }

qst_config* qst_config_create(void) {
    try {
        return new qst_config{};
    } catch (...) {
        return nullptr;
    }
}

void qst_config_destroy(qst_config* cfg) { delete cfg; }

qst_status qst_config_set_graph(qst_config* cfg, int m, int n) {
    if (!cfg) return arg_error("null config");
    if (m < 1 || n < 1) return arg_error("partition sizes must be at least 1");
    cfg->native.m = m;
    cfg->native.n = n;
    return QST_OK;
}

qst_status qst_config_set_endpoints(qst_config* cfg, int sender, int receiver) {
    if (!cfg) return arg_error("null config");
    cfg->native.sender = sender;
    cfg->native.receiver = receiver;
    return QST_OK;
}

qst_status qst_config_set_epsilons(qst_config* cfg, double eps1, double eps2) {
    if (!cfg) return arg_error("null config");
    cfg->native.eps1 = eps1;
    cfg->native.eps2 = eps2;
    return QST_OK;
}

qst_status qst_config_set_backend(qst_config* cfg, qst_backend backend) {
    if (!cfg) return arg_error("null config");
    switch (backend) {
        case QST_BACKEND_FULL: cfg->native.backend = qst::Backend::FullSpace; break;
        case QST_BACKEND_SUBSPACE: cfg->native.backend = qst::Backend::Subspace; break;
        case QST_BACKEND_BOTH: cfg->native.backend = qst::Backend::Both; break;
        default: return arg_error("unknown backend");
    }
    return QST_OK;
}

qst_status qst_config_set_pairing(qst_config* cfg, qst_pairing pairing) {
    if (!cfg) return arg_error("null config");
    switch (pairing) {
        case QST_PAIRING_BOX: cfg->native.pairing = qst::Pairing::AlgorithmBox; break;
        case QST_PAIRING_THEOREM: cfg->native.pairing = qst::Pairing::TheoremProof; break;
        default: return arg_error("unknown pairing");
    }
    return QST_OK;
}

qst_status qst_config_set_free_angle(qst_config* cfg, double angle) {
    if (!cfg) return arg_error("null config");
    cfg->native.free_angle = angle;
    return QST_OK;
}

qst_status qst_config_set_steps(qst_config* cfg, int h1, int h2) {
    if (!cfg) return arg_error("null config");
    if (h1 < 0 || h2 < 0) return arg_error("step counts must be nonnegative");
    cfg->native.h1_override = h1 > 0 ? std::optional<int>(h1) : std::nullopt;
    cfg->native.h2_override = h2 > 0 ? std::optional<int>(h2) : std::nullopt;
    return QST_OK;
}

qst_status qst_config_set_state_dump(qst_config* cfg, const char* path) {
    if (!cfg) return arg_error("null config");
    if (path)
        cfg->state_dump = path;
    else
        cfg->state_dump.reset();
    return QST_OK;
}

qst_status qst_run(const qst_config* cfg, qst_report* report) {
    if (!cfg || !report) return arg_error("null config or report");
    return guarded([&] {
        qst::StateVector final_state{qst::BipartiteSpec(1, 1), {}};
        const bool want_state = cfg->state_dump.has_value();
        const qst::FidelityReport rep =
            qst::run_transfer(cfg->native, want_state ? &final_state : nullptr);
        if (want_state) {
            std::ofstream out(*cfg->state_dump, std::ios::binary | std::ios::trunc);
            if (!out) qst::fail(qst::Status::IoError, "cannot open " + *cfg->state_dump);
            qst::write_state_csv(final_state, out);
            out.flush();
            if (!out) qst::fail(qst::Status::IoError, "cannot write " + *cfg->state_dump);
        }
        report->transfer_case = rep.transfer_case == qst::CaseKind::SamePartition
                                    ? QST_CASE_SAME_PARTITION
                                    : QST_CASE_DIFF_PARTITION;
        report->m = rep.m;
        report->n = rep.n;
        report->sender = rep.sender;
        report->receiver = rep.receiver;
        report->eps1 = rep.eps1;
        report->eps2 = rep.eps2;
        report->h1 = rep.h1;
        report->h2 = rep.h2;
        report->f1 = rep.f1;
        report->f2 = rep.f2;
        report->fidelity = rep.fidelity;
        report->bound = rep.bound;
        report->bound_satisfied = rep.bound_satisfied ? 1 : 0;
        report->t2_norm_sq = rep.t2_norm_sq;
        report->backend_disagreement = rep.backend_disagreement;
    });
}

const char* qst_report_csv_header(void) {
    static const std::string header = qst::report_csv_header();
    return header.c_str();
}

qst_status qst_report_to_csv(const qst_report* report, char* buf, size_t cap) {
    if (!report || !buf) return arg_error("null report or buffer");
    qst::FidelityReport rep;
    rep.transfer_case = report->transfer_case == QST_CASE_SAME_PARTITION
                            ? qst::CaseKind::SamePartition
                            : qst::CaseKind::DiffPartition;
    rep.m = report->m;
    rep.n = report->n;
    rep.sender = report->sender;
    rep.receiver = report->receiver;
    rep.eps1 = report->eps1;
    rep.eps2 = report->eps2;
    rep.h1 = report->h1;
    rep.h2 = report->h2;
    rep.f1 = report->f1;
    rep.f2 = report->f2;
    rep.fidelity = report->fidelity;
    rep.bound = report->bound;
    rep.bound_satisfied = report->bound_satisfied != 0;
    rep.t2_norm_sq = report->t2_norm_sq;
    rep.backend_disagreement = report->backend_disagreement;
    const std::string row = qst::report_to_csv(rep);
    if (row.size() + 1 > cap) {
        g_last_error = "csv row needs " + std::to_string(row.size() + 1) + " bytes";
        return QST_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, row.c_str(), row.size() + 1);
    return QST_OK;
}

qst_status qst_sweep(const qst_sweep_spec* spec, const char* out_path) {
    if (!spec || !out_path) return arg_error("null sweep spec or path");
    return guarded([&] {
        qst::SweepSpec native;
        native.m_lo = spec->m_lo;
        native.m_hi = spec->m_hi;
        native.n_lo = spec->n_lo;
        native.n_hi = spec->n_hi;
        native.eps1 = spec->eps1;
        native.eps2 = spec->eps2;
        switch (spec->cases) {
            case QST_SWEEP_SAME: native.cases = qst::SweepCase::Same; break;
            case QST_SWEEP_DIFF: native.cases = qst::SweepCase::Diff; break;
            case QST_SWEEP_BOTH: native.cases = qst::SweepCase::Both; break;
            default: qst::fail(qst::Status::InvalidArgument, "unknown sweep case");
        }
        switch (spec->backend) {
            case QST_BACKEND_FULL: native.backend = qst::Backend::FullSpace; break;
            case QST_BACKEND_SUBSPACE: native.backend = qst::Backend::Subspace; break;
            case QST_BACKEND_BOTH: native.backend = qst::Backend::Both; break;
            default: qst::fail(qst::Status::InvalidArgument, "unknown backend");
        }
        switch (spec->pairing) {
            case QST_PAIRING_BOX: native.pairing = qst::Pairing::AlgorithmBox; break;
            case QST_PAIRING_THEOREM: native.pairing = qst::Pairing::TheoremProof; break;
            default: qst::fail(qst::Status::InvalidArgument, "unknown pairing");
        }
        native.free_angle = spec->free_angle;
        native.threads = spec->threads;
        qst::run_sweep(native, out_path);
    });
}

qst_status qst_verify(qst_verify_level level, qst_suite_result* results, size_t cap,
                      size_t* n_written, int* all_pass) {
    if (!n_written) return arg_error("null n_written");
    const size_t needed = qst::verification_suite_count();
    if (!results && !all_pass) {
        *n_written = needed;
        return QST_OK;
    }
    if (results && cap < needed) {
        *n_written = needed;
        g_last_error = "result buffer holds " + std::to_string(cap) + " of " +
                       std::to_string(needed) + " suites";
        return QST_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const auto suites = qst::run_verification(
            level == QST_VERIFY_FULL ? qst::VerifyLevel::Full : qst::VerifyLevel::Fast);
        *n_written = suites.size();
        if (all_pass) *all_pass = qst::all_passed(suites) ? 1 : 0;
        if (!results) return;
        for (size_t i = 0; i < suites.size(); ++i) {
            qst_suite_result& out = results[i];
            std::snprintf(out.name, sizeof(out.name), "%s", suites[i].name.c_str());
            std::snprintf(out.detail, sizeof(out.detail), "%s", suites[i].detail.c_str());
            out.max_residual = suites[i].max_residual;
            out.tolerance = suites[i].tolerance;
            out.pass = suites[i].pass ? 1 : 0;
        }
    });
}

}  // extern "C"
