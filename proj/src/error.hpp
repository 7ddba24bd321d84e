#pragma once

#include <stdexcept>
#include <string>

namespace qst {

enum class Status {
    Ok = 0,
    InvalidArgument,
    OutOfRange,
    NonAdjacent,
    InvalidEpsilon,
    BadParity,
    DegenerateSize,
    InvalidConfig,
    SpecMismatch,
    DimensionMismatch,
    UnsupportedBasis,
    IoError,
    Internal,
};

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::InvalidArgument: return "invalid_argument";
        case Status::OutOfRange: return "out_of_range";
        case Status::NonAdjacent: return "non_adjacent";
        case Status::InvalidEpsilon: return "invalid_epsilon";
        case Status::BadParity: return "bad_parity";
        case Status::DegenerateSize: return "degenerate_size";
        case Status::InvalidConfig: return "invalid_config";
        case Status::SpecMismatch: return "spec_mismatch";
        case Status::DimensionMismatch: return "dimension_mismatch";
        case Status::UnsupportedBasis: return "unsupported_basis";
        case Status::IoError: return "io_error";
        case Status::Internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

}  // namespace qst
