#pragma once

#include <stdexcept>
#include <string>

namespace schemelab {

enum class ErrorCode {
    // scheme_core
    BadIndex,
    OrphanZeroVertex,
    AllZeroCycle,
    ParseError,
    // census
    CapExceeded,
    // blaschke
    PoleHit,
    NoInteriorFixedPoint,
    BoundaryFixedPointMissing,
    NoConvergence,
    CenteringViolation,
    RootFindFailure,
    NoValidRadii,
    // dynamics
    Overflow,
    SuperattractingCycle,
    NotInBasin,
    ResolutionTooCoarse,
    WindowTooSmall,
    // moduli
    DegenerateMultiplier,
    OffVariety,
    CrashedFixedPoints,
    CrossRatioPole,
    FixedPointOnPoleSet,
    // hubbard
    NoCriticalVertex,
    // raster / cli
    BadWindow,
    IoError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::OrphanZeroVertex: return "OrphanZeroVertex";
        case ErrorCode::AllZeroCycle: return "AllZeroCycle";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::PoleHit: return "PoleHit";
        case ErrorCode::NoInteriorFixedPoint: return "NoInteriorFixedPoint";
        case ErrorCode::BoundaryFixedPointMissing: return "BoundaryFixedPointMissing";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::CenteringViolation: return "CenteringViolation";
        case ErrorCode::RootFindFailure: return "RootFindFailure";
        case ErrorCode::NoValidRadii: return "NoValidRadii";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::SuperattractingCycle: return "SuperattractingCycle";
        case ErrorCode::NotInBasin: return "NotInBasin";
        case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::DegenerateMultiplier: return "DegenerateMultiplier";
        case ErrorCode::OffVariety: return "OffVariety";
        case ErrorCode::CrashedFixedPoints: return "CrashedFixedPoints";
        case ErrorCode::CrossRatioPole: return "CrossRatioPole";
        case ErrorCode::FixedPointOnPoleSet: return "FixedPointOnPoleSet";
        case ErrorCode::NoCriticalVertex: return "NoCriticalVertex";
        case ErrorCode::BadWindow: return "BadWindow";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Library-wide exception: a code (stable, testable) plus a human message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace schemelab
