#pragma once

#include <stdexcept>
#include <string>

namespace agentlab {

enum class ErrorCode {
    MissingPlaceholder,
    NonMonotonicStep,
    Precondition,
    UnparseablePlan,
    CyclicDependencies,
    JudgeUnparseable,
    EmptyModelOutput,
    DimensionMismatch,
    ZeroVector,
    AllZeroWeights,
    MalformedVerdict,
    OutOfRangeScore,
    IndexOutOfRange,
    WrongArity,
    MalformedList,
    AllSourcesFailed,
    FetchFailed,
    ExtractFailed,
    BadTimestamp,
    FixtureMiss,
    UnsupportedKind,
    ParseFailed,
    AdapterFailed,
    SchemaError,
    InsufficientRuns,
    ConfigError,
    IoError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingPlaceholder: return "MissingPlaceholder";
        case ErrorCode::NonMonotonicStep: return "NonMonotonicStep";
        case ErrorCode::Precondition: return "Precondition";
        case ErrorCode::UnparseablePlan: return "UnparseablePlan";
        case ErrorCode::CyclicDependencies: return "CyclicDependencies";
        case ErrorCode::JudgeUnparseable: return "JudgeUnparseable";
        case ErrorCode::EmptyModelOutput: return "EmptyModelOutput";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::AllZeroWeights: return "AllZeroWeights";
        case ErrorCode::MalformedVerdict: return "MalformedVerdict";
        case ErrorCode::OutOfRangeScore: return "OutOfRangeScore";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::WrongArity: return "WrongArity";
        case ErrorCode::MalformedList: return "MalformedList";
        case ErrorCode::AllSourcesFailed: return "AllSourcesFailed";
        case ErrorCode::FetchFailed: return "FetchFailed";
        case ErrorCode::ExtractFailed: return "ExtractFailed";
        case ErrorCode::BadTimestamp: return "BadTimestamp";
        case ErrorCode::FixtureMiss: return "FixtureMiss";
        case ErrorCode::UnsupportedKind: return "UnsupportedKind";
        case ErrorCode::ParseFailed: return "ParseFailed";
        case ErrorCode::AdapterFailed: return "AdapterFailed";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::InsufficientRuns: return "InsufficientRuns";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace agentlab
