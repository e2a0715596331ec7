#include "actinfo/errors.hpp"

namespace actinfo {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::EmptySpace: return "EmptySpace";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::NegativeMass: return "NegativeMass";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::DuplicateLabel: return "DuplicateLabel";
        case Errc::IndexOutOfBounds: return "IndexOutOfBounds";
        case Errc::ProductSpaceTooLarge: return "ProductSpaceTooLarge";
        case Errc::SpaceMismatch: return "SpaceMismatch";
        case Errc::NotFullySupported: return "NotFullySupported";
        case Errc::InvalidLogBase: return "InvalidLogBase";
        case Errc::POutOfRange: return "POutOfRange";
        case Errc::QOutOfRange: return "QOutOfRange";
        case Errc::TargetTooLarge: return "TargetTooLarge";
        case Errc::BadEdge: return "BadEdge";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::NotRegular: return "NotRegular";
        case Errc::NotConnected: return "NotConnected";
        case Errc::GraphTooLarge: return "GraphTooLarge";
        case Errc::LazinessOutOfRange: return "LazinessOutOfRange";
        case Errc::BadDomain: return "BadDomain";
        case Errc::BadParamGrid: return "BadParamGrid";
        case Errc::ParamOutOfBounds: return "ParamOutOfBounds";
        case Errc::DegenerateScale: return "DegenerateScale";
        case Errc::EmptyTarget: return "EmptyTarget";
        case Errc::TargetIntervalOutOfRange: return "TargetIntervalOutOfRange";
        case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
        case Errc::BadSweepGrid: return "BadSweepGrid";
    }
    return "UnknownError";
}

}  // namespace actinfo
