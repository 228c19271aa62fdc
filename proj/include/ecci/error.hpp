#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecci {

enum class Errc {
    NotConnected,
    HasCycle,
    VertexOutOfRange,
    SingleVertexUndefined,
    NotAdjacent,
    WouldDisconnect,
    SelfMove,
    EmptyMoveSet,
    MissingCutEdge,
    NoCleanInternalPath,
    NonPendantNeighbor,
    DegreeTooSmall,
    MissingEdge,
    NoOffPathPendant,
    EmptyLegs,
    NonPositiveLeg,
    InfeasibleParams,
    HubEccentricityMismatch,
    TooFewLegs,
    LengthMismatch,
    CandidateValueMismatch,
    UnknownTheorem,
    NTooLarge,
    UnsupportedFormat,
    ParseError,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::NotConnected: return "NotConnected";
        case Errc::HasCycle: return "HasCycle";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::SingleVertexUndefined: return "SingleVertexUndefined";
        case Errc::NotAdjacent: return "NotAdjacent";
        case Errc::WouldDisconnect: return "WouldDisconnect";
        case Errc::SelfMove: return "SelfMove";
        case Errc::EmptyMoveSet: return "EmptyMoveSet";
        case Errc::MissingCutEdge: return "MissingCutEdge";
        case Errc::NoCleanInternalPath: return "NoCleanInternalPath";
        case Errc::NonPendantNeighbor: return "NonPendantNeighbor";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::MissingEdge: return "MissingEdge";
        case Errc::NoOffPathPendant: return "NoOffPathPendant";
        case Errc::EmptyLegs: return "EmptyLegs";
        case Errc::NonPositiveLeg: return "NonPositiveLeg";
        case Errc::InfeasibleParams: return "InfeasibleParams";
        case Errc::HubEccentricityMismatch: return "HubEccentricityMismatch";
        case Errc::TooFewLegs: return "TooFewLegs";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::CandidateValueMismatch: return "CandidateValueMismatch";
        case Errc::UnknownTheorem: return "UnknownTheorem";
        case Errc::NTooLarge: return "NTooLarge";
        case Errc::UnsupportedFormat: return "UnsupportedFormat";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ecci
