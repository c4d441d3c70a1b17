#include "zkfi/errors.hpp"

namespace zkfi {

const char* errcName(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "invalid-argument";
        case Errc::UnsupportedWidth: return "unsupported-width";
        case Errc::OffCurve: return "off-curve";
        case Errc::BadPoint: return "bad-point";
        case Errc::TreeFull: return "tree-full";
        case Errc::IndexRange: return "index-range";
        case Errc::Funding: return "funding";
        case Errc::StaleView: return "stale-view";
        case Errc::Arity: return "arity";
        case Errc::WitnessMismatch: return "witness-mismatch";
        case Errc::ProveRefused: return "prove-refused";
        case Errc::DuplicateShare: return "duplicate-share";
        case Errc::ShareCount: return "share-count";
        case Errc::Conflict: return "conflict";
        case Errc::Parse: return "parse";
        case Errc::QuoteUnavailable: return "quote-unavailable";
        case Errc::MissingCompliance: return "missing-compliance";
        case Errc::RequestNotLogged: return "request-not-logged";
        case Errc::CombineFailure: return "combine-failure";
        case Errc::DecryptFailure: return "decrypt-failure";
        case Errc::Ceremony: return "ceremony";
        case Errc::Io: return "io";
    }
    return "unknown";
}

}  // namespace zkfi
