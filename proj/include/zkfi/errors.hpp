#ifndef ZKFI_ERRORS_HPP_
#define ZKFI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zkfi {

enum class Errc {
    InvalidArgument,
    UnsupportedWidth,
    OffCurve,
    BadPoint,
    TreeFull,
    IndexRange,
    Funding,
    StaleView,
    Arity,
    WitnessMismatch,
    ProveRefused,
    DuplicateShare,
    ShareCount,
    Conflict,
    Parse,
    QuoteUnavailable,
    MissingCompliance,
    RequestNotLogged,
    CombineFailure,
    DecryptFailure,
    Ceremony,
    Io,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

const char* errcName(Errc code);

}  // namespace zkfi

#endif
