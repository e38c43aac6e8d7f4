#pragma once

#include <stdexcept>
#include <string>

namespace semiostat {

/// Machine-parsable error codes. The CLI prints failures as
/// `error[CODE]: message` on stderr; codes map onto exit statuses there.
enum class ErrorCode {
    Structural,  // E_STRUCT: malformed data (dangling ids, duplicates, non-poset order)
    Contract,    // E_CONTRACT: operation invoked without its required certificate
    Input,       // E_INPUT: invalid numeric input (non-finite, out-of-domain parameter)
    Hypothesis,  // E_HYPOTHESIS: theorem hypothesis violated (with witness)
    Parse,       // E_PARSE: lexical or syntactic scenario error
    Resolve,     // E_RESOLVE: scenario references an undeclared identifier
    Io,          // E_IO: unreadable input / unwritable output path
    Usage,       // E_USAGE: bad command line
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Structural: return "E_STRUCT";
        case ErrorCode::Contract: return "E_CONTRACT";
        case ErrorCode::Input: return "E_INPUT";
        case ErrorCode::Hypothesis: return "E_HYPOTHESIS";
        case ErrorCode::Parse: return "E_PARSE";
        case ErrorCode::Resolve: return "E_RESOLVE";
        case ErrorCode::Io: return "E_IO";
        case ErrorCode::Usage: return "E_USAGE";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct StructuralError : Error {
    explicit StructuralError(const std::string& message)
        : Error(ErrorCode::Structural, message) {}
};

struct ContractError : Error {
    explicit ContractError(const std::string& message)
        : Error(ErrorCode::Contract, message) {}
};

struct InputError : Error {
    explicit InputError(const std::string& message)
        : Error(ErrorCode::Input, message) {}
};

/// A stated theorem hypothesis fails on the given data; carries the witness
/// in the message (e.g. the pair of equivalent states mapped apart).
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& message)
        : Error(ErrorCode::Hypothesis, message) {}
};

struct IoError : Error {
    explicit IoError(const std::string& message)
        : Error(ErrorCode::Io, message) {}
};

}  // namespace semiostat
