#ifndef IOM_ERRORS_HPP
#define IOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iom {

// Error categories surfaced by the library. The CLI maps these onto
// exit codes (parameter/data problems -> 2, file problems -> 3).
enum class errc {
    invalid_parameter,
    invalid_input,
    invalid_token,
    invalid_threshold,
    undefined_similarity,
    incomparable_codes,
    ill_defined_ranks,
    degenerate_range,
    protocol_infeasible,
    unsupported_attack,
    format_error,
    duplicate_key,
    version_error,
    corrupt_template,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_parameter: return "invalid-parameter";
        case errc::invalid_input: return "invalid-input";
        case errc::invalid_token: return "invalid-token";
        case errc::invalid_threshold: return "invalid-threshold";
        case errc::undefined_similarity: return "undefined-similarity";
        case errc::incomparable_codes: return "incomparable-codes";
        case errc::ill_defined_ranks: return "ill-defined-ranks";
        case errc::degenerate_range: return "degenerate-range";
        case errc::protocol_infeasible: return "protocol-infeasible";
        case errc::unsupported_attack: return "unsupported-attack";
        case errc::format_error: return "format-error";
        case errc::duplicate_key: return "duplicate-key";
        case errc::version_error: return "version-error";
        case errc::corrupt_template: return "corrupt-template";
        case errc::io_error: return "io-error";
    }
    return "unknown";
}

} // namespace iom

#endif // IOM_ERRORS_HPP
