#pragma once

#include <stdexcept>
#include <string>

namespace valchain {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class errc {
    usage,                    // bad arguments, unreadable files, schema violations
    field_mismatch,           // operands over different ground fields
    undefined_operation,      // e.g. 0 * infinity
    division_by_zero,
    precondition,             // generic violated precondition
    inadmissible_augmentation,// gamma <= w(phi)
    certification,            // key-polynomial / truncator certification failed
    ambiguity,                // conjugate-dependent value detected
    not_convertible,          // chain conversion precondition failed
    commensurability,         // value outside Gamma_v (x) Q where required
    minimal_pair_violation,   // delta too small for the minimal-pair condition
    scope,                    // operation outside the supported scope (e.g. non-essential family)
    horizon,                  // stabilization not detected within the horizon
    unsupported_input,        // e.g. inseparable polynomial in char p
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace valchain
