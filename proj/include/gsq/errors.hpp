#ifndef GSQ_ERRORS_HPP
#define GSQ_ERRORS_HPP

#include <stdexcept>

namespace gsq {

// Base class for all library runtime failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// spectrum: query past the end of a tabulated spectrum.
struct TabulatedOutOfRange : Error {
    using Error::Error;
};

// states: |xi| >= 1.
struct InvalidXi : Error {
    using Error::Error;
};

// states: tail-mass criterion unmet at the truncation cap.
struct NonConvergent : Error {
    using Error::Error;
};

// states: unscaled recurrence left the floating range.
struct RecurrenceOverflow : Error {
    using Error::Error;
};

// states/wigner: argument outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// metrics: truncation too aggressive for reliable second moments.
struct TruncationTooTight : Error {
    using Error::Error;
};

// metrics: Mandel parameter undefined (vacuum-dominated state).
struct UndefinedMandel : Error {
    using Error::Error;
};

// wigner: fast kernel requires a Hermitian density matrix.
struct NonHermitianInput : Error {
    using Error::Error;
};

// cli: malformed or inconsistent run configuration.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace gsq

#endif
