#ifndef SRGDIST_ERRORS_HPP
#define SRGDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / metrics
struct OutOfRangeError : Error { using Error::Error; };
struct SelfLoopError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct BadParamsError : Error { using Error::Error; };
struct ConstructionInvalidError : Error { using Error::Error; };

// exact algebra
struct DeltaMismatchError : Error { using Error::Error; };
struct OrderMismatchError : Error { using Error::Error; };
struct NonIntegerFactorError : Error { using Error::Error; };
struct NonIntegralSolutionError : Error { using Error::Error; };

// spectra
struct InfeasibleParamsError : Error { using Error::Error; };
struct NotSrgError : Error { using Error::Error; };
struct NotAdjacencyError : Error { using Error::Error; };
struct HypothesisViolatedError : Error { using Error::Error; };
struct InconsistentInputError : Error { using Error::Error; };
struct BadCaseError : Error { using Error::Error; };
struct DisconnectedCoverError : Error { using Error::Error; };

// verification / io
struct IrrationalEigenvalueError : Error { using Error::Error; };
struct UnknownEntryError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace srg

#endif
