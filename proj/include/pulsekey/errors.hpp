#pragma once

#include <stdexcept>

namespace pulsekey {

// Base type for everything the library throws, so callers can catch the whole
// family with one handler when they do not care which stage failed.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- record loading ---
struct MissingMetadata : Error { using Error::Error; };
struct MalformedSample : Error { using Error::Error; };
struct RaggedRows : Error { using Error::Error; };
struct DuplicateLead : Error { using Error::Error; };
struct UnknownLead : Error { using Error::Error; };
struct InvalidBeatTimes : Error { using Error::Error; };

// --- beat detection / interval extraction ---
struct TooShort : Error { using Error::Error; };
struct NoPeaksFound : Error { using Error::Error; };
struct TooFewPeaks : Error { using Error::Error; };
struct EmptyAfterFiltering : Error { using Error::Error; };

// --- quantization ---
struct EmptyInput : Error { using Error::Error; };
struct InvalidThresholds : Error { using Error::Error; };
struct DegenerateHistogram : Error { using Error::Error; };
struct SymbolOutOfRange : Error { using Error::Error; };
struct TooFewDistinctValues : Error { using Error::Error; };

// --- linear algebra / reconciliation / amplification ---
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidDims : Error { using Error::Error; };
struct DecodeFailure : Error { using Error::Error; };
struct OversizedInstance : Error { using Error::Error; };
struct NotFullRank : Error { using Error::Error; };

// --- metrics / configuration ---
struct LengthMismatch : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct InvalidModelParams : Error { using Error::Error; };

} // namespace pulsekey
