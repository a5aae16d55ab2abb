#pragma once

#include <stdexcept>

namespace wuf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (bad probability, epsilon <= 0, ...).
struct DomainError : Error { using Error::Error; };

// Internal inconsistency while constructing the extraction schedule.
struct ScheduleError : Error { using Error::Error; };

// Fault site does not exist in the schedule.
struct InvalidSite : Error { using Error::Error; };

// Fault enumeration violated a decoder-graph invariant (a single fault
// excited more than two detectors in one graph, or faults grouped onto one
// edge disagree on their logical effect).
struct GraphBuildError : Error { using Error::Error; };

// Detection-event set has odd cardinality; cannot happen for a valid torus
// shot, so it signals corrupted input.
struct OddSyndromeError : Error { using Error::Error; };

// Cluster growth exceeded its iteration budget.
struct NonTerminationGuard : Error { using Error::Error; };

// An erasure component carried odd excitation parity into peeling.
struct ParityError : Error { using Error::Error; };

// Exact matching requested for more excitations than the enumeration cap.
struct TooManyEvents : Error { using Error::Error; };

// Not enough recorded failures to form an estimate.
struct InsufficientData : Error { using Error::Error; };

// Fitted logical-error curves do not intersect inside the sampled grid.
struct NoCrossing : Error { using Error::Error; };

}  // namespace wuf
