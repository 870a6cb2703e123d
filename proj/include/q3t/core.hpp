#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace q3t {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}
  Edge() : u(-1), v(-1) {}

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
        static_cast<std::uint32_t>(e.v));
  }
};

// ---------------------------------------------------------------------------
// Error hierarchy.  UsageError maps to CLI exit code 2, VerificationError to
// exit code 1, InternalError to exit code 3.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UsageError : Error {
  using Error::Error;
};

struct VerificationError : Error {
  using Error::Error;
};

/// A violated invariant that the underlying theory guarantees cannot occur on
/// valid inputs; indicates a bug or a corrupted input.
struct InternalError : Error {
  using Error::Error;
};

// graph_core
struct TooSmall : UsageError {
  using UsageError::UsageError;
};
struct StellationTargetNotAFace : Error {
  using Error::Error;
};
struct DuplicateApex : Error {
  using Error::Error;
};
struct RecognizeError : Error {
  using Error::Error;
};
struct NotA3Tree : RecognizeError {
  using RecognizeError::RecognizeError;
};
struct NotPlanar3Tree : RecognizeError {
  using RecognizeError::RecognizeError;
};
struct NotAFace : Error {
  using Error::Error;
};
struct InternalStructureViolation : InternalError {
  using InternalError::InternalError;
};
struct AugmentationConflict : InternalError {
  using InternalError::InternalError;
};

// outerplanar_level
struct ConstructionExhausted : InternalError {
  using InternalError::InternalError;
};

// queue_engine
struct ChildNotInFace : InternalError {
  using InternalError::InternalError;
};

// layout_verify
struct IncompleteAssignment : Error {
  using Error::Error;
};
struct UnknownVertex : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  int lower_bound;
  int upper_bound;  // -1 when no layout is known
  BudgetExceeded(const std::string& msg, int lower, int upper)
      : Error(msg), lower_bound(lower), upper_bound(upper) {}
};

// gadgets
struct DepthUnsupported : UsageError {
  using UsageError::UsageError;
};
struct UnknownCase : UsageError {
  using UsageError::UsageError;
};

// cli
struct InvalidLayout : VerificationError {
  using VerificationError::VerificationError;
};
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace q3t
