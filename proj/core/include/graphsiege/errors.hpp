#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphsiege {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
  explicit SelfLoopError(std::uint32_t v)
      : Error("self loop at vertex " + std::to_string(v)), vertex(v) {}
  std::uint32_t vertex;
};

struct DuplicateEdgeError : Error {
  DuplicateEdgeError(std::uint32_t u, std::uint32_t v)
      : Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v)) {}
};

struct VertexOutOfRangeError : Error {
  explicit VertexOutOfRangeError(std::uint32_t v)
      : Error("vertex id " + std::to_string(v) + " out of range") {}
};

struct AlreadyRemovedError : Error {
  explicit AlreadyRemovedError(std::uint32_t v)
      : Error("vertex " + std::to_string(v) + " already removed") {}
};

struct NoSuchEdgeError : Error {
  NoSuchEdgeError(std::uint32_t u, std::uint32_t v)
      : Error("no edge " + std::to_string(u) + "-" + std::to_string(v)) {}
};

struct DeadCenterError : Error {
  explicit DeadCenterError(std::uint32_t v)
      : Error("discovery center " + std::to_string(v) + " is removed") {}
};

struct NoFinitePairsError : Error {
  NoFinitePairsError() : Error("no vertex pair with a finite path length") {}
};

struct TooSmallError : Error {
  explicit TooSmallError(const std::string& what) : Error(what) {}
};

struct EmptyTableError : Error {
  EmptyTableError() : Error("selection from an empty table") {}
};

struct EmptyProfileError : Error {
  EmptyProfileError() : Error("fragment profile of an empty graph") {}
};

struct UndefinedError : Error {
  explicit UndefinedError(const std::string& what) : Error(what) {}
};

struct RatioUndefinedError : Error {
  RatioUndefinedError() : Error("fragment ratio undefined for zero LCC share") {}
};

struct BadSyntaxError : Error {
  explicit BadSyntaxError(const std::string& text)
      : Error("bad attack profile syntax: '" + text + "'") {}
};

struct NothingToAttackError : Error {
  NothingToAttackError() : Error("no attackable component left in the view") {}
};

struct BadSpecError : Error {
  explicit BadSpecError(const std::string& what) : Error(what) {}
};

struct ZeroBaselineError : Error {
  ZeroBaselineError() : Error("robustness ratio with a zero baseline efficiency") {}
};

}  // namespace graphsiege
