#ifndef CONES_ERRORS_HPP
#define CONES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cones {

/**
 * Base class for all domain errors. `code()` is the stable machine-readable
 * identifier used by the CLI's error output; `what()` carries the detail.
 */
class ConeError : public std::runtime_error {
  public:
    ConeError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

class DimensionMismatchError : public ConeError {
  public:
    explicit DimensionMismatchError(const std::string& detail)
        : ConeError("dimension_mismatch", detail) {}
};

class EmptyConeError : public ConeError {
  public:
    explicit EmptyConeError(const std::string& detail = "operation requires a nonempty cone")
        : ConeError("empty_cone", detail) {}
};

class NotMemberError : public ConeError {
  public:
    explicit NotMemberError(const std::string& detail)
        : ConeError("not_member", detail) {}
};

class IsMemberError : public ConeError {
  public:
    explicit IsMemberError(const std::string& detail)
        : ConeError("is_member", detail) {}
};

class NotAsymmetricError : public ConeError {
  public:
    explicit NotAsymmetricError(const std::string& detail = "cone is not asymmetric (contains 0)")
        : ConeError("not_asymmetric", detail) {}
};

class NotDisjointError : public ConeError {
  public:
    explicit NotDisjointError(const std::string& detail = "cones intersect")
        : ConeError("not_disjoint", detail) {}
};

/// Rejected functional in a cortege: identically zero at position `index`.
class ZeroFunctionalError : public ConeError {
  public:
    explicit ZeroFunctionalError(std::size_t index)
        : ConeError("zero_functional",
                    "functional at position " + std::to_string(index) + " is zero"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

  private:
    std::size_t index_;
};

/// Rejected functional in a cortege: lies in the span of its predecessors.
class DependentFunctionalError : public ConeError {
  public:
    explicit DependentFunctionalError(std::size_t index)
        : ConeError("dependent_functional",
                    "functional at position " + std::to_string(index) +
                        " depends linearly on its predecessors"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

  private:
    std::size_t index_;
};

/// Component enumeration would exceed the candidate cap.
class CandidateBlowupError : public ConeError {
  public:
    CandidateBlowupError(std::size_t candidates, std::size_t cap)
        : ConeError("candidate_blowup",
                    "candidate count " + std::to_string(candidates) +
                        " exceeds cap " + std::to_string(cap)) {}
};

/// Separation could not make progress; signals a bug or violated precondition.
class ConstructionStuckError : public ConeError {
  public:
    explicit ConstructionStuckError(const std::string& detail)
        : ConeError("construction_stuck", detail) {}
};

class ParseError : public ConeError {
  public:
    explicit ParseError(const std::string& detail) : ConeError("parse_error", detail) {}
};

}  // namespace cones

#endif
