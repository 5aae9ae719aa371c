#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Error codes follow the operation contracts.  "Undecidable"-family
// failures mean the requested precision/order was insufficient to
// certify an answer; they are never silently swallowed.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace err {
inline constexpr const char* DivisorContainsZero = "DivisorContainsZero";
inline constexpr const char* BranchUndecidable = "BranchUndecidable";
inline constexpr const char* Undecidable = "Undecidable";
inline constexpr const char* PrecisionInsufficient = "PrecisionInsufficient";
inline constexpr const char* ZeroOnContour = "ZeroOnContour";
inline constexpr const char* TooCloseToSingularity = "TooCloseToSingularity";
inline constexpr const char* OrderInsufficient = "OrderInsufficient";
inline constexpr const char* PathLeavesDomain = "PathLeavesDomain";
inline constexpr const char* UnsupportedDimension = "UnsupportedDimension";
inline constexpr const char* DegreeBoundViolated = "DegreeBoundViolated";
inline constexpr const char* VerificationFailed = "VerificationFailed";
inline constexpr const char* SearchExhausted = "SearchExhausted";
inline constexpr const char* ValidationFailed = "ValidationFailed";
inline constexpr const char* NonConstantCount = "NonConstantCount";
inline constexpr const char* FiberSolveFailed = "FiberSolveFailed";
inline constexpr const char* CoverageIncomplete = "CoverageIncomplete";
inline constexpr const char* FunctionVanishesEverywhere = "FunctionVanishesEverywhere";
inline constexpr const char* UnlikelyIntersectionSuspected = "UnlikelyIntersectionSuspected";
inline constexpr const char* ResidualTooLarge = "ResidualTooLarge";
inline constexpr const char* DescentDepthExceeded = "DescentDepthExceeded";
inline constexpr const char* NotFuchsian = "NotFuchsian";
inline constexpr const char* TargetOnSingularity = "TargetOnSingularity";
inline constexpr const char* RemainderBlowup = "RemainderBlowup";
inline constexpr const char* LatticeDegenerate = "LatticeDegenerate";
inline constexpr const char* PathNearBranchPoint = "PathNearBranchPoint";
inline constexpr const char* EliminationDegreeOverflow = "EliminationDegreeOverflow";
inline constexpr const char* GapUndecidable = "GapUndecidable";
inline constexpr const char* SingularValue = "SingularValue";
inline constexpr const char* NotTorsionUpTo = "NotTorsionUpTo";
inline constexpr const char* InputError = "InputError";
}  // namespace err

}  // namespace folia
