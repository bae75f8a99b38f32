#include "spohn/rank.hpp"

#include <ostream>

#include "spohn/error.hpp"

namespace spohn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidOcf: return "InvalidOcf";
    case ErrorCode::EmptyProposition: return "EmptyProposition";
    case ErrorCode::FullProposition: return "FullProposition";
    case ErrorCode::EmptyCondition: return "EmptyCondition";
    case ErrorCode::ImpossibleEvidence: return "ImpossibleEvidence";
    case ErrorCode::ContradictoryEvidence: return "ContradictoryEvidence";
    case ErrorCode::AllInfinite: return "AllInfinite";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::UnknownValue: return "UnknownValue";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::InconsistentTables: return "InconsistentTables";
    case ErrorCode::InvalidNetwork: return "InvalidNetwork";
    case ErrorCode::NotSinglyConnected: return "NotSinglyConnected";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::DuplicateTargetVariable: return "DuplicateTargetVariable";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rank::Rank(std::int64_t value) : value_(value) {
  if (value < 0) {
    fail(ErrorCode::InvalidArgument,
         "negative rank " + std::to_string(value));
  }
}

std::int64_t Rank::value() const {
  if (infinite_) fail(ErrorCode::Internal, "value() of infinite rank");
  return value_;
}

Rank operator+(Rank a, Rank b) {
  if (a.infinite_ || b.infinite_) return Rank::infinity();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value_, b.value_, &sum)) {
    fail(ErrorCode::Overflow, "rank addition overflow");
  }
  return Rank(sum);
}

Rank Rank::minus(Rank b) const {
  return (*this - b).to_rank();
}

std::int64_t SignedDelta::value() const {
  if (infinite_) fail(ErrorCode::Internal, "value() of infinite delta");
  return value_;
}

SignedDelta operator+(SignedDelta a, SignedDelta b) {
  if (a.infinite_ || b.infinite_) return SignedDelta::infinity();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value_, b.value_, &sum)) {
    fail(ErrorCode::Overflow, "delta addition overflow");
  }
  return SignedDelta(sum);
}

Rank SignedDelta::to_rank() const {
  if (infinite_) return Rank::infinity();
  if (value_ < 0) {
    fail(ErrorCode::Internal,
         "negative value " + std::to_string(value_) + " used as a rank");
  }
  return Rank(value_);
}

SignedDelta operator-(Rank a, Rank b) {
  if (b.is_infinite()) {
    fail(ErrorCode::Internal, a.is_infinite() ? "inf - inf is undefined"
                                              : "finite - inf is undefined");
  }
  if (a.is_infinite()) return SignedDelta::infinity();
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(a.value(), b.value(), &diff)) {
    fail(ErrorCode::Overflow, "rank subtraction overflow");
  }
  return SignedDelta(diff);
}

SignedDelta operator-(SignedDelta after, SignedDelta before) {
  if (before.is_infinite()) {
    fail(ErrorCode::Internal, after.is_infinite() ? "inf - inf is undefined"
                                                  : "finite - inf is undefined");
  }
  if (after.is_infinite()) return SignedDelta::infinity();
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(after.value(), before.value(), &diff)) {
    fail(ErrorCode::Overflow, "delta subtraction overflow");
  }
  return SignedDelta(diff);
}

std::int64_t BeliefStrength::value() const {
  if (kind_ != Kind::Finite) {
    fail(ErrorCode::Internal, "value() of infinite belief strength");
  }
  return value_;
}

std::string to_string(Rank r) {
  return r.is_infinite() ? "inf" : std::to_string(r.value());
}

std::string to_string(SignedDelta d) {
  return d.is_infinite() ? "inf" : std::to_string(d.value());
}

std::string to_string(const BeliefStrength& b) {
  switch (b.kind()) {
    case BeliefStrength::Kind::PlusInfinity: return "inf";
    case BeliefStrength::Kind::MinusInfinity: return "-inf";
    case BeliefStrength::Kind::Finite: break;
  }
  return std::to_string(b.value());
}

std::ostream& operator<<(std::ostream& os, Rank r) { return os << to_string(r); }
std::ostream& operator<<(std::ostream& os, SignedDelta d) {
  return os << to_string(d);
}
std::ostream& operator<<(std::ostream& os, const BeliefStrength& b) {
  return os << to_string(b);
}

}  // namespace spohn
