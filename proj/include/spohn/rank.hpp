#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace spohn {

class SignedDelta;

/**
 * Degree of implausibility: a non-negative integer or infinity.
 *
 * Infinity absorbs finite addition and finite subtraction. Subtracting one
 * rank from another yields a SignedDelta, since the result may be negative;
 * infinity minus infinity is never formed and raises an internal error.
 */
class Rank {
 public:
  constexpr Rank() = default;
  explicit Rank(std::int64_t value);

  static constexpr Rank infinity() {
    Rank r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value; throws on infinity.
  std::int64_t value() const;

  friend bool operator==(const Rank&, const Rank&) = default;
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend Rank operator+(Rank a, Rank b);
  Rank& operator+=(Rank other) { return *this = *this + other; }

  /// a - b where the caller guarantees a >= b; throws otherwise.
  Rank minus(Rank b) const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

/// A change in implausibility. Negative finite values are allowed; the only
/// infinite value is +infinity.
class SignedDelta {
 public:
  constexpr SignedDelta() = default;
  constexpr explicit SignedDelta(std::int64_t value) : value_(value) {}
  SignedDelta(Rank r)  // NOLINT: implicit widening is lossless
      : value_(r.is_finite() ? r.value() : 0), infinite_(r.is_infinite()) {}

  static constexpr SignedDelta infinity() {
    SignedDelta d;
    d.infinite_ = true;
    return d;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  std::int64_t value() const;

  friend bool operator==(const SignedDelta&, const SignedDelta&) = default;
  friend std::strong_ordering operator<=>(const SignedDelta& a,
                                          const SignedDelta& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend SignedDelta operator+(SignedDelta a, SignedDelta b);
  SignedDelta& operator+=(SignedDelta other) { return *this = *this + other; }

  /// Converts back to a rank; throws if negative.
  Rank to_rank() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

/// a - b as a signed quantity. infinity - finite = infinity; a finite minuend
/// with an infinite subtrahend, or infinity - infinity, is an internal error.
SignedDelta operator-(Rank a, Rank b);
/// Change needed to move from `before` to `after` (after - before).
SignedDelta operator-(SignedDelta after, SignedDelta before);

/// Strength of belief: any integer, or plus/minus infinity.
class BeliefStrength {
 public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity };

  constexpr BeliefStrength() = default;
  constexpr explicit BeliefStrength(std::int64_t value) : value_(value) {}
  static constexpr BeliefStrength plus_infinity() {
    BeliefStrength b;
    b.kind_ = Kind::PlusInfinity;
    return b;
  }
  static constexpr BeliefStrength minus_infinity() {
    BeliefStrength b;
    b.kind_ = Kind::MinusInfinity;
    return b;
  }
  static BeliefStrength from_rank(Rank r) {
    return r.is_infinite() ? plus_infinity() : BeliefStrength(r.value());
  }
  static BeliefStrength negated(Rank r) {
    return r.is_infinite() ? minus_infinity() : BeliefStrength(-r.value());
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  std::int64_t value() const;

  bool positive() const {
    return kind_ == Kind::PlusInfinity || (is_finite() && value_ > 0);
  }
  bool negative() const {
    return kind_ == Kind::MinusInfinity || (is_finite() && value_ < 0);
  }

  friend bool operator==(const BeliefStrength&,
                         const BeliefStrength&) = default;

 private:
  std::int64_t value_ = 0;
  Kind kind_ = Kind::Finite;
};

std::string to_string(Rank r);
std::string to_string(SignedDelta d);
std::string to_string(const BeliefStrength& b);
std::ostream& operator<<(std::ostream& os, Rank r);
std::ostream& operator<<(std::ostream& os, SignedDelta d);
std::ostream& operator<<(std::ostream& os, const BeliefStrength& b);

}  // namespace spohn
