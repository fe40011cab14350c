#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pillow {

class SlopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Slope of an arc from the lower-left to the upper-left pillowcase corner:
/// either the infinite slope 1/0 or a reduced fraction p/q with p odd, q even.
class Slope {
 public:
  /// Infinity.
  Slope() = default;

  /// Validating constructor; (1, 0) yields infinity. Throws SlopeError naming
  /// the violated constraint (sign, parity, coprimality).
  static Slope make(std::int64_t p, std::int64_t q);
  static Slope infinity() { return Slope(); }
  /// "p/q" or "inf".
  static Slope parse(std::string_view text);

  bool is_infinite() const { return q_ == 0; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Canonical order: infinity first, then increasing (q, p).
  friend bool operator<(const Slope& a, const Slope& b);

 private:
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

enum class GeneralCase { a, b };

namespace slope_class {
struct Infinity {
  friend bool operator==(const Infinity&, const Infinity&) = default;
};
struct GreaterThanOne {
  friend bool operator==(const GreaterThanOne&, const GreaterThanOne&) = default;
};
struct BetweenHalfAndOne {
  friend bool operator==(const BetweenHalfAndOne&, const BetweenHalfAndOne&) = default;
};
struct ReciprocalEven {
  std::int64_t k = 1;
  friend bool operator==(const ReciprocalEven&, const ReciprocalEven&) = default;
};
struct General {
  GeneralCase gcase = GeneralCase::a;
  int subcase = 1;
  std::int64_t k = 1;
  friend bool operator==(const General&, const General&) = default;
};
}  // namespace slope_class

using SlopeClass = std::variant<slope_class::Infinity, slope_class::GreaterThanOne,
                                slope_class::BetweenHalfAndOne, slope_class::ReciprocalEven,
                                slope_class::General>;

SlopeClass classify(const Slope& s);

/// "Infinity", "GreaterThanOne", "BetweenHalfAndOne", "ReciprocalEven k=2",
/// "General case=a subcase=2 k=1".
std::string describe(const SlopeClass& c);
/// Short machine tag: "infinity", "gt1", "half_to_one", "reciprocal_even", "general".
std::string class_tag(const SlopeClass& c);

inline const slope_class::General* as_general(const SlopeClass& c) {
  return std::get_if<slope_class::General>(&c);
}
const slope_class::General* as_general(const SlopeClass&&) = delete;

/// Infinity followed by every admissible p/q with q <= q_max and p < 2q, in
/// increasing (q, p) order. Throws SlopeError unless q_max is even and >= 2.
std::vector<Slope> admissible_slopes(std::int64_t q_max);

}  // namespace pillow
