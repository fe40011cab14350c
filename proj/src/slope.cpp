#include "pillow/slope.hpp"

#include <charconv>
#include <numeric>

namespace pillow {

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (q == 0) {
    if (p != 1) throw SlopeError("slope: the infinite slope must be written 1/0");
    return Slope();
  }
  if (q < 0) throw SlopeError("slope: sign: q must be positive");
  if (p <= 0) throw SlopeError("slope: sign: p must be positive");
  if (std::gcd(p, q) != 1) throw SlopeError("slope: coprimality: gcd(p, q) must be 1");
  if (p % 2 == 0) throw SlopeError("slope: parity: p must be odd");
  if (q % 2 != 0) throw SlopeError("slope: parity: q must be even");
  return Slope(p, q);
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "1/0") return Slope();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw SlopeError("slope: expected \"p/q\" or \"inf\", got \"" + std::string(text) + "\"");
  std::int64_t p = 0, q = 0;
  auto parse_int = [&](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  if (!parse_int(text.substr(0, slash), p) || !parse_int(text.substr(slash + 1), q))
    throw SlopeError("slope: malformed integers in \"" + std::string(text) + "\"");
  return make(p, q);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

bool operator<(const Slope& a, const Slope& b) {
  if (a.is_infinite() != b.is_infinite()) return a.is_infinite();
  if (a.q_ != b.q_) return a.q_ < b.q_;
  return a.p_ < b.p_;
}

SlopeClass classify(const Slope& s) {
  using namespace slope_class;
  if (s.is_infinite()) return Infinity{};
  const std::int64_t p = s.p(), q = s.q();
  if (p > q) return GreaterThanOne{};
  if (2 * p > q) return BetweenHalfAndOne{};
  if (p == 1) return ReciprocalEven{q / 2};

  // 2p < q and p > 1. Neither q/p nor 2q/p is an integer, so the
  // inequalities below are strict.
  const std::int64_t m = q / p;
  const std::int64_t k = m / 2;
  const GeneralCase gcase = (m % 2 == 0) ? GeneralCase::a : GeneralCase::b;
  const std::int64_t n = (2 * q) / p;
  const int subcase = static_cast<int>(n - 4 * k + 1);
  return General{gcase, subcase, k};
}

std::string describe(const SlopeClass& c) {
  using namespace slope_class;
  if (std::holds_alternative<Infinity>(c)) return "Infinity";
  if (std::holds_alternative<GreaterThanOne>(c)) return "GreaterThanOne";
  if (std::holds_alternative<BetweenHalfAndOne>(c)) return "BetweenHalfAndOne";
  if (auto r = std::get_if<ReciprocalEven>(&c)) return "ReciprocalEven k=" + std::to_string(r->k);
  const auto& g = std::get<General>(c);
  return std::string("General case=") + (g.gcase == GeneralCase::a ? "a" : "b") +
         " subcase=" + std::to_string(g.subcase) + " k=" + std::to_string(g.k);
}

std::string class_tag(const SlopeClass& c) {
  switch (c.index()) {
    case 0: return "infinity";
    case 1: return "gt1";
    case 2: return "half_to_one";
    case 3: return "reciprocal_even";
    default: return "general";
  }
}

std::vector<Slope> admissible_slopes(std::int64_t q_max) {
  if (q_max < 2 || q_max % 2 != 0) throw SlopeError("admissible_slopes: q_max must be even and >= 2");
  std::vector<Slope> out{Slope::infinity()};
  for (std::int64_t q = 2; q <= q_max; q += 2)
    for (std::int64_t p = 1; p < 2 * q; p += 2)
      if (std::gcd(p, q) == 1) out.push_back(Slope::make(p, q));
  return out;
}

}  // namespace pillow
