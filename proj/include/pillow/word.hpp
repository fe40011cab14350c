#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pillow {

/// The four marked arcs of the pillowcase. x, y, z generate the free group of
/// the W-side handlebody; b is a V-side arc and is dropped from disk tests.
enum class Gen : std::uint8_t { x, y, z, b };

char gen_char(Gen g);
std::optional<Gen> gen_from_char(char c);

struct Letter {
  Gen gen = Gen::x;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  bool cancels(Letter o) const { return gen == o.gen && sign == -o.sign; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A finite signed word over {x, y, z, b}. Reducedness is a property, not an
/// invariant: any sequence of letters is a valid Word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses the text syntax "bz'xb'zb'y": lowercase generator, optional
  /// apostrophe for the inverse. Whitespace is ignored; "1" or "" is empty.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& w);

  Word inverse() const;
  /// Letters whose generator is in the given set, in order.
  Word restricted(std::initializer_list<Gen> keep) const;
  /// Drops b: the word as an element of the free group on x, y, z.
  Word xyz() const { return restricted({Gen::x, Gen::y, Gen::z}); }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);

Word free_reduce(const Word& w);
bool is_trivial(const Word& w);
bool has_prefix(const Word& candidate, const Word& prefix);

/// Upper bound on k accepted by expected_prefix.
inline constexpr long kMaxPrefixIndex = 1'000'000;

/// The initial subword w1..w4 that the arc word must begin with in
/// Subcase 1..4 with index k:
///   w1 = (bz')^k x (b'z)^k y'b        w2 = (bz')^k x (b'z)^k b'y
///   w3 = (bz')^k b x' z (b'z)^k y'b   w4 = (bz')^k b x' z (b'z)^k b'y
/// Throws std::invalid_argument for subcase outside 1..4 or k outside
/// [1, kMaxPrefixIndex].
Word expected_prefix(int subcase, long k);

struct NestingSite {
  Gen gen = Gen::x;
  int depth = 0;
  std::size_t position = 0;
  friend bool operator==(const NestingSite&, const NestingSite&) = default;
};

/// Maximal contiguous nested cancellation blocks g^e ... g^e g^-e ... g^-e of
/// a single generator. Each block is reported once with its start index and
/// nesting depth. Empty iff the word is freely reduced.
std::vector<NestingSite> nesting_profile(const Word& w);

}  // namespace pillow
