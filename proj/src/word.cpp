#include "pillow/word.hpp"

#include <cctype>
#include <stdexcept>

namespace pillow {

char gen_char(Gen g) {
  switch (g) {
    case Gen::x: return 'x';
    case Gen::y: return 'y';
    case Gen::z: return 'z';
    case Gen::b: return 'b';
  }
  return '?';
}

std::optional<Gen> gen_from_char(char c) {
  switch (c) {
    case 'x': return Gen::x;
    case 'y': return Gen::y;
    case 'z': return Gen::z;
    case 'b': return Gen::b;
    default: return std::nullopt;
  }
}

Word Word::parse(std::string_view text) {
  Word w;
  if (text == "1") return w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '\'') {
      if (w.empty() || w.letters_.back().sign != 1 || i == 0 || text[i - 1] == '\'')
        throw std::invalid_argument("word: stray apostrophe at offset " + std::to_string(i));
      w.letters_.back().sign = -1;
      continue;
    }
    auto g = gen_from_char(c);
    if (!g) throw std::invalid_argument(std::string("word: unknown generator '") + c + "'");
    w.letters_.push_back({*g, 1});
  }
  return w;
}

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

Word Word::restricted(std::initializer_list<Gen> keep) const {
  Word r;
  for (const auto& l : letters_) {
    for (Gen g : keep) {
      if (l.gen == g) {
        r.letters_.push_back(l);
        break;
      }
    }
  }
  return r;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size() * 2);
  for (const auto& l : letters_) {
    s.push_back(gen_char(l.gen));
    if (l.sign < 0) s.push_back('\'');
  }
  return s;
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

bool is_trivial(const Word& w) { return free_reduce(w).empty(); }

bool has_prefix(const Word& candidate, const Word& prefix) {
  if (prefix.size() > candidate.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (!(candidate[i] == prefix[i])) return false;
  return true;
}

Word expected_prefix(int subcase, long k) {
  if (subcase < 1 || subcase > 4)
    throw std::invalid_argument("expected_prefix: subcase must be in 1..4");
  if (k < 1 || k > kMaxPrefixIndex)
    throw std::invalid_argument("expected_prefix: k must be in [1, 1e6]");

  const Letter b{Gen::b, 1}, B{Gen::b, -1};
  const Letter x{Gen::x, 1}, X{Gen::x, -1};
  const Letter y{Gen::y, 1}, Y{Gen::y, -1};
  const Letter z{Gen::z, 1}, Z{Gen::z, -1};

  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(4 * k + 5));
  for (long i = 0; i < k; ++i) out.insert(out.end(), {b, Z});
  if (subcase <= 2)
    out.push_back(x);
  else
    out.insert(out.end(), {b, X, z});
  for (long i = 0; i < k; ++i) out.insert(out.end(), {B, z});
  if (subcase % 2 == 1)
    out.insert(out.end(), {Y, b});
  else
    out.insert(out.end(), {B, y});
  return Word(std::move(out));
}

std::vector<NestingSite> nesting_profile(const Word& w) {
  std::vector<NestingSite> sites;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (!ls[i].cancels(ls[i + 1])) continue;
    std::size_t depth = 1;
    while (depth <= i && i + 1 + depth < ls.size() && ls[i - depth] == ls[i] &&
           ls[i + 1 + depth] == ls[i + 1])
      ++depth;
    sites.push_back({ls[i].gen, static_cast<int>(depth), i + 1 - depth});
  }
  return sites;
}

}  // namespace pillow
