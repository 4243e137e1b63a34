#include "fpkit/word.hpp"

#include <algorithm>
#include <charconv>

namespace fpkit {

FactorFamily::FactorFamily(std::vector<FiniteGroup> factors) {
  for (size_t i = 0; i < factors.size(); ++i)
    if (factors[i].order() < 2)
      fail(ErrorKind::TrivialFactor, "factor " + std::to_string(i) + " is trivial");
  data_ = std::make_shared<const std::vector<FiniteGroup>>(std::move(factors));
}

const FiniteGroup& FactorFamily::factor(int i) const {
  if (!data_ || i < 0 || i >= size())
    fail(ErrorKind::IndexOutOfRange, "factor " + std::to_string(i) + " out of range");
  return (*data_)[i];
}

bool FactorFamily::same_as(const FactorFamily& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return *data_ == *other.data_;
}

ReducedWord ReducedWord::from_letters(FactorFamily family, std::vector<Letter> letters) {
  for (size_t i = 0; i < letters.size(); ++i) {
    const auto& [f, x] = letters[i];
    if (f < 0 || f >= family.size())
      fail(ErrorKind::IndexOutOfRange, "factor " + std::to_string(f) + " out of range");
    const FiniteGroup& g = family.factor(f);
    if (x < 0 || x >= g.order())
      fail(ErrorKind::IndexOutOfRange,
           "element " + std::to_string(x) + " out of range in factor " + std::to_string(f));
    if (x == g.identity()) fail(ErrorKind::Internal, "identity letter in a reduced word");
    if (i > 0 && letters[i - 1].factor == f)
      fail(ErrorKind::Internal, "adjacent letters share factor " + std::to_string(f));
  }
  ReducedWord w;
  w.family_ = std::move(family);
  w.letters_ = std::move(letters);
  return w;
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += 'g';
    out += std::to_string(letters_[i].factor);
    out += '^';
    out += std::to_string(letters_[i].element);
  }
  return out;
}

bool length_lex_less(const ReducedWord& a, const ReducedWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters() < b.letters();
}

ReducedWord word_identity(const FactorFamily& f) {
  return ReducedWord::from_letters(f, {});
}

ReducedWord reduce(const FactorFamily& f, const std::vector<std::pair<int, int>>& raw) {
  std::vector<Letter> stack;
  for (const auto& [fi, x] : raw) {
    if (fi < 0 || fi >= f.size())
      fail(ErrorKind::IndexOutOfRange, "factor " + std::to_string(fi) + " out of range");
    const FiniteGroup& g = f.factor(fi);
    if (x < 0 || x >= g.order())
      fail(ErrorKind::IndexOutOfRange,
           "element " + std::to_string(x) + " out of range in factor " + std::to_string(fi));
    if (x == g.identity()) continue;
    if (!stack.empty() && stack.back().factor == fi) {
      const int merged = g.mul(stack.back().element, x);
      if (merged == g.identity())
        stack.pop_back();  // cancellation; the new top may merge with later letters
      else
        stack.back().element = merged;
    } else {
      stack.push_back({fi, x});
    }
  }
  return ReducedWord::from_letters(f, std::move(stack));
}

static const FactorFamily& common_family(const ReducedWord& u, const ReducedWord& v) {
  if (!u.family().same_as(v.family()))
    fail(ErrorKind::FamilyMismatch, "words belong to different factor families");
  return u.family();
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  const FactorFamily& f = common_family(u, v);
  std::vector<std::pair<int, int>> raw;
  raw.reserve(u.letters().size() + v.letters().size());
  for (const Letter& l : u.letters()) raw.emplace_back(l.factor, l.element);
  for (const Letter& l : v.letters()) raw.emplace_back(l.factor, l.element);
  return reduce(f, raw);
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v, const ReducedWord& w) {
  return multiply(multiply(u, v), w);
}

ReducedWord invert(const ReducedWord& u) {
  std::vector<Letter> rev(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : rev) l.element = u.family().factor(l.factor).inv(l.element);
  return ReducedWord::from_letters(u.family(), std::move(rev));
}

ReducedWord conjugate(const ReducedWord& g, const ReducedWord& u) {
  return multiply(multiply(g, u), invert(g));
}

std::optional<int> omega(const ReducedWord& u) {
  if (u.empty()) return std::nullopt;
  return u.letters().back().factor;
}

ReducedWord embed(const FactorFamily& f, int factor, int element) {
  if (factor < 0 || factor >= f.size())
    fail(ErrorKind::IndexOutOfRange, "factor " + std::to_string(factor) + " out of range");
  const FiniteGroup& g = f.factor(factor);
  if (element < 0 || element >= g.order())
    fail(ErrorKind::IndexOutOfRange, "element " + std::to_string(element) +
                                         " out of range in factor " + std::to_string(factor));
  if (element == g.identity()) return word_identity(f);
  return ReducedWord::from_letters(f, {{factor, element}});
}

int retract(int factor, const ReducedWord& u) {
  const FiniteGroup& g = u.family().factor(factor);
  int acc = g.identity();
  for (const Letter& l : u.letters())
    if (l.factor == factor) acc = g.mul(acc, l.element);
  return acc;
}

static std::vector<ReducedWord> enumerate_impl(const FactorFamily& f, int max_len,
                                               const std::vector<int>& factors,
                                               size_t max_count) {
  std::vector<ReducedWord> out;
  out.push_back(word_identity(f));
  std::vector<ReducedWord> level = {out.back()};
  for (int len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<ReducedWord> next;
    for (const ReducedWord& w : level) {
      const int last = w.empty() ? -1 : w.letters().back().factor;
      for (int fi : factors) {
        if (fi == last) continue;
        const FiniteGroup& g = f.factor(fi);
        for (int x = 0; x < g.order(); ++x) {
          if (x == g.identity()) continue;
          std::vector<Letter> letters = w.letters();
          letters.push_back({fi, x});
          next.push_back(ReducedWord::from_letters(f, std::move(letters)));
          if (out.size() + next.size() > max_count)
            fail(ErrorKind::ConfigError,
                 "word enumeration exceeds " + std::to_string(max_count) + " entries");
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<ReducedWord> enumerate_words(const FactorFamily& f, int max_len, size_t max_count) {
  std::vector<int> all(f.size());
  for (int i = 0; i < f.size(); ++i) all[i] = i;
  return enumerate_impl(f, max_len, all, max_count);
}

std::vector<ReducedWord> enumerate_words(const FactorFamily& f, int max_len,
                                         const std::vector<int>& factors, size_t max_count) {
  std::vector<int> sorted = factors;
  std::sort(sorted.begin(), sorted.end());
  return enumerate_impl(f, max_len, sorted, max_count);
}

static int parse_int(const std::string& text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  int value = 0;
  auto res = std::from_chars(text.data() + start, text.data() + pos, value);
  if (start == pos || res.ec != std::errc{})
    fail(ErrorKind::ParseError, "expected a number at column " + std::to_string(start + 1));
  return value;
}

std::vector<std::pair<int, int>> parse_word(const std::string& text, const FactorFamily& f) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty word (use \"1\" for the identity)");
  if (text == "1") return {};
  std::vector<std::pair<int, int>> out;
  size_t pos = 0;
  while (true) {
    const size_t col = pos + 1;
    if (pos >= text.size() || text[pos] != 'g')
      fail(ErrorKind::ParseError,
           "expected g<factor>^<element> at column " + std::to_string(col));
    ++pos;
    const int fi = parse_int(text, pos);
    if (pos >= text.size() || text[pos] != '^')
      fail(ErrorKind::ParseError, "expected '^' at column " + std::to_string(pos + 1));
    ++pos;
    const int el = parse_int(text, pos);
    if (fi >= f.size())
      fail(ErrorKind::ParseError,
           "unknown factor " + std::to_string(fi) + " (column " + std::to_string(col) + ")");
    if (el >= f.factor(fi).order())
      fail(ErrorKind::ParseError, "unknown element " + std::to_string(el) + " in factor " +
                                      std::to_string(fi) + " (column " + std::to_string(col) +
                                      ")");
    out.emplace_back(fi, el);
    if (pos == text.size()) break;
    if (text[pos] != '*')
      fail(ErrorKind::ParseError, "expected '*' at column " + std::to_string(pos + 1));
    ++pos;
  }
  return out;
}

ReducedWord sample_reduced_word(const FactorFamily& f, SplitMix64& rng, int max_len) {
  int len = rng.below_int(max_len + 1);
  if (f.size() == 0) len = 0;
  if (f.size() == 1 && len > 1) len = 1;  // no alternation possible
  std::vector<Letter> letters;
  int last = -1;
  for (int i = 0; i < len; ++i) {
    int fi = rng.below_int(last < 0 ? f.size() : f.size() - 1);
    if (last >= 0 && fi >= last) ++fi;
    const FiniteGroup& g = f.factor(fi);
    int x = rng.below_int(g.order() - 1);
    if (x >= g.identity()) ++x;  // skip the identity slot
    letters.push_back({fi, x});
    last = fi;
  }
  return ReducedWord::from_letters(f, std::move(letters));
}

}  // namespace fpkit
