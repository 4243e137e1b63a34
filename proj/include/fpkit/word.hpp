#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpkit/group.hpp"
#include "fpkit/rng.hpp"

namespace fpkit {

/// One syllable of a free-product word: a nonidentity element of one factor.
struct Letter {
  int factor;
  int element;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// An ordered family of factor groups, shared immutably by the words over it.
/// Every factor must be nontrivial; an empty family is the trivial free
/// product (it occurs as the degenerate target of a projection).
class FactorFamily {
 public:
  FactorFamily() = default;  // null handle, only for default-constructed words
  explicit FactorFamily(std::vector<FiniteGroup> factors);

  int size() const { return data_ ? static_cast<int>(data_->size()) : 0; }
  const FiniteGroup& factor(int i) const;
  bool is_null() const { return data_ == nullptr; }

  /// Same underlying object, or structurally identical factor tables.
  bool same_as(const FactorFamily& other) const;

 private:
  std::shared_ptr<const std::vector<FiniteGroup>> data_;
};

/// The reduced form of a free-product element: adjacent letters lie in
/// distinct factors and no letter is an identity. The empty word is the
/// group identity. Values are immutable.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// `letters` must already be reduced; verified, throws Internal if not.
  static ReducedWord from_letters(FactorFamily family, std::vector<Letter> letters);

  const FactorFamily& family() const { return family_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Display syntax: letters as g<factor>^<element> joined by '*';
  /// the empty word renders as "1".
  std::string str() const;

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  FactorFamily family_;
  std::vector<Letter> letters_;
};

/// Length first, then lexicographic by (factor, element).
bool length_lex_less(const ReducedWord& a, const ReducedWord& b);

ReducedWord word_identity(const FactorFamily& f);

/// The unique reduced form of an arbitrary letter sequence: identity letters
/// are dropped and adjacent same-factor letters merge through the factor's
/// Cayley table, cascading.
ReducedWord reduce(const FactorFamily& f, const std::vector<std::pair<int, int>>& raw);

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord multiply(const ReducedWord& u, const ReducedWord& v, const ReducedWord& w);
ReducedWord invert(const ReducedWord& u);

/// g u g^-1, reduced.
ReducedWord conjugate(const ReducedWord& g, const ReducedWord& u);

/// Factor index of the last syllable; nullopt for the empty word.
std::optional<int> omega(const ReducedWord& u);

/// The one-letter word for factor element x, or the empty word if x is the
/// factor's identity.
ReducedWord embed(const FactorFamily& f, int factor, int element);

/// The retraction onto factor i: fixes G_i, kills every other factor.
/// Returns the ordered product in G_i of the factor-i letters of u.
int retract(int factor, const ReducedWord& u);

/// Every reduced word of length <= max_len, each exactly once, in
/// length-lexicographic order (factor index primary, element secondary).
/// The optional factor filter restricts the letters' factors.
std::vector<ReducedWord> enumerate_words(const FactorFamily& f, int max_len,
                                         size_t max_count = SIZE_MAX);
std::vector<ReducedWord> enumerate_words(const FactorFamily& f, int max_len,
                                         const std::vector<int>& factors,
                                         size_t max_count = SIZE_MAX);

/// Parses display syntax into a raw letter sequence (not yet reduced).
/// Errors carry 1-based column positions.
std::vector<std::pair<int, int>> parse_word(const std::string& text, const FactorFamily& f);

/// Uniform random reduced word of length below(max_len + 1).
ReducedWord sample_reduced_word(const FactorFamily& f, SplitMix64& rng, int max_len);

}  // namespace fpkit
