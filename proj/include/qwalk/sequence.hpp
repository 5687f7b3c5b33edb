#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

enum class Letter : std::uint8_t { A, B };

enum class SequenceKind {
  Constant,             ///< AAAA...
  PeriodicApproximant,  ///< fibonacci_word(order) repeated
  Fibonacci,            ///< fixed point of A->AB, B->A
  SilverMean,           ///< fixed point of A->AAB, B->A
  RandomBinary,         ///< i.i.d. fair letters
  RandomContinuous,     ///< fresh angle in [pi/4 - width, pi/4 + width] every step
};

/// How a word is laid out in time. Word: leftmost letter acts first.
/// Operator: the word is read as an operator product, rightmost factor first.
enum class LetterOrder { Word, Operator };

std::string_view to_string(SequenceKind kind);
SequenceKind parse_sequence_kind(std::string_view name);
std::string_view to_string(LetterOrder order);
LetterOrder parse_letter_order(std::string_view name);

struct SequenceSpec {
  SequenceKind kind = SequenceKind::Constant;
  int approximant_order = 1;
  double alpha_a = std::numbers::pi / 4;
  double alpha_b = std::numbers::pi / 4;
  double width = std::numbers::pi / 8;
  std::uint64_t seed = 0;
  CoinFamily family = CoinFamily::GeneralizedHadamard;
  LetterOrder letter_order = LetterOrder::Word;
  /// RandomBinary only: use pi/2 - alpha_a for letter B instead of alpha_b.
  bool complementary_b = false;

  /// Throws DomainError naming the offending field.
  void validate() const;

  /// Angle scheduled for letter B after applying `complementary_b`.
  double resolved_alpha_b() const;

  bool is_random() const {
    return kind == SequenceKind::RandomBinary || kind == SequenceKind::RandomContinuous;
  }
};

/// Finite word over {A, B}.
class CoinWord {
 public:
  CoinWord() = default;
  explicit CoinWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t count(Letter letter) const;
  std::string str() const;

  friend bool operator==(const CoinWord&, const CoinWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline constexpr std::size_t kDefaultWordCap = std::size_t{1} << 28;

/// n-th approximant, obtained by applying A->AB, B->A n times to "A".
/// Throws ResourceError if the word would be longer than `max_length`.
CoinWord fibonacci_word(int n, std::size_t max_length = kDefaultWordCap);

/// n-th silver-mean word, A->AAB, B->A applied n times to "A".
CoinWord silver_word(int n, std::size_t max_length = kDefaultWordCap);

/// Unbounded letter schedule. letter(i) and angle(i) are pure functions of
/// (spec, i); the substitution kinds are evaluated by descending the
/// approximant hierarchy in O(log i) without materializing the word.
class LetterStream {
 public:
  explicit LetterStream(const SequenceSpec& spec);

  const SequenceSpec& spec() const { return spec_; }
  Letter letter(std::uint64_t i) const;
  /// Coin angle for step i (0-based).
  double angle(std::uint64_t i) const;
  std::string prefix(std::size_t n) const;

 private:
  SequenceSpec spec_;
  CoinWord period_;  // PeriodicApproximant only, already in time order
};

/// A -> alpha_a, B -> resolved_alpha_b(). For RandomContinuous use
/// LetterStream::angle, which returns the per-step sample.
double angle_for_letter(const SequenceSpec& spec, Letter letter);

}  // namespace qwalk
