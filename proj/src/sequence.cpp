#include "qwalk/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Constant:
      return "constant";
    case SequenceKind::PeriodicApproximant:
      return "periodic";
    case SequenceKind::Fibonacci:
      return "fibonacci";
    case SequenceKind::SilverMean:
      return "silver";
    case SequenceKind::RandomBinary:
      return "random-binary";
    case SequenceKind::RandomContinuous:
      return "random-continuous";
  }
  return "unknown";
}

SequenceKind parse_sequence_kind(std::string_view name) {
  for (auto kind : {SequenceKind::Constant, SequenceKind::PeriodicApproximant, SequenceKind::Fibonacci,
                    SequenceKind::SilverMean, SequenceKind::RandomBinary, SequenceKind::RandomContinuous}) {
    if (name == to_string(kind)) return kind;
  }
  throw DomainError("unknown sequence kind '" + std::string(name) + "'");
}

std::string_view to_string(LetterOrder order) { return order == LetterOrder::Word ? "word" : "operator"; }

LetterOrder parse_letter_order(std::string_view name) {
  if (name == "word") return LetterOrder::Word;
  if (name == "operator") return LetterOrder::Operator;
  throw DomainError("unknown letter order '" + std::string(name) + "'");
}

namespace {

void check_angle(const char* name, double value, CoinFamily family) {
  if (!std::isfinite(value)) throw DomainError(std::string(name) + " must be finite");
  if (family == CoinFamily::GeneralizedHadamard && (value < 0.0 || value > std::numbers::pi / 2)) {
    throw DomainError(std::string(name) + " = " + std::to_string(value) + " outside [0, pi/2]");
  }
}

}  // namespace

void SequenceSpec::validate() const {
  check_angle("alpha_a", alpha_a, family);
  switch (kind) {
    case SequenceKind::Constant:
      break;
    case SequenceKind::PeriodicApproximant:
      if (approximant_order < 0) throw DomainError("approximant_order must be >= 0");
      check_angle("alpha_b", alpha_b, family);
      break;
    case SequenceKind::Fibonacci:
    case SequenceKind::SilverMean:
      check_angle("alpha_b", alpha_b, family);
      break;
    case SequenceKind::RandomBinary:
      check_angle("alpha_b", resolved_alpha_b(), family);
      break;
    case SequenceKind::RandomContinuous:
      if (family != CoinFamily::GeneralizedHadamard) {
        throw DomainError("random-continuous sequences use the generalized Hadamard family");
      }
      if (!(width > 0.0) || width > std::numbers::pi / 4) throw DomainError("width must lie in (0, pi/4]");
      break;
  }
}

double SequenceSpec::resolved_alpha_b() const {
  if (kind == SequenceKind::RandomBinary && complementary_b) return std::numbers::pi / 2 - alpha_a;
  return alpha_b;
}

std::size_t CoinWord::count(Letter letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string CoinWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto l : letters_) s.push_back(l == Letter::A ? 'A' : 'B');
  return s;
}

namespace {

CoinWord substitute(int n, std::size_t max_length, const std::vector<Letter>& image_of_a, const char* name) {
  if (n < 0) throw DomainError(std::string(name) + " order must be >= 0");
  std::vector<Letter> word{Letter::A};
  for (int step = 0; step < n; ++step) {
    std::size_t next_size = 0;
    for (auto l : word) next_size += l == Letter::A ? image_of_a.size() : 1;
    if (next_size > max_length) {
      throw ResourceError(std::string(name) + " word of order " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(max_length) + " letters");
    }
    std::vector<Letter> next;
    next.reserve(next_size);
    for (auto l : word) {
      if (l == Letter::A) {
        next.insert(next.end(), image_of_a.begin(), image_of_a.end());
      } else {
        next.push_back(Letter::A);
      }
    }
    word = std::move(next);
  }
  return CoinWord(std::move(word));
}

// Lengths of the substitution words w_{-1} = "B", w_0 = "A", w_n = sigma^n(A),
// stored at offset +1, up to the largest that fits in 63 bits.
// Fibonacci: w_n = w_{n-1} w_{n-2}. Silver: w_n = w_{n-1} w_{n-1} w_{n-2}.
struct Hierarchy {
  int copies;  // number of w_{n-1} blocks in w_n
  std::vector<std::uint64_t> length;

  explicit Hierarchy(int copies_of_previous) : copies(copies_of_previous), length{1, 1} {
    constexpr std::uint64_t limit = std::uint64_t{1} << 62;
    while (length.back() < limit) {
      const std::size_t k = length.size();
      length.push_back(static_cast<std::uint64_t>(copies) * length[k - 1] + length[k - 2]);
    }
  }

  std::uint64_t len(int n) const { return length[static_cast<std::size_t>(n + 1)]; }
  int max_order() const { return static_cast<int>(length.size()) - 2; }

  // Letter at position j of w_n.
  Letter at(int n, std::uint64_t j) const {
    while (n >= 1) {
      const std::uint64_t prev = len(n - 1);
      if (j < static_cast<std::uint64_t>(copies) * prev) {
        j %= prev;
        n -= 1;
      } else {
        j -= static_cast<std::uint64_t>(copies) * prev;
        n -= 2;
      }
    }
    return n == 0 ? Letter::A : Letter::B;
  }

  // Position i of the infinite word. In operator order the time sequence is
  // reverse(w_n); those are mutually consistent prefixes along even n only.
  Letter stream_letter(std::uint64_t i, LetterOrder order) const {
    const int step = order == LetterOrder::Word ? 1 : 2;
    for (int n = 0; n <= max_order(); n += step) {
      if (len(n) > i) {
        return order == LetterOrder::Word ? at(n, i) : at(n, len(n) - 1 - i);
      }
    }
    throw ResourceError("letter index " + std::to_string(i) + " beyond the supported range");
  }
};

const Hierarchy& fibonacci_hierarchy() {
  static const Hierarchy h(1);
  return h;
}

const Hierarchy& silver_hierarchy() {
  static const Hierarchy h(2);
  return h;
}

}  // namespace

CoinWord fibonacci_word(int n, std::size_t max_length) {
  return substitute(n, max_length, {Letter::A, Letter::B}, "fibonacci");
}

CoinWord silver_word(int n, std::size_t max_length) {
  return substitute(n, max_length, {Letter::A, Letter::A, Letter::B}, "silver");
}

LetterStream::LetterStream(const SequenceSpec& spec) : spec_(spec) {
  spec_.validate();
  if (spec_.kind == SequenceKind::PeriodicApproximant) {
    auto letters = fibonacci_word(spec_.approximant_order).letters();
    if (spec_.letter_order == LetterOrder::Operator) std::reverse(letters.begin(), letters.end());
    period_ = CoinWord(std::move(letters));
  }
}

Letter LetterStream::letter(std::uint64_t i) const {
  switch (spec_.kind) {
    case SequenceKind::Constant:
    case SequenceKind::RandomContinuous:
      return Letter::A;
    case SequenceKind::PeriodicApproximant:
      return period_[static_cast<std::size_t>(i % period_.size())];
    case SequenceKind::Fibonacci:
      return fibonacci_hierarchy().stream_letter(i, spec_.letter_order);
    case SequenceKind::SilverMean:
      return silver_hierarchy().stream_letter(i, spec_.letter_order);
    case SequenceKind::RandomBinary:
      return (rng::draw(spec_.seed, i) >> 63) == 0 ? Letter::A : Letter::B;
  }
  return Letter::A;
}

double LetterStream::angle(std::uint64_t i) const {
  if (spec_.kind == SequenceKind::RandomContinuous) {
    const double u = rng::uniform(spec_.seed, i);
    return std::clamp(std::numbers::pi / 4 + spec_.width * (2.0 * u - 1.0), 0.0, std::numbers::pi / 2);
  }
  return angle_for_letter(spec_, letter(i));
}

std::string LetterStream::prefix(std::size_t n) const {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(letter(i) == Letter::A ? 'A' : 'B');
  return s;
}

double angle_for_letter(const SequenceSpec& spec, Letter letter) {
  if (spec.kind == SequenceKind::Constant) return spec.alpha_a;
  return letter == Letter::A ? spec.alpha_a : spec.resolved_alpha_b();
}

}  // namespace qwalk
