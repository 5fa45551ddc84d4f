#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace runcube {

inline constexpr int kMaxWordLength = 62;

// A binary word stored as a bitmask. Character 0 (leftmost) is bit length-1.
struct Word {
  std::uint64_t bits = 0;
  int length = 0;

  static Word parse(std::string_view text);
  std::string to_string() const;

  // Character at position i, counting from the left, 0-based.
  bool at(int i) const { return (bits >> (length - 1 - i)) & 1U; }
  Word flipped(int i) const { return {bits ^ (std::uint64_t{1} << (length - 1 - i)), length}; }
  int weight() const;

  Word concat(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
};

// A vertex of R_n: a truncated label whose completion label·00 is run-constrained.
class RunString {
 public:
  // Validates label·00; throws ValidationError otherwise.
  RunString(int n, std::uint64_t label);
  static RunString parse_label(std::string_view label);

  int n() const { return n_; }
  std::uint64_t label() const { return label_; }
  Word truncated() const { return {label_, n_}; }
  Word full() const { return {label_ << 2, n_ + 2}; }

 private:
  int n_;
  std::uint64_t label_;
};

enum class CaseTag { A, B, C, D, E };

char to_char(CaseTag tag);

// Zero-runs and S-word blocks of a run-constrained word:
//   0^{pre_run} block_0 0^{gaps[0]} block_1 ... block_k 0^{post_run}
// Each block lists S-letter sizes r (letter 1^r 0^{r+1}); gaps are >= 1.
struct RunDecomposition {
  int pre_run = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> gaps;
  int post_run = 0;
  CaseTag case_tag = CaseTag::E;

  // Case E subclass: 1 = all zeros, 2 = a single S-word, 3 = two or more S-words.
  int e_subclass() const;
  Word reassemble() const;
};

void check_word_length(int length);

bool is_run_constrained(const Word& word);
bool is_run_constrained(std::string_view word);

// Letter sizes of the unique factorization over {0, 100, 11000, ...}; 0 denotes the letter "0".
std::vector<int> factorize(const Word& word);
Word concat_letters(const std::vector<int>& letters);

RunDecomposition decompose(const Word& word);

inline constexpr std::uint64_t kDefaultEnumerationCap = 50'000'000;

namespace detail {

template <class Visit>
void extend_rc(std::uint64_t prefix, int remaining, int length, Visit& visit) {
  if (remaining == 0) {
    visit(Word{prefix, length});
    return;
  }
  extend_rc(prefix << 1, remaining - 1, length, visit);
  for (int r = 1; 2 * r + 1 <= remaining; ++r) {
    const std::uint64_t ones = (std::uint64_t{1} << r) - 1;
    extend_rc(((prefix << r) | ones) << (r + 1), remaining - 2 * r - 1, length, visit);
  }
}

}  // namespace detail

// Calls visit for every run-constrained word of the given length, in ascending
// numeric order, by depth-first concatenation of letters 0 < 100 < 11000 < ...
template <class Visit>
void for_each_rc(int length, Visit&& visit) {
  check_word_length(length);
  detail::extend_rc(0, length, length, visit);
}
std::vector<Word> enumerate_rc(int length, std::uint64_t cap = kDefaultEnumerationCap);

mpz_class fibonacci(long k);
mpz_class weight_count(long n, long w);

// Sum over ones of the number of zeros to their left.
long inversion_count(const Word& word);

}  // namespace runcube
