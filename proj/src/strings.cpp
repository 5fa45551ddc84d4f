#include "runcube/strings.hpp"

#include <bit>
#include <string>

#include "runcube/errors.hpp"

namespace runcube {

void check_word_length(int length) {
  if (length < 0 || length > kMaxWordLength)
    throw ValidationError("word length " + std::to_string(length) + " outside [0, " +
                          std::to_string(kMaxWordLength) + "]");
}

Word Word::parse(std::string_view text) {
  check_word_length(static_cast<int>(text.size()));
  Word w{0, static_cast<int>(text.size())};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1')
      throw ValidationError("invalid character '" + std::string(1, c) + "' at position " +
                            std::to_string(i));
    w.bits = (w.bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return w;
}

std::string Word::to_string() const {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if (at(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

int Word::weight() const { return std::popcount(bits); }

Word Word::concat(const Word& other) const {
  check_word_length(length + other.length);
  return {(bits << other.length) | other.bits, length + other.length};
}

RunString::RunString(int n, std::uint64_t label) : n_(n), label_(label) {
  if (n < 0 || n + 2 > kMaxWordLength)
    throw ValidationError("vertex length " + std::to_string(n) + " out of range");
  if (n < 64 && (label >> n) != 0)
    throw ValidationError("label has bits beyond length " + std::to_string(n));
  if (!is_run_constrained(full()))
    throw ValidationError("label " + truncated().to_string() +
                          " is not a vertex: " + full().to_string() + " is not run-constrained");
}

RunString RunString::parse_label(std::string_view label) {
  const Word w = Word::parse(label);
  return RunString(w.length, w.bits);
}

char to_char(CaseTag tag) { return static_cast<char>('A' + static_cast<int>(tag)); }

bool is_run_constrained(const Word& word) {
  std::uint64_t rest = word.bits;
  while (rest != 0) {
    const int top = std::bit_width(rest);
    const int run = std::countl_one(rest << (64 - top));
    const int after = top - run;
    const std::uint64_t below = rest & ((std::uint64_t{1} << after) - 1);
    if (after - static_cast<int>(std::bit_width(below)) < run + 1) return false;
    rest = below;
  }
  return true;
}

bool is_run_constrained(std::string_view word) {
  for (char c : word)
    if (c != '0' && c != '1') return false;
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] == '0') {
      ++i;
      continue;
    }
    std::size_t ones = 0;
    while (i < word.size() && word[i] == '1') ++ones, ++i;
    std::size_t zeros = 0;
    while (i < word.size() && word[i] == '0') ++zeros, ++i;
    if (zeros < ones + 1) return false;
  }
  return true;
}

std::vector<int> factorize(const Word& word) {
  std::vector<int> letters;
  int i = 0;
  while (i < word.length) {
    if (!word.at(i)) {
      letters.push_back(0);
      ++i;
      continue;
    }
    const int start = i;
    int ones = 0;
    while (i < word.length && word.at(i)) ++ones, ++i;
    int zeros = 0;
    while (i < word.length && !word.at(i) && zeros < ones + 1) ++zeros, ++i;
    if (zeros < ones + 1)
      throw ValidationError("word " + word.to_string() + " is not run-constrained: run of " +
                            std::to_string(ones) + " ones at position " + std::to_string(start) +
                            " is followed by only " + std::to_string(zeros) + " zeros");
    letters.push_back(ones);
  }
  return letters;
}

Word concat_letters(const std::vector<int>& letters) {
  Word w;
  for (int r : letters) {
    if (r == 0) {
      w = w.concat(Word{0, 1});
    } else {
      const std::uint64_t ones = (std::uint64_t{1} << r) - 1;
      w = w.concat(Word{ones << (r + 1), 2 * r + 1});
    }
  }
  return w;
}

int RunDecomposition::e_subclass() const {
  if (blocks.empty()) return 1;
  return blocks.size() == 1 && blocks.front().size() == 1 ? 2 : 3;
}

Word RunDecomposition::reassemble() const {
  std::vector<int> letters(static_cast<std::size_t>(pre_run), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    letters.insert(letters.end(), blocks[b].begin(), blocks[b].end());
    if (b < gaps.size()) letters.insert(letters.end(), static_cast<std::size_t>(gaps[b]), 0);
  }
  letters.insert(letters.end(), static_cast<std::size_t>(post_run), 0);
  return concat_letters(letters);
}

RunDecomposition decompose(const Word& word) {
  const std::vector<int> letters = factorize(word);
  RunDecomposition dec;
  std::size_t i = 0;
  while (i < letters.size() && letters[i] == 0) ++dec.pre_run, ++i;
  while (i < letters.size()) {
    std::vector<int> block;
    while (i < letters.size() && letters[i] != 0) block.push_back(letters[i++]);
    int zeros = 0;
    while (i < letters.size() && letters[i] == 0) ++zeros, ++i;
    dec.blocks.push_back(std::move(block));
    if (i < letters.size())
      dec.gaps.push_back(zeros);
    else
      dec.post_run = zeros;
  }
  if (dec.blocks.size() <= 1) {
    dec.case_tag = CaseTag::E;
  } else {
    const bool first_single = dec.blocks.front().size() == 1;
    const bool last_single = dec.blocks.back().size() == 1;
    if (first_single)
      dec.case_tag = last_single ? CaseTag::A : CaseTag::C;
    else
      dec.case_tag = last_single ? CaseTag::B : CaseTag::D;
  }
  return dec;
}

std::vector<Word> enumerate_rc(int length, std::uint64_t cap) {
  check_word_length(length);
  const mpz_class count = length == 0 ? mpz_class(1) : fibonacci(length);
  if (count > mpz_class(std::to_string(cap)))
    throw ResourceError("RC_" + std::to_string(length) + " has " + count.get_str() +
                        " words, above the cap of " + std::to_string(cap));
  std::vector<Word> words;
  words.reserve(count.get_ui());
  for_each_rc(length, [&](const Word& w) { words.push_back(w); });
  return words;
}

mpz_class fibonacci(long k) {
  if (k < -1) throw DomainError("fibonacci index " + std::to_string(k) + " < -1");
  if (k == -1) return 1;
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

mpz_class weight_count(long n, long w) {
  if (n < 0 || w < 0) throw DomainError("weight_count requires n >= 0 and w >= 0");
  if (w > (n + 1) / 2) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - w + 1),
               static_cast<unsigned long>(w));
  return c;
}

long inversion_count(const Word& word) {
  long total = 0;
  long zeros = 0;
  for (int i = 0; i < word.length; ++i) {
    if (word.at(i))
      total += zeros;
    else
      ++zeros;
  }
  return total;
}

}  // namespace runcube
