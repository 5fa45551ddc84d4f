#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "runcube/errors.hpp"
#include "runcube/strings.hpp"

using namespace runcube;

namespace {

std::vector<std::string> as_strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.to_string());
  return out;
}

}  // namespace

TEST_CASE("word parse and print round trip") {
  for (const char* s : {"", "0", "1", "0100100100", "1110000"}) CHECK(Word::parse(s).to_string() == s);
  const Word w = Word::parse("1000");
  CHECK(w.bits == 8);
  CHECK(w.at(0));
  CHECK_FALSE(w.at(1));
  CHECK(w.flipped(1).to_string() == "1100");
  CHECK(Word::parse("0110").weight() == 2);
  CHECK(Word::parse("10").concat(Word::parse("011")).to_string() == "10011");
  CHECK_THROWS_AS(Word::parse("01a"), ValidationError);
  CHECK_THROWS_AS(check_word_length(63), ValidationError);
  CHECK_THROWS_AS(check_word_length(-1), ValidationError);
}

TEST_CASE("run-constrained predicate") {
  CHECK(is_run_constrained("11000"));
  CHECK(is_run_constrained(""));
  CHECK(is_run_constrained("0"));
  CHECK(is_run_constrained("100100"));
  CHECK_FALSE(is_run_constrained("1100"));
  CHECK_FALSE(is_run_constrained("10"));
  CHECK_FALSE(is_run_constrained("1"));
  for (int n = 0; n <= 14; ++n)
    for (const auto& w : oracle::all_words(n)) {
      CAPTURE(w);
      REQUIRE(is_run_constrained(w) == oracle::is_rc(w));
      REQUIRE(is_run_constrained(Word::parse(w)) == oracle::is_rc(w));
    }
}

TEST_CASE("factorize") {
  CHECK(factorize(Word::parse("100100")) == std::vector<int>{1, 1});
  CHECK(factorize(Word::parse("0100100100")) == std::vector<int>{0, 1, 1, 1});
  CHECK(factorize(Word::parse("")).empty());
  CHECK(concat_letters({0, 2, 0}).to_string() == "0110000");

  try {
    factorize(Word::parse("0011000"));
    factorize(Word::parse("00110"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
  CHECK_THROWS_AS(factorize(Word::parse("10")), ValidationError);
}

TEST_CASE("factorization is unique for all valid words up to length 14") {
  for (int n = 0; n <= 14; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      const auto all = oracle::all_factorizations(w);
      CAPTURE(w);
      if (!oracle::is_rc(w)) {
        REQUIRE(all.empty());
        continue;
      }
      REQUIRE(all.size() == 1);
      const std::vector<int> letters = factorize(Word::parse(w));
      REQUIRE(letters == all.front());
      REQUIRE(concat_letters(letters).to_string() == w);
    }
  }
}

TEST_CASE("decompose") {
  SUBCASE("two single-letter blocks") {
    const RunDecomposition d = decompose(Word::parse("1000100"));
    CHECK(d.pre_run == 0);
    CHECK(d.blocks == std::vector<std::vector<int>>{{1}, {1}});
    CHECK(d.gaps == std::vector<int>{1});
    CHECK(d.post_run == 0);
    CHECK(d.case_tag == CaseTag::A);
  }
  SUBCASE("all zeros") {
    const RunDecomposition d = decompose(Word::parse("0000"));
    CHECK(d.pre_run == 4);
    CHECK(d.blocks.empty());
    CHECK(d.case_tag == CaseTag::E);
    CHECK(d.e_subclass() == 1);
  }
  SUBCASE("one block of two letters") {
    const RunDecomposition d = decompose(Word::parse("100100"));
    CHECK(d.blocks == std::vector<std::vector<int>>{{1, 1}});
    CHECK(d.gaps.empty());
    CHECK(d.case_tag == CaseTag::E);
    CHECK(d.e_subclass() == 3);
  }
  SUBCASE("remaining tags") {
    CHECK(decompose(Word::parse("0100")).e_subclass() == 2);
    CHECK(decompose(Word::parse("10010001000")).case_tag == CaseTag::B);  // [1,1] 0 [1]
    CHECK(decompose(Word::parse("10001001000")).case_tag == CaseTag::C);  // [1] 0 [1,1]
    CHECK(decompose(Word::parse("10010000100100")).case_tag == CaseTag::D);
    CHECK(to_char(CaseTag::D) == 'D');
  }
  CHECK_THROWS_AS(decompose(Word::parse("110")), ValidationError);
}

TEST_CASE("decompose reassembles every valid word up to length 18") {
  for (int n = 0; n <= 18; ++n)
    for_each_rc(n, [&](const Word& w) {
      const RunDecomposition d = decompose(w);
      REQUIRE(d.reassemble() == w);
      for (int g : d.gaps) REQUIRE(g >= 1);
      const bool e = d.blocks.size() <= 1;
      REQUIRE((d.case_tag == CaseTag::E) == e);
    });
}

TEST_CASE("enumerate_rc") {
  CHECK(as_strings(enumerate_rc(4)) == std::vector<std::string>{"0000", "0100", "1000"});
  CHECK(as_strings(enumerate_rc(3)) == std::vector<std::string>{"000", "100"});
  CHECK(as_strings(enumerate_rc(5)) == std::vector<std::string>{"00000", "00100", "01000", "10000", "11000"});
  REQUIRE(enumerate_rc(0).size() == 1);
  CHECK(enumerate_rc(0).front().length == 0);
  for (int n = 0; n <= 18; ++n) {
    CAPTURE(n);
    REQUIRE(as_strings(enumerate_rc(n)) == oracle::rc_words(n));
  }
  for (int n = 1; n <= 25; ++n) CHECK(mpz_class(std::to_string(enumerate_rc(n).size())) == fibonacci(n));
  CHECK_THROWS_AS(enumerate_rc(30, 1000), ResourceError);
}

TEST_CASE("fibonacci and weight counts") {
  CHECK(fibonacci(6) == 8);
  CHECK(fibonacci(-1) == 1);
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(12) == 144);
  CHECK(fibonacci(100) == mpz_class("354224848179261915075"));
  CHECK_THROWS_AS(fibonacci(-2), DomainError);

  CHECK(weight_count(7, 2) == 15);
  CHECK(weight_count(9, 0) == 1);
  CHECK(weight_count(7, 5) == 0);
  for (int n = 1; n <= 25; ++n) {
    mpz_class total = 0;
    for (int w = 0; w <= n; ++w) total += weight_count(n, w);
    CHECK(total == fibonacci(n + 2));
  }
  for (int n = 1; n <= 12; ++n) {
    std::map<int, long> census;
    for (const auto& w : oracle::rc_words(n + 2)) ++census[oracle::weight(w)];
    for (int w = 0; w <= n; ++w) CHECK(weight_count(n, w) == census[w]);
  }
}

TEST_CASE("inversion statistic counts zeros before ones") {
  CHECK(inversion_count(Word::parse("0100")) == 1);
  CHECK(inversion_count(Word::parse("1000")) == 0);
  CHECK(inversion_count(Word::parse("0000")) == 0);
  CHECK(inversion_count(Word::parse("11000")) == 0);
  CHECK(inversion_count(Word::parse("01000")) == 1);
  CHECK(inversion_count(Word::parse("00100")) == 2);
  for (const auto& w : oracle::all_words(10)) REQUIRE(inversion_count(Word::parse(w)) == oracle::coinversions(w));
}

TEST_CASE("run strings validate their completion") {
  const RunString v = RunString::parse_label("0110");
  CHECK(v.full().to_string() == "011000");
  CHECK(v.truncated().to_string() == "0110");
  CHECK_THROWS_AS(RunString::parse_label("0111"), ValidationError);
  CHECK_THROWS_AS(RunString::parse_label("11"), ValidationError);
  CHECK_NOTHROW(RunString::parse_label("1"));
}
