//
// smalloverlap - word problems and normal forms for small overlap monoids
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <random>
#include <string>

#include <catch_amalgamated.hpp>

#include "smalloverlap.hpp"

using namespace smalloverlap;

namespace {
  Presentation parse(std::string const& s) {
    return parse_presentation(s);
  }
}  // namespace

TEST_CASE("parse a one relation presentation", "[core_model]") {
  auto p = parse("alphabet: a b c\nrule: abc = cba\n");
  CHECK(p.alphabet().size() == 3);
  CHECK(p.relations().size() == 1);
  CHECK(p.delta() == 3);
  CHECK(p.total_length() == 6);
}

TEST_CASE("relation words are deduplicated", "[core_model]") {
  auto p = parse("alphabet: a b c d\nrule: acba = aabc\nrule: acba = dbbbd\n");
  CHECK(p.delta() == 5);
  CHECK(p.total_length() == 13);
  REQUIRE(p.relation_words().size() == 3);
  CHECK(p.to_string(p.relation_word(0)) == "acba");
  CHECK(p.to_string(p.relation_word(1)) == "aabc");
  CHECK(p.to_string(p.relation_word(2)) == "dbbbd");
  CHECK(p.relation_ids()[1] == std::pair<word_id, word_id>{0, 2});
}

TEST_CASE("parse errors", "[core_model]") {
  CHECK_THROWS_AS(parse("alphabet: a a\n"), ParseError);
  CHECK_THROWS_AS(parse("alphabet: a b\nrule: ac = b\n"), ParseError);
  CHECK_THROWS_AS(parse("alphabet: a b\nrule: ab\n"), ParseError);
  CHECK_THROWS_AS(parse("alphabet: a b\nrule: a = b = a\n"), ParseError);
  CHECK_THROWS_AS(parse("alphabet: a b\nrule: a = \n"), ParseError);
  CHECK_THROWS_AS(parse("rule: a = b\n"), ParseError);
  CHECK_THROWS_AS(parse("alphabet: ab\n"), ParseError);
  CHECK_THROWS_AS(parse("alphabet: a _\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_WITH(parse("# header\nalphabet: a b\n\nrule: ax = b\n"),
                    Catch::Matchers::StartsWith("line 4: "));
}

TEST_CASE("comments, blank lines and the empty word", "[core_model]") {
  auto p = parse("# c\n\nalphabet: x y\n# more\nrule: xy = _\n");
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].rhs.empty());
  CHECK(p.has_empty_relation_word());
  CHECK(p.to_string(word_type{}) == "_");
  CHECK(p.parse_word("_").empty());
  CHECK_THROWS_AS(p.parse_word(""), ParseError);
  CHECK_THROWS_AS(p.parse_word("xz"), ParseError);
}

TEST_CASE("non-ASCII glyphs keep listing order", "[core_model]") {
  auto p = parse("alphabet: β α\nrule: αβ = ββα\n");
  CHECK(p.alphabet().rank(U'β') == 0);
  CHECK(p.alphabet().rank(U'α') == 1);
  CHECK(p.to_string(p.parse_word("βα")) == "βα");
  CHECK(lex_less(p.parse_word("β"), p.parse_word("α")));
  CHECK_THROWS_AS(p.parse_word("a\xCC\x81"), ParseError);
  CHECK_THROWS_AS(parse("alphabet: \xCC\x81\n"), ParseError);
}

TEST_CASE("lexicographic order", "[core_model]") {
  Alphabet a(U"abcd");
  CHECK(lex_compare({}, a.parse_word("a")) == Order::less);
  CHECK(lex_compare(a.parse_word("aabc"), a.parse_word("acba")) == Order::less);
  CHECK(lex_compare(a.parse_word("ab"), a.parse_word("ab")) == Order::equal);
  CHECK(lex_compare(a.parse_word("ab"), a.parse_word("a")) == Order::greater);
  CHECK(lex_compare(a.parse_word("b"), a.parse_word("abbb")) == Order::greater);
}

TEST_CASE("lexicographic order is a total order", "[core_model][property]") {
  std::mt19937_64 rng(7);
  auto            word = [&rng](size_t sigma) {
    word_type w(std::uniform_int_distribution<size_t>(0, 5)(rng), 0);
    for (auto& x : w) {
      x = static_cast<letter_type>(std::uniform_int_distribution<size_t>(0, sigma - 1)(rng));
    }
    return w;
  };
  for (int i = 0; i < 1000; ++i) {
    size_t sigma = std::uniform_int_distribution<size_t>(1, 4)(rng);
    auto   u = word(sigma), v = word(sigma), w = word(sigma);
    CHECK((lex_compare(u, v) == Order::equal) == (u == v));
    CHECK((lex_compare(u, v) == Order::less) == (lex_compare(v, u) == Order::greater));
    if (lex_less(u, v) && lex_less(v, w)) {
      CHECK(lex_less(u, w));
    }
    CHECK(lex_less(u, v) == (u < v));
  }
}

TEST_CASE("complement classes", "[core_model]") {
  SECTION("one class sorted lexicographically") {
    auto p = parse("alphabet: a b c d\nrule: acba = aabc\nrule: acba = dbbbd\n");
    ComplementClasses c(p);
    REQUIRE(c.number_of_classes() == 1);
    std::vector<std::string> names;
    for (auto id : c.members(0)) {
      names.push_back(p.to_string(p.relation_word(id)));
    }
    CHECK(names == std::vector<std::string>{"aabc", "acba", "dbbbd"});
    CHECK(p.to_string(p.relation_word(c.lex_min_complement(2))) == "aabc");
  }
  SECTION("two disjoint relations") {
    auto p = parse("alphabet: a b c d\nrule: aabc = acba\nrule: adca = bddb\n");
    ComplementClasses c(p);
    CHECK(c.number_of_classes() == 2);
    CHECK(c.class_of(0) == c.class_of(1));
    CHECK(c.class_of(2) == c.class_of(3));
    CHECK(c.class_of(0) != c.class_of(2));
  }
  SECTION("a relation with equal sides") {
    auto p = parse("alphabet: a b\nrule: ab = ab\n");
    ComplementClasses c(p);
    REQUIRE(c.number_of_classes() == 1);
    CHECK(c.members(0).size() == 1);
  }
}

TEST_CASE("complement classes partition the relation words", "[core_model][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    size_t                sigma = 3;
    std::vector<Relation> rels;
    for (int j = 0; j < 5; ++j) {
      word_type l(1 + rng() % 2, 0), r(1 + rng() % 2, 0);
      for (auto& x : l) {
        x = static_cast<letter_type>(rng() % sigma);
      }
      for (auto& x : r) {
        x = static_cast<letter_type>(rng() % sigma);
      }
      rels.push_back({l, r});
    }
    Presentation      p(Alphabet(U"abc"), rels);
    ComplementClasses c(p);
    std::vector<int>  seen(p.relation_words().size(), 0);
    for (size_t k = 0; k < c.number_of_classes(); ++k) {
      for (auto id : c.members(k)) {
        ++seen[id];
        CHECK(c.class_of(id) == k);
      }
    }
    for (int s : seen) {
      CHECK(s == 1);
    }
    for (auto [l, r] : p.relation_ids()) {
      CHECK(c.class_of(l) == c.class_of(r));
    }
  }
}

TEST_CASE("parse, print and parse again", "[core_model][property]") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::u32string glyphs = U"xyzwq";
    Alphabet       a(glyphs.substr(0, 2 + rng() % 4));
    std::vector<Relation> rels;
    for (size_t j = 0, m = rng() % 4; j < m; ++j) {
      word_type l(rng() % 5, 0), r(1 + rng() % 5, 0);
      for (auto& x : l) {
        x = static_cast<letter_type>(rng() % a.size());
      }
      for (auto& x : r) {
        x = static_cast<letter_type>(rng() % a.size());
      }
      rels.push_back({l, r});
    }
    Presentation p(a, rels);
    auto         q = parse_presentation(to_text(p));
    CHECK(q.alphabet() == p.alphabet());
    CHECK(q.relations() == p.relations());
    CHECK(q.relation_words() == p.relation_words());
    CHECK(to_text(q) == to_text(p));
  }
}
