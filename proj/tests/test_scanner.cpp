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

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "naive_oracles.hpp"
#include "smalloverlap.hpp"

using namespace smalloverlap;

namespace {
  Presentation two_relations() {
    return parse_presentation("alphabet: a b c d\nrule: aabc = acba\nrule: adca = bddb\n");
  }
}  // namespace

TEST_CASE("shortest relation prefix", "[scanner]") {
  auto    p = two_relations();
  Scanner s(p);
  CHECK(!s.shortest_relation_prefix(p.parse_word("dcba")));
  auto h = s.shortest_relation_prefix(p.parse_word("cbaabdda"));
  REQUIRE(h);
  CHECK(*h == RelationPrefixHit{2, 0, 5});
  CHECK(!s.shortest_relation_prefix(p.parse_word("cbaabdda"), 4));
  CHECK(s.shortest_relation_prefix(p.parse_word("cbaabdda"), 5));
}

TEST_CASE("clean overlap prefix with a chain", "[scanner]") {
  auto    p = two_relations();
  Scanner s(p);
  auto    c = s.clean_overlap_prefix(p.parse_word("cbaabdda"));
  REQUIRE(c);
  CHECK(c->hit == RelationPrefixHit{4, 3, 7});
  CHECK(c->chain == std::vector<ChainLink>{{0, 1}});
  CHECK(c->lead == 2);
  CHECK(c->length() == 7);
  CHECK(!s.clean_overlap_prefix(p.parse_word("dcba")));
}

TEST_CASE("clean overlap prefix without a chain", "[scanner]") {
  auto    p = parse_presentation("alphabet: a b c d\nrule: abbba = cdc\n");
  Scanner s(p);
  auto    c = s.clean_overlap_prefix(p.parse_word("cdcdcabbbabbbabbcd"));
  REQUIRE(c);
  CHECK(c->lead == 0);
  CHECK(c->chain.empty());
  CHECK(c->length() == 2);
  CHECK(c->hit.word == 1);
}

TEST_CASE("p-active", "[scanner]") {
  auto    p = two_relations();
  Scanner s(p);
  CHECK(s.is_p_active(p.parse_word("cbaabdda"), p.parse_word("a")));
  CHECK(!s.is_p_active(p.parse_word("cbaabdda"), word_type{}));
  CHECK(!s.is_p_active(p.parse_word("bbcd"), p.parse_word("c")));
  CHECK_THROWS_AS(s.is_p_active(p.parse_word("bc"), p.parse_word("aa")), Error);
  auto h = s.p_active_hit(p.parse_word("cbaabdda"), p.parse_word("a"));
  REQUIRE(h);
  CHECK(*h == RelationPrefixHit{0, 1, 3});
}

TEST_CASE("scanner agrees with the naive oracles", "[scanner][property]") {
  auto const corpus = testing::c4_corpus(500, 77);
  size_t     chains = 0;
  size_t     active = 0;
  for (auto const& c : corpus) {
    auto const& p = c.presentation;
    Scanner     s(p);
    auto const& d = s.decomposition();
    for (auto const& w : c.words) {
      std::vector<std::tuple<size_t, size_t, word_id>> fast, slow;
      s.scan(w, 0, w.size(), [&fast](RelationPrefixHit const& h) {
        fast.emplace_back(h.end, h.a_len, h.word);
        return true;
      });
      for (auto const& o : naive::occurrences_xy(d, w)) {
        slow.emplace_back(o.end, o.start, o.word);
      }
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      CHECK(fast == slow);

      auto got      = s.shortest_relation_prefix(w);
      auto expected = naive::shortest_relation_prefix(d, w);
      REQUIRE(got.has_value() == expected.has_value());
      auto cop = s.clean_overlap_prefix(w);
      CHECK(cop.has_value() == got.has_value());
      if (!got) {
        CHECK(!naive::has_relation_factor(p, w));
      } else {
        CHECK(got->a_len == expected->start);
        CHECK(got->end == expected->end);
        CHECK(cop->lead == got->a_len);
        // every link is an occurrence that the next one starts inside of
        size_t start = cop->lead;
        for (auto const& link : cop->chain) {
          auto const xy = d.X[link.word] + d.Y[link.word];
          CHECK(w.compare(start, xy.size(), xy) == 0);
          CHECK(link.y_cut >= 1);
          CHECK(link.y_cut < d.Y[link.word].size());
          start += d.X[link.word].size() + link.y_cut;
        }
        CHECK(start == cop->hit.a_len);
        auto const xy = d.X[cop->hit.word] + d.Y[cop->hit.word];
        CHECK(cop->hit.end == cop->hit.a_len + xy.size());
        CHECK(w.compare(cop->hit.a_len, xy.size(), xy) == 0);
        if (cop->chain.empty()) {
          CHECK(cop->hit == *got);
        }
        chains += !cop->chain.empty();
      }
      for (word_id r = 0; r < d.Z.size(); ++r) {
        bool const a = s.is_p_active(w, d.Z[r]);
        CHECK(a == naive::is_p_active(d, w, d.Z[r]));
        active += a;
      }
    }
  }
  CHECK(active > 0);
  INFO("chains " << chains);
}
