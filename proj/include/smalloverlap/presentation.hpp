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

// This file contains the monoid presentation data model, the text format for
// presentations, and the complement classes of relation words.

#ifndef SMALLOVERLAP_PRESENTATION_HPP_
#define SMALLOVERLAP_PRESENTATION_HPP_

#include <algorithm>      // for max, sort
#include <cstddef>        // for size_t
#include <istream>        // for istream
#include <numeric>        // for iota
#include <optional>       // for optional
#include <sstream>        // for ostringstream, istringstream
#include <string>         // for string, getline
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <utility>        // for move, pair
#include <vector>         // for vector

#include "word.hpp"

namespace smalloverlap {

  struct Relation {
    word_type lhs;
    word_type rhs;

    bool operator==(Relation const&) const = default;
  };

  using word_id = size_t;

  // A finite monoid presentation. Relations are kept verbatim; the relation
  // words (sides of relations) are deduplicated in order of first appearance.
  class Presentation {
   public:
    Presentation() = default;

    Presentation(Alphabet alphabet, std::vector<Relation> relations)
        : _alphabet(std::move(alphabet)), _relations(std::move(relations)) {
      for (auto const& rel : _relations) {
        for (auto const* side : {&rel.lhs, &rel.rhs}) {
          for (letter_type x : *side) {
            if (x >= _alphabet.size()) {
              throw ParseError("relation uses a letter outside the alphabet");
            }
          }
        }
        word_id l = intern(rel.lhs);
        word_id r = intern(rel.rhs);
        _relation_ids.emplace_back(l, r);
      }
      for (auto const& w : _words) {
        _delta = std::max(_delta, w.size());
        _total_length += w.size();
      }
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    // The distinct relation words u_0, ..., u_{M-1}.
    [[nodiscard]] std::vector<word_type> const& relation_words() const noexcept {
      return _words;
    }

    [[nodiscard]] word_type const& relation_word(word_id i) const {
      return _words.at(i);
    }

    // Ids of the two sides of each relation, parallel to relations().
    [[nodiscard]] std::vector<std::pair<word_id, word_id>> const&
    relation_ids() const noexcept {
      return _relation_ids;
    }

    [[nodiscard]] std::optional<word_id> id_of(word_type const& w) const {
      auto it = _index.find(w);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // Maximum length of a relation word.
    [[nodiscard]] size_t delta() const noexcept {
      return _delta;
    }

    // Sum of the lengths of the distinct relation words.
    [[nodiscard]] size_t total_length() const noexcept {
      return _total_length;
    }

    [[nodiscard]] bool has_empty_relation_word() const {
      return _index.count(word_type{}) != 0;
    }

    [[nodiscard]] std::string to_string(word_type const& w) const {
      return _alphabet.to_string(w);
    }

    [[nodiscard]] word_type parse_word(std::string_view text) const {
      return _alphabet.parse_word(text);
    }

   private:
    word_id intern(word_type const& w) {
      auto [it, inserted] = _index.emplace(w, _words.size());
      if (inserted) {
        _words.push_back(w);
      }
      return it->second;
    }

    Alphabet                                 _alphabet;
    std::vector<Relation>                    _relations;
    std::vector<word_type>                   _words;
    std::unordered_map<word_type, word_id>   _index;
    std::vector<std::pair<word_id, word_id>> _relation_ids;
    size_t                                   _delta        = 0;
    size_t                                   _total_length = 0;
  };

  namespace detail {
    inline std::u32string trim(std::u32string const& s) {
      size_t first = 0;
      size_t last  = s.size();
      while (first < last && utf8::is_space(s[first])) {
        ++first;
      }
      while (last > first && utf8::is_space(s[last - 1])) {
        --last;
      }
      return s.substr(first, last - first);
    }

    inline bool starts_with(std::u32string const& s, std::u32string_view p) {
      return s.size() >= p.size() && std::u32string_view(s).substr(0, p.size()) == p;
    }

    inline std::string encode(std::u32string const& s) {
      std::string out;
      for (char32_t c : s) {
        out += utf8::encode(c);
      }
      return out;
    }
  }  // namespace detail

  // Reads the presentation text format:
  //
  //   # comment
  //   alphabet: a b c
  //   rule: abc = cba
  //
  // Throws ParseError with the offending line number.
  inline Presentation parse_presentation(std::istream& in) {
    std::optional<Alphabet> alphabet;
    std::vector<Relation>   relations;
    std::string             raw;
    size_t                  line_no = 0;

    auto fail = [&line_no](std::string const& msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, raw)) {
      ++line_no;
      std::u32string line;
      try {
        line = detail::trim(utf8::decode(raw));
      } catch (ParseError const& e) {
        throw fail(e.what());
      }
      if (line.empty() || line[0] == U'#') {
        continue;
      }
      try {
        if (!alphabet) {
          if (!detail::starts_with(line, U"alphabet:")) {
            throw fail("expected 'alphabet:' as the first line");
          }
          alphabet.emplace();
          std::u32string rest = line.substr(9);
          size_t         i    = 0;
          while (i < rest.size()) {
            if (utf8::is_space(rest[i])) {
              ++i;
              continue;
            }
            size_t j = i;
            while (j < rest.size() && !utf8::is_space(rest[j])) {
              ++j;
            }
            if (j - i != 1) {
              throw fail("generator '" + detail::encode(rest.substr(i, j - i))
                         + "' is not a single character");
            }
            alphabet->add(rest[i]);
            i = j;
          }
          if (alphabet->size() == 0) {
            throw fail("the alphabet is empty");
          }
        } else if (detail::starts_with(line, U"rule:")) {
          std::u32string rest = line.substr(5);
          auto           eq   = rest.find(U'=');
          if (eq == std::u32string::npos || rest.find(U'=', eq + 1) != std::u32string::npos) {
            throw fail("a rule must contain exactly one '='");
          }
          auto lhs = detail::trim(rest.substr(0, eq));
          auto rhs = detail::trim(rest.substr(eq + 1));
          for (auto const* side : {&lhs, &rhs}) {
            if (side->empty()) {
              throw fail("missing side in rule (write '_' for the empty word)");
            }
            for (char32_t c : *side) {
              if (utf8::is_space(c)) {
                throw fail("whitespace inside a word");
              }
            }
          }
          relations.push_back({alphabet->parse_word(detail::encode(lhs)),
                               alphabet->parse_word(detail::encode(rhs))});
        } else {
          throw fail("expected 'rule:'");
        }
      } catch (ParseError const& e) {
        std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) {
          throw;
        }
        throw fail(msg);
      }
    }
    if (!alphabet) {
      throw ParseError("no 'alphabet:' line");
    }
    return Presentation(std::move(*alphabet), std::move(relations));
  }

  inline Presentation parse_presentation(std::string const& text) {
    std::istringstream in(text);
    return parse_presentation(in);
  }

  // Writes `p` in the format read by parse_presentation.
  inline std::string to_text(Presentation const& p) {
    std::ostringstream out;
    out << "alphabet:";
    for (char32_t g : p.alphabet().glyphs()) {
      out << ' ' << utf8::encode(g);
    }
    out << '\n';
    for (auto const& rel : p.relations()) {
      out << "rule: " << p.to_string(rel.lhs) << " = " << p.to_string(rel.rhs)
          << '\n';
    }
    return out.str();
  }

  // Partition of the relation words into classes of mutual complements: the
  // connected components of the graph whose edges are the relations.
  class ComplementClasses {
   public:
    ComplementClasses() = default;

    explicit ComplementClasses(Presentation const& p) {
      size_t const         n = p.relation_words().size();
      std::vector<word_id> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&parent](word_id x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      for (auto [l, r] : p.relation_ids()) {
        auto a = find(l);
        auto b = find(r);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
      _class_of.assign(n, 0);
      std::unordered_map<word_id, size_t> root_to_class;
      for (word_id i = 0; i < n; ++i) {
        auto [it, inserted] = root_to_class.emplace(find(i), _members.size());
        if (inserted) {
          _members.emplace_back();
        }
        _class_of[i] = it->second;
        _members[it->second].push_back(i);
      }
      auto const& words = p.relation_words();
      for (auto& m : _members) {
        std::sort(m.begin(), m.end(), [&words](word_id a, word_id b) {
          return lex_less(words[a], words[b]);
        });
      }
    }

    [[nodiscard]] size_t class_of(word_id i) const {
      return _class_of.at(i);
    }

    // Members of class `c`, sorted lexicographically by word.
    [[nodiscard]] std::vector<word_id> const& members(size_t c) const {
      return _members.at(c);
    }

    // All complements of `i` (including `i`), lexicographically sorted.
    [[nodiscard]] std::vector<word_id> const& complements(word_id i) const {
      return _members.at(class_of(i));
    }

    [[nodiscard]] size_t number_of_classes() const noexcept {
      return _members.size();
    }

    [[nodiscard]] word_id lex_min_complement(word_id i) const {
      return complements(i).front();
    }

   private:
    std::vector<size_t>               _class_of;
    std::vector<std::vector<word_id>> _members;
  };

  inline ComplementClasses complement_classes(Presentation const& p) {
    return ComplementClasses(p);
  }

}  // namespace smalloverlap

#endif  // SMALLOVERLAP_PRESENTATION_HPP_
