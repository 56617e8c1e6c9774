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

// Letters, words, alphabets and the lexicographic order on words.

#ifndef SMALLOVERLAP_WORD_HPP_
#define SMALLOVERLAP_WORD_HPP_

#include <algorithm>      // for min
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <stdexcept>      // for runtime_error
#include <string>         // for string, basic_string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

namespace smalloverlap {

  // Base class of every exception thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation text or word.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A letter is the 0-based rank of a generator in its alphabet. Values at or
  // above `sentinel_base` are reserved for suffix-tree terminators.
  using letter_type = char32_t;
  using word_type   = std::basic_string<letter_type>;

  inline constexpr letter_type sentinel_base = letter_type(1) << 31;

  enum class Order { less, equal, greater };

  // ε is less than every other word; otherwise compare first letters and
  // recurse on the tails.
  inline Order lex_compare(word_type const& u, word_type const& v) noexcept {
    size_t i = 0;
    for (; i < u.size() && i < v.size(); ++i) {
      if (u[i] != v[i]) {
        return u[i] < v[i] ? Order::less : Order::greater;
      }
    }
    if (u.size() == v.size()) {
      return Order::equal;
    }
    return i == u.size() ? Order::less : Order::greater;
  }

  inline bool lex_less(word_type const& u, word_type const& v) noexcept {
    return lex_compare(u, v) == Order::less;
  }

  inline bool is_prefix(word_type const& prefix, word_type const& w) noexcept {
    return prefix.size() <= w.size()
           && w.compare(0, prefix.size(), prefix) == 0;
  }

  namespace utf8 {
    // Decodes a UTF-8 string into scalar values; throws ParseError on
    // malformed input.
    inline std::u32string decode(std::string_view s) {
      std::u32string out;
      size_t         i = 0;
      while (i < s.size()) {
        auto     c = static_cast<unsigned char>(s[i]);
        char32_t cp;
        size_t   len;
        if (c < 0x80) {
          cp  = c;
          len = 1;
        } else if ((c >> 5) == 0x6) {
          cp  = c & 0x1F;
          len = 2;
        } else if ((c >> 4) == 0xE) {
          cp  = c & 0x0F;
          len = 3;
        } else if ((c >> 3) == 0x1E) {
          cp  = c & 0x07;
          len = 4;
        } else {
          throw ParseError("invalid UTF-8 lead byte");
        }
        if (i + len > s.size()) {
          throw ParseError("truncated UTF-8 sequence");
        }
        for (size_t k = 1; k < len; ++k) {
          auto cc = static_cast<unsigned char>(s[i + k]);
          if ((cc >> 6) != 0x2) {
            throw ParseError("invalid UTF-8 continuation byte");
          }
          cp = (cp << 6) | (cc & 0x3F);
        }
        static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < min_for_len[len] || cp > 0x10FFFF
            || (cp >= 0xD800 && cp <= 0xDFFF)) {
          throw ParseError("invalid UTF-8 scalar value");
        }
        out.push_back(cp);
        i += len;
      }
      return out;
    }

    inline std::string encode(char32_t cp) {
      std::string out;
      if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
      } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      }
      return out;
    }

    inline bool is_combining(char32_t cp) noexcept {
      return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF)
             || (cp >= 0x1DC0 && cp <= 0x1DFF) || (cp >= 0x20D0 && cp <= 0x20FF)
             || (cp >= 0xFE20 && cp <= 0xFE2F) || cp == 0x200D
             || (cp >= 0xFE00 && cp <= 0xFE0F);
    }

    inline bool is_space(char32_t cp) noexcept {
      return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\n'
             || cp == U'\v' || cp == U'\f' || cp == 0x00A0 || cp == 0x3000
             || (cp >= 0x2000 && cp <= 0x200B);
    }
  }  // namespace utf8

  // Glyph written for ε in presentation files and on the command line.
  inline constexpr char32_t empty_word_glyph = U'_';

  // An ordered set of single-scalar glyphs; the listing order is the total
  // order on letters.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::u32string const& glyphs) {
      for (char32_t g : glyphs) {
        add(g);
      }
    }

    // Throws ParseError on a duplicate, reserved or combining glyph.
    void add(char32_t glyph) {
      if (glyph == empty_word_glyph || glyph == U'#' || glyph == U'='
          || utf8::is_space(glyph)) {
        throw ParseError("reserved glyph '" + utf8::encode(glyph)
                         + "' cannot be a generator");
      }
      if (utf8::is_combining(glyph)) {
        throw ParseError("combining character U+" + hex(glyph)
                         + " cannot be a generator");
      }
      if (_rank.count(glyph) != 0) {
        throw ParseError("duplicate generator '" + utf8::encode(glyph) + "'");
      }
      _rank.emplace(glyph, static_cast<letter_type>(_glyphs.size()));
      _glyphs.push_back(glyph);
    }

    [[nodiscard]] size_t size() const noexcept {
      return _glyphs.size();
    }

    [[nodiscard]] char32_t glyph(letter_type x) const {
      return _glyphs.at(x);
    }

    [[nodiscard]] std::u32string const& glyphs() const noexcept {
      return _glyphs;
    }

    [[nodiscard]] bool contains(char32_t glyph) const {
      return _rank.count(glyph) != 0;
    }

    [[nodiscard]] letter_type rank(char32_t glyph) const {
      auto it = _rank.find(glyph);
      if (it == _rank.end()) {
        throw ParseError("'" + utf8::encode(glyph)
                         + "' is not a letter of the alphabet");
      }
      return it->second;
    }

    // Parses a concatenation of glyphs; the single glyph '_' is ε.
    [[nodiscard]] word_type parse_word(std::string_view text) const {
      auto scalars = utf8::decode(text);
      if (scalars.size() == 1 && scalars[0] == empty_word_glyph) {
        return {};
      }
      if (scalars.empty()) {
        throw ParseError("empty word text (write '_' for the empty word)");
      }
      word_type w;
      w.reserve(scalars.size());
      for (char32_t g : scalars) {
        if (utf8::is_combining(g)) {
          throw ParseError("combining character U+" + hex(g)
                           + " is not allowed in words");
        }
        w.push_back(rank(g));
      }
      return w;
    }

    // Inverse of parse_word.
    [[nodiscard]] std::string to_string(word_type const& w) const {
      if (w.empty()) {
        return utf8::encode(empty_word_glyph);
      }
      std::string out;
      for (letter_type x : w) {
        out += utf8::encode(glyph(x));
      }
      return out;
    }

    bool operator==(Alphabet const& that) const {
      return _glyphs == that._glyphs;
    }

   private:
    static std::string hex(char32_t cp) {
      static constexpr char digits[] = "0123456789ABCDEF";
      std::string           out;
      for (int shift = 20; shift >= 0; shift -= 4) {
        out.push_back(digits[(cp >> shift) & 0xF]);
      }
      auto first = out.find_first_not_of('0');
      return out.substr(std::min(first, out.size() - 4));
    }

    std::u32string                             _glyphs;
    std::unordered_map<char32_t, letter_type> _rank;
  };

}  // namespace smalloverlap

#endif  // SMALLOVERLAP_WORD_HPP_
