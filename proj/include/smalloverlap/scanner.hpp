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

// Relation prefixes, clean overlap prefixes and p-activity. All three are
// located with one Aho-Corasick automaton over the words X_r Y_r.

#ifndef SMALLOVERLAP_SCANNER_HPP_
#define SMALLOVERLAP_SCANNER_HPP_

#include <algorithm>  // for min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <limits>     // for numeric_limits
#include <memory>     // for shared_ptr, make_shared
#include <optional>   // for optional
#include <queue>      // for queue
#include <utility>    // for move
#include <vector>     // for vector

#include "overlap.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace smalloverlap {

  // w[a_len, end) = X_r Y_r where r = word.
  struct RelationPrefixHit {
    size_t  a_len = 0;
    word_id word  = 0;
    size_t  end   = 0;

    bool operator==(RelationPrefixHit const&) const = default;
  };

  // One link X_i Y_i' of an overlap prefix, Y_i' = Y_i[0, y_cut).
  struct ChainLink {
    word_id word  = 0;
    size_t  y_cut = 0;

    bool operator==(ChainLink const&) const = default;
  };

  // a X_1 Y_1' ... X_{n-1} Y_{n-1}' X_n Y_n, with `hit` locating X_n Y_n,
  // `chain` holding the n - 1 earlier links and `lead` = |a|.
  struct CleanOverlapPrefix {
    RelationPrefixHit      hit;
    std::vector<ChainLink> chain;
    size_t                 lead = 0;

    [[nodiscard]] size_t length() const noexcept {
      return hit.end;
    }

    bool operator==(CleanOverlapPrefix const&) const = default;
  };

  namespace detail {
    class AhoCorasick {
     public:
      using state_type = uint32_t;

      static constexpr state_type no_pattern
          = std::numeric_limits<state_type>::max();

      AhoCorasick() = default;

      AhoCorasick(std::vector<word_type> const& patterns, size_t alphabet_size)
          : _sigma(alphabet_size) {
        new_state();
        for (state_type id = 0; id < patterns.size(); ++id) {
          state_type s = 0;
          for (letter_type x : patterns[id]) {
            if (_goto[s * _sigma + x] == 0) {
              state_type t           = new_state();
              _goto[s * _sigma + x] = t;
            }
            s = _goto[s * _sigma + x];
          }
          _pattern_length.push_back(patterns[id].size());
          if (_output[s] == no_pattern) {
            _output[s] = id;
          }
        }
        std::queue<state_type> q;
        for (size_t x = 0; x < _sigma; ++x) {
          if (_goto[x] != 0) {
            q.push(_goto[x]);
          }
        }
        while (!q.empty()) {
          state_type s = q.front();
          q.pop();
          state_type f = _fail[s];
          _dict[s]     = _output[f] != no_pattern ? f : _dict[f];
          for (size_t x = 0; x < _sigma; ++x) {
            state_type& t = _goto[s * _sigma + x];
            if (t != 0) {
              _fail[t] = _goto[f * _sigma + x];
              q.push(t);
            } else {
              t = _goto[f * _sigma + x];
            }
          }
        }
      }

      [[nodiscard]] state_type next(state_type s, letter_type x) const {
        return _goto[s * _sigma + x];
      }

      // Calls f(pattern) for every pattern ending in state s, longest first.
      template <typename Func>
      void for_each_output(state_type s, Func&& f) const {
        if (_output[s] != no_pattern) {
          f(_output[s]);
        }
        for (state_type t = _dict[s]; t != 0; t = _dict[t]) {
          f(_output[t]);
        }
      }

      [[nodiscard]] size_t pattern_length(state_type id) const {
        return _pattern_length[id];
      }

     private:
      state_type new_state() {
        _goto.resize(_goto.size() + _sigma, 0);
        _fail.push_back(0);
        _dict.push_back(0);
        _output.push_back(no_pattern);
        return static_cast<state_type>(_fail.size() - 1);
      }

      size_t                  _sigma = 0;
      std::vector<state_type> _goto;
      std::vector<state_type> _fail;
      std::vector<state_type> _dict;
      std::vector<state_type> _output;
      std::vector<size_t>     _pattern_length;
    };
  }  // namespace detail

  // Scans words for occurrences of the X_r Y_r.
  class Scanner {
   public:
    Scanner(std::shared_ptr<PieceAnalysis const> analysis, size_t alphabet_size)
        : _analysis(std::move(analysis)) {
      auto const& d = _analysis->decomposition();
      std::vector<word_type> patterns;
      for (size_t r = 0; r < d.X.size(); ++r) {
        patterns.push_back(d.X[r] + d.Y[r]);
        _delta = std::max(_delta, d.X[r].size() + d.Y[r].size() + d.Z[r].size());
      }
      _ac = detail::AhoCorasick(patterns, alphabet_size);
    }

    explicit Scanner(Presentation const& p)
        : Scanner(std::make_shared<PieceAnalysis const>(p), p.alphabet().size()) {}

    [[nodiscard]] PieceAnalysis const& analysis() const noexcept {
      return *_analysis;
    }

    [[nodiscard]] PieceDecomposition const& decomposition() const noexcept {
      return _analysis->decomposition();
    }

    // Occurrences of X_r Y_r in w starting at or after `from`, in order of
    // increasing end; f(hit) returns false to stop the scan. Scanning stops
    // before position `until`.
    template <typename Func>
    void scan(word_type const& w, size_t from, size_t until, Func&& f) const {
      until = std::min(until, w.size());
      detail::AhoCorasick::state_type s = 0;
      for (size_t i = from; i < until; ++i) {
        s         = _ac.next(s, w[i]);
        bool stop = false;
        _ac.for_each_output(s, [&](auto id) {
          if (!stop) {
            size_t const end = i + 1;
            stop = !f(RelationPrefixHit{end - _ac.pattern_length(id), id, end});
          }
        });
        if (stop) {
          return;
        }
      }
    }

    // The relation prefix of w with minimal end (minimal start on ties),
    // looking only at w[0, window) if a window is given.
    [[nodiscard]] std::optional<RelationPrefixHit>
    shortest_relation_prefix(word_type const&      w,
                             std::optional<size_t> window = std::nullopt) const {
      std::optional<RelationPrefixHit> out;
      scan(w, 0, window.value_or(w.size()), [&out](RelationPrefixHit const& h) {
        out = h;
        return false;
      });
      return out;
    }

    [[nodiscard]] std::optional<CleanOverlapPrefix>
    clean_overlap_prefix(word_type const& w) const {
      auto first = shortest_relation_prefix(w);
      if (!first) {
        return std::nullopt;
      }
      auto const&        d = decomposition();
      CleanOverlapPrefix out;
      out.hit  = *first;
      out.lead = first->a_len;
      while (true) {
        auto const&  h  = out.hit;
        size_t const x  = d.X[h.word].size();
        size_t const y  = d.Y[h.word].size();
        size_t const lo = h.a_len + x + 1;
        size_t const hi = h.a_len + x + y - 1;  // inclusive
        if (y < 2) {
          break;
        }
        std::optional<RelationPrefixHit> next;
        scan(w, lo, hi + 1 + _delta, [&](RelationPrefixHit const& c) {
          if (c.a_len <= hi
              && (!next || c.a_len < next->a_len
                  || (c.a_len == next->a_len && c.end < next->end))) {
            next = c;
          }
          return true;
        });
        if (!next) {
          break;
        }
        out.chain.push_back({h.word, next->a_len - h.a_len - x});
        out.hit = *next;
      }
      return out;
    }

    // A relation prefix a X_s Y_s of p w with |a| < |p|, looking only at the
    // first |p| + 2δ letters. Throws if p is not a piece.
    [[nodiscard]] std::optional<RelationPrefixHit>
    p_active_hit(word_type const& w, word_type const& p) const {
      if (!_analysis->is_piece(p)) {
        throw Error("is_p_active: the word p is not a piece");
      }
      if (p.empty()) {
        return std::nullopt;
      }
      word_type pw = p + w.substr(0, std::min(w.size(), 2 * _delta));
      std::optional<RelationPrefixHit> out;
      scan(pw, 0, pw.size(), [&](RelationPrefixHit const& h) {
        if (h.a_len < p.size()) {
          out = h;
          return false;
        }
        return true;
      });
      return out;
    }

    [[nodiscard]] bool is_p_active(word_type const& w, word_type const& p) const {
      return p_active_hit(w, p).has_value();
    }

    [[nodiscard]] size_t delta() const noexcept {
      return _delta;
    }

   private:
    std::shared_ptr<PieceAnalysis const> _analysis;
    detail::AhoCorasick                  _ac;
    size_t                               _delta = 0;
  };

}  // namespace smalloverlap

#endif  // SMALLOVERLAP_SCANNER_HPP_
