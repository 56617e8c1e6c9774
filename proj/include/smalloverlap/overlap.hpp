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

// Piece analysis of a presentation: the decomposition u = XYZ of every
// relation word into maximal piece prefix, middle word and maximal piece
// suffix, the C(4) test, and the greatest n for which C(n) holds.

#ifndef SMALLOVERLAP_OVERLAP_HPP_
#define SMALLOVERLAP_OVERLAP_HPP_

#include <algorithm>      // for min
#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for to_string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "presentation.hpp"
#include "suffix_tree.hpp"
#include "word.hpp"

namespace smalloverlap {

  class NotC4Error : public Error {
   public:
    NotC4Error() : Error("the presentation does not satisfy C(4)") {}
  };

  // The greatest n such that a presentation satisfies C(n); unbounded when no
  // relation word is a product of pieces.
  struct CIndex {
    bool   unbounded = false;
    size_t value     = 0;

    static CIndex infinity() {
      return {true, 0};
    }

    [[nodiscard]] bool satisfies(size_t n) const noexcept {
      return unbounded || n <= value;
    }

    [[nodiscard]] std::string to_string() const {
      return unbounded ? "unbounded" : std::to_string(value);
    }

    bool operator==(CIndex const&) const = default;
  };

  // Per distinct relation word r: X_r = u_r[0, x_len), Z_r is the suffix of
  // length z_len, and Y_r the remainder. When x_len + z_len >= |u_r| the
  // prefix and suffix overlap and Y_r is reported as ε.
  struct PieceDecomposition {
    std::vector<size_t>    x_len;
    std::vector<size_t>    z_len;
    std::vector<word_type> X;
    std::vector<word_type> Y;
    std::vector<word_type> Z;

    [[nodiscard]] bool overlapping(size_t r) const {
      return x_len[r] + z_len[r] >= X[r].size() + Y[r].size() + Z[r].size()
             && Y[r].empty();
    }
  };

  // Suffix tree of the relation words plus everything derived from it.
  class PieceAnalysis {
   public:
    explicit PieceAnalysis(Presentation const& p)
        : _tree(checked_words(p)), _words(p.relation_words()) {
      _dec.x_len = _tree.maximal_piece_prefixes();
      _dec.z_len = _tree.maximal_piece_suffixes();
      for (size_t r = 0; r < _words.size(); ++r) {
        auto const& u = _words[r];
        size_t      x = _dec.x_len[r];
        size_t      z = _dec.z_len[r];
        _dec.X.push_back(u.substr(0, x));
        _dec.Z.push_back(u.substr(u.size() - z));
        _dec.Y.push_back(x + z < u.size() ? u.substr(x, u.size() - x - z)
                                          : word_type{});
      }
    }

    [[nodiscard]] GeneralizedSuffixTree const& tree() const noexcept {
      return _tree;
    }

    [[nodiscard]] PieceDecomposition const& decomposition() const noexcept {
      return _dec;
    }

    [[nodiscard]] bool is_piece(word_type const& w) const {
      return _tree.longest_piece_prefix(w) == w.size();
    }

    // True iff Y_r is non-empty and not a piece.
    [[nodiscard]] bool middle_ok(size_t r) const {
      size_t const n = _words[r].size();
      size_t const x = _dec.x_len[r];
      size_t const z = _dec.z_len[r];
      if (x + z >= n) {
        return false;
      }
      size_t const y = n - x - z;
      return _tree.longest_piece_prefix_at(r, x, y) < y;
    }

    [[nodiscard]] bool is_c4() const {
      for (size_t r = 0; r < _words.size(); ++r) {
        if (!middle_ok(r)) {
          return false;
        }
      }
      return true;
    }

    // Minimum number of pieces in a factorization of relation word r, by
    // repeatedly removing the longest piece prefix; nullopt if r is not a
    // product of pieces.
    [[nodiscard]] std::optional<size_t> min_pieces(size_t r) const {
      size_t const n     = _words[r].size();
      size_t       pos   = 0;
      size_t       count = 0;
      while (pos < n) {
        size_t len = _tree.longest_piece_prefix_at(r, pos, n - pos);
        if (len == 0) {
          return std::nullopt;
        }
        pos += len;
        ++count;
      }
      return count;
    }

    [[nodiscard]] CIndex c_index() const {
      CIndex result = CIndex::infinity();
      for (size_t r = 0; r < _words.size(); ++r) {
        auto k = min_pieces(r);
        if (k && (result.unbounded || *k < result.value)) {
          result = {false, *k};
        }
      }
      return result;
    }

   private:
    static std::vector<word_type> const& checked_words(Presentation const& p) {
      if (p.has_empty_relation_word()) {
        throw Error("the empty word is a relation word (C(1) fails)");
      }
      return p.relation_words();
    }

    GeneralizedSuffixTree  _tree;
    std::vector<word_type> _words;
    PieceDecomposition     _dec;
  };

  inline PieceDecomposition decompose(Presentation const& p) {
    return PieceAnalysis(p).decomposition();
  }

  inline bool is_c4(Presentation const& p) {
    return PieceAnalysis(p).is_c4();
  }

  inline CIndex c_index(Presentation const& p) {
    return PieceAnalysis(p).c_index();
  }

  // Every piece of p, including ε, by counting the occurrences of every
  // factor of every relation word. Quadratic; refuses presentations whose
  // total length exceeds `cap`.
  inline std::set<word_type> all_pieces(Presentation const& p,
                                        size_t              cap = 10'000) {
    if (p.total_length() > cap) {
      throw Error("all_pieces: total relation word length "
                  + std::to_string(p.total_length()) + " exceeds the cap "
                  + std::to_string(cap));
    }
    std::unordered_map<word_type, size_t> occurrences;
    for (auto const& u : p.relation_words()) {
      for (size_t i = 0; i < u.size(); ++i) {
        for (size_t j = i + 1; j <= u.size(); ++j) {
          ++occurrences[u.substr(i, j - i)];
        }
      }
    }
    std::set<word_type> out = {word_type{}};
    for (auto const& [w, n] : occurrences) {
      if (n >= 2) {
        out.insert(w);
      }
    }
    return out;
  }

  struct SmallOverlapReport {
    CIndex                             c_index;
    bool                               is_c4 = false;
    PieceDecomposition                 decomposition;
    std::vector<std::optional<size_t>> factorization_counts;
    size_t                             tree_nodes  = 0;
    size_t                             tree_leaves = 0;
  };

  // A presentation with ε as a relation word fails C(1); it is reported with
  // c_index 0 and an empty decomposition.
  inline SmallOverlapReport analyze(Presentation const& p) {
    SmallOverlapReport report;
    if (p.has_empty_relation_word()) {
      report.c_index = {false, 0};
      return report;
    }
    PieceAnalysis a(p);
    report.c_index       = a.c_index();
    report.is_c4         = a.is_c4();
    report.decomposition = a.decomposition();
    for (size_t r = 0; r < p.relation_words().size(); ++r) {
      report.factorization_counts.push_back(a.min_pieces(r));
    }
    report.tree_nodes  = a.tree().number_of_nodes();
    report.tree_leaves = a.tree().number_of_leaves();
    return report;
  }

}  // namespace smalloverlap

#endif  // SMALLOVERLAP_OVERLAP_HPP_
