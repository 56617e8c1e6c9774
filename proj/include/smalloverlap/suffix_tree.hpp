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

// This file contains a generalized suffix tree over a set of words, built
// online with Ukkonen's algorithm, together with the piece queries that are
// answered by it: maximal piece prefixes and suffixes of relation words and
// longest piece prefixes of arbitrary words.
//
// Word i is stored with a terminating sentinel `sentinel_base + i`, so that
// every suffix of every stored word labels exactly one leaf. A word is a
// piece (occurs at least twice among the stored words) if and only if its
// locus is at, or on the in-edge of, an internal node.

#ifndef SMALLOVERLAP_SUFFIX_TREE_HPP_
#define SMALLOVERLAP_SUFFIX_TREE_HPP_

#include <algorithm>  // for lower_bound, max, min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <limits>     // for numeric_limits
#include <utility>    // for pair
#include <vector>     // for vector

#include "word.hpp"

namespace smalloverlap {

  class GeneralizedSuffixTree {
   public:
    using node_type  = uint32_t;
    using index_type = uint32_t;

    static constexpr node_type root = 0;
    static constexpr node_type none = std::numeric_limits<node_type>::max();

    // The label of the in-edge of a node is
    // words()[word][first, last).
    struct Edge {
      index_type word  = 0;
      index_type first = 0;
      index_type last  = 0;

      [[nodiscard]] size_t length() const noexcept {
        return last - first;
      }
    };

    // Leaf (word, offset) is the suffix words()[word][offset, end).
    struct LeafLabel {
      size_t word;
      size_t offset;

      bool operator==(LeafLabel const&) const = default;
    };

    // A position in the tree: exactly at `node` when offset == 0, otherwise
    // `offset` symbols into the in-edge of `node`.
    struct Cursor {
      node_type node   = root;
      size_t    offset = 0;

      bool operator==(Cursor const&) const = default;
    };

    struct WalkResult {
      size_t matched;
      Cursor cursor;
    };

    GeneralizedSuffixTree() : GeneralizedSuffixTree(std::vector<word_type>{}) {}

    explicit GeneralizedSuffixTree(std::vector<word_type> const& words) {
      size_t total = 0;
      for (auto const& w : words) {
        total += w.size() + 1;
      }
      _text.reserve(total);
      _words.reserve(words.size());
      for (size_t i = 0; i < words.size(); ++i) {
        _word_start.push_back(static_cast<index_type>(_text.size()));
        _text += words[i];
        _text.push_back(sentinel_base + static_cast<letter_type>(i));
        _words.push_back(words[i]);
        _words.back().push_back(sentinel_base + static_cast<letter_type>(i));
      }
      build();
      finalize();
    }

    // Sentinel-terminated copies of the input words.
    [[nodiscard]] std::vector<word_type> const& words() const noexcept {
      return _words;
    }

    [[nodiscard]] size_t number_of_nodes() const noexcept {
      return _nodes.size();
    }

    [[nodiscard]] size_t number_of_leaves() const noexcept {
      return _leaf_of.size();
    }

    [[nodiscard]] bool is_leaf(node_type n) const {
      return _nodes.at(n).leaf_word != none;
    }

    [[nodiscard]] LeafLabel leaf_label(node_type n) const {
      auto const& x = _nodes.at(n);
      return {x.leaf_word, x.leaf_offset};
    }

    [[nodiscard]] node_type leaf(size_t word, size_t offset) const {
      return _leaf_of.at(_word_start.at(word) + offset);
    }

    [[nodiscard]] node_type parent(node_type n) const {
      return _nodes.at(n).parent;
    }

    // Length of the label of the path from the root to n.
    [[nodiscard]] size_t depth(node_type n) const {
      return _nodes.at(n).depth;
    }

    [[nodiscard]] Edge edge(node_type n) const {
      auto const& x = _nodes.at(n);
      return {x.word, x.first, x.last};
    }

    [[nodiscard]] word_type edge_label(node_type n) const {
      auto e = edge(n);
      return _words[e.word].substr(e.first, e.length());
    }

    // Children of n ordered by the first symbol of their edge labels.
    [[nodiscard]] std::vector<std::pair<letter_type, node_type>> const&
    children(node_type n) const {
      return _nodes.at(n).children;
    }

    [[nodiscard]] node_type child(node_type n, letter_type x) const {
      auto const& ch = _nodes[n].children;
      auto it = std::lower_bound(ch.begin(), ch.end(), x, [](auto const& p, letter_type y) {
        return p.first < y;
      });
      return (it != ch.end() && it->first == x) ? it->second : none;
    }

    // Label of the path from the root to n.
    [[nodiscard]] word_type path_label(node_type n) const {
      word_type out;
      for (; n != root; n = parent(n)) {
        out.insert(0, edge_label(n));
      }
      return out;
    }

    // Follows w from the root for as long as possible; the matched length is
    // that of the longest prefix of w which is a factor of a stored word.
    [[nodiscard]] WalkResult walk(word_type const& w) const {
      Cursor c;
      size_t matched = 0;
      for (letter_type x : w) {
        if (c.offset == 0) {
          node_type next = child(c.node, x);
          if (next == none) {
            break;
          }
          c.node   = next;
          c.offset = edge(next).length() == 1 ? 0 : 1;
        } else {
          auto e = edge(c.node);
          if (_words[e.word][e.first + c.offset] != x) {
            break;
          }
          if (++c.offset == e.length()) {
            c.offset = 0;
          }
        }
        ++matched;
      }
      return {matched, c};
    }

    // Length of the longest prefix of w occurring at least twice among the
    // stored words.
    [[nodiscard]] size_t longest_piece_prefix(word_type const& w) const {
      Cursor c;
      size_t best = 0;
      for (letter_type x : w) {
        if (c.offset == 0) {
          node_type next = child(c.node, x);
          if (next == none || is_leaf(next)) {
            break;
          }
          c.node   = next;
          c.offset = edge(next).length() == 1 ? 0 : 1;
        } else {
          auto e = edge(c.node);
          if (_words[e.word][e.first + c.offset] != x) {
            break;
          }
          if (++c.offset == e.length()) {
            c.offset = 0;
          }
        }
        ++best;
      }
      return best;
    }

    // Length of the longest prefix of words()[word][offset, offset + limit)
    // that is a piece: the depth of the parent of leaf (word, offset).
    [[nodiscard]] size_t longest_piece_prefix_at(size_t word,
                                                 size_t offset,
                                                 size_t limit) const {
      return std::min(depth(parent(leaf(word, offset))), limit);
    }

    // For each stored word, the length of its longest prefix which is a
    // piece, read off the parent of leaf (r, 0).
    [[nodiscard]] std::vector<size_t> maximal_piece_prefixes() const {
      std::vector<size_t> out(_words.size());
      for (size_t r = 0; r < _words.size(); ++r) {
        out[r] = depth(parent(leaf(r, 0)));
      }
      return out;
    }

    // For each stored word, the length of its longest suffix which is a
    // piece, found in one pass over the leaves whose in-edge is exactly the
    // sentinel.
    [[nodiscard]] std::vector<size_t> maximal_piece_suffixes() const {
      std::vector<size_t> out(_words.size(), 0);
      for (auto const& n : _nodes) {
        if (n.leaf_word != none && n.last - n.first == 1) {
          out[n.leaf_word] = std::max(out[n.leaf_word], size_t(_nodes[n.parent].depth));
        }
      }
      return out;
    }

   private:
    struct Node {
      node_type  parent      = none;
      index_type word        = 0;
      index_type first       = 0;
      index_type last        = 0;
      index_type depth       = 0;
      node_type  link        = root;
      index_type leaf_word   = none;
      index_type leaf_offset = 0;
      std::vector<std::pair<letter_type, node_type>> children;
    };

    static constexpr index_type open = std::numeric_limits<index_type>::max();

    node_type new_node(index_type first, index_type last) {
      _nodes.emplace_back();
      _nodes.back().first = first;
      _nodes.back().last  = last;
      return static_cast<node_type>(_nodes.size() - 1);
    }

    void set_child(node_type n, letter_type x, node_type c) {
      auto& ch = _nodes[n].children;
      auto it = std::lower_bound(ch.begin(), ch.end(), x, [](auto const& p, letter_type y) {
        return p.first < y;
      });
      if (it != ch.end() && it->first == x) {
        it->second = c;
      } else {
        ch.insert(it, {x, c});
      }
    }

    [[nodiscard]] size_t build_edge_length(node_type n, size_t pos) const {
      auto const& x = _nodes[n];
      return (x.last == open ? pos + 1 : x.last) - x.first;
    }

    // Ukkonen's algorithm over the concatenation of the sentinel-terminated
    // words. Leaves are open-ended until finalize() cuts them at their
    // sentinel. `_leaf_of` records the suffix start of each leaf.
    void build() {
      size_t const n = _text.size();
      _nodes.reserve(2 * n + 1);
      _leaf_of.assign(n, none);
      new_node(0, 0);

      node_type active_node   = root;
      size_t    active_edge   = 0;
      size_t    active_length = 0;
      size_t    remainder     = 0;

      for (size_t pos = 0; pos < n; ++pos) {
        letter_type const c        = _text[pos];
        node_type         last_new = none;
        ++remainder;
        while (remainder > 0) {
          if (active_length == 0) {
            active_edge = pos;
          }
          node_type next = child(active_node, _text[active_edge]);
          if (next == none) {
            node_type leaf = new_node(static_cast<index_type>(pos), open);
            set_child(active_node, _text[active_edge], leaf);
            _leaf_of[pos - remainder + 1] = leaf;
            if (last_new != none) {
              _nodes[last_new].link = active_node;
              last_new              = none;
            }
          } else {
            size_t len = build_edge_length(next, pos);
            if (active_length >= len) {
              active_edge += len;
              active_length -= len;
              active_node = next;
              continue;
            }
            if (_text[_nodes[next].first + active_length] == c) {
              if (last_new != none && active_node != root) {
                _nodes[last_new].link = active_node;
                last_new              = none;
              }
              ++active_length;
              break;
            }
            index_type first = _nodes[next].first;
            node_type  split
                = new_node(first, first + static_cast<index_type>(active_length));
            set_child(active_node, _text[active_edge], split);
            _nodes[next].first += static_cast<index_type>(active_length);
            set_child(split, _text[_nodes[next].first], next);
            node_type leaf = new_node(static_cast<index_type>(pos), open);
            set_child(split, c, leaf);
            _leaf_of[pos - remainder + 1] = leaf;
            if (last_new != none) {
              _nodes[last_new].link = split;
            }
            last_new = split;
          }
          --remainder;
          if (active_node == root && active_length > 0) {
            --active_length;
            active_edge = pos - remainder + 1;
          } else if (active_node != root) {
            active_node = _nodes[active_node].link;
          }
        }
      }
    }

    [[nodiscard]] size_t owner(size_t pos) const {
      auto it = std::upper_bound(_word_start.begin(), _word_start.end(), pos);
      return static_cast<size_t>(it - _word_start.begin()) - 1;
    }

    void finalize() {
      for (size_t start = 0; start < _leaf_of.size(); ++start) {
        auto&  leaf      = _nodes[_leaf_of[start]];
        size_t w         = owner(start);
        size_t sentinel  = _word_start[w] + _words[w].size() - 1;
        leaf.last        = static_cast<index_type>(sentinel + 1);
        leaf.leaf_word   = static_cast<index_type>(w);
        leaf.leaf_offset = static_cast<index_type>(start - _word_start[w]);
      }
      // Rebase edges onto the stored words and fill in parents and depths.
      std::vector<node_type> stack = {root};
      _nodes[root].parent = root;
      while (!stack.empty()) {
        node_type n = stack.back();
        stack.pop_back();
        for (auto [x, c] : _nodes[n].children) {
          auto&  ch    = _nodes[c];
          size_t w     = owner(ch.first);
          ch.parent    = n;
          ch.depth     = _nodes[n].depth + (ch.last - ch.first);
          ch.first    -= _word_start[w];
          ch.last     -= _word_start[w];
          ch.word      = static_cast<index_type>(w);
          stack.push_back(c);
        }
      }
      _text.clear();
      _text.shrink_to_fit();
    }

    word_type              _text;
    std::vector<word_type> _words;
    std::vector<index_type> _word_start;
    std::vector<Node>      _nodes;
    std::vector<node_type> _leaf_of;
  };

  inline GeneralizedSuffixTree build_gst(std::vector<word_type> const& words) {
    return GeneralizedSuffixTree(words);
  }

}  // namespace smalloverlap

#endif  // SMALLOVERLAP_SUFFIX_TREE_HPP_
