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

// Brute force equivalence classes by breadth-first search over single
// rewrite steps. Slow but simple; every fast path in this library is tested
// against it.

#ifndef SMALLOVERLAP_REWRITE_ORACLE_HPP_
#define SMALLOVERLAP_REWRITE_ORACLE_HPP_

#include <algorithm>      // for max, any_of
#include <cstddef>        // for size_t
#include <deque>          // for deque
#include <limits>         // for numeric_limits
#include <memory>         // for shared_ptr, make_shared
#include <mutex>          // for mutex, lock_guard
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for to_string
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "overlap.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace smalloverlap {

  inline constexpr size_t default_class_cap = 1'000'000;

  // An equivalence class could not be enumerated within the cap.
  class UndecidedError : public Error {
   public:
    explicit UndecidedError(size_t cap)
        : Error("undecided: equivalence class exceeds the cap of "
                + std::to_string(cap) + " words"),
          _cap(cap) {}

    [[nodiscard]] size_t cap() const noexcept {
      return _cap;
    }

   private:
    size_t _cap;
  };

  // `truncated` is set if the search stopped at `cap` members or discarded a
  // word longer than length_bound(seed); the members are then a subset of the
  // class.
  struct RewriteClosure {
    word_type           seed;
    std::set<word_type> members;
    bool                truncated = false;
    size_t              cap       = default_class_cap;

    [[nodiscard]] bool contains(word_type const& w) const {
      return members.count(w) != 0;
    }
  };

  // Longest word the search will visit from `seed`.
  inline size_t length_bound(Presentation const& p, word_type const& seed) {
    return p.delta() * std::max<size_t>(seed.size(), 1);
  }

  inline std::set<word_type> one_step_rewrites(Presentation const& p,
                                               word_type const&    w) {
    std::set<word_type> out;
    auto replace_all = [&](word_type const& from, word_type const& to) {
      if (from.empty()) {
        for (size_t i = 0; i <= w.size(); ++i) {
          out.insert(w.substr(0, i) + to + w.substr(i));
        }
        return;
      }
      for (size_t i = w.find(from); i != word_type::npos; i = w.find(from, i + 1)) {
        out.insert(w.substr(0, i) + to + w.substr(i + from.size()));
      }
    };
    for (auto const& rel : p.relations()) {
      if (rel.lhs != rel.rhs) {
        replace_all(rel.lhs, rel.rhs);
        replace_all(rel.rhs, rel.lhs);
      }
    }
    return out;
  }

  inline RewriteClosure enumerate_class(Presentation const& p,
                                        word_type const&    seed,
                                        size_t              cap = default_class_cap) {
    RewriteClosure out;
    out.seed = seed;
    out.cap  = cap;
    size_t const                  bound = length_bound(p, seed);
    std::unordered_set<word_type> seen  = {seed};
    std::deque<word_type>         queue = {seed};
    while (!queue.empty()) {
      word_type w = std::move(queue.front());
      queue.pop_front();
      for (auto& next : one_step_rewrites(p, w)) {
        if (next.size() > bound) {
          out.truncated = true;
          continue;
        }
        if (seen.count(next) != 0) {
          continue;
        }
        if (seen.size() >= cap) {
          out.truncated = true;
          queue.clear();
          break;
        }
        seen.insert(next);
        queue.push_back(next);
      }
    }
    out.members.insert(seen.begin(), seen.end());
    return out;
  }

  // Throws UndecidedError if the class of the shorter word is truncated.
  inline bool equivalent(Presentation const& p,
                         word_type const&    u,
                         word_type const&    v,
                         size_t              cap = default_class_cap) {
    if (u == v) {
      return true;
    }
    auto const& shorter = u.size() <= v.size() ? u : v;
    auto const& longer  = u.size() <= v.size() ? v : u;
    auto        cls     = enumerate_class(p, shorter, cap);
    if (cls.contains(longer)) {
      return true;
    }
    if (cls.truncated) {
      throw UndecidedError(cap);
    }
    return false;
  }

  inline bool is_possible_prefix(Presentation const& p,
                                 word_type const&    w,
                                 word_type const&    prefix,
                                 size_t              cap = default_class_cap) {
    if (is_prefix(prefix, w)) {
      return true;
    }
    auto cls = enumerate_class(p, w, cap);
    if (cls.truncated) {
      throw UndecidedError(cap);
    }
    return std::any_of(cls.members.begin(), cls.members.end(),
                       [&prefix](word_type const& m) { return is_prefix(prefix, m); });
  }

  inline word_type lex_min_class(Presentation const& p,
                                 word_type const&    w,
                                 size_t              cap = default_class_cap) {
    auto cls = enumerate_class(p, w, cap);
    if (cls.truncated) {
      throw UndecidedError(cap);
    }
    return *cls.members.begin();
  }

  // Least k such that w is a product of k pieces, or nullopt.
  inline std::optional<size_t> min_piece_factorization(Presentation const& p,
                                                       word_type const&    w) {
    auto const   pieces = all_pieces(p);
    size_t const inf    = std::numeric_limits<size_t>::max();
    std::vector<size_t> best(w.size() + 1, inf);
    best[0] = 0;
    for (size_t j = 1; j <= w.size(); ++j) {
      for (size_t i = 0; i < j; ++i) {
        if (best[i] != inf && best[i] + 1 < best[j]
            && pieces.count(w.substr(i, j - i)) != 0) {
          best[j] = best[i] + 1;
        }
      }
    }
    if (best[w.size()] == inf) {
      return std::nullopt;
    }
    return best[w.size()];
  }

  // Memoized oracle queries for one presentation. Every member of a fully
  // enumerated class shares one cached closure. Thread safe.
  class ClassCache {
   public:
    explicit ClassCache(Presentation p, size_t cap = default_class_cap)
        : _presentation(std::move(p)), _cap(cap) {}

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _presentation;
    }

    [[nodiscard]] size_t cap() const noexcept {
      return _cap;
    }

    // Throws UndecidedError if the class is truncated.
    [[nodiscard]] std::shared_ptr<RewriteClosure const>
    closure(word_type const& w) const {
      {
        std::lock_guard<std::mutex> lock(_mutex);
        auto                        it = _cache.find(w);
        if (it != _cache.end()) {
          return it->second;
        }
      }
      auto cls = std::make_shared<RewriteClosure const>(
          enumerate_class(_presentation, w, _cap));
      if (cls->truncated) {
        throw UndecidedError(_cap);
      }
      std::lock_guard<std::mutex> lock(_mutex);
      for (auto const& m : cls->members) {
        _cache.emplace(m, cls);
      }
      return cls;
    }

    [[nodiscard]] bool equivalent(word_type const& u, word_type const& v) const {
      return u == v || closure(u)->contains(v);
    }

    [[nodiscard]] bool is_possible_prefix(word_type const& w,
                                          word_type const& prefix) const {
      if (is_prefix(prefix, w)) {
        return true;
      }
      auto const& m = closure(w)->members;
      return std::any_of(m.begin(), m.end(), [&prefix](word_type const& x) {
        return is_prefix(prefix, x);
      });
    }

    [[nodiscard]] word_type lex_min(word_type const& w) const {
      return *closure(w)->members.begin();
    }

   private:
    Presentation _presentation;
    size_t       _cap;
    mutable std::mutex _mutex;
    mutable std::unordered_map<word_type, std::shared_ptr<RewriteClosure const>>
        _cache;
  };

}  // namespace smalloverlap

#endif  // SMALLOVERLAP_REWRITE_ORACLE_HPP_
