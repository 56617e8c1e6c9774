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

// The word problem and lexicographically least normal forms for monoids
// satisfying C(4): ReplacePrefix and NormalForm over a pluggable WpPrefix
// backend.

#ifndef SMALLOVERLAP_KAMBITES_HPP_
#define SMALLOVERLAP_KAMBITES_HPP_

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <memory>     // for shared_ptr, make_shared
#include <optional>   // for optional, nullopt
#include <utility>    // for move
#include <vector>     // for vector

#include "overlap.hpp"
#include "presentation.hpp"
#include "rewrite_oracle.hpp"
#include "scanner.hpp"
#include "word.hpp"

namespace smalloverlap {

  // ReplacePrefix was asked for a prefix that is not a possible prefix.
  class NoQualifyingComplement : public Error {
   public:
    NoQualifyingComplement()
        : Error("replace_prefix: no complement yields the requested prefix") {}
  };

  enum class WpAnswer { no, yes };

  // WpPrefix(u, v, p) is yes iff u and v are equivalent and p is a possible
  // prefix of u.
  class WordProblemBackend {
   public:
    virtual ~WordProblemBackend() = default;

    [[nodiscard]] virtual WpAnswer wp_prefix(word_type const& u,
                                             word_type const& v,
                                             word_type const& p) const = 0;
  };

  class OracleBackend : public WordProblemBackend {
   public:
    explicit OracleBackend(Presentation const& p, size_t cap = default_class_cap)
        : _cache(p, cap) {}

    [[nodiscard]] WpAnswer wp_prefix(word_type const& u,
                                     word_type const& v,
                                     word_type const& p) const override {
      return _cache.equivalent(u, v) && _cache.is_possible_prefix(u, p)
                 ? WpAnswer::yes
                 : WpAnswer::no;
    }

    [[nodiscard]] ClassCache const& cache() const noexcept {
      return _cache;
    }

   private:
    ClassCache _cache;
  };

  struct NormalFormOptions {
    // Confirm a complement switch with WpPrefix(w0, candidate, ε); if
    // false, compare the candidate with the current v w instead.
    bool verbatim_confirmation = true;

    // Skip the complement step when w' is Z_r-active for the Z_r of the
    // last committed relation word itself. The relation prefix is then
    // already present in w and the clean overlap prefix step handles it;
    // the complement step can return a word that is not lexicographically
    // least here. Set to false to disable the guard.
    bool skip_when_self_active = true;
  };

  enum class NormalFormStep { complement_switch, complement_kept, overlap_commit, overlap_replace, tail };

  // (u, v, w) at the top of an iteration of the main loop; u is the last
  // relation word committed, if any.
  struct NormalFormState {
    std::optional<word_id> u;
    word_type              v;
    word_type              w;
  };

  struct NormalFormTrace {
    word_type                    result;
    size_t                       iterations = 0;
    size_t                       max_length = 0;
    size_t                       max_depth  = 0;
    std::vector<NormalFormStep>  steps;
    std::vector<NormalFormState> states;
  };

  class Kambites {
   public:
    // Throws NotC4Error unless p satisfies C(4). The oracle backend is used
    // if none is given.
    explicit Kambites(Presentation                        p,
                      std::shared_ptr<WordProblemBackend const> backend = nullptr,
                      NormalFormOptions                   options = {})
        : _presentation(std::move(p)), _options(options) {
      if (_presentation.has_empty_relation_word()) {
        throw NotC4Error();
      }
      auto analysis = std::make_shared<PieceAnalysis const>(_presentation);
      if (!analysis->is_c4()) {
        throw NotC4Error();
      }
      _scanner     = Scanner(analysis, _presentation.alphabet().size());
      _complements = ComplementClasses(_presentation);
      _backend     = backend ? std::move(backend)
                             : std::make_shared<OracleBackend const>(_presentation);
    }

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _presentation;
    }

    [[nodiscard]] Scanner const& scanner() const noexcept {
      return *_scanner;
    }

    [[nodiscard]] PieceDecomposition const& decomposition() const noexcept {
      return _scanner->decomposition();
    }

    [[nodiscard]] ComplementClasses const& complements() const noexcept {
      return _complements;
    }

    [[nodiscard]] WordProblemBackend const& backend() const noexcept {
      return *_backend;
    }

    [[nodiscard]] WpAnswer wp_prefix(word_type const& u,
                                     word_type const& v,
                                     word_type const& p) const {
      return _backend->wp_prefix(u, v, p);
    }

    // A word equivalent to w with prefix p; requires WpPrefix(w, w, p) = yes.
    // `depth`, if given, receives the number of nested calls used.
    [[nodiscard]] word_type replace_prefix(word_type const& w,
                                           word_type const& p,
                                           size_t*          depth = nullptr) const {
      struct Frame {
        word_type a;
        word_id   r;
        word_type need;
      };
      auto const&        d    = decomposition();
      word_type          cur  = w;
      word_type          need = p;
      std::vector<Frame> frames;
      while (!is_prefix(need, cur)) {
        auto cop = _scanner->clean_overlap_prefix(cur);
        if (!cop || frames.size() > w.size()) {
          throw NoQualifyingComplement();
        }
        word_id r = cop->hit.word;
        frames.push_back({cur.substr(0, cop->hit.a_len), r, need});
        cur  = cur.substr(cop->hit.end);
        need = d.Z[r];
      }
      if (depth != nullptr) {
        *depth = frames.size();
      }
      word_type result = std::move(cur);
      for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        std::optional<word_id> choice;
        for (word_id c : _complements.complements(it->r)) {
          if (c != it->r && is_prefix(it->need, it->a + d.X[c])) {
            choice = c;
            break;
          }
        }
        if (!choice) {
          throw NoQualifyingComplement();
        }
        result = it->a + _presentation.relation_word(*choice)
                 + result.substr(d.Z[it->r].size());
      }
      return result;
    }

    [[nodiscard]] NormalFormTrace normal_form_traced(word_type const& w0) const {
      auto const&            d = decomposition();
      NormalFormTrace        trace;
      std::optional<word_id> u;
      word_type              v;
      word_type              w = w0;

      auto replace = [&](word_type const& x, word_type const& p) {
        size_t    depth = 0;
        word_type out   = replace_prefix(x, p, &depth);
        trace.max_depth = std::max(trace.max_depth, depth);
        return out;
      };

      while (!w.empty()) {
        ++trace.iterations;
        trace.max_length = std::max(trace.max_length, v.size() + w.size());
        trace.states.push_back({u, v, w});
        if (u && is_prefix(d.Z[*u], w) && complement_step(*u, w0, v, w, u, trace, replace)) {
          continue;
        }
        auto cop = _scanner->clean_overlap_prefix(w);
        if (cop) {
          word_id const   r  = cop->hit.word;
          word_type const w1 = w.substr(cop->hit.end);
          if (wp_prefix(w1, w1, d.Z[r]) == WpAnswer::no) {
            u = std::nullopt;
            v += w.substr(0, cop->hit.end);
            w = w1;
            trace.steps.push_back(NormalFormStep::overlap_commit);
          } else {
            word_id const rb = _complements.lex_min_complement(r);
            word_type     zw = replace(w1, d.Z[r]);
            u                = rb;
            v += w.substr(0, cop->hit.a_len) + d.X[rb] + d.Y[rb];
            w = d.Z[rb] + zw.substr(d.Z[r].size());
            trace.steps.push_back(NormalFormStep::overlap_replace);
          }
        } else {
          v += w;
          w.clear();
          trace.steps.push_back(NormalFormStep::tail);
        }
      }
      trace.result = std::move(v);
      return trace;
    }

    [[nodiscard]] word_type normal_form(word_type const& w0) const {
      return normal_form_traced(w0).result;
    }

    [[nodiscard]] bool equivalent(word_type const& u, word_type const& v) const {
      return normal_form(u) == normal_form(v);
    }

   private:
    // The branch taken when the previous step committed X_r Y_r (r = last)
    // and w = Z_r w'. Returns false if its condition does not hold.
    template <typename Replace>
    bool complement_step(word_id                 last,
                    word_type const&        w0,
                    word_type&              v,
                    word_type&              w,
                    std::optional<word_id>& u,
                    NormalFormTrace&        trace,
                    Replace&&               replace) const {
      auto const&     d  = decomposition();
      word_type const w1 = w.substr(d.Z[last].size());
      if (_options.skip_when_self_active && _scanner->is_p_active(w1, d.Z[last])) {
        return false;
      }
      for (word_id rb : _complements.complements(last)) {
        if (rb == last || d.Z[rb] == d.Z[last]) {
          continue;
        }
        auto hit = _scanner->p_active_hit(w1, d.Z[rb]);
        if (!hit) {
          continue;
        }
        word_id const   s  = hit->word;
        word_type const a  = d.Z[rb].substr(hit->a_len);
        word_type const w2 = w1.substr(hit->end - d.Z[rb].size());
        if (wp_prefix(w2, w2, d.Z[s]) == WpAnswer::no) {
          continue;
        }
        std::optional<word_id> cand;
        auto const&            us = _presentation.relation_word(s);
        for (word_id c : _complements.complements(s)) {
          auto const& uc = _presentation.relation_word(c);
          if (c != s && is_prefix(a, uc) && lex_less(uc, us)) {
            cand = c;
            break;
          }
        }
        word_type const zr = d.Z[last];
        if (cand) {
          word_type const b         = d.X[*cand].substr(a.size());
          word_type const zt        = replace(w2, d.Z[s]);
          word_type const t         = zt.substr(d.Z[s].size());
          word_type const candidate = v + zr + b + d.Y[*cand] + d.Z[*cand] + t;
          bool            confirmed
              = _options.verbatim_confirmation
                    ? wp_prefix(w0, candidate, {}) == WpAnswer::yes
                    : wp_prefix(v + w, candidate, {}) == WpAnswer::yes;
          if (confirmed) {
            u = *cand;
            v += zr + b + d.Y[*cand];
            w = d.Z[*cand] + t;
            trace.steps.push_back(NormalFormStep::complement_switch);
            return true;
          }
        }
        u = s;
        v += zr + d.X[s].substr(a.size()) + d.Y[s];
        w = replace(w2, d.Z[s]);
        trace.steps.push_back(NormalFormStep::complement_kept);
        return true;
      }
      return false;
    }

    Presentation                              _presentation;
    NormalFormOptions                         _options;
    std::optional<Scanner>                    _scanner;
    ComplementClasses                         _complements;
    std::shared_ptr<WordProblemBackend const> _backend;
  };

  enum class WordProblemResult { equivalent, not_equivalent, not_c4 };

  // The uniform word problem: C(4) is checked first, then the normal forms
  // of u and v are compared.
  inline WordProblemResult uniform_word_problem(Presentation const& p,
                                                word_type const&    u,
                                                word_type const&    v) {
    if (p.has_empty_relation_word() || !is_c4(p)) {
      return WordProblemResult::not_c4;
    }
    Kambites k(p);
    return k.equivalent(u, v) ? WordProblemResult::equivalent
                              : WordProblemResult::not_equivalent;
  }

}  // namespace smalloverlap

#endif  // SMALLOVERLAP_KAMBITES_HPP_
