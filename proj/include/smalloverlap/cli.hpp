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

// The command line front end. Kept in a header so that the tests can drive
// it without spawning processes. Depends on CLI11 and nlohmann::json, unlike
// the rest of the library.
//
// Exit codes: 0 success or equivalent, 1 not equivalent, 2 bad input or a
// failed precondition (including not C(4)), 3 undecided at the class cap.

#ifndef SMALLOVERLAP_CLI_HPP_
#define SMALLOVERLAP_CLI_HPP_

#include <algorithm>  // for reverse, sort
#include <chrono>     // for steady_clock
#include <cstdint>    // for uint64_t
#include <fstream>    // for ifstream
#include <iomanip>    // for setw, setprecision
#include <ostream>    // for ostream
#include <random>     // for mt19937_64, uniform_int_distribution
#include <sstream>    // for ostringstream
#include <string>     // for string, stoull
#include <vector>     // for vector

#include <CLI11.hpp>
#include <json.hpp>

#include "kambites.hpp"
#include "overlap.hpp"
#include "presentation.hpp"
#include "rewrite_oracle.hpp"
#include "suffix_tree.hpp"
#include "word.hpp"

namespace smalloverlap::cli {

  enum exit_code : int {
    ok             = 0,
    not_equivalent = 1,
    input_error    = 2,
    undecided      = 3
  };

  // Random words over `sigma` letters, `word_len` letters each except
  // possibly the last, of total length n.
  inline std::vector<word_type> bench_corpus(size_t   n,
                                             size_t   sigma,
                                             size_t   word_len,
                                             uint64_t seed) {
    std::mt19937_64                       rng(seed);
    std::uniform_int_distribution<size_t> letter(0, sigma - 1);
    std::vector<word_type>                out;
    size_t                                remaining = n;
    while (remaining > 0) {
      size_t    len = std::min(word_len, remaining);
      word_type w(len, 0);
      for (auto& x : w) {
        x = static_cast<letter_type>(letter(rng));
      }
      out.push_back(std::move(w));
      remaining -= len;
    }
    return out;
  }

  struct BenchRow {
    size_t n;
    double median_ms;
  };

  // Median wall time in milliseconds of building the suffix tree of
  // bench_corpus(n, ...), over `reps` runs.
  inline double time_gst(std::vector<word_type> const& corpus, size_t reps) {
    std::vector<double> times;
    for (size_t i = 0; i < reps; ++i) {
      auto start = std::chrono::steady_clock::now();
      auto tree  = build_gst(corpus);
      auto stop  = std::chrono::steady_clock::now();
      if (tree.number_of_nodes() == 0) {
        throw Error("empty tree");
      }
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  }

  // "A..B" doubles from A up to B, "a,b,c" lists sizes, "a" is one size.
  inline std::vector<size_t> parse_range(std::string const& text) {
    std::vector<size_t> out;
    auto                to_size = [&text](std::string const& s) -> size_t {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("invalid size '" + s + "' in range '" + text + "'");
      }
      size_t v = std::stoull(s);
      if (v == 0) {
        throw ParseError("sizes must be positive");
      }
      return v;
    };
    auto dots = text.find("..");
    if (dots != std::string::npos) {
      size_t lo = to_size(text.substr(0, dots));
      size_t hi = to_size(text.substr(dots + 2));
      if (lo > hi) {
        throw ParseError("empty range '" + text + "'");
      }
      for (size_t n = lo; n <= hi; n *= 2) {
        out.push_back(n);
      }
      return out;
    }
    std::istringstream in(text);
    std::string        item;
    while (std::getline(in, item, ',')) {
      out.push_back(to_size(item));
    }
    if (out.empty()) {
      throw ParseError("empty range");
    }
    return out;
  }

  namespace detail {
    inline Presentation load(std::string const& file) {
      std::ifstream in(file);
      if (!in) {
        throw ParseError("cannot open '" + file + "'");
      }
      return parse_presentation(in);
    }

    inline nlohmann::json analyze_json(Presentation const& p, bool pieces) {
      using nlohmann::json;
      auto const report = analyze(p);
      json       j;
      if (report.c_index.unbounded) {
        j["c_index"] = "unbounded";
      } else {
        j["c_index"] = report.c_index.value;
      }
      j["is_c4"]        = report.is_c4;
      j["delta"]        = p.delta();
      j["total_length"] = p.total_length();
      json words        = json::array();
      for (size_t r = 0; r < p.relation_words().size(); ++r) {
        json w;
        w["word"] = p.to_string(p.relation_word(r));
        if (!report.decomposition.X.empty()) {
          w["x"] = p.to_string(report.decomposition.X[r]);
          w["y"] = p.to_string(report.decomposition.Y[r]);
          w["z"] = p.to_string(report.decomposition.Z[r]);
          auto k = report.factorization_counts[r];
          w["min_pieces"] = k ? json(*k) : json(nullptr);
        }
        words.push_back(w);
      }
      j["relation_words"] = words;
      ComplementClasses classes(p);
      json              cls = json::array();
      for (size_t c = 0; c < classes.number_of_classes(); ++c) {
        json members = json::array();
        for (auto id : classes.members(c)) {
          members.push_back(p.to_string(p.relation_word(id)));
        }
        cls.push_back(members);
      }
      j["complement_classes"] = cls;
      j["tree"] = {{"nodes", report.tree_nodes}, {"leaves", report.tree_leaves}};
      if (pieces) {
        json list = json::array();
        for (auto const& x : all_pieces(p)) {
          list.push_back(p.to_string(x));
        }
        j["pieces"] = list;
      }
      return j;
    }

    inline void analyze_text(Presentation const& p, bool pieces, std::ostream& out) {
      auto const report = analyze(p);
      out << "relation words: " << p.relation_words().size()
          << ", delta: " << p.delta() << ", total length: " << p.total_length()
          << '\n';
      if (p.has_empty_relation_word()) {
        out << "c_index: 0 (fails C(1): the empty word is a relation word)\n";
        out << "is_c4: false\n";
        return;
      }
      out << "c_index: " << report.c_index.to_string() << '\n';
      out << "is_c4: " << (report.is_c4 ? "true" : "false") << '\n';
      size_t width = 4;
      for (auto const& w : p.relation_words()) {
        width = std::max(width, p.to_string(w).size());
      }
      auto const& d = report.decomposition;
      out << std::left << std::setw(int(width)) << "word" << "  x | y | z  (min pieces)\n";
      for (size_t r = 0; r < p.relation_words().size(); ++r) {
        auto k = report.factorization_counts[r];
        out << std::setw(int(width)) << p.to_string(p.relation_word(r)) << "  "
            << p.to_string(d.X[r]) << " | " << p.to_string(d.Y[r]) << " | "
            << p.to_string(d.Z[r]) << "  ("
            << (k ? std::to_string(*k) : std::string("none")) << ")\n";
      }
      ComplementClasses classes(p);
      out << "complement classes:";
      for (size_t c = 0; c < classes.number_of_classes(); ++c) {
        out << " {";
        bool first = true;
        for (auto id : classes.members(c)) {
          out << (first ? "" : ", ") << p.to_string(p.relation_word(id));
          first = false;
        }
        out << '}';
      }
      out << '\n';
      out << "suffix tree: " << report.tree_nodes << " nodes, "
          << report.tree_leaves << " leaves\n";
      if (pieces) {
        out << "pieces:";
        for (auto const& x : all_pieces(p)) {
          out << ' ' << p.to_string(x);
        }
        out << '\n';
      }
    }
  }  // namespace detail

  // args excludes the program name.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Word problems and normal forms for small overlap monoids",
                 "smalloverlap"};
    app.require_subcommand(1);

    std::string file, word, other;
    bool        json = false, pieces = false;
    size_t      cap  = default_class_cap;
    std::string range;
    size_t      sigma = 2, reps = 5, word_len = 32;
    uint64_t    seed  = 0;
    std::string subject;

    auto* analyze_cmd = app.add_subcommand("analyze", "piece analysis of a presentation");
    analyze_cmd->add_option("file", file, "presentation file")->required();
    analyze_cmd->add_flag("--json", json, "print a JSON report");
    analyze_cmd->add_flag("--pieces", pieces, "list every piece");

    auto* nf_cmd = app.add_subcommand("nf", "lexicographically least equivalent word");
    nf_cmd->add_option("file", file, "presentation file")->required();
    nf_cmd->add_option("word", word, "word ('_' for the empty word)")->required();

    auto* wp_cmd = app.add_subcommand("wp", "decide whether two words are equal");
    wp_cmd->add_option("file", file, "presentation file")->required();
    wp_cmd->add_option("u", word, "first word")->required();
    wp_cmd->add_option("v", other, "second word")->required();

    auto* class_cmd = app.add_subcommand("class", "list the equivalence class of a word");
    class_cmd->add_option("file", file, "presentation file")->required();
    class_cmd->add_option("word", word, "word")->required();
    class_cmd->add_option("--cap", cap, "maximum class size")->check(CLI::PositiveNumber);

    auto* bench_cmd = app.add_subcommand("bench", "time suffix tree construction");
    bench_cmd->add_option("subject", subject, "what to time")
        ->required()
        ->check(CLI::IsMember({"gst"}));
    bench_cmd->add_option("--n", range, "total lengths: A..B, a,b,c or a")->required();
    bench_cmd->add_option("--sigma", sigma, "alphabet size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", seed, "random seed");
    bench_cmd->add_option("--reps", reps, "repetitions per size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--word-len", word_len, "length of each random word")
        ->check(CLI::PositiveNumber);

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return input_error;
    }

    try {
      if (*analyze_cmd) {
        auto p = detail::load(file);
        if (json) {
          out << detail::analyze_json(p, pieces).dump(2) << '\n';
        } else {
          detail::analyze_text(p, pieces, out);
        }
        return ok;
      }
      if (*nf_cmd) {
        auto p = detail::load(file);
        auto w = p.parse_word(word);
        if (p.has_empty_relation_word() || !is_c4(p)) {
          err << "error: the presentation does not satisfy C(4)\n";
          return input_error;
        }
        Kambites k(p);
        out << p.to_string(k.normal_form(w)) << '\n';
        return ok;
      }
      if (*wp_cmd) {
        auto p = detail::load(file);
        auto u = p.parse_word(word);
        auto v = p.parse_word(other);
        switch (uniform_word_problem(p, u, v)) {
          case WordProblemResult::equivalent:
            out << "equivalent\n";
            return ok;
          case WordProblemResult::not_equivalent:
            out << "not-equivalent\n";
            return not_equivalent;
          case WordProblemResult::not_c4:
            out << "not-C(4)\n";
            return input_error;
        }
      }
      if (*class_cmd) {
        auto p = detail::load(file);
        auto w = p.parse_word(word);
        if (p.has_empty_relation_word() || !c_index(p).satisfies(3)) {
          err << "error: class enumeration requires C(3)\n";
          return input_error;
        }
        auto cls = enumerate_class(p, w, cap);
        for (auto const& m : cls.members) {
          out << p.to_string(m) << '\n';
        }
        if (cls.truncated) {
          out << "... truncated (cap " << cap << ")\n";
          return undecided;
        }
        return ok;
      }
      if (*bench_cmd) {
        auto sizes = parse_range(range);
        out << std::setw(10) << "n" << std::setw(14) << "median_ms"
            << std::setw(10) << "ratio" << '\n';
        double prev = 0;
        for (size_t n : sizes) {
          double ms = time_gst(bench_corpus(n, sigma, word_len, seed), reps);
          out << std::setw(10) << n << std::setw(14) << std::fixed
              << std::setprecision(3) << ms << std::setw(10);
          if (prev > 0) {
            out << std::setprecision(2) << ms / prev;
          } else {
            out << "-";
          }
          out << '\n';
          prev = ms;
        }
        return ok;
      }
    } catch (UndecidedError const& e) {
      err << "error: " << e.what() << '\n';
      return undecided;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    return input_error;
  }

}  // namespace smalloverlap::cli

#endif  // SMALLOVERLAP_CLI_HPP_
