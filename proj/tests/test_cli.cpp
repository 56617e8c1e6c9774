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

#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "smalloverlap/cli.hpp"

using namespace smalloverlap;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  std::string data(std::string const& name) {
    return std::string(SMALLOVERLAP_DATA_DIR) + "/" + name;
  }

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("analyze", "[cli]") {
  auto r = run({"analyze", data("abc_cba.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("c_index: 3\n") != std::string::npos);
  CHECK(r.out.find("is_c4: false\n") != std::string::npos);
  CHECK(r.err.empty());

  auto j = run({"analyze", data("aaeaaa_abcd.txt"), "--json", "--pieces"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["is_c4"] == true);
  CHECK(doc["c_index"] == "unbounded");
  CHECK(doc["relation_words"][0]["word"] == "aaeaaa");
  CHECK(doc["relation_words"][0]["x"] == "aa");
  CHECK(doc["relation_words"][0]["z"] == "aa");
  CHECK(doc["relation_words"][1]["z"] == "_");
  CHECK(doc["tree"]["leaves"] == 12);
  CHECK(doc["pieces"] == nlohmann::json::array({"_", "a", "aa"}));
  CHECK(run({"analyze", data("aaeaaa_abcd.txt"), "--json", "--pieces"}).out == j.out);

  auto c = nlohmann::json::parse(run({"analyze", data("acba_aabc.txt"), "--json"}).out);
  CHECK(c["c_index"] == 4);
  CHECK(!c.contains("pieces"));
}

TEST_CASE("analyze rejects bad input", "[cli]") {
  auto r = run({"analyze", data("malformed.txt")});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"analyze", data("no_such_file.txt")}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("nf", "[cli]") {
  auto r = run({"nf", data("abbba_cdc.txt"), "cdcdcabbbabbbabbcd"});
  CHECK(r.code == 0);
  CHECK(r.out == "abbbadcabbbabbbabbcd\n");
  CHECK(run({"nf", data("abbba_cdc.txt"), "cdabbbcdc"}).out == "abbbadcbbba\n");
  CHECK(run({"nf", data("abbba_cdc.txt"), "_"}).out == "_\n");
  CHECK(run({"nf", data("abbba_cdc.txt"), "abx"}).code == 2);
  CHECK(run({"nf", data("abc_cba.txt"), "abc"}).code == 2);
}

TEST_CASE("wp", "[cli]") {
  auto r = run({"wp", data("abbba_cdc.txt"), "cdabbbcdc", "abbbadcbbba"});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");
  auto n = run({"wp", data("abbba_cdc.txt"), "a", "b"});
  CHECK(n.code == 1);
  CHECK(n.out == "not-equivalent\n");
  auto x = run({"wp", data("abc_cba.txt"), "abc", "cba"});
  CHECK(x.code == 2);
  CHECK(x.out == "not-C(4)\n");
  CHECK(run({"wp", data("abbba_cdc.txt"), "a"}).code == 2);
}

TEST_CASE("class", "[cli]") {
  auto r = run({"class", data("abc_cba.txt"), "abc"});
  CHECK(r.code == 0);
  CHECK(r.out == "abc\ncba\n");
  CHECK(run({"class", data("abc_cba.txt"), "ab"}).out == "ab\n");
  auto t = run({"class", data("abc_cba.txt"), "abcabc", "--cap", "2"});
  CHECK(t.code == 3);
  CHECK(t.out.find("truncated (cap 2)") != std::string::npos);
  CHECK(run({"class", data("abc_cba.txt"), "abc", "--cap", "0"}).code == 2);
}

TEST_CASE("bench", "[cli]") {
  auto r = run({"bench", "gst", "--n", "1024..4096", "--sigma", "4", "--seed", "1", "--reps", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4096") != std::string::npos);
  CHECK(run({"bench", "gst", "--n", "0"}).code == 2);
  CHECK(run({"bench", "gst", "--n", "x"}).code == 2);
  CHECK(run({"bench", "sa", "--n", "16"}).code == 2);
  CHECK(cli::bench_corpus(1000, 3, 32, 9) == cli::bench_corpus(1000, 3, 32, 9));
  CHECK(cli::parse_range("4..32") == std::vector<size_t>{4, 8, 16, 32});
  CHECK(cli::parse_range("3,5") == std::vector<size_t>{3, 5});
}
