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

// Everything except the command line front end, which lives in
// smalloverlap/cli.hpp and needs CLI11 and nlohmann::json.

#ifndef SMALLOVERLAP_HPP_
#define SMALLOVERLAP_HPP_

#include "smalloverlap/kambites.hpp"
#include "smalloverlap/overlap.hpp"
#include "smalloverlap/presentation.hpp"
#include "smalloverlap/rewrite_oracle.hpp"
#include "smalloverlap/scanner.hpp"
#include "smalloverlap/suffix_tree.hpp"
#include "smalloverlap/word.hpp"

#endif  // SMALLOVERLAP_HPP_
