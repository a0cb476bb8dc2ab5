// Copyright 2026 The nilentropy Authors.
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


#ifndef NILENTROPY_IO_HPP
#define NILENTROPY_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "nilentropy/automorphism.hpp"
#include "nilentropy/constructions.hpp"
#include "nilentropy/group.hpp"
#include "nilentropy/growth.hpp"

namespace nilentropy {

/// Malformed JSON or CSV input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Integer array; entries beyond +-2^53 are written as decimal strings.
std::string to_json(const MalcevVector& g);
MalcevVector malcev_from_json(std::string_view text);

/// {"rank", "class", "convention": "left-collected", "relators": [...],
///  "relations": {"<weight>": matrix}, "generating_set": [...]}.
/// "relators" are free Mal'cev vectors; "relations" lists, per weight, the
/// weight-d part of the echelon relation rows with a pivot in that weight.
/// On input either key may be used; rows of a "relations" matrix are read as
/// relators supported in that weight.
std::string to_json(const GroupSpec& spec);
GroupSpec group_from_json(std::string_view text);

/// {"group": <GroupSpec>, "images": [...]}; "words" (strings over the free
/// generators) may replace "images" on input.
std::string to_json(const Endomorphism& phi);
Endomorphism endomorphism_from_json(std::string_view text);

/// {"base", "monodromy", "class"}.
std::string to_json(const SemidirectSpec& spec);

/// {"spectral_radius", "entropy_estimate", "ratio", "window", "residual"}.
std::string to_json(const AbelianComparison& report);

/// Length column text: integers for exact values, otherwise 12 significant
/// digits; values beyond double range use a mantissa/exponent form.
std::string format_length(const GrowthEntry& entry);

/// Header `n,length,mode`, one row per entry.
void write_growth_csv(std::ostream& out, const GrowthSeries& series);
GrowthSeries read_growth_csv(std::istream& in);

/// Two whitespace-separated columns "n length".
void write_plot_data(std::ostream& out, const GrowthSeries& series);

}  // namespace nilentropy

#endif  // NILENTROPY_IO_HPP
