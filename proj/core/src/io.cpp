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


#include "nilentropy/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "group_data.hpp"
#include "json.hpp"

namespace nilentropy {
namespace {

using nlohmann::json;

constexpr long long kSafeJsonInteger = 1LL << 53;

json integer_json(const Integer& v) {
  if (fits_int64(v)) {
    const long long x = to_int64(v);
    if (x > -kSafeJsonInteger && x < kSafeJsonInteger) return x;
  }
  return v.get_str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return from_int64(j.get<long long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw FormatError("not a decimal integer: '" + j.get<std::string>() + "'");
    }
    return v;
  }
  throw FormatError("expected an integer or decimal string, got " + j.dump());
}

json vector_json(const MalcevVector& g) {
  json out = json::array();
  for (const Integer& v : g.exponents()) out.push_back(integer_json(v));
  return out;
}

MalcevVector vector_from(const json& j) {
  if (!j.is_array()) throw FormatError("expected an integer array, got " + j.dump());
  std::vector<Integer> values;
  values.reserve(j.size());
  for (const json& v : j) values.push_back(integer_from(v));
  return MalcevVector(std::move(values));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

json group_json(const GroupSpec& spec) {
  json out;
  out["rank"] = spec.rank();
  out["class"] = spec.nilpotency_class();
  out["convention"] = "left-collected";
  if (!spec.is_free()) {
    json relators = json::array();
    for (const MalcevVector& r : spec.relators()) relators.push_back(vector_json(r));
    out["relators"] = relators;
    const detail::GroupData& data = spec.data();
    const HallBasis& hb = spec.hall_basis();
    json relations = json::object();
    for (std::size_t r = 0; r < data.relation_rows.size(); ++r) {
      const int w = hb[data.relation_pivots[r]].weight;
      const auto [first, last] = hb.weight_range(w);
      json row = json::array();
      for (std::size_t k = first; k < last; ++k) row.push_back(integer_json(data.relation_rows[r][k]));
      relations[std::to_string(w)].push_back(row);
    }
    out["relations"] = relations;
  }
  if (!spec.has_default_generating_set()) {
    json gens = json::array();
    for (const MalcevVector& g : spec.generating_set()) gens.push_back(vector_json(g));
    out["generating_set"] = gens;
  }
  return out;
}

GroupSpec group_from(const json& j) {
  const int rank = int_field(j, "rank");
  const int cls = int_field(j, "class");
  if (j.contains("convention") && j.at("convention") != "left-collected") {
    throw FormatError("unsupported convention " + j.at("convention").dump());
  }
  std::vector<MalcevVector> relators;
  if (j.contains("relators")) {
    for (const json& r : j.at("relators")) relators.push_back(vector_from(r));
  } else if (j.contains("relations")) {
    const GroupSpec free(rank, cls);
    const std::size_t n = free.dimension();
    for (const auto& [key, matrix] : j.at("relations").items()) {
      int w = 0;
      try {
        w = std::stoi(key);
      } catch (const std::exception&) {
        throw FormatError("relation weight '" + key + "' is not an integer");
      }
      if (w < 1 || w > cls) throw FormatError("relation weight " + key + " out of range");
      const auto [first, last] = free.weight_range(w);
      for (const json& row : matrix) {
        const MalcevVector part = vector_from(row);
        if (part.size() != last - first) {
          throw FormatError("relation row of weight " + key + " has " +
                            std::to_string(part.size()) + " entries, expected " +
                            std::to_string(last - first));
        }
        MalcevVector r(n);
        for (std::size_t k = first; k < last; ++k) r[k] = part[k - first];
        relators.push_back(std::move(r));
      }
    }
  }
  GroupSpec spec = relators.empty() ? GroupSpec(rank, cls) : GroupSpec(rank, cls, relators);
  if (j.contains("generating_set")) {
    std::vector<MalcevVector> gens;
    for (const json& g : j.at("generating_set")) gens.push_back(vector_from(g));
    spec = spec.with_generating_set(std::move(gens));
  }
  return spec;
}

json endomorphism_json(const Endomorphism& phi) {
  json out;
  out["group"] = group_json(phi.spec());
  json images = json::array();
  for (const MalcevVector& g : phi.images()) images.push_back(vector_json(g));
  out["images"] = images;
  return out;
}

Endomorphism endomorphism_from(const json& j) {
  const GroupSpec spec = group_from(field(j, "group"));
  if (j.contains("images")) {
    std::vector<MalcevVector> images;
    for (const json& g : j.at("images")) images.push_back(vector_from(g));
    return Endomorphism(spec, std::move(images));
  }
  std::vector<WordExpr> words;
  for (const json& w : field(j, "words")) {
    if (!w.is_string()) throw FormatError("words must be strings");
    words.push_back(WordExpr::parse(w.get<std::string>()));
  }
  return Endomorphism::from_words(spec, words);
}

template <class F>
auto wrap(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string to_json(const MalcevVector& g) { return vector_json(g).dump(); }

MalcevVector malcev_from_json(std::string_view text) {
  return wrap([&] { return vector_from(parse(text)); });
}

std::string to_json(const GroupSpec& spec) { return group_json(spec).dump(2); }

GroupSpec group_from_json(std::string_view text) {
  return wrap([&] { return group_from(parse(text)); });
}

std::string to_json(const Endomorphism& phi) { return endomorphism_json(phi).dump(2); }

Endomorphism endomorphism_from_json(std::string_view text) {
  return wrap([&] { return endomorphism_from(parse(text)); });
}

std::string to_json(const SemidirectSpec& spec) {
  json out;
  out["base"] = group_json(spec.base());
  out["monodromy"] = endomorphism_json(spec.monodromy());
  out["class"] = spec.nilpotency_class();
  return out.dump(2);
}

std::string to_json(const AbelianComparison& report) {
  json out;
  out["spectral_radius"] = report.spectral_radius;
  out["entropy_estimate"] = report.entropy_estimate;
  out["ratio"] = report.ratio;
  out["window"] = {report.window.first, report.window.second};
  out["residual"] = report.residual;
  return out.dump(2);
}

std::string format_length(const GrowthEntry& entry) {
  if (entry.mode != LengthMode::kKaridi && std::isfinite(entry.length) &&
      entry.length < 9e15) {
    return std::to_string(static_cast<long long>(std::llround(entry.length)));
  }
  if (std::isfinite(entry.length)) return format_double(entry.length);
  const double decimal = entry.log_length / std::log(10.0);
  double exponent = std::floor(decimal);
  double mantissa = std::pow(10.0, decimal - exponent);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", mantissa);
  if (std::strtod(buf, nullptr) >= 10.0) {
    mantissa /= 10.0;
    exponent += 1;
  }
  std::snprintf(buf, sizeof buf, "%.12ge+%.0f", mantissa, exponent);
  return buf;
}

void write_growth_csv(std::ostream& out, const GrowthSeries& series) {
  out << "n,length,mode\n";
  for (const GrowthEntry& e : series.entries) {
    out << e.n << ',' << format_length(e) << ',' << to_string(e.mode) << '\n';
  }
}

GrowthSeries read_growth_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,length,mode") {
    throw FormatError("growth CSV must start with the header 'n,length,mode'");
  }
  GrowthSeries series;
  long row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw FormatError("row " + std::to_string(row) + ": expected 3 fields");
    GrowthEntry e;
    try {
      std::size_t used = 0;
      e.n = std::stol(line.substr(0, c1), &used);
      const std::string length = line.substr(c1 + 1, c2 - c1 - 1);
      // Long-form values keep their exponent in the log column only.
      const auto epos = length.find('e');
      const double mantissa = std::stod(epos == std::string::npos ? length : length.substr(0, epos));
      const double exponent = epos == std::string::npos ? 0.0 : std::stod(length.substr(epos + 1));
      e.log_length = mantissa > 0 ? std::log(mantissa) + exponent * std::log(10.0)
                                  : -std::numeric_limits<double>::infinity();
      e.length = mantissa > 0 ? std::exp(e.log_length) : 0.0;
      if (mantissa < 0) throw FormatError("negative length");
    } catch (const std::logic_error&) {
      throw FormatError("row " + std::to_string(row) + ": malformed number");
    }
    try {
      e.mode = parse_length_mode(line.substr(c2 + 1));
    } catch (const std::invalid_argument& err) {
      throw FormatError("row " + std::to_string(row) + ": " + err.what());
    }
    if (!series.entries.empty() && e.n <= series.entries.back().n) {
      throw FormatError("row " + std::to_string(row) + ": n must increase");
    }
    series.entries.push_back(e);
  }
  return series;
}

void write_plot_data(std::ostream& out, const GrowthSeries& series) {
  for (const GrowthEntry& e : series.entries) out << e.n << ' ' << format_length(e) << '\n';
}

}  // namespace nilentropy
