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


// Command-line front end for the nilentropy library.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilentropy/nilentropy.hpp"

namespace ne = nilentropy;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ne::Error("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ne::Error("expected comma separated integers, got '" + text + "'");
    }
  }
  return out;
}

// "free:m,c", "surface:g,c" or a JSON file.
ne::GroupSpec load_group(const std::string& source) {
  if (source.rfind("free:", 0) == 0) {
    const auto v = parse_ints(source.substr(5));
    if (v.size() != 2) throw ne::Error("free group source is free:RANK,CLASS");
    return ne::free_nilpotent(v[0], v[1]);
  }
  if (source.rfind("surface:", 0) == 0) {
    const auto v = parse_ints(source.substr(8));
    if (v.size() != 2) throw ne::Error("surface group source is surface:GENUS,CLASS");
    return ne::surface_quotient(v[0], v[1]);
  }
  return ne::group_from_json(read_file(source));
}

// Builtins are defined on any two-generator group by their generator words.
ne::Endomorphism load_automorphism(const std::string& source, const ne::GroupSpec& spec) {
  if (source.rfind("builtin:", 0) == 0) {
    const std::string name = source.substr(8);
    if (name == "identity") return ne::Endomorphism::identity(spec);
    std::vector<std::string> words;
    if (name == "fib") {
      words = {"x1 x2", "x1"};
    } else if (name == "unipotent-shear") {
      words = {"x1", "x1 x2"};
    } else if (name == "central-shear") {
      words = {"x2^-1 x1 x2", "x2"};  // x1 -> x1 [x1, x2]
    } else {
      throw ne::Error("unknown builtin '" + name +
                      "' (fib, unipotent-shear, central-shear, identity)");
    }
    if (spec.rank() != 2) throw ne::Error("builtin automorphisms need a rank-2 group");
    std::vector<ne::WordExpr> parsed;
    for (const auto& w : words) parsed.push_back(ne::WordExpr::parse(w));
    return ne::Endomorphism::from_words(spec, parsed);
  }
  // A JSON automorphism carries its own group.
  return ne::endomorphism_from_json(read_file(source));
}

// "x2", a word such as "x1 x2^-1", a JSON array or "(1,0,2)".
ne::MalcevVector parse_element(const std::string& text, const ne::GroupSpec& spec) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '(')) {
    std::string body = text;
    std::replace(body.begin(), body.end(), '(', '[');
    std::replace(body.begin(), body.end(), ')', ']');
    ne::MalcevVector g = ne::malcev_from_json(body);
    if (g.size() != spec.dimension()) {
      throw ne::Error("element has " + std::to_string(g.size()) + " coordinates, expected " +
                      std::to_string(spec.dimension()));
    }
    return g;
  }
  return ne::eval_word(ne::WordExpr::parse(text), spec);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ne::Error("cannot write '" + path + "'");
  return file;
}

std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << v;
  return ss.str();
}

std::string matrix_string(const ne::IntegerMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

ne::FitOptions fit_options(double max_residual) {
  ne::FitOptions options;
  options.max_residual = max_residual;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy experiments for automorphisms of finitely generated nilpotent groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string group = "free:2,2";
  std::string aut = "builtin:fib";
  std::string out_path;
  std::string plot_path;
  long n_max = 30;
  double max_residual = 0.25;

  // hall
  int rank = 2, cls = 2;
  auto* hall = app.add_subcommand("hall", "List the Hall basis of F_m / gamma_{c+1}");
  hall->add_option("--rank", rank, "Number of generators")->required();
  hall->add_option("--class", cls, "Nilpotency class")->required();

  // eval / mul / len
  std::string word, a_text, b_text, element;
  int radius_cap = 10;
  auto* eval = app.add_subcommand("eval", "Mal'cev coordinates of a word");
  eval->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  eval->add_option("--word", word, "Word such as \"x2 x1^-1\"")->required();

  auto* mul = app.add_subcommand("mul", "Product of two elements");
  mul->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  mul->add_option("--a", a_text, "Element (word or coordinates)")->required();
  mul->add_option("--b", b_text, "Element (word or coordinates)")->required();

  auto* len = app.add_subcommand("len", "Word length of an element");
  len->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  len->add_option("--element", element, "Element (word or coordinates)")->required();
  len->add_option("--radius-cap", radius_cap, "Largest BFS radius")->check(CLI::Range(1, 60));

  // aut-check
  auto* aut_check = app.add_subcommand("aut-check", "Automorphism and spectral checks");
  aut_check->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  aut_check->add_option("--aut", aut, "builtin:NAME or JSON file");

  // grow
  std::vector<std::string> subjects;
  std::string mode = "karidi";
  auto* grow = app.add_subcommand("grow", "Growth series of phi^n(g)");
  grow->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  grow->add_option("--aut", aut, "builtin:NAME or JSON file");
  grow->add_option("--subject", subjects, "Element g")->required()->expected(1);
  grow->add_option("--n", n_max, "Largest iterate")->check(CLI::PositiveNumber);
  grow->add_option("--mode", mode, "exact-bfs | karidi | normalform-upper | abelian-lower")
      ->check(CLI::IsMember({"exact-bfs", "karidi", "normalform-upper", "abelian-lower"}));
  grow->add_option("--radius-cap", radius_cap, "BFS radius cap for exact-bfs")
      ->check(CLI::Range(1, 60));
  grow->add_option("--out", out_path, "CSV output path (default stdout)");
  grow->add_option("--plot", plot_path, "Two-column plot data path");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Entropy estimate against the H_1 spectral radius");
  entropy->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  entropy->add_option("--aut", aut, "builtin:NAME or JSON file");
  entropy->add_option("--subject", subjects, "Elements (default: the generators)");
  entropy->add_option("--n", n_max, "Largest iterate")->check(CLI::PositiveNumber);
  entropy->add_option("--max-residual", max_residual, "Largest accepted fit residual");
  entropy->add_option("--out", out_path, "JSON report path (default stdout)");
  entropy->add_option("--plot", plot_path, "Two-column plot data for the first subject");

  // tower
  std::string classes;
  auto* tower = app.add_subcommand("tower", "Entropy on each universal nilpotent quotient");
  tower->add_option("--group", group, "free:m,c");
  tower->add_option("--aut", aut, "builtin:NAME or JSON file");
  tower->add_option("--subject", subjects, "Element g")->required()->expected(1);
  tower->add_option("--classes", classes, "Comma separated k (default 2..c+1)");
  tower->add_option("--n", n_max, "Largest iterate")->check(CLI::PositiveNumber);
  tower->add_option("--max-residual", max_residual, "Largest accepted fit residual");
  tower->add_option("--out", out_path, "CSV output path (default stdout)");

  // distortion
  int layer = 2, radius = 24;
  auto* distortion = app.add_subcommand("distortion", "Distortion of gamma_i from ball data");
  distortion->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  distortion->add_option("--layer", layer, "Weight i");
  distortion->add_option("--radius", radius, "Largest word length")->check(CLI::Range(4, 60));
  distortion->add_option("--plot", plot_path, "Two-column (L, Delta) data path");

  // semidirect
  auto* semidirect = app.add_subcommand("semidirect", "N x_phi Z for a unipotent phi");
  semidirect->add_option("--group", group, "free:m,c | surface:g,c | JSON file");
  semidirect->add_option("--aut", aut, "builtin:NAME or JSON file");
  semidirect->add_option("--out", out_path, "JSON output path (default stdout)");

  // surface
  int genus = 2;
  auto* surface = app.add_subcommand("surface", "Nilpotent quotient of a surface group");
  surface->add_option("--genus", genus, "Genus")->check(CLI::PositiveNumber);
  surface->add_option("--class", cls, "Nilpotency class")->check(CLI::PositiveNumber);
  surface->add_option("--out", out_path, "GroupSpec JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    if (hall->parsed()) {
      const ne::HallBasis basis = ne::generate_hall_basis(rank, cls);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        std::cout << k + 1 << '\t' << basis[k].weight << '\t' << basis.name(k) << '\n';
      }
    } else if (eval->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      std::cout << ne::eval_word(ne::WordExpr::parse(word), spec).to_string() << '\n';
    } else if (mul->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::MalcevVector g = parse_element(a_text, spec);
      const ne::MalcevVector h = parse_element(b_text, spec);
      std::cout << ne::multiply(g, h, spec).to_string() << '\n';
    } else if (len->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::MalcevVector g = parse_element(element, spec);
      const auto exact = ne::geodesic_length(g, spec, radius_cap);
      std::cout << "exact-bfs\t" << (exact ? std::to_string(*exact) : "unknown (> " +
                                         std::to_string(radius_cap) + ")")
                << "\nkaridi\t" << format_double(ne::karidi_length(g, spec).value)
                << "\nabelian-lower\t" << ne::abelian_lower_bound(g, spec).get_str() << '\n';
    } else if (aut_check->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::Endomorphism phi = load_automorphism(aut, spec);
      const ne::SpectralReport report = ne::spectral_report(ne::abelianization_matrix(phi));
      std::cout << "automorphism\t" << (ne::is_automorphism(phi) ? "yes" : "no")
                << "\nhomologically_trivial\t"
                << (ne::is_homologically_trivial(phi) ? "yes" : "no")
                << "\ncharacteristic_polynomial\t" << report.characteristic_polynomial.to_string()
                << "\nspectral_radius\t" << format_double(report.spectral_radius) << "\nenclosure\t["
                << format_double(report.radius_lower) << ", " << format_double(report.radius_upper)
                << "]\nunipotent\t" << (report.unipotent ? "yes" : "no") << "\nquasi_unipotent\t"
                << (report.quasi_unipotent ? "yes" : "no") << '\n';
      for (int i = 1; i <= phi.spec().nilpotency_class(); ++i) {
        std::cout << "graded_matrix_" << i << '\t' << matrix_string(ne::graded_matrix(phi, i))
                  << '\n';
      }
    } else if (grow->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::Endomorphism phi = load_automorphism(aut, spec);
      const ne::MalcevVector g = parse_element(subjects.front(), phi.spec());
      ne::GrowthOptions options;
      options.radius_cap = radius_cap;
      const ne::GrowthSeries series =
          ne::growth_series(phi, g, n_max, ne::parse_length_mode(mode), options);
      for (const auto& w : series.warnings) std::cerr << "warning: " << w << '\n';
      ne::write_growth_csv(open_output(out_path, file), series);
      if (!plot_path.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) throw ne::Error("cannot write '" + plot_path + "'");
        ne::write_plot_data(plot, series);
      }
    } else if (entropy->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::Endomorphism phi = load_automorphism(aut, spec);
      std::vector<ne::MalcevVector> targets;
      for (const auto& s : subjects) targets.push_back(parse_element(s, phi.spec()));
      const ne::AbelianComparison report =
          ne::abelian_comparison(phi, targets, n_max, fit_options(max_residual));
      open_output(out_path, file) << ne::to_json(report) << '\n';
      if (!plot_path.empty()) {
        const ne::MalcevVector g = targets.empty() ? phi.spec().generator(0) : targets.front();
        std::ofstream plot(plot_path);
        if (!plot) throw ne::Error("cannot write '" + plot_path + "'");
        ne::write_plot_data(plot, ne::growth_series(phi, g, n_max, ne::LengthMode::kKaridi));
      }
    } else if (tower->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::Endomorphism phi = load_automorphism(aut, spec);
      const ne::MalcevVector g = parse_element(subjects.front(), phi.spec());
      std::vector<int> ks;
      if (classes.empty()) {
        for (int k = 2; k <= phi.spec().nilpotency_class() + 1; ++k) ks.push_back(k);
      } else {
        ks = parse_ints(classes);
      }
      std::ostream& out = open_output(out_path, file);
      out << "k,entropy,residual\n";
      for (const auto& row : ne::quotient_tower(phi, g, ks, n_max, fit_options(max_residual))) {
        out << row.k << ',' << format_double(row.estimate.value) << ','
            << format_double(row.estimate.residual) << '\n';
      }
    } else if (distortion->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::DistortionProfile profile = ne::distortion_profile(spec, layer, radius);
      std::cout << "degree\t" << format_double(profile.fit.degree) << "\ncorrelation\t"
                << format_double(profile.fit.correlation) << "\nsamples\t" << profile.fit.samples
                << "\nradius\t" << profile.radius << '\n';
      if (!plot_path.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) throw ne::Error("cannot write '" + plot_path + "'");
        for (const auto& [l, d] : profile.points) plot << l << ' ' << format_double(d) << '\n';
      }
    } else if (semidirect->parsed()) {
      const ne::GroupSpec spec = load_group(group);
      const ne::Endomorphism phi = load_automorphism(aut, spec);
      const ne::SemidirectSpec product = ne::semidirect_unipotent(phi.spec(), phi);
      json doc = json::parse(ne::to_json(product));
      doc["lower_central_ranks"] = product.lower_central_ranks();
      doc["hirsch_length"] = product.hirsch_length();
      doc["upper_central_length"] = ne::upper_central_lengths(product);
      open_output(out_path, file) << doc.dump(2) << '\n';
    } else if (surface->parsed()) {
      const ne::GroupSpec spec = ne::surface_quotient(genus, cls);
      std::cout << "graded_ranks\t";
      for (int d = 1; d <= spec.nilpotency_class(); ++d) {
        std::cout << (d > 1 ? "," : "") << spec.graded_rank(d);
      }
      std::cout << "\nhirsch_length\t" << spec.dimension() << '\n';
      if (!out_path.empty()) open_output(out_path, file) << ne::to_json(spec) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
