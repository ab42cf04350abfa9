// Command-line front end: analyze, linegraph, betti, verify, generate.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "frl/frl.hpp"

namespace {

constexpr int exit_usage = 2;
constexpr int exit_error = 1;

frl::Field parse_field(const std::string& name) {
  if (name == "gf2") return frl::Field::GF2;
  if (name == "rat") return frl::Field::Rational;
  throw CLI::ValidationError("--field", "expected gf2 or rat");
}

std::vector<int> parse_tuple(const std::string& text, std::size_t arity, const char* option) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(part, &used);
      if (used != part.size() || value < 0) throw std::invalid_argument(part);
      out.push_back(value);
    } catch (const std::exception&) {
      throw CLI::ValidationError(option, "expected non-negative integers, got '" + part + "'");
    }
  }
  if (out.size() != arity) {
    throw CLI::ValidationError(option, "expected " + std::to_string(arity) + " comma-separated integers");
  }
  return out;
}

frl::SimplicialComplex load(const std::string& path, std::optional<std::string>* name = nullptr) {
  auto doc = frl::parse_document(frl::read_file(path));
  if (name) *name = doc.name;
  return doc.to_complex();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw frl::Error(frl::ErrorKind::BadParameters, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line graphs of pure simplicial complexes and the Betti numbers of their facet ideals"};
  app.require_subcommand(1);

  std::string field_name = "gf2";

  // analyze
  auto* analyze = app.add_subcommand("analyze", "report everything known about one complex");
  std::string analyze_file;
  bool analyze_json = false;
  analyze->add_option("file", analyze_file, "complex file (JSON or text)")->required();
  analyze->add_option("--field", field_name, "coefficient field: gf2 or rat");
  analyze->add_flag("--json", analyze_json, "emit JSON instead of text");

  // linegraph
  auto* linegraph = app.add_subcommand("linegraph", "print the line graph of a pure complex as JSON");
  std::string linegraph_file;
  linegraph->add_option("file", linegraph_file, "complex file")->required();

  // betti
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of the facet ideal");
  std::string betti_file;
  std::optional<int> betti_i, betti_j;
  betti->add_option("file", betti_file, "complex file")->required();
  betti->add_option("--i", betti_i, "homological degree (omit for the whole table)");
  betti->add_option("--j", betti_j, "internal degree");
  betti->add_option("--field", field_name, "coefficient field: gf2 or rat");

  // verify
  auto* verify = app.add_subcommand("verify", "check one statement over a corpus of complexes");
  std::string theorem, random_spec, exhaustive_spec, out_path;
  std::vector<std::string> files;
  std::uint64_t seed = 0;
  bool timing = false;
  verify->add_option("--theorem", theorem, "statement id")->required();
  auto* random_opt = verify->add_option("--random", random_spec, "n,d,r,trials");
  auto* exhaustive_opt = verify->add_option("--exhaustive", exhaustive_spec, "n,d,rmax");
  auto* files_opt = verify->add_option("--files", files, "complex files");
  random_opt->excludes(exhaustive_opt)->excludes(files_opt);
  exhaustive_opt->excludes(files_opt);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--field", field_name, "coefficient field: gf2 or rat");
  verify->add_option("--out", out_path, "report path (default: stdout)");
  verify->add_flag("--timing", timing, "include wall_time (makes reports non-reproducible)");

  // generate
  auto* generate = app.add_subcommand("generate", "write random pure complexes as JSON files");
  int gen_n = 0, gen_d = 0, gen_r = 0;
  std::size_t gen_count = 1;
  std::string gen_out;
  generate->add_option("--n", gen_n, "number of vertices")->required();
  generate->add_option("--d", gen_d, "facet size")->required();
  generate->add_option("--r", gen_r, "number of facets")->required();
  generate->add_option("--count", gen_count, "number of complexes");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--out", gen_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    const frl::Field field = parse_field(field_name);
    const frl::Budget budget = frl::Budget::from_env();

    if (*analyze) {
      std::optional<std::string> name;
      auto complex = load(analyze_file, &name);
      auto report = frl::analyze(complex, field, budget, name);
      std::cout << (analyze_json ? report.dump(2) + "\n" : frl::analyze_text(report));
      return 0;
    }

    if (*linegraph) {
      auto complex = load(linegraph_file);
      auto lg = frl::line_graph(complex);
      frl::ojson j;
      j["order"] = lg.graph.order();
      frl::ojson edges = frl::ojson::array();
      for (auto [u, v] : lg.graph.edges()) edges.push_back({u, v});
      j["edges"] = edges;
      frl::ojson facets = frl::ojson::array();
      for (std::size_t k : lg.facet_of) facets.push_back(complex.facets()[k].members());
      j["facet_of"] = facets;
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*betti) {
      auto ideal = frl::facet_ideal(load(betti_file));
      if (betti_i.has_value() != betti_j.has_value()) throw CLI::ValidationError("betti", "--i and --j go together");
      if (betti_i) {
        std::cout << frl::beta(ideal, *betti_i, *betti_j, field) << "\n";
      } else {
        frl::ojson j = frl::ojson::array();
        for (const auto& [key, value] : frl::betti_table(ideal, field).entries) {
          j.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
        }
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (*verify) {
      frl::CorpusSpec spec;
      if (!random_spec.empty()) {
        auto v = parse_tuple(random_spec, 4, "--random");
        spec = frl::RandomCorpus{v[0], v[1], v[2], static_cast<std::size_t>(v[3])};
      } else if (!exhaustive_spec.empty()) {
        auto v = parse_tuple(exhaustive_spec, 3, "--exhaustive");
        spec = frl::ExhaustiveCorpus{v[0], v[1], v[2]};
      } else if (!files.empty()) {
        spec = frl::FileCorpus{files};
      } else {
        throw CLI::ValidationError("verify", "one of --random, --exhaustive, --files is required");
      }
      frl::VerifyOptions options;
      options.seed = seed;
      options.field = field;
      options.budget = budget;
      options.timing = timing;
      auto report = frl::verify(frl::parse_theorem_id(theorem), spec, options);
      write_output(out_path, report.to_json().dump(2) + "\n");
      if (!out_path.empty() && out_path != "-") std::cerr << report.to_text();
      return report.exit_code();
    }

    if (*generate) {
      std::filesystem::create_directories(gen_out);
      for (std::size_t k = 0; k < gen_count; ++k) {
        auto complex = frl::random_pure_complex(gen_n, gen_d, gen_r, frl::mix_seed(seed, k));
        std::ostringstream name;
        name << "random-n" << gen_n << "-d" << gen_d << "-r" << gen_r << "-s" << seed << "-" << k;
        write_output((std::filesystem::path(gen_out) / (name.str() + ".json")).string(),
                     frl::serialize_complex(complex, name.str()));
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const frl::Error& e) {
    std::cerr << "error (" << frl::to_string(e.kind()) << "): " << e.what() << "\n";
    if (e.kind() == frl::ErrorKind::BudgetExceeded) return 3;
    if (e.kind() == frl::ErrorKind::UnknownTheorem || e.kind() == frl::ErrorKind::BadParameters) return exit_usage;
    return exit_error;
  }
  return exit_error;
}
