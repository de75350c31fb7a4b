// nervecheck: classify the Gromov boundary of a Coxeter group given its
// Coxeter matrix, plus the supporting nerve/pcd/planarity/hyperbolicity
// queries, batch processing, and exports.

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "nervecheck/classifier.hpp"
#include "nervecheck/cox_format.hpp"
#include "nervecheck/doubling.hpp"
#include "nervecheck/report_json.hpp"

namespace fs = std::filesystem;
using namespace nervecheck;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitResource = 2;

int default_max_rank_from_env() {
  if (const char* env = std::getenv("NERVECHECK_MAX_RANK")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return kDefaultMaxRank;
}

std::string witness_line(const HyperbolicityVerdict& v) {
  if (!v.witness) return "";
  if (const auto* affine = std::get_if<AffineWitness>(&*v.witness)) {
    std::string s = "affine subgroup " + affine->tag.str() + " on {";
    bool first = true;
    for (const auto& g : affine->subset) {
      s += (first ? "" : ", ") + g;
      first = false;
    }
    return s + "}";
  }
  const auto& product = std::get<ProductWitness>(*v.witness);
  std::string s = "product of infinite subgroups {";
  bool first = true;
  for (const auto& g : product.left) {
    s += (first ? "" : ", ") + g;
    first = false;
  }
  s += "} x {";
  first = true;
  for (const auto& g : product.right) {
    s += (first ? "" : ", ") + g;
    first = false;
  }
  return s + "}";
}

void print_report_text(const ClassificationReport& report, std::ostream& out) {
  out << "class: " << to_string(report.boundary_class) << "\n";
  if (report.boundary_dim)
    out << "boundary dimension: " << *report.boundary_dim << "\n";
  out << "hyperbolic: " << (report.hyperbolicity.hyperbolic ? "yes" : "no");
  if (const std::string w = witness_line(report.hyperbolicity); !w.empty())
    out << " (" << w << ")";
  out << "\n";
  if (!report.factors.empty()) {
    out << "factors:";
    for (const auto& f : report.factors) {
      out << " {";
      bool first = true;
      for (const auto& g : f.members) {
        out << (first ? "" : ",") << g;
        first = false;
      }
      out << "}" << (f.spherical ? "(finite)" : "(infinite)");
    }
    out << "\n";
  }
  if (!report.nerve_simplex_counts.empty()) {
    out << "core nerve simplices per dimension:";
    for (int c : report.nerve_simplex_counts) out << " " << c;
    out << "\n";
  }
  if (report.unseparability) {
    out << "unseparable: "
        << (report.unseparability->unseparable ? "yes" : "no") << "\n";
    if (report.unseparability->witness) {
      const auto& w = *report.unseparability->witness;
      out << "  witness: " << to_string(w.kind) << ", removed {";
      bool first = true;
      for (const auto& v : w.removed) {
        out << (first ? "" : ",") << v;
        first = false;
      }
      out << "} leaves " << w.components.size() << " components\n";
    }
  }
  if (report.planarity)
    out << "nerve planar: " << (report.planarity->verdict ? "yes" : "no")
        << (report.planarity->verdict
                ? ""
                : std::string(" (") + to_string(report.planarity->obstruction) +
                      ")")
        << "\n";
  if (report.pcd_result) out << "pcd: " << report.pcd_result->value << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
}

void write_dot(const LabelledComplex& k, std::ostream& out) {
  out << "graph nerve {\n";
  for (const auto& v : k.vertex_names()) out << "  \"" << v << "\";\n";
  if (k.dim() >= 1)
    for (Subset e : k.masks_by_dim()[1]) {
      const auto names = k.names_of(e);
      out << "  \"" << names[0] << "\" -- \"" << names[1]
          << "\" [label=" << k.edge_label_mask(e) << "];\n";
    }
  out << "}\n";
}

void write_faces(const LabelledComplex& k, std::ostream& out) {
  for (int d = 2; d <= k.dim(); ++d)
    for (Subset s : k.masks_by_dim()[d]) {
      const auto names = k.names_of(s);
      for (std::size_t i = 0; i < names.size(); ++i)
        out << (i ? " " : "") << names[i];
      out << "\n";
    }
}

std::vector<std::string> expand_batch_paths(
    const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".cox")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

struct BatchResult {
  std::string line;
  std::string jsonl;
  bool ok = false;
};

int run_batch(const std::vector<std::string>& paths, const std::string& jsonl,
              int workers, const ClassifyOptions& options) {
  const std::vector<std::string> files = expand_batch_paths(paths);
  if (files.empty()) {
    std::cerr << "batch: no .cox files found\n";
    return kExitInputError;
  }
  std::vector<BatchResult> results(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      BatchResult& r = results[i];
      try {
        const InputDocument doc = load_cox_file(files[i]);
        const ClassificationReport report = classify(doc.matrix, options);
        const std::string got = to_string(report.boundary_class);
        if (doc.expected_class) {
          r.ok = *doc.expected_class == got;
          r.line = files[i] + ": " + got + (r.ok ? " (expected: ok)"
                                                 : " (expected " +
                                                       *doc.expected_class +
                                                       ": MISMATCH)");
        } else {
          r.ok = true;
          r.line = files[i] + ": " + got;
        }
        nlohmann::json j = to_json(report);
        j["source"] = files[i];
        r.jsonl = j.dump();
      } catch (const Error& e) {
        r.ok = false;
        r.line = files[i] + ": error: " + e.what();
      }
    }
  };
  const int thread_count =
      std::max(1, std::min<int>(workers, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  std::ofstream jsonl_out;
  if (!jsonl.empty()) {
    jsonl_out.open(jsonl);
    if (!jsonl_out) {
      std::cerr << "batch: cannot write " << jsonl << "\n";
      return kExitInputError;
    }
  }
  bool all_ok = true;
  for (const BatchResult& r : results) {
    std::cout << r.line << "\n";
    if (!r.jsonl.empty() && jsonl_out) jsonl_out << r.jsonl << "\n";
    all_ok = all_ok && r.ok;
  }
  std::cout << (all_ok ? "batch: all ok" : "batch: FAILURES") << "\n";
  return all_ok ? kExitOk : kExitInputError;
}

LabelDistribution parse_label_list(const std::string& spec) {
  LabelDistribution dist;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "inf") {
      dist.labels.push_back(Label::inf());
    } else {
      for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error(Errc::BadLabelSet, "bad label token '" + token + "'");
      dist.labels.push_back(Label::finite(std::stoi(token)));
    }
  }
  return dist;
}

GeneratorSet parse_mirror_spec(const std::string& spec) {
  GeneratorSet out;
  if (spec == "-" || spec.empty()) return out;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.insert(token);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gromov boundary classification of Coxeter groups from the "
               "labelled nerve of the system"};
  app.require_subcommand(1);

  int max_rank = default_max_rank_from_env();
  std::uint64_t budget = kDefaultPlanarityBudget;
  app.add_option("--max-rank", max_rank,
                 "rank guard for subset enumeration (default 20; env "
                 "NERVECHECK_MAX_RANK)");
  app.add_option("--budget", budget,
                 "planarity search node budget (default 10000000)");

  std::string file;
  bool as_json = false;
  auto* cmd_classify =
      app.add_subcommand("classify", "classify the boundary of one system");
  cmd_classify->add_option("file", file)->required();
  cmd_classify->add_flag("--json", as_json, "emit the JSON report");

  std::string dot_out, faces_out;
  auto* cmd_nerve =
      app.add_subcommand("nerve", "build the labelled nerve and export it");
  cmd_nerve->add_option("file", file)->required();
  cmd_nerve->add_option("--dot", dot_out, "write the 1-skeleton as DOT");
  cmd_nerve->add_option("--faces", faces_out,
                        "write simplices of dimension >= 2, one per line");

  auto* cmd_pcd = app.add_subcommand(
      "pcd", "puncture-respecting cohomological dimension of the nerve");
  cmd_pcd->add_option("file", file)->required();

  auto* cmd_planar =
      app.add_subcommand("planar", "planarity of the nerve as a 2-complex");
  cmd_planar->add_option("file", file)->required();

  auto* cmd_hyp =
      app.add_subcommand("hyperbolic", "word hyperbolicity with witness");
  cmd_hyp->add_option("file", file)->required();

  auto* cmd_unsep =
      app.add_subcommand("unseparable", "unseparability of the nerve");
  cmd_unsep->add_option("file", file)->required();

  std::vector<std::string> mirror_specs;
  auto* cmd_mirror = app.add_subcommand(
      "mirror-double", "adjoin one commuting involution per listed subset");
  cmd_mirror->add_option("file", file)->required();
  cmd_mirror
      ->add_option("--mirror", mirror_specs,
                   "comma-separated generator names ('-' for the empty set); "
                   "repeatable")
      ->required();

  std::vector<std::string> batch_paths;
  std::string jsonl_out;
  int workers = 4;
  auto* cmd_batch =
      app.add_subcommand("batch", "classify every .cox file under the paths");
  cmd_batch->add_option("paths", batch_paths)->required();
  cmd_batch->add_option("--jsonl", jsonl_out, "write one JSON report per line");
  cmd_batch->add_option("--workers", workers, "concurrent classifications");

  int rank = 0;
  std::string label_spec = "2,3,inf";
  std::uint64_t seed = 0;
  auto* cmd_random =
      app.add_subcommand("random", "emit a random matrix in .cox form");
  cmd_random->add_option("--rank", rank)->required();
  cmd_random->add_option("--labels", label_spec,
                         "allowed labels, e.g. 2,3,inf");
  cmd_random->add_option("--seed", seed)->required();

  CLI11_PARSE(app, argc, argv);

  const ClassifyOptions options{max_rank, budget};
  try {
    if (cmd_classify->parsed()) {
      const InputDocument doc = load_cox_file(file);
      const ClassificationReport report = classify(doc.matrix, options);
      if (as_json)
        std::cout << to_json(report).dump(2) << "\n";
      else
        print_report_text(report, std::cout);
      return kExitOk;
    }
    if (cmd_nerve->parsed()) {
      const InputDocument doc = load_cox_file(file);
      const LabelledComplex k = nerve(doc.matrix, max_rank);
      std::cout << "vertices: " << k.vertex_count() << "\n";
      const auto counts = k.simplex_counts_per_dim();
      for (std::size_t d = 0; d < counts.size(); ++d)
        std::cout << "dimension " << d << ": " << counts[d] << " simplices\n";
      if (!dot_out.empty()) {
        std::ofstream out(dot_out);
        if (!out) throw Error(Errc::SyntaxError, "cannot write " + dot_out);
        write_dot(k, out);
      }
      if (!faces_out.empty()) {
        std::ofstream out(faces_out);
        if (!out) throw Error(Errc::SyntaxError, "cannot write " + faces_out);
        write_faces(k, out);
      }
      return kExitOk;
    }
    if (cmd_pcd->parsed()) {
      const InputDocument doc = load_cox_file(file);
      std::cout << pcd(nerve(doc.matrix, max_rank)).value << "\n";
      return kExitOk;
    }
    if (cmd_planar->parsed()) {
      const InputDocument doc = load_cox_file(file);
      const PlanarityCertificate cert =
          is_planar_complex(nerve(doc.matrix, max_rank), budget);
      std::cout << (cert.verdict ? "planar" : "not planar") << "\n";
      if (!cert.verdict)
        std::cout << "obstruction: " << to_string(cert.obstruction) << "\n";
      return kExitOk;
    }
    if (cmd_hyp->parsed()) {
      const InputDocument doc = load_cox_file(file);
      const HyperbolicityVerdict verdict =
          is_word_hyperbolic(doc.matrix, max_rank);
      std::cout << (verdict.hyperbolic ? "hyperbolic" : "not hyperbolic")
                << "\n";
      if (const std::string w = witness_line(verdict); !w.empty())
        std::cout << "witness: " << w << "\n";
      return kExitOk;
    }
    if (cmd_unsep->parsed()) {
      const InputDocument doc = load_cox_file(file);
      const UnseparabilityResult result =
          is_unseparable(nerve(doc.matrix, max_rank));
      std::cout << (result.unseparable ? "unseparable" : "separable") << "\n";
      if (result.witness) {
        std::cout << "witness: " << to_string(result.witness->kind) << " {";
        bool first = true;
        for (const auto& v : result.witness->removed) {
          std::cout << (first ? "" : ",") << v;
          first = false;
        }
        std::cout << "}\n";
      }
      return kExitOk;
    }
    if (cmd_mirror->parsed()) {
      const InputDocument doc = load_cox_file(file);
      std::vector<GeneratorSet> subsets;
      for (const auto& spec : mirror_specs)
        subsets.push_back(parse_mirror_spec(spec));
      std::vector<std::string> new_names;
      int counter = 1;
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::string name;
        do {
          name = "s" + std::to_string(counter++);
        } while (doc.matrix.has_generator(name));
        new_names.push_back(name);
      }
      const CoxeterMatrix doubled =
          mirror_double(doc.matrix, subsets, new_names);
      std::cout << serialize_cox(doubled);
      return kExitOk;
    }
    if (cmd_batch->parsed())
      return run_batch(batch_paths, jsonl_out, workers, options);
    if (cmd_random->parsed()) {
      const LabelDistribution dist = parse_label_list(label_spec);
      std::cout << serialize_cox(random_matrix(rank, dist, seed));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_resource_error() ? kExitResource : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
