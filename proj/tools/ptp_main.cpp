// Command line front end. Every verb validates its inputs, writes
// machine-readable output to stdout or --out, and keeps the human summary on
// stderr. Exit codes: 0 success, 2 rejected input, 1 compute failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptp/bratteli.hpp"
#include "ptp/irreps.hpp"
#include "ptp/pbt.hpp"
#include "ptp/schur.hpp"
#include "ptp/sdp.hpp"
#include "ptp/text.hpp"
#include "json.hpp"

namespace {

using namespace ptp;

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// an output stream that is either stdout or a file picked with --out
class OutSink {
 public:
  explicit OutSink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ValidationError("cannot open " + path);
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// leaf label in either the nested pair form "((2,1),(2))" or the plain
// comma-separated staircase form "2,1,-2"
Staircase parse_leaf(const std::string& text, int d) {
  if (text.find('(') != std::string::npos) return to_staircase(parse_mixed(text, d));
  Row r = parse_row(text);
  if (static_cast<int>(r.size()) > d)
    throw ValidationError("staircase longer than the local dimension");
  while (static_cast<int>(r.size()) < d) r.push_back(0);
  if (!valid_staircase(r)) throw ValidationError("label is not weakly decreasing");
  return r;
}

std::vector<int> parse_symbols(const std::string& text, int len, int d) {
  const Row r = parse_row(text);
  if (static_cast<int>(r.size()) != len)
    throw ValidationError("symbol word needs one entry per tensor factor");
  std::vector<int> x;
  for (long long v : r) {
    if (v < 1 || v > d) throw ValidationError("symbols are 1-based and at most d");
    x.push_back(static_cast<int>(v));
  }
  return x;
}

std::vector<double> parse_amplitudes(const std::string& text) {
  std::vector<double> out;
  for (const std::string& piece : split(text, ',')) {
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad amplitude " + piece);
    }
    if (used != piece.size()) throw ValidationError("bad amplitude " + piece);
    out.push_back(v);
  }
  return out;
}

std::string render(const Surd& s, bool as_float) { return as_float ? num17(s.value()) : s.str(); }

std::string render(const SurdSum& s, bool as_float) {
  return as_float ? num17(s.value()) : s.str();
}

nlohmann::json matrix_json(const SurdMat& m, bool as_float) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j)
      if (as_float)
        row.push_back(m.at(i, j).value());
      else
        row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json matrix_json(const ExactMat& m, bool as_float) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j)
      if (as_float)
        row.push_back(m.at(i, j).value());
      else
        row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void run_irreps(int p, int q, int d, bool as_float, const std::string& out_path) {
  const IrrepSet irr = build_irreps(p, q, d);
  OutSink sink(out_path);
  Int total = 0;
  for (const IrrepBasis& b : irr.bases) {
    const Int mult = weyl_dim(b.leaf);
    total += Int(b.dim()) * mult;
    sink.get() << format_mixed(mixed_from_staircase(b.leaf)) << '\t' << format_row(b.leaf)
               << '\t' << b.dim() << '\t' << mult << '\n';
  }
  (void)as_float;
  std::cerr << irr.bases.size() << " irreps, sum of dim*mult = " << total << '\n';
}

void run_gt_matrix(int p, int q, int d, const std::string& irrep_text, int gen, bool as_float,
                   const std::string& out_path) {
  if (gen < 1 || gen > p + q - 1)
    throw ValidationError("generator index must lie between 1 and p+q-1");
  const Staircase leaf = parse_leaf(irrep_text, d);
  const IrrepSet irr = build_irreps(p, q, d);
  const int li = irr.leaf_index(leaf);
  const SurdMat& m = irr.gens[li][gen - 1];
  OutSink sink(out_path);
  sink.get() << "leaf " << format_row(leaf) << " gen " << gen << " dim " << m.rows << '\n';
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j)
      sink.get() << (j ? " " : "") << render(m.at(i, j), as_float);
    sink.get() << '\n';
  }
  std::cerr << "irrep dimension " << m.rows << '\n';
}

void run_verify(int p, int q, int d) {
  const IrrepSet irr = build_irreps(p, q, d);
  const std::vector<RelationReport> reports = verify_relations(irr);
  int failed = 0;
  for (const RelationReport& r : reports)
    if (!r.pass) {
      ++failed;
      std::cerr << "FAIL " << r.name << " leaf " << format_row(r.leaf) << " residual "
                << num17(r.residual) << '\n';
    }
  if (failed > 0) throw ComputeError(std::to_string(failed) + " relation checks failed");
  std::cout << "all relations OK\n";
  std::cerr << reports.size() << " relation checks passed\n";
}

void run_schur_entry(int p, int q, int d, const std::string& path_text,
                     const std::string& pattern_text, const std::string& word_text) {
  const PathSeq path = parse_path(path_text);
  if (!valid_path(path, p, d)) throw ValidationError("not a tower path for these p, q, d");
  if (static_cast<int>(path.size()) != p + q + 1)
    throw ValidationError("path length does not match p+q");
  const GTPattern pattern = parse_pattern(pattern_text);
  const std::vector<int> word = parse_symbols(word_text, p + q, d);
  std::cout << num17(schur_entry(p, path, pattern, word)) << '\n';
}

void run_schur_matrix(int p, int q, int d, long long cap, const std::string& out_path) {
  const Tower tower = build_tower(p, q, d);
  const std::vector<SchurLabel> labels = schur_labels(tower);
  const Mat u = build_usch_mps(p, q, d, true, cap);
  OutSink sink(out_path);
  sink.get() << "# rows: path TAB pattern TAB entries over computational words,"
                " first factor most significant\n";
  for (long long i = 0; i < u.rows(); ++i) {
    sink.get() << format_path(labels[i].path) << '\t' << format_pattern(labels[i].pattern);
    for (long long j = 0; j < u.cols(); ++j) sink.get() << '\t' << num17(u(i, j));
    sink.get() << '\n';
  }
  std::cerr << u.rows() << " x " << u.cols() << " transform\n";
}

void run_sdp_reduce(const std::string& in_path, const std::string& out_path,
                    std::string manifest_path) {
  std::ifstream in(in_path);
  if (!in) throw ValidationError("cannot open " + in_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const SdpProblem prob = parse_problem(buffer.str());
  const IrrepSet irr = build_irreps(prob.p, prob.q, prob.d);
  const ReducedSdp r = reduce_sdp(prob, irr);
  if (manifest_path.empty()) manifest_path = out_path + ".manifest.json";
  emit_reduced_files(r, out_path, manifest_path);
  std::cerr << r.variable_count << " variables over " << r.leaves.size() << " blocks\n";
}

void run_pbt_build(int p, int d, bool as_float, const std::string& out_path) {
  const PbtMeasurement m = build_dilated_pvm(p, d);
  nlohmann::json j;
  j["p"] = m.p;
  j["d"] = m.d;
  j["silent"] = nlohmann::json::array();
  for (const Staircase& s : m.silent) j["silent"].push_back(format_row(s));
  j["blocks"] = nlohmann::json::array();
  for (const PbtBlock& b : m.blocks) {
    nlohmann::json bj;
    bj["leaf"] = format_row(b.leaf);
    bj["paths"] = nlohmann::json::array();
    for (const PathSeq& t : b.paths) bj["paths"].push_back(format_path(t));
    bj["dilated"] = nlohmann::json::array();
    for (const PathSeq& t : b.dilated) bj["dilated"].push_back(format_path(t));
    bj["embed"] = b.embed;
    bj["generators"] = nlohmann::json::array();
    for (const SurdMat& g : b.gens) bj["generators"].push_back(matrix_json(g, as_float));
    bj["povm"] = nlohmann::json::array();
    for (const ExactMat& e : b.povm) bj["povm"].push_back(matrix_json(e, as_float));
    bj["pvm"] = nlohmann::json::array();
    for (const ExactMat& e : b.pvm) bj["pvm"].push_back(matrix_json(e, as_float));
    j["blocks"].push_back(std::move(bj));
  }
  // the rotation that prepares each amplitude column, one per undilated
  // vertex at the level below the wall
  j["rotations"] = nlohmann::json::array();
  if (p >= 1) {
    const Tower below = build_tower(p - 1, 0, d);
    for (const Staircase& s : below.levels.back()) {
      const WRotation w = w_rotation(stripped(s), p, d);
      nlohmann::json wj;
      wj["shape"] = format_row(w.shape);
      wj["grown"] = nlohmann::json::array();
      for (const Partition& g : w.grown) wj["grown"].push_back(format_row(g));
      nlohmann::json rows = nlohmann::json::array();
      for (long long i = 0; i < w.matrix.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long long k = 0; k < w.matrix.cols(); ++k) row.push_back(w.matrix(i, k));
        rows.push_back(std::move(row));
      }
      wj["matrix"] = rows;
      j["rotations"].push_back(std::move(wj));
    }
  }
  OutSink sink(out_path);
  sink.get() << j.dump(2) << '\n';
  std::cerr << m.blocks.size() << " active blocks, " << m.silent.size() << " silent leaves\n";
}

void run_pbt_simulate(int p, int d, const std::string& state_text, unsigned long long seed,
                      const std::string& out_path) {
  const std::vector<double> amps = parse_amplitudes(state_text);
  if (static_cast<int>(amps.size()) != d)
    throw ValidationError("state needs exactly d amplitudes");
  Vec state(d);
  for (int i = 0; i < d; ++i) state(i) = amps[i];
  const PbtOutcome out = simulate_pbt(p, d, state, seed);
  OutSink sink(out_path);
  sink.get() << "# outcome probability fidelity\n";
  for (int k = 0; k <= p; ++k) {
    sink.get() << k << ' ' << num17(out.probabilities[k]) << ' ';
    sink.get() << (k == 0 ? std::string("-") : num17(out.fidelities[k])) << '\n';
  }
  sink.get() << "sampled " << out.sampled << '\n';
  std::cerr << "sampled outcome " << out.sampled << " with seed " << seed << '\n';
}

int run_cli(int argc, char** argv) {
  CLI::App app{"partially transposed permutation algebra toolkit"};
  app.require_subcommand(1);

  int p = 1, q = 0, d = 2, gen = 1;
  long long cap = 1000;
  unsigned long long seed = 1;
  bool as_float = false;
  std::string irrep_text, path_text, pattern_text, word_text, state_text;
  std::string in_path, out_path, manifest_path;

  const auto add_pqd = [&](CLI::App* cmd, bool with_q) {
    cmd->add_option("--p", p, "raising factors")->required()->check(CLI::PositiveNumber);
    if (with_q) cmd->add_option("--q", q, "lowering factors")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--d", d, "local dimension")->required()->check(CLI::PositiveNumber);
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the table here instead of stdout");
  };

  CLI::App* irreps = app.add_subcommand("irreps", "list the irreducible blocks with dimensions");
  add_pqd(irreps, true);
  add_out(irreps);
  irreps->add_flag("--float", as_float, "decimal output");
  irreps->callback([&] { run_irreps(p, q, d, as_float, out_path); });

  CLI::App* gtm = app.add_subcommand("gt-matrix", "print one generator matrix of one irrep");
  add_pqd(gtm, true);
  gtm->add_option("--irrep", irrep_text, "leaf label, \"((2,1),(2))\" or \"2,1,-2\"")->required();
  gtm->add_option("--gen", gen, "generator index, 1-based")->required();
  gtm->add_flag("--float", as_float, "decimal output");
  add_out(gtm);
  gtm->callback([&] { run_gt_matrix(p, q, d, irrep_text, gen, as_float, out_path); });

  CLI::App* verify = app.add_subcommand("verify", "check the defining relations in every irrep");
  add_pqd(verify, true);
  verify->callback([&] { run_verify(p, q, d); });

  CLI::App* sentry = app.add_subcommand("schur-entry", "one transform coefficient");
  add_pqd(sentry, true);
  sentry->add_option("--path", path_text, "semicolon-separated staircases, root first")->required();
  sentry->add_option("--pattern", pattern_text, "pattern rows joined by ';'")->required();
  sentry->add_option("--string", word_text, "comma-separated 1-based symbols")->required();
  sentry->callback([&] { run_schur_entry(p, q, d, path_text, pattern_text, word_text); });

  CLI::App* smatrix = app.add_subcommand("schur-matrix", "dump the labelled dense transform");
  add_pqd(smatrix, true);
  smatrix->add_option("--cap", cap, "largest allowed dense dimension");
  add_out(smatrix);
  smatrix->callback([&] { run_schur_matrix(p, q, d, cap, out_path); });

  CLI::App* sdp = app.add_subcommand("sdp-reduce", "block-diagonalize an equivariant program");
  sdp->add_option("--in", in_path, "problem description json")->required();
  sdp->add_option("--out", out_path, "sparse program output path")->required();
  sdp->add_option("--manifest", manifest_path, "block manifest path, default <out>.manifest.json");
  sdp->callback([&] { run_sdp_reduce(in_path, out_path, manifest_path); });

  CLI::App* pbuild = app.add_subcommand("pbt-build", "construct the port measurement blocks");
  add_pqd(pbuild, false);
  pbuild->add_option("--out", out_path, "measurement json path");
  pbuild->add_flag("--float", as_float, "decimal output");
  pbuild->callback([&] { run_pbt_build(p, d, as_float, out_path); });

  CLI::App* psim = app.add_subcommand("pbt-simulate", "teleport one state and print the outcomes");
  add_pqd(psim, false);
  psim->add_option("--state", state_text, "comma-separated input amplitudes")->required();
  psim->add_option("--seed", seed, "sampling seed");
  add_out(psim);
  psim->callback([&] { run_pbt_simulate(p, d, state_text, seed, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
