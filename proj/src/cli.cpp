#include "thilb/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "thilb/hilbert_scheme.hpp"
#include "thilb/random_lattice.hpp"
#include "thilb/serialize.hpp"

namespace thilb::cli {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot open output file " + path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2); }

struct Shared {
  GaleLattice L = GaleLattice(IntMat{{IntVec{1, 0}, IntVec{0, 1}}});
  NormalizationLog log;
  GraverBasis Gr;
  GroebnerFan2 fan;

  void load(const std::string& path, std::ostream& err) {
    auto [lat, lg] = parse_input(path, err);
    L = std::move(lat);
    log = std::move(lg);
  }
  void build() {
    Gr = graver_basis(L);
    fan = groebner_fan(L, Gr);
  }
};

}  // namespace

std::pair<GaleLattice, NormalizationLog> parse_input(const std::string& path,
                                                     std::ostream& err) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open input file " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.contains("basis") || !j["basis"].is_array())
    throw InputError("input must contain a \"basis\" array");
  IntMat B;
  for (const auto& row : j["basis"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw InputError("basis rows must be integer pairs");
    B.rows.push_back(IntVec{Int(row[0].get<long long>()), Int(row[1].get<long long>())});
  }
  auto result = normalize_gale(B);
  for (const NormalizationStep& s : result.second)
    err << "normalize: " << s.to_string() << "\n";
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorial structure of the toric Hilbert scheme of a "
               "rank-2 lattice"};
  app.require_subcommand(1);

  std::string input, output;
  std::string format = "json";
  bool dot = false;
  long long degree_bound = 0, margin = 0, cap = 0;
  unsigned fuzz_seed = 1;
  int fuzz_count = 10;
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for the parallel kernels");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "lattice JSON file")->required();
    cmd->add_option("-o,--output", output, "write result to a file");
  };

  CLI::App* c_norm = app.add_subcommand("normalize", "echo the normalized basis and log");
  add_input(c_norm);
  CLI::App* c_graver = app.add_subcommand("graver", "Graver basis as JSON binomials");
  add_input(c_graver);
  CLI::App* c_chambers = app.add_subcommand("chambers", "chamber complex of the Gale diagram");
  add_input(c_chambers);
  CLI::App* c_fan = app.add_subcommand("fan", "Groebner fan (json or svg)");
  add_input(c_fan);
  c_fan->add_option("--format", format, "json|svg")->check(CLI::IsMember({"json", "svg"}));
  CLI::App* c_ideals = app.add_subcommand("ideals", "all monomial graded ideals with "
                                                    "radicals and minimal primes");
  add_input(c_ideals);
  CLI::App* c_flips = app.add_subcommand("flips", "flip graph of the monomial ideals");
  add_input(c_flips);
  c_flips->add_flag("--dot", dot, "emit graphviz instead of JSON");
  CLI::App* c_tangent = app.add_subcommand("tangent", "tangent space dimension per ideal");
  add_input(c_tangent);
  CLI::App* c_verify = app.add_subcommand("verify", "machine-checkable verification report");
  add_input(c_verify);
  c_verify->add_option("--degree-bound", degree_bound, "oracle degree window")
      ->check(CLI::PositiveNumber);
  c_verify->add_option("--margin", margin, "oracle boundary margin")
      ->check(CLI::PositiveNumber);
  c_verify->add_option("--cap", cap, "standard-monomial search cap")
      ->check(CLI::PositiveNumber);
  CLI::App* c_fuzz = app.add_subcommand("fuzz", "verify random lattices");
  c_fuzz->add_option("--seed", fuzz_seed, "base seed");
  c_fuzz->add_option("--count", fuzz_count, "number of lattices")
      ->check(CLI::PositiveNumber);
  c_fuzz->add_option("-o,--output", output, "write result to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    Shared sh;
    if (c_norm->parsed()) {
      sh.load(input, err);
      write_output(dump(normalization_json(sh.L, sh.log)), output, out);
    } else if (c_graver->parsed()) {
      sh.load(input, err);
      write_output(dump(graver_json(graver_basis(sh.L))), output, out);
    } else if (c_chambers->parsed()) {
      sh.load(input, err);
      write_output(dump(chambers_json(chamber_complex(sh.L))), output, out);
    } else if (c_fan->parsed()) {
      sh.load(input, err);
      sh.build();
      write_output(format == "svg" ? fan_svg(sh.fan) : dump(fan_json(sh.fan)), output,
                   out);
    } else if (c_ideals->parsed()) {
      sh.load(input, err);
      sh.build();
      auto ideals = enumerate_monomial_ideals(sh.fan, sh.L, sh.Gr);
      write_output(dump(ideals_json(sh.fan, ideals)), output, out);
    } else if (c_flips->parsed()) {
      sh.load(input, err);
      sh.build();
      FlipGraph g = flip_graph(sh.fan, sh.L, sh.Gr, Int(cap));
      write_output(dot ? flip_graph_dot(g) : dump(flips_json(g)), output, out);
    } else if (c_tangent->parsed()) {
      sh.load(input, err);
      sh.build();
      auto ideals = enumerate_monomial_ideals(sh.fan, sh.L, sh.Gr);
      std::vector<int> fc, td;
      for (const MonomialIdeal& I : ideals) {
        fc.push_back(static_cast<int>(flips(I, sh.L, sh.Gr, sh.fan, Int(cap)).size()));
        td.push_back(tangent_dimension(I, sh.L, sh.Gr, Int(cap)));
      }
      write_output(dump(tangent_json(ideals, fc, td)), output, out);
    } else if (c_verify->parsed()) {
      sh.load(input, err);
      VerifyOptions vo;
      vo.degree_bound = degree_bound;
      vo.margin = margin;
      vo.search_cap = cap;
      VerificationReport rep = verify(sh.L, vo);
      write_output(dump(report_json(rep)), output, out);
      return rep.overall ? kExitOk : kExitVerifyFailed;
    } else if (c_fuzz->parsed()) {
      json results = json::array();
      bool all_pass = true;
      for (int i = 0; i < fuzz_count; ++i) {
        unsigned seed = fuzz_seed + static_cast<unsigned>(i);
        GaleLattice L = random_gale_lattice(seed);
        VerifyOptions vo;
        vo.search_cap = cap;
        VerificationReport rep = verify(L, vo);
        all_pass = all_pass && rep.overall;
        json basis = json::array();
        for (const auto& row : L.B().rows) basis.push_back(exps_json(row));
        results.push_back(
            json{{"seed", seed}, {"basis", basis}, {"overall", rep.overall}});
        err << "fuzz seed " << seed << ": " << (rep.overall ? "pass" : "FAIL")
            << " (n=" << L.n() << ")\n";
        if (!rep.overall) err << dump(report_json(rep)) << "\n";
      }
      write_output(dump(json{{"lattices", results}, {"overall", all_pass}}), output,
                   out);
      return all_pass ? kExitOk : kExitVerifyFailed;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const RankDeficient& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace thilb::cli
