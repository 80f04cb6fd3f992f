// Command-line front end: decides, constructs, counts and cross-verifies
// LP- and Holt-Klee orientations of cubes and crosspolytopes.
//
// Exit codes: 0 = property holds / task completed, 1 = property fails (a
// certificate is printed on stdout), 2 = usage or format error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lporient/bounds.hpp"
#include "lporient/cube_family.hpp"
#include "lporient/holt_klee.hpp"
#include "lporient/io.hpp"
#include "lporient/pairseq.hpp"
#include "lporient/parallel.hpp"
#include "lporient/realize.hpp"
#include "lporient/shelling.hpp"

using namespace lporient;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Orientation read_orientation(const std::string& path) {
  if (path == "-") return parse_orientation(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_orientation(in);
}

Realization read_realization(const std::string& path) {
  if (path == "-") return parse_realization(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_realization(in);
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open '" + out_path + "' for writing");
  out << text;
}

std::string fraction_str(const Rational& q) {
  std::ostringstream s;
  s << numerator(q) << "/" << denominator(q);
  return s.str();
}

std::string transversal_name(int d, std::uint32_t mask) {
  std::string s = "{";
  for (int i = 0; i < d; ++i) {
    if (i) s += ",";
    s += ((mask >> i) & 1 ? "-" : "+") + std::to_string(i + 1);
  }
  return s + "}";
}

int resolve_thread_default() {
  if (const char* env = std::getenv("LPORIENT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

int run_check_hk(const std::string& file) {
  Orientation o = read_orientation(file);
  HKVerdict v = is_holt_klee(o);
  std::cout << describe(o, v) << "\n";
  return v.passed ? kExitPass : kExitFail;
}

int run_family(int n, const std::string& bits, bool sweep, int threads) {
  BigInt width_big = family_size_log2(n);
  if (!sweep) {
    if (BigInt(bits.size()) != width_big)
      throw std::invalid_argument("--bits needs exactly " + width_big.str() +
                                  " characters for n=" + std::to_string(n));
    FamilyAssignment a{n, {}};
    for (char c : bits) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("--bits must be a 0/1 string");
      a.free_bits.push_back(c - '0');
    }
    std::cout << orientation_text(build_family_orientation(a));
    return kExitPass;
  }
  if (width_big > 24)
    throw std::invalid_argument("sweep of 2^" + width_big.str() +
                                " assignments is not tractable");
  int width = width_big.convert_to<int>();
  std::uint64_t total = std::uint64_t{1} << width;
  auto counts = parallel_blocks<long long>(
      total, threads, [&](std::size_t begin, std::size_t end, int) {
        long long pass = 0;
        for (std::size_t bits_value = begin; bits_value < end; ++bits_value) {
          FamilyAssignment a{n, std::vector<std::uint8_t>(width)};
          for (int i = 0; i < width; ++i) a.free_bits[i] = (bits_value >> i) & 1;
          if (is_holt_klee(build_family_orientation(a)).passed) ++pass;
        }
        return pass;
      });
  long long pass = 0;
  for (long long c : counts) pass += c;
  std::cout << pass << "/" << total << "\n";
  return pass == static_cast<long long>(total) ? kExitPass : kExitFail;
}

int run_pairseq_encode(const std::string& file) {
  Orientation o = read_orientation(file);
  try {
    std::cout << encode(o).str() << "\n";
    return kExitPass;
  } catch (const CyclicOrientationError& e) {
    std::cout << "cycle=";
    for (VertexId v : e.cycle.vertices)
      std::cout << vertex_name(o.kind(), o.dim(), v) << "->";
    std::cout << vertex_name(o.kind(), o.dim(), e.cycle.vertices.front())
              << "\n";
    return kExitFail;
  }
}

int run_pairseq_good(const std::string& seq) {
  PairSequence s = PairSequence::parse(seq);
  GoodnessVerdict v = is_good(s);
  if (v.good) {
    std::cout << "good=true\n";
    return kExitPass;
  }
  std::string prefix;
  for (int i = 0; i < *v.break_k; ++i) {
    auto [a, b] = s.pairs()[i];
    prefix += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  std::cout << "good=false break_k=" << *v.break_k << " prefix=" << prefix
            << "\n";
  return kExitFail;
}

int run_pairseq_census(int d, bool fibers, int threads) {
  CensusResult c = count_lp_orientations_bruteforce(d, threads);
  std::cout << "acyclic=" << c.acyclic << " holt_klee=" << c.holt_klee
            << " lp=" << c.lp
            << " fraction=" << fraction_str(c.hk_minus_lp_fraction) << "\n";
  if (fibers)
    for (const auto& [seq, count] : c.fibers)
      std::cout << "fiber " << seq.str() << "=" << count << "\n";
  return kExitPass;
}

int run_realize(const std::string& seq, const std::string& out_path) {
  PairSequence s = PairSequence::parse(seq);
  try {
    Realization rz = realize(s);
    write_text(out_path, realization_text(rz));
    std::cerr << "stats: d=" << rz.d
              << " max_denom_bits=" << max_denominator_bits(rz) << "\n";
    return kExitPass;
  } catch (const BadSequenceError& e) {
    std::cout << "BadSequence break_k=" << e.break_k << "\n";
    return kExitFail;
  }
}

int run_verify(const std::string& file, bool table) {
  Realization rz = read_realization(file);
  FacetTable t = verify_crosspolytope(rz);
  if (!t.valid) {
    std::cout << "VERIFY: FAIL";
    if (t.offending_mask)
      std::cout << " transversal=" << transversal_name(rz.d, *t.offending_mask);
    std::cout << " reason=\"" << t.reason << "\"\n";
    return kExitFail;
  }
  std::cout << "VERIFY: PASS facets=" << t.entries.size() << "\n";
  if (table)
    for (const auto& e : t.entries)
      std::cout << "facet " << transversal_name(rz.d, e.mask)
                << " side=" << (e.side > 0 ? "+" : "-") << "\n";
  return kExitPass;
}

int run_shelling_check(const std::string& order) {
  FacetOrdering fo = parse_facet_ordering(order);
  GoodnessVerdict v = shelling_verdict(fo);
  if (v.good) {
    std::cout << "SHELLING: PASS\n";
    return kExitPass;
  }
  std::cout << "SHELLING: FAIL break_k=" << *v.break_k << "\n";
  return kExitFail;
}

int run_shelling_census(int n, int threads) {
  ShellingCensus c = shelling_census(n, threads);
  std::cout << "total=" << c.total << " shellings=" << c.shellings << "\n";
  return kExitPass;
}

int run_shelling_witness(const std::string& order, const std::string& out_path) {
  FacetOrdering fo = parse_facet_ordering(order);
  try {
    Realization rz = line_shelling_witness(fo);
    write_text(out_path, realization_text(rz));
    return kExitPass;
  } catch (const NotAShellingError& e) {
    std::cout << "NotAShelling break_k=" << e.break_k << "\n";
    return kExitFail;
  }
}

int run_bounds(const std::string& c_text, int scan, bool find_crossover) {
  Rational c = parse_rational(c_text);
  if (c <= 0) throw std::invalid_argument("--c must be positive");
  std::cout << std::fixed << std::setprecision(3);
  for (int n = 1; n <= scan; ++n) {
    BoundReport r = bound_report(n, c);
    HighFloat gap = HighFloat(r.lower_log2) - r.upper_log2;
    std::cout << "n=" << n << " lower_log2=" << r.lower_log2
              << " upper_log2=" << r.upper_log2 << " gap=" << gap << "\n";
  }
  if (find_crossover) {
    BoundReport r = crossover(c);
    std::cout << "crossover n=" << r.n << " lower_log2=" << r.lower_log2
              << " upper_log2=" << r.upper_log2 << " c=" << c_text << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "LP-orientations and Holt-Klee orientations of cubes and "
      "crosspolytopes"};
  app.require_subcommand(1);
  int threads = resolve_thread_default();
  app.add_option("--threads", threads, "worker threads for censuses/sweeps")
      ->check(CLI::PositiveNumber);

  std::string hk_file;
  auto* check_hk = app.add_subcommand("check-hk", "Holt-Klee decision");
  check_hk->add_option("file", hk_file, "orientation file ('-' = stdin)")
      ->required();

  int family_n = 0;
  std::string family_bits;
  bool family_sweep = false;
  auto* family = app.add_subcommand("family", "Holt-Klee cube family");
  family->add_option("--n", family_n, "cube dimension")->required();
  auto* bits_opt = family->add_option("--bits", family_bits, "free edge bits");
  auto* sweep_opt =
      family->add_flag("--sweep", family_sweep, "check every assignment");
  bits_opt->excludes(sweep_opt);

  auto* pairseq = app.add_subcommand("pairseq", "pair sequence operations");
  pairseq->require_subcommand(1);
  std::string encode_file;
  auto* ps_encode = pairseq->add_subcommand("encode", "orientation -> sequence");
  ps_encode->add_option("file", encode_file, "orientation file ('-' = stdin)")
      ->required();
  std::string good_seq;
  auto* ps_good = pairseq->add_subcommand("good", "goodness decision");
  ps_good->add_option("sequence", good_seq, "pair sequence")->required();
  int count_d = 0;
  auto* ps_count = pairseq->add_subcommand("count", "number of good sequences");
  ps_count->add_option("d", count_d, "dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  int census_d = 0;
  bool census_fibers = false;
  auto* ps_census = pairseq->add_subcommand("census", "exhaustive census");
  ps_census->add_option("d", census_d, "dimension (<= 5)")->required();
  ps_census->add_flag("--fibers", census_fibers,
                      "orientation counts per sequence");

  std::string realize_seq, realize_out;
  auto* realize_cmd = app.add_subcommand("realize", "realize a good sequence");
  realize_cmd->add_option("sequence", realize_seq, "pair sequence")->required();
  realize_cmd->add_option("--out", realize_out, "output file (default stdout)");

  std::string verify_file;
  bool verify_table = false;
  auto* verify_cmd = app.add_subcommand("verify", "crosspolytope verifier");
  verify_cmd->add_option("file", verify_file, "realization file ('-' = stdin)")
      ->required();
  verify_cmd->add_flag("--table", verify_table, "print the facet table");

  auto* shelling = app.add_subcommand("shelling", "cube facet shellings");
  shelling->require_subcommand(1);
  std::string shell_order;
  auto* sh_check = shelling->add_subcommand("check", "shelling decision");
  sh_check->add_option("ordering", shell_order, "facet ordering")->required();
  int shell_n = 0;
  auto* sh_census = shelling->add_subcommand("census", "scan all orderings");
  sh_census->add_option("n", shell_n, "cube dimension (<= 5)")->required();
  std::string witness_order, witness_out;
  auto* sh_witness =
      shelling->add_subcommand("witness", "line-shelling certificate");
  sh_witness->add_option("ordering", witness_order, "facet ordering")
      ->required();
  sh_witness->add_option("--out", witness_out, "output file (default stdout)");

  std::string bounds_c = "1";
  int bounds_scan = 0;
  bool bounds_crossover = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "counting bound reports");
  bounds_cmd->add_option("--c", bounds_c, "constant instantiating the O(.)")
      ->required();
  bounds_cmd->add_option("--scan", bounds_scan, "table rows for n = 1..N")
      ->required();
  bounds_cmd->add_flag("--crossover", bounds_crossover,
                       "also locate the crossover dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check_hk) return run_check_hk(hk_file);
    if (*family) {
      if (!family_sweep && family_bits.empty())
        throw std::invalid_argument("family needs --bits or --sweep");
      return run_family(family_n, family_bits, family_sweep, threads);
    }
    if (*ps_encode) return run_pairseq_encode(encode_file);
    if (*ps_good) return run_pairseq_good(good_seq);
    if (*ps_count) {
      std::cout << count_good(count_d).str() << "\n";
      return kExitPass;
    }
    if (*ps_census) return run_pairseq_census(census_d, census_fibers, threads);
    if (*realize_cmd) return run_realize(realize_seq, realize_out);
    if (*verify_cmd) return run_verify(verify_file, verify_table);
    if (*sh_check) return run_shelling_check(shell_order);
    if (*sh_census) return run_shelling_census(shell_n, threads);
    if (*sh_witness) return run_shelling_witness(witness_order, witness_out);
    if (*bounds_cmd) return run_bounds(bounds_c, bounds_scan, bounds_crossover);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
