// Drives the installed CLI binary through every subcommand and asserts the
// documented exit codes (0 ok, 1 usage, 2 mathematical violation), output
// files and reproducibility of CSV bodies.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

#define REQUIRE(cond)                                                        \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++g_failures;                                                          \
    }                                                                        \
  } while (0)

int run_cli(const std::string& args) {
  std::string command = std::string(FXLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Body = everything except '#'-prefixed comment lines (the timestamp header).
std::string csv_body(const fs::path& path) {
  std::istringstream lines(read_file(path));
  std::ostringstream body;
  std::string line;
  while (std::getline(lines, line))
    if (line.empty() || line[0] != '#') body << line << '\n';
  return body.str();
}

}  // namespace

int main() {
  const std::string corpus = FXLAB_CORPUS_PATH;
  fs::path work = fs::temp_directory_path() / "fxlab_cli_tests";
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string out = work.string();

  // Usage errors exit 1.
  REQUIRE(run_cli("") == 1);
  REQUIRE(run_cli("unknown_subcommand") == 1);
  REQUIRE(run_cli("run --corpus " + corpus) == 1);                     // missing --map
  REQUIRE(run_cli("run --corpus /no/such.json --map scalar_halving") == 1);
  REQUIRE(run_cli("run --corpus " + corpus + " --map missing_map") == 1);
  REQUIRE(run_cli("certify --help") == 0);

  // certify: contraction certifies (exit 0), identity is refuted (exit 2).
  REQUIRE(run_cli("certify --corpus " + corpus +
                  " --map scalar_halving --a 0.6 --b 0.3 --c 0.3 --out " + out) == 0);
  for (const char* condition :
       {"zamfirescu", "quasi_contractive", "osilike_udomene", "contractive_like"}) {
    fs::path report = work / ("certify_scalar_halving_" + std::string(condition) + ".json");
    REQUIRE(fs::exists(report));
    REQUIRE(read_file(report).find("\"certified\": true") != std::string::npos);
  }
  REQUIRE(run_cli("certify --corpus " + corpus + " --map identity_1d --out " + out) == 2);
  REQUIRE(read_file(work / "certify_identity_1d_zamfirescu.json").find("\"certified\": false") !=
          std::string::npos);

  // certify with explicit ratio and linear gauge on the planar map.
  REQUIRE(run_cli("certify --corpus " + corpus +
                  " --map affine_2d --delta 0.8 --gauge linear:1.0 --L 1.0 --out " + out) == 0);

  // run: trajectory CSV with the timestamp header and documented columns.
  REQUIRE(run_cli("run --corpus " + corpus +
                  " --map scalar_halving --scheme picard --x0 1 --out " + out) == 0);
  fs::path run_csv = work / "run_scalar_halving_picard.csv";
  REQUIRE(fs::exists(run_csv));
  {
    std::string text = read_file(run_csv);
    REQUIRE(text.rfind("# generated: ", 0) == 0);
    REQUIRE(text.find("n,x0,residual,fp_distance") != std::string::npos);
    std::string body = csv_body(run_csv);
    REQUIRE(std::count(body.begin(), body.end(), '\n') == 35);  // header + 34 iterates
  }

  // run accepts named schedules and explicit output files.
  REQUIRE(run_cli("run --corpus " + corpus + " --map affine_2d --scheme sp --alpha const:0.5" +
                  " --beta const:0.5 --beta const:0.25 --x0 0,0 --out " +
                  (work / "sp.csv").string()) == 0);
  REQUIRE(fs::exists(work / "sp.csv"));

  // couple: clean audits exit 0 and write coupled CSV plus audit JSON.
  REQUIRE(run_cli("couple --corpus " + corpus +
                  " --map scalar_halving --scheme new_multistep --k 3 --x0 1 --delta 0.5 --out " +
                  out) == 0);
  REQUIRE(fs::exists(work / "couple_scalar_halving_new_multistep.csv"));
  REQUIRE(fs::exists(work / "audit_scalar_halving_mann_vs_new_multistep_forward.json"));
  REQUIRE(fs::exists(work / "audit_scalar_halving_mann_vs_new_multistep_backward.json"));

  // couple with a corrupted ratio reports violations and exits 2.
  REQUIRE(run_cli("couple --corpus " + corpus +
                  " --map scalar_halving --scheme new_multistep --k 3 --x0 1 --max-iters 50" +
                  " --delta 0.1 --gauge linear:0.2 --out " + out) == 2);

  // couple on a scheme with no covering audit still writes the CSV, exit 0.
  REQUIRE(run_cli("couple --corpus " + corpus +
                  " --map scalar_halving --scheme ishikawa --x0 1 --delta 0.5 --out " + out) == 0);
  REQUIRE(fs::exists(work / "couple_scalar_halving_ishikawa.csv"));

  // suite: PASS on both reference maps, exit 0.
  REQUIRE(run_cli("suite --corpus " + corpus +
                  " --map scalar_halving --x0 1 --delta 0.6 --gauge linear:1.2 --out " + out) == 0);
  REQUIRE(run_cli("suite --corpus " + corpus +
                  " --map affine_2d --x0 0,0 --delta 0.9 --out " + out) == 0);
  fs::path suite_csv_path = work / "suite_affine_2d.csv";
  REQUIRE(fs::exists(suite_csv_path));
  REQUIRE(fs::exists(work / "suite_affine_2d.json"));
  {
    std::string body = csv_body(suite_csv_path);
    REQUIRE(body.rfind("scheme,final_fp_error,gap_tail,iterations,stop_reason\n", 0) == 0);
    REQUIRE(std::count(body.begin(), body.end(), '\n') == 11);  // header + 10 rows
  }

  // suite rerun with the identical configuration: byte-identical CSV body.
  fs::path rerun = work / "rerun";
  fs::create_directories(rerun);
  REQUIRE(run_cli("suite --corpus " + corpus + " --map affine_2d --x0 0,0 --delta 0.9 --out " +
                  rerun.string()) == 0);
  REQUIRE(csv_body(suite_csv_path) == csv_body(rerun / "suite_affine_2d.csv"));
  REQUIRE(read_file(work / "suite_affine_2d.json") ==
          read_file(rerun / "suite_affine_2d.json"));

  // An unconverging configuration (identity map) fails the suite: exit 2.
  REQUIRE(run_cli("suite --corpus " + corpus +
                  " --map flip_involution --x0 0.25 --max-iters 50 --delta 0.5 --out " + out) == 2);

  if (g_failures == 0) std::printf("cli_tests: all checks passed\n");
  return g_failures == 0 ? 0 : 1;
}
