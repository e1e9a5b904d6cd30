#include <splinedict/cli.hpp>
#include <splinedict/signals.hpp>

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace splinedict;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "splinedict_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

long count_lines(const std::string& text) {
  return std::count(text.begin(), text.end(), '\n');
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("basis writes csv and svg panels") {
    const auto dir = fresh_dir("basis");
    const int rc = run_cli({"basis", "--m", "2", "--interval", "0", "1", "--b", "0.25",
                            "--grid-q", "4", "--out", dir.string()});
    CHECK(rc == 0);
    const std::string csv = slurp(dir / "basis.csv");
    CHECK(csv.rfind("x,atom_0,atom_1,atom_2,atom_3,atom_4\n", 0) == 0);
    CHECK(count_lines(csv) == 18);  // header + 17 grid rows at q=4
    const std::string svg = slurp(dir / "basis.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find('\r') == std::string::npos);
  }

  TEST_CASE("exit codes: parse errors and bad geometry") {
    const auto dir = fresh_dir("errors");
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({}) == 2);                                  // a subcommand is required
    CHECK(run_cli({"basis", "--nonsense"}) == 2);             // unknown flag
    CHECK(run_cli({"basis", "--kind", "banana"}) == 2);       // restricted choice
    CHECK(run_cli({"basis", "--b", "0.3", "--out", dir.string()}) == 2);  // step misfit
    CHECK(run_cli({"reproduce", "nothing"}) == 2);            // unknown preset
    CHECK(run_cli({"approx", "--out", dir.string()}) == 2);   // no signal source
  }

  TEST_CASE("certify writes a passing report") {
    const auto dir = fresh_dir("certify");
    const int rc = run_cli({"certify", "--m", "2", "--interval", "0", "1", "--b", "0.25",
                            "--bprime", "0.125", "--out", dir.string()});
    CHECK(rc == 0);
    const std::string report = slurp(dir / "certify_report.txt");
    CHECK(report.find("pass: true") != std::string::npos);
    CHECK(report.find("rank: 9") != std::string::npos);
  }

  TEST_CASE("frame bounds succeed on a sound grid and fail on a starved one") {
    const auto good = fresh_dir("frame_good");
    CHECK(run_cli({"frame", "--m", "1", "--interval", "0", "1", "--b", "0.25", "--out",
                   good.string()}) == 0);
    const std::string ok = slurp(good / "frame.txt");
    CHECK(ok.find("A: ") != std::string::npos);
    CHECK(ok.find("B: ") != std::string::npos);

    const auto bad = fresh_dir("frame_bad");
    CHECK(run_cli({"frame", "--m", "3", "--interval", "0", "1", "--b", "0.25", "--grid-q",
                   "1", "--out", bad.string()}) == 1);
    CHECK(slurp(bad / "frame.txt").find("error: ") != std::string::npos);
  }

  TEST_CASE("approx emits results, reconstruction, and plot deterministically") {
    const std::vector<std::string> common{
        "approx",  "--preset", "blocky", "--seed",     "5",  "--n-blocks", "6",
        "--m",     "1",        "--b",    "0.25",       "--bprime", "0.03125",
        "--grid-q", "8",       "--interval", "0", "1"};
    const auto dir1 = fresh_dir("approx1");
    const auto dir2 = fresh_dir("approx2");
    for (const auto& dir : {dir1, dir2}) {
      auto args = common;
      args.insert(args.end(), {"--out", dir.string()});
      CHECK(run_cli(args) == 0);
    }
    const std::string results = slurp(dir1 / "approx_results.csv");
    CHECK(results.rfind("representation,n_functions_available,M_used,relerr\n", 0) == 0);
    CHECK(results.find("\nbasis,32,") != std::string::npos);
    CHECK(results.find("\ndictionary,39,") != std::string::npos);
    CHECK(results == slurp(dir2 / "approx_results.csv"));
    CHECK(slurp(dir1 / "approx_reconstruction.csv") ==
          slurp(dir2 / "approx_reconstruction.csv"));
    CHECK(slurp(dir1 / "approx.svg") == slurp(dir2 / "approx.svg"));
    const std::string rec = slurp(dir1 / "approx_reconstruction.csv");
    CHECK(rec.rfind("t,signal,dictionary_reconstruction,basis_reconstruction\n", 0) == 0);
  }

  TEST_CASE("approx accepts a signal file on the matching grid") {
    const auto dir = fresh_dir("approx_file");
    const auto csv = dir / "input.csv";
    write_signal_csv(csv.string(), gen_blocky(3, 4, 0.0, 1.0, 1.0 / 32, 1.0 / 256));
    const int rc = run_cli({"approx", "--signal", csv.string(), "--m", "1", "--b", "0.25",
                            "--bprime", "0.03125", "--interval", "0", "1", "--out",
                            dir.string()});
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "approx_results.csv"));

    // a signal on a different interval is rejected
    const auto shifted = dir / "shifted.csv";
    write_signal_csv(shifted.string(), gen_blocky(3, 4, 1.0, 2.0, 1.0 / 32, 1.0 / 256));
    CHECK(run_cli({"approx", "--signal", shifted.string(), "--m", "1", "--b", "0.25",
                   "--bprime", "0.03125", "--interval", "0", "1", "--out",
                   dir.string()}) == 2);
  }

  TEST_CASE("an unreachable target stalls the redundant side and signals it") {
    // a chirp is not piecewise constant, so no target below the projection
    // error is reachable; the redundant side runs out of independent atoms
    const auto dir = fresh_dir("stagnate");
    const int rc = run_cli({"approx", "--preset", "chirp", "--m", "1", "--b", "0.25",
                            "--bprime", "0.125", "--grid-q", "8", "--interval", "0", "1",
                            "--target-relerr", "1e-12", "--out", dir.string()});
    CHECK(rc == 3);
    // partial outputs are still produced
    const std::string results = slurp(dir / "approx_results.csv");
    CHECK(count_lines(results) == 3);
  }

  TEST_CASE("figure panels") {
    const auto dir = fresh_dir("figure1");
    CHECK(run_cli({"reproduce", "figure1", "--out", dir.string()}) == 0);
    for (const char* stem :
         {"figure1_m1_basis", "figure1_m1_dict", "figure1_m4_esep_basis",
          "figure1_m4_esep_dict", "figure1_m4_epkb_basis", "figure1_m4_epkb_dict"}) {
      CAPTURE(stem);
      CHECK(fs::exists(dir / (std::string(stem) + ".csv")));
      CHECK(fs::exists(dir / (std::string(stem) + ".svg")));
    }
  }

  TEST_CASE("options can come from a config file") {
    const auto dir = fresh_dir("config");
    const auto cfg = dir / "run.ini";
    {
      std::ofstream out(cfg);
      out << "[basis]\n"
          << "m=3\n"
          << "b=0.25\n"
          << "out=" << dir.string() << "\n";
    }
    CHECK(run_cli({"--config", cfg.string(), "basis"}) == 0);
    const std::string csv = slurp(dir / "basis.csv");
    // order 3 with b=1/4 on the default [0, 1] yields six atoms
    CHECK(csv.rfind("x,atom_0,atom_1,atom_2,atom_3,atom_4,atom_5\n", 0) == 0);
  }
}
