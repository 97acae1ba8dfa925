#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tfbjn/grid_io.hpp"
#include "tfbjn/presets.hpp"
#include "tfbjn/signal.hpp"
#include "tfbjn/cohen.hpp"
#include "tfbjn/wigner.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("TFBJN_CLI");
  REQUIRE_MESSAGE(p != nullptr, "TFBJN_CLI must point at the tfbjn binary");
  return p;
}

int run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path tmp(const char* name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("grid CSV round-trip is bit-exact") {
  tfbjn::Signal s = tfbjn::make_preset("two-chirps", 128, 32.0);
  tfbjn::TFDist d = tfbjn::wigner(s);
  auto p = tmp("tfbjn_grid_roundtrip.csv");
  tfbjn::save_grid_csv(d.grid, p);
  tfbjn::Grid2D back = tfbjn::load_grid_csv(p);
  CHECK(back.values() == d.grid.values());
  CHECK(back.axis1().start == d.grid.axis1().start);
  CHECK(back.axis1().step == d.grid.axis1().step);
  CHECK(back.axis2().unit == d.grid.axis2().unit);
  fs::remove(p);
}

TEST_CASE("gen + transform produce files; csv output re-imports bit-exactly") {
  auto sig = tmp("tfbjn_cli_sig.csv");
  auto grid = tmp("tfbjn_cli_grid.csv");
  REQUIRE(run_cli("gen --preset two-chirps --n 128 --out " + sig.string()) == 0);

  tfbjn::Signal loaded = tfbjn::load_signal_csv(sig);
  CHECK(loaded.size() == 128);
  CHECK(loaded.samples == tfbjn::make_preset("two-chirps", 128, 32.0).samples);

  REQUIRE(run_cli("transform --in " + sig.string() + " --kind bjd --n 2 --out " + grid.string()) ==
          0);
  tfbjn::Grid2D g = tfbjn::load_grid_csv(grid);
  tfbjn::TFDist ref = tfbjn::bjd(loaded, 2);
  CHECK(g.values() == ref.grid.values());
  fs::remove(sig);
  fs::remove(grid);
}

TEST_CASE("pgm output carries the sidecar with the value mapping") {
  auto sig = tmp("tfbjn_cli_sig2.csv");
  auto img = tmp("tfbjn_cli_img.pgm");
  REQUIRE(run_cli("gen --preset two-gaussians --n 128 --out " + sig.string()) == 0);
  REQUIRE(run_cli("transform --in " + sig.string() + " --kind wigner --format pgm --out " +
                  img.string() + " --box -2,2,-2,2") == 0);
  std::string pgm = slurp(img);
  CHECK(pgm.substr(0, 2) == "P5");
  auto meta = nlohmann::json::parse(slurp(img.string() + ".json"));
  CHECK(meta["rows"] == 128);
  CHECK(meta["min"].get<double>() < meta["max"].get<double>());
  CHECK(meta.contains("box_energy"));
  fs::remove(sig);
  fs::remove(img);
  fs::remove(img.string() + ".json");
}

TEST_CASE("metrics report rows are ordered by (n, metric)") {
  auto sig = tmp("tfbjn_cli_sig3.csv");
  auto rep = tmp("tfbjn_cli_rep.json");
  REQUIRE(run_cli("gen --preset two-gaussians --n 128 --out " + sig.string()) == 0);
  REQUIRE(run_cli("metrics --in " + sig.string() + " --n-list 2,0,1 --report " + rep.string() +
                  " --box -2,2,-2,2") == 0);
  auto rows = nlohmann::json::parse(slurp(rep));
  REQUIRE(rows.is_array());
  int last_n = -1;
  std::string last_metric;
  for (auto& r : rows) {
    int n = r["n"].get<int>();
    std::string metric = r["metric"].get<std::string>();
    if (n == last_n) CHECK(metric > last_metric);
    else CHECK(n > last_n);
    last_n = n;
    last_metric = metric;
    CHECK(r["signal_id"] == sig.stem().string());
  }
  // the cross-term energies must decrease over 0,1,2
  std::vector<double> ct;
  for (auto& r : rows)
    if (r["metric"] == "cross_term_energy") ct.push_back(r["value"].get<double>());
  REQUIRE(ct.size() == 3);
  CHECK(ct[0] > ct[1]);
  CHECK(ct[1] > ct[2]);
  // n = 0 Moyal defect is reported and tiny
  for (auto& r : rows)
    if (r["metric"] == "moyal_defect" && r["n"] == 0) CHECK(r["value"].get<double>() < 1e-6);
  fs::remove(sig);
  fs::remove(rep);
}

TEST_CASE("quantize export matches the library JSON") {
  auto out = tmp("tfbjn_cli_q.json");
  REQUIRE(run_cli("quantize --m 2 --l 2 --n 2 --out " + out.string()) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["coeffs"].size() == 3);
  CHECK(j["coeffs"][2]["re_num"] == "-5");
  CHECK(j["coeffs"][2]["re_den"] == "24");
  CHECK(j["coeffs"][2]["pi_power"] == -2);
  fs::remove(out);
}

TEST_CASE("exit codes: usage 2, I/O 3") {
  CHECK(run_cli("gen --preset nonsense --out /tmp/x.csv") == 2);
  CHECK(run_cli("gen --badflag") == 2);
  CHECK(run_cli("transform --in /tmp/tfbjn_no_such_file.csv --out /tmp/x.csv") == 3);
  CHECK(run_cli("quantize --m -1 --l 0 --n 0 --out /tmp/x.json") == 2);
  // malformed input row -> format error -> 3
  auto bad = tmp("tfbjn_cli_bad.csv");
  {
    std::ofstream f(bad);
    f << "# sample_rate=8 t0=0\n0,1,0\na,b\n";
  }
  CHECK(run_cli("transform --in " + bad.string() + " --out /tmp/x.csv") == 3);
  fs::remove(bad);
}

TEST_CASE("options can come from a key=value config file") {
  auto conf = tmp("tfbjn_cli_conf.ini");
  auto sig = tmp("tfbjn_cli_conf_sig.csv");
  {
    std::ofstream f(conf);
    f << "[gen]\n";
    f << "preset=two-chirps\n";
    f << "n=128\n";
    f << "out=" << sig.string() << "\n";
  }
  REQUIRE(run_cli("--config " + conf.string() + " gen") == 0);
  CHECK(tfbjn::load_signal_csv(sig).size() == 128);
  fs::remove(conf);
  fs::remove(sig);
}

TEST_CASE("analytic flag suppresses negative frequencies") {
  auto sig = tmp("tfbjn_cli_real.csv");
  tfbjn::Signal s = tfbjn::make_preset("two-chirps", 128, 32.0);
  for (auto& v : s.samples) v = v.real();
  tfbjn::save_signal_csv(s, sig);
  auto meta = tmp("tfbjn_cli_meta.json");
  REQUIRE(run_cli("transform --in " + sig.string() + " --analytic --format json-meta --out " +
                  meta.string()) == 0);
  auto j = nlohmann::json::parse(slurp(meta));
  CHECK(j["kind"] == "wigner");
  CHECK(j["rows"] == 128);
  fs::remove(sig);
  fs::remove(meta);
}
