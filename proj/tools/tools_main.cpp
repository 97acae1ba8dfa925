// tfbjn: generate test signals, compute Wigner / Born-Jordan distributions,
// run the verification metrics and export exact ordering coefficients.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfbjn/cohen.hpp"
#include "tfbjn/errors.hpp"
#include "tfbjn/grid_io.hpp"
#include "tfbjn/metrics.hpp"
#include "tfbjn/presets.hpp"
#include "tfbjn/quantize.hpp"
#include "tfbjn/signal.hpp"
#include "tfbjn/wigner.hpp"

namespace {

using nlohmann::ordered_json;

struct BoxOpt {
  bool set = false;
  tfbjn::TFBox box;
};

void add_box_option(CLI::App* cmd, BoxOpt& out) {
  cmd->add_option_function<std::vector<double>>(
         "--box",
         [&out](const std::vector<double>& v) {
           out.set = true;
           out.box = {v[0], v[1], v[2], v[3]};
         },
         "time-frequency box t_lo,t_hi,f_lo,f_hi")
      ->expected(4)
      ->delimiter(',');
}

ordered_json axis_json(const tfbjn::Axis& a) {
  return ordered_json{{"start", a.start}, {"step", a.step}, {"unit", a.unit}};
}

void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot open for writing: " + p.string());
  f << s;
  if (!f) throw std::runtime_error("write failed: " + p.string());
}

int run(int argc, char** argv) {
  CLI::App app{"generalized Born-Jordan time-frequency distributions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file with key=value lines");

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "write a preset signal as CSV");
  std::string gen_preset, gen_out;
  std::size_t gen_n = 512;
  double gen_fs = 32.0;
  gen->add_option("--preset", gen_preset,
                  "one of: zero, four-gaussians, two-gaussians, two-chirps, bat-surrogate")
      ->required();
  gen->add_option("--n", gen_n, "sample count (power of two)");
  gen->add_option("--fs", gen_fs, "sample rate in Hz");
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // --- transform ---
  auto* tr = app.add_subcommand("transform", "compute a distribution of a signal CSV");
  std::string tr_in, tr_kind = "wigner", tr_out, tr_format = "csv";
  int tr_n = 0;
  bool tr_analytic = false;
  BoxOpt tr_box;
  tr->add_option("--in", tr_in, "input signal CSV")->required();
  tr->add_option("--kind", tr_kind, "wigner | bjd")->check(CLI::IsMember({"wigner", "bjd"}));
  tr->add_option("--n", tr_n, "distribution order (bjd)");
  tr->add_option("--out", tr_out, "output path")->required();
  tr->add_option("--format", tr_format, "csv | pgm | json-meta")
      ->check(CLI::IsMember({"csv", "pgm", "json-meta"}));
  tr->add_flag("--analytic", tr_analytic, "one-sided-spectrum preprocessing");
  add_box_option(tr, tr_box);

  // --- metrics ---
  auto* me = app.add_subcommand("metrics", "run the metric sweep over a list of orders");
  std::string me_in, me_report;
  std::vector<int> me_ns;
  bool me_analytic = false;
  BoxOpt me_box;
  me->add_option("--in", me_in, "input signal CSV")->required();
  me->add_option("--n-list", me_ns, "orders, e.g. 0,1,2")->required()->delimiter(',');
  me->add_option("--report", me_report, "output JSON report path")->required();
  me->add_flag("--analytic", me_analytic, "one-sided-spectrum preprocessing");
  add_box_option(me, me_box);

  // --- quantize ---
  auto* qu = app.add_subcommand("quantize", "export exact monomial ordering coefficients");
  int qu_m = 0, qu_l = 0, qu_n = 0;
  std::string qu_out;
  qu->add_option("--m", qu_m, "omega power")->required();
  qu->add_option("--l", qu_l, "x power")->required();
  qu->add_option("--n", qu_n, "quantization order")->required();
  qu->add_option("--out", qu_out, "output JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (gen->parsed()) {
    tfbjn::Signal s = tfbjn::make_preset(gen_preset, gen_n, gen_fs);
    tfbjn::save_signal_csv(s, gen_out);
    return 0;
  }

  if (tr->parsed()) {
    tfbjn::Signal s = tfbjn::load_signal_csv(tr_in);
    if (tr_analytic) s = tfbjn::analytic_signal(s);
    tfbjn::TFDist d = (tr_kind == "wigner") ? tfbjn::wigner(s) : tfbjn::bjd(s, tr_n);
    d.source = std::filesystem::path(tr_in).stem().string();

    auto [lo, hi] = tfbjn::real_range(d.grid);
    ordered_json meta;
    meta["source"] = d.source;
    meta["kind"] = tr_kind;
    meta["order"] = (tr_kind == "bjd") ? tr_n : 0;
    meta["rows"] = d.grid.rows();
    meta["cols"] = d.grid.cols();
    meta["axis1"] = axis_json(d.grid.axis1());
    meta["axis2"] = axis_json(d.grid.axis2());
    meta["min"] = lo;
    meta["max"] = hi;
    if (tr_box.set) meta["box_energy"] = tfbjn::cross_term_energy(d, tr_box.box);

    std::filesystem::path out(tr_out);
    if (tr_format == "csv") {
      tfbjn::save_grid_csv(d.grid, out);
    } else if (tr_format == "pgm") {
      tfbjn::save_grid_pgm16(d.grid, out);
      write_text(out.string() + ".json", meta.dump(2) + "\n");
    } else {  // json-meta
      write_text(out, meta.dump(2) + "\n");
    }
    return 0;
  }

  if (me->parsed()) {
    tfbjn::Signal s = tfbjn::load_signal_csv(me_in);
    if (me_analytic) s = tfbjn::analytic_signal(s);
    std::string id = std::filesystem::path(me_in).stem().string();

    ordered_json rows = ordered_json::array();
    std::vector<int> ns = me_ns;
    std::sort(ns.begin(), ns.end());
    for (int n : ns) {
      tfbjn::TFDist d = tfbjn::bjd(s, n);
      tfbjn::TFBox box;
      if (me_box.set)
        box = me_box.box;
      else  // default: the whole grid
        box = {d.grid.axis1().value(0), d.grid.axis1().value(d.grid.rows() - 1),
               d.grid.axis2().value(0), d.grid.axis2().value(d.grid.cols() - 1)};
      tfbjn::MarginalError merr = tfbjn::marginal_error(d, s);
      // rows ordered by (n, metric name)
      auto row = [&](const char* metric, double value) {
        rows.push_back(
            ordered_json{{"signal_id", id}, {"n", n}, {"metric", metric}, {"value", value}});
      };
      row("concentration", tfbjn::concentration(d));
      row("cross_term_energy", tfbjn::cross_term_energy(d, box));
      row("marginal_freq_l1", merr.freq_l1_rel);
      row("marginal_time_l1", merr.time_l1_rel);
      row("moyal_defect", tfbjn::moyal_defect(s, s, n));
    }
    write_text(me_report, rows.dump(2) + "\n");
    return 0;
  }

  if (qu->parsed()) {
    tfbjn::CoeffTable t = tfbjn::monomial_coeffs(qu_m, qu_l, qu_n);
    write_text(qu_out, tfbjn::coeff_table_to_json(t));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tfbjn::NumericGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
