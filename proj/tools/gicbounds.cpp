// gicbounds: bounds for the two-user Gaussian interference channel.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gic/commands.hpp"

namespace {

struct Flags {
  std::string format = "csv";
  std::string out;
  std::optional<int> grid;
  std::optional<int> refine;
  int threads = 1;
  std::vector<double> p_db;

  std::optional<double> p, p1, p2, a, a12, a21, alpha;
  double eps = 0.0;
  std::vector<double> a_list;
  std::vector<double> probe;
  std::string figure;
  int a_steps = 200;
  int scan_points = 400;
};

double single_power(const Flags& f) {
  if (f.p && !f.p_db.empty()) throw gic::DomainError("give either --p or --p-db, not both");
  if (!f.p_db.empty()) {
    if (f.p_db.size() != 1) throw gic::DomainError("--p-db takes a single value for this command");
    return gic::db_to_linear(f.p_db.front());
  }
  if (f.p) return *f.p;
  throw gic::DomainError("missing power: use --p or --p-db");
}

gic::ChannelParams channel(const Flags& f) {
  const bool sym = f.p || !f.p_db.empty();
  if (sym && (f.p1 || f.p2)) throw gic::DomainError("mix of --p/--p-db and --p1/--p2");
  if (f.a && (f.a12 || f.a21)) throw gic::DomainError("mix of --a and --a12/--a21");
  double p1 = 0, p2 = 0;
  if (sym) {
    p1 = p2 = single_power(f);
  } else {
    if (!f.p1 || !f.p2) throw gic::DomainError("missing power: use --p, --p-db or --p1 with --p2");
    p1 = *f.p1;
    p2 = *f.p2;
  }
  double a12 = 0, a21 = 0;
  if (f.a) {
    a12 = a21 = *f.a;
  } else {
    if (!f.a12 || !f.a21) throw gic::DomainError("missing gain: use --a or --a12 with --a21");
    a12 = *f.a12;
    a21 = *f.a21;
  }
  return {p1, p2, a12, a21};
}

void add_channel_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--p", f.p, "common power (linear)");
  sub->add_option("--p1", f.p1, "power of user 1 (linear)");
  sub->add_option("--p2", f.p2, "power of user 2 (linear)");
  sub->add_option("--a", f.a, "common cross gain");
  sub->add_option("--a12", f.a12, "cross gain into receiver 1");
  sub->add_option("--a21", f.a21, "cross gain into receiver 2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds for the two-user Gaussian interference channel"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", f.out, "output file (default: stdout)");
  app.add_option("--grid", f.grid, "optimizer points per axis (odd)");
  app.add_option("--refine", f.refine, "optimizer refinement rounds");
  app.add_option("--threads", f.threads, "optimizer evaluation threads");
  app.add_option("--p-db", f.p_db, "power in dB (list for table1)")->delimiter(',');

  auto* classify = app.add_subcommand("classify", "regime of a channel");
  add_channel_flags(classify, f);

  auto* corners = app.add_subcommand("corners", "corner-point bounds");
  add_channel_flags(corners, f);
  corners->add_option("--eps", f.eps, "rate slack epsilon (>= 0)");

  auto* delta = app.add_subcommand("delta", "bounds on the excess rate Delta");
  add_channel_flags(delta, f);

  auto* sumrate = app.add_subcommand("sumrate", "sum-rate bounds");
  add_channel_flags(sumrate, f);
  sumrate->add_option("--a-list", f.a_list, "sweep of symmetric gains")->delimiter(',');

  auto* asym = app.add_subcommand("asymptotics", "GDOF and delta slope");
  asym->add_option("--alpha", f.alpha, "interference level alpha >= 0")->required();
  asym->add_option("--probe", f.probe, "powers for the convergence probe")->delimiter(',');

  auto* table1 = app.add_subcommand("table1", "minimum and maximum of the improved upper Delta bound");
  table1->add_option("--scan", f.scan_points, "log-spaced scan points in a");

  auto* figure = app.add_subcommand("figure", "figure data");
  figure->add_option("which", f.figure, "fig1..fig5")->required()->check(
      CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5"}));
  figure->add_option("--p", f.p, "power (linear)");
  figure->add_option("--a", f.a, "cross gain (fig2)");
  figure->add_option("--a-steps", f.a_steps, "a grid size for fig4/fig5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const auto grids = gic::make_grids(f.grid, f.refine, f.threads);
    std::vector<gic::ReportRow> rows;
    if (classify->parsed()) {
      rows = gic::cmd_classify(channel(f));
    } else if (corners->parsed()) {
      rows = gic::cmd_corners(channel(f), f.eps);
    } else if (delta->parsed()) {
      rows = gic::cmd_delta(channel(f), grids);
    } else if (sumrate->parsed()) {
      if (!f.a_list.empty()) {
        rows = gic::cmd_sumrate(single_power(f), f.a_list, grids);
      } else {
        const auto ch = channel(f);
        if (ch.is_symmetric()) {
          const std::vector<double> one{ch.a12()};
          rows = gic::cmd_sumrate(ch.p1(), one, grids);
        } else {
          rows = gic::cmd_sumrate_general(ch);
        }
      }
    } else if (asym->parsed()) {
      rows = f.probe.empty() ? gic::cmd_asymptotics(*f.alpha) : gic::cmd_convergence(*f.alpha, f.probe);
    } else if (table1->parsed()) {
      gic::Table1Options opt;
      opt.scan_points = f.scan_points;
      opt.etkin = grids.etkin;
      const std::vector<double> dflt{27.0, 40.0, 60.0};
      rows = gic::cmd_table1(f.p_db.empty() ? dflt : f.p_db, opt);
    } else if (figure->parsed()) {
      gic::FigureOptions opt;
      if (!f.p_db.empty() || f.p) opt.p = single_power(f);
      opt.a = f.a;
      opt.a_steps = f.a_steps;
      opt.grids = grids;
      rows = gic::cmd_figure(*gic::parse_figure(f.figure), opt);
    }

    const auto text = gic::render(rows, *gic::parse_format(f.format));
    if (f.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(f.out, std::ios::binary);
      if (!os || !(os << text)) {
        std::cerr << "gicbounds: cannot write " << f.out << "\n";
        return 1;
      }
    }
    return 0;
  } catch (const gic::DomainError& e) {
    std::cerr << "gicbounds: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gicbounds: internal error: " << e.what() << "\n";
    return 1;
  }
}
