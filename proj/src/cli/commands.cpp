#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <thread>

#include "cgme/cli.hpp"
#include "cgme/dynamics.hpp"
#include "cgme/entanglement.hpp"
#include "cgme/errors.hpp"
#include "cgme/kossakowski.hpp"
#include "csv.hpp"

namespace cgme {

namespace {

CriterionReport eval_criterion(const RunConfig& rc, const SystemConfig& sys,
                               const std::string& name) {
  if (name == "full") return criterion_full(sys, rc.mode, rc.rel_tol);
  if (name == "highT") return criterion_high_t(sys);
  if (name == "equal") return criterion_equal(sys);
  if (name == "smallL") return criterion_small_l(sys);
  if (name == "largeDt") return criterion_large_dt(sys);
  throw config_error("unknown criterion '" + name +
                     "' (expected full | highT | equal | smallL | largeDt)");
}

void print_report(const CriterionReport& r) {
  std::printf("criterion : %s (mode %s)\n", r.criterion_id.c_str(),
              to_string(r.mode).c_str());
  std::printf("lhs       : %.12g\n", r.lhs);
  std::printf("rhs       : %.12g\n", r.rhs);
  std::printf("margin    : %.12g\n", r.margin());
  std::printf("satisfied : %s\n", r.satisfied ? "yes" : "no");
  if (r.criterion_id == "full" || r.criterion_id == "highT" ||
      r.criterion_id == "equal")
    std::printf("rhs parts : dissipative %.12g, hamiltonian %.12g\n", r.diss_part,
                r.ham_part);
  if (!r.note.empty()) std::printf("note      : %s\n", r.note.c_str());
}

struct Axis {
  std::string name;
  double from = 0.0, to = 0.0;
  int points = 0;
};

Axis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw config_error("axis spec '" + spec + "' must be name=from:to:points");
  Axis ax;
  ax.name = spec.substr(0, eq);
  static const std::set<std::string> names = {"beta", "ell", "delta_t", "omega1",
                                              "omega2"};
  if (!names.count(ax.name))
    throw config_error("axis '" + ax.name +
                       "' is not sweepable (beta | ell | delta_t | omega1 | omega2)");
  const std::string rest = spec.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw config_error("axis spec '" + spec + "' must be name=from:to:points");
  try {
    ax.from = std::stod(rest.substr(0, c1));
    ax.to = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
    ax.points = std::stoi(rest.substr(c2 + 1));
  } catch (const std::exception&) {
    throw config_error("axis spec '" + spec + "' has non-numeric fields");
  }
  if (ax.points < 1) throw config_error("axis '" + ax.name + "' needs points >= 1");
  if (ax.from == ax.to && ax.points > 1)
    throw config_error("axis '" + ax.name +
                       "' is degenerate: from == to but points > 1");
  return ax;
}

void apply_axis(SystemConfig& sys, const std::string& name, double value) {
  if (name == "beta") sys.beta = value;
  else if (name == "ell") sys.ell = value;
  else if (name == "delta_t") sys.delta_t = value;
  else if (name == "omega1") sys.omega1 = value;
  else if (name == "omega2") sys.omega2 = value;
}

double axis_value(const Axis& ax, int k) {
  if (ax.points == 1) return ax.from;
  return ax.from + (ax.to - ax.from) * k / (ax.points - 1);
}

int thread_count() {
  if (const char* env = std::getenv("CGME_THREADS"); env && *env) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

}  // namespace

int cmd_kossakowski(const RunConfig& rc, const std::string& out_path) {
  const KossakowskiMatrix k = kossakowski_matrix(rc.system, rc.mode, rc.rel_tol);
  const Eigen::VectorXd ev = k.eigenvalues();
  std::printf("mode        : %s\n", to_string(rc.mode).c_str());
  std::printf("eigenvalues :");
  for (int i = 0; i < 6; ++i) std::printf(" %.12g", ev(i));
  std::printf("\nmin eig     : %.12g\n", ev.minCoeff());
  if (rc.mode == Mode::exact) std::printf("quad error  : %.3g\n", k.quad_error);

  if (!out_path.empty()) {
    csv::Writer w(out_path, {"i", "j", "re", "im"});
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        w.row({static_cast<double>(i), static_cast<double>(j), k.m(i, j).real(),
               k.m(i, j).imag()});
    std::printf("wrote       : %s\n", out_path.c_str());
  }
  return 0;
}

int cmd_evolve(const RunConfig& rc, const std::string& out_path) {
  const GeneratorBundle gen = build_generator(rc.system, rc.mode, rc.rel_tol);
  const Eigen::Matrix4cd rho0 = initial_state_matrix(rc);
  const Trajectory traj = evolve(gen, rho0, rc.t_max, rc.n_points);

  csv::Writer w(out_path,
                {"t", "p00", "p11", "p22", "p33", "trace_dev", "min_eig", "negativity"});
  for (const auto& pt : traj.points) {
    w.row({pt.t, pt.rho(0, 0).real(), pt.rho(1, 1).real(), pt.rho(2, 2).real(),
           pt.rho(3, 3).real(), pt.trace_dev, pt.min_eig, negativity(pt.rho)});
  }
  const auto& last = traj.points.back();
  std::printf("evolved     : %d points to t = %.12g (mode %s)\n",
              static_cast<int>(traj.points.size()), last.t, to_string(rc.mode).c_str());
  std::printf("final diag  : %.6g %.6g %.6g %.6g\n", last.rho(0, 0).real(),
              last.rho(1, 1).real(), last.rho(2, 2).real(), last.rho(3, 3).real());
  std::printf("final neg   : %.12g\n", negativity(last.rho));
  for (const auto& warn : traj.warnings) std::printf("warning     : %s\n", warn.c_str());
  std::printf("wrote       : %s\n", out_path.c_str());
  return 0;
}

int cmd_entangle(const RunConfig& rc, const std::string& criterion,
                 const std::string& out_path) {
  const CriterionReport r = eval_criterion(rc, rc.system, criterion);
  print_report(r);
  if (!out_path.empty()) {
    csv::Writer w(out_path, {"criterion", "lhs", "rhs", "margin", "satisfied",
                             "diss_part", "ham_part"});
    w.cells({r.criterion_id, csv::fmt(r.lhs), csv::fmt(r.rhs), csv::fmt(r.margin()),
             r.satisfied ? "1" : "0", csv::fmt(r.diss_part), csv::fmt(r.ham_part)});
    std::printf("wrote     : %s\n", out_path.c_str());
  }
  return 0;
}

int cmd_sweep(const RunConfig& rc, const std::vector<std::string>& axis_specs,
              const std::string& criterion, const std::string& out_path,
              bool extract_boundary) {
  if (axis_specs.empty() || axis_specs.size() > 2)
    throw config_error("sweep needs one or two --axis specs");
  std::vector<Axis> axes;
  for (const auto& s : axis_specs) axes.push_back(parse_axis(s));
  if (axes.size() == 2 && axes[0].name == axes[1].name)
    throw config_error("sweep axes must be distinct");
  if (extract_boundary && axes.size() != 1)
    throw config_error("--boundary needs exactly one axis");

  const int n1 = axes[0].points;
  const int n2 = axes.size() == 2 ? axes[1].points : 1;
  const int total = n1 * n2;

  struct Row {
    std::vector<double> axis_vals;
    CriterionReport rep;
  };
  std::vector<Row> rows(total);
  std::exception_ptr first_error;
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&] {
    while (true) {
      const int idx = next.fetch_add(1);
      if (idx >= total || failed.load()) break;
      const int k1 = idx / n2, k2 = idx % n2;
      SystemConfig sys = rc.system;
      Row row;
      row.axis_vals.push_back(axis_value(axes[0], k1));
      apply_axis(sys, axes[0].name, row.axis_vals[0]);
      if (axes.size() == 2) {
        row.axis_vals.push_back(axis_value(axes[1], k2));
        apply_axis(sys, axes[1].name, row.axis_vals[1]);
      }
      try {
        row.rep = eval_criterion(rc, sys, criterion);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        break;
      }
      rows[idx] = std::move(row);
    }
  };

  const int nthreads = std::min(thread_count(), total);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);

  std::vector<std::string> header = {axes[0].name};
  if (axes.size() == 2) header.push_back(axes[1].name);
  for (const char* h : {"lhs", "rhs", "margin", "satisfied"}) header.push_back(h);
  csv::Writer w(out_path, header);
  for (const auto& row : rows) {
    std::vector<double> vals = row.axis_vals;
    vals.insert(vals.end(), {row.rep.lhs, row.rep.rhs, row.rep.margin(),
                             row.rep.satisfied ? 1.0 : 0.0});
    w.row(vals);
  }
  std::printf("swept       : %d points (%s), criterion %s\n", total,
              axes.size() == 2 ? "2 axes" : "1 axis", criterion.c_str());
  std::printf("wrote       : %s\n", out_path.c_str());

  if (extract_boundary) {
    const Axis& ax = axes[0];
    std::vector<double> boundaries;
    for (int k = 0; k + 1 < n1; ++k) {
      const double m0 = rows[k].rep.margin();
      const double m1 = rows[k + 1].rep.margin();
      if (!(m0 == 0.0) && !(m1 == 0.0) && ((m0 < 0) != (m1 < 0))) {
        double lo = rows[k].axis_vals[0], hi = rows[k + 1].axis_vals[0];
        double mlo = m0;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          SystemConfig sys = rc.system;
          apply_axis(sys, ax.name, mid);
          const double mm = eval_criterion(rc, sys, criterion).margin();
          if ((mm < 0) == (mlo < 0)) {
            lo = mid;
            mlo = mm;
          } else {
            hi = mid;
          }
        }
        boundaries.push_back(0.5 * (lo + hi));
      }
    }
    csv::Writer wb(out_path + ".boundary.csv", {ax.name});
    for (double b : boundaries) {
      wb.row({b});
      std::printf("boundary    : %s = %.12g\n", ax.name.c_str(), b);
    }
    if (boundaries.empty()) std::printf("boundary    : no sign change found\n");
    std::printf("wrote       : %s.boundary.csv\n", out_path.c_str());
  }
  return 0;
}

}  // namespace cgme
