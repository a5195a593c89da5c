// twistscan: integral points on quadratic twist families, binary-quartic
// reduction, cubic-surface counting, square-class descent and Pell
// enumeration, with persistent caches and machine-readable outputs.
//
// Subcommands: scan, density, moments, surface, rho, descent-verify, pell,
// construct, verify. Exit codes: 0 success, 1 verification failure, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "twistscan/arith.hpp"
#include "twistscan/charsum.hpp"
#include "twistscan/descent.hpp"
#include "twistscan/fixedlog.hpp"
#include "twistscan/pell.hpp"
#include "twistscan/selfcheck.hpp"
#include "twistscan/surface.hpp"
#include "twistscan/twists.hpp"

using json = nlohmann::json;
using namespace twistscan;

namespace {

// RFC-4180-style quoting: fields with commas/quotes/newlines get quoted.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void write_lines(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << content;
}

arith::BinaryCubic parse_cubic(const std::vector<int64_t>& c) {
  if (c.size() != 4)
    throw CLI::ValidationError("--cubic needs four integers c3,c2,c1,c0");
  return {c[0], c[1], c[2], c[3]};
}

struct ScanArgs {
  std::string model = "short";
  int64_t A = 0, B = 1, N = 100;
  int64_t xmax = 1000000;
  int threads = 1;
  std::string out, cache_dir, summary;
};

std::string default_cache_name(const ScanArgs& a) {
  std::ostringstream ss;
  ss << "corpus_" << a.model << "_A" << a.A << "_B" << a.B << "_N" << a.N
     << "_x" << a.xmax << ".txt";
  return ss.str();
}

twists::Corpus run_scan(const ScanArgs& a) {
  auto model = twists::model_from_name(a.model);
  if (!model) throw CLI::ValidationError("unknown model " + a.model);
  std::string cache;
  if (!a.cache_dir.empty()) cache = a.cache_dir + "/" + default_cache_name(a);
  twists::Corpus corpus =
      twists::scan_family(*model, a.A, a.B, a.N, a.xmax, a.threads, cache);
  if (!a.out.empty()) twists::save_corpus(corpus, a.out);
  return corpus;
}

void add_scan_options(CLI::App* cmd, ScanArgs& a) {
  cmd->add_option("--model", a.model, "short | full | partial");
  cmd->add_option("--A", a.A, "family parameter A");
  cmd->add_option("--B", a.B, "family parameter B");
  cmd->add_option("--N", a.N, "square-free |D| bound");
  cmd->add_option("--xmax", a.xmax, "x search bound (completeness caveat)");
  cmd->add_option("--threads", a.threads, "worker count (results identical)");
  cmd->add_option("--cache-dir", a.cache_dir, "corpus cache directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistscan: quadratic twist integral-point workbench"};
  app.set_config("--config", "", "plain key=value config file");
  app.require_subcommand(1);
  uint64_t seed = 42;
  app.add_option("--seed", seed, "seed for randomized property batteries");

  // scan ---------------------------------------------------------------
  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "scan a twist family for integral points");
  add_scan_options(scan, scan_args);
  scan->add_option("--out", scan_args.out, "corpus output path");
  scan->add_option("--summary", scan_args.summary, "summary JSON path");

  // density ------------------------------------------------------------
  ScanArgs dens_args;
  std::string dens_corpus, dens_out;
  std::vector<int64_t> dens_grid;
  int64_t kappa_num = 1, kappa_den = 8;
  bool dens_construct = false;
  auto* dens = app.add_subcommand("density", "density table over a corpus");
  add_scan_options(dens, dens_args);
  dens->add_option("--corpus", dens_corpus, "existing corpus file (else scans)");
  dens->add_option("--grid", dens_grid, "N' grid, ascending")->required()->delimiter(',');
  dens->add_option("--kappa-num", kappa_num, "kappa numerator (default 1)");
  dens->add_option("--kappa-den", kappa_den, "kappa denominator (default 8)");
  dens->add_flag("--construct", dens_construct, "add the constructed-D column");
  dens->add_option("--out", dens_out, "CSV output path (default stdout)");

  // moments ------------------------------------------------------------
  ScanArgs mom_args;
  std::string mom_corpus;
  int mom_k = 1;
  auto* mom = app.add_subcommand("moments", "exact moments of #E*_D");
  add_scan_options(mom, mom_args);
  mom->add_option("--corpus", mom_corpus, "existing corpus file (else scans)");
  mom->add_option("--k", mom_k, "moment order");

  // surface ------------------------------------------------------------
  std::vector<int64_t> surf_cubic;
  std::vector<int64_t> surf_grid;
  int64_t surf_verify_B = 0;
  std::string surf_out, surf_dump;
  auto* surf = app.add_subcommand("surface", "growth table for C(x1,x2) = x3^2 x4");
  surf->add_option("--cubic", surf_cubic, "coefficients c3,c2,c1,c0")->required()->delimiter(',');
  surf->add_option("--grid", surf_grid, "B grid, ascending")->required()->delimiter(',');
  surf->add_option("--verify", surf_verify_B, "differential test at this B");
  surf->add_option("--dump", surf_dump, "dump brute solutions (corpus lines)");
  surf->add_option("--out", surf_out, "CSV output path (default stdout)");

  // rho ----------------------------------------------------------------
  std::vector<int64_t> rho_cubic;
  int64_t rho_N = 1000000;
  std::string rho_out;
  auto* rho = app.add_subcommand("rho", "rho tables and log log trend");
  rho->add_option("--cubic", rho_cubic, "coefficients c3,c2,c1,c0")->required()->delimiter(',');
  rho->add_option("--N", rho_N, "prime bound");
  rho->add_option("--out", rho_out, "CSV output path (default stdout)");

  // descent-verify -------------------------------------------------------
  ScanArgs dv_args;
  dv_args.model = "full";
  dv_args.A = 1;
  dv_args.B = 2;
  std::string dv_out;
  int64_t dv_kappa_num = 0, dv_kappa_den = 1;  // 0 = model default (13, 49/4)
  auto* dv = app.add_subcommand("descent-verify",
                                "decompose every scanned point and verify");
  add_scan_options(dv, dv_args);
  dv->add_option("--out", dv_out, "catalogue CSV path (default stdout)");
  dv->add_option("--kappa-num", dv_kappa_num,
                 "compact catalogue cap (log N)^kappa numerator");
  dv->add_option("--kappa-den", dv_kappa_den, "kappa denominator");

  // pell -----------------------------------------------------------------
  int64_t pa = 1, pb = 2, pu = 1;
  int64_t pbound = 1000000;
  std::vector<int64_t> simul;
  auto* pcmd = app.add_subcommand("pell", "enumerate a x^2 - b y^2 = u");
  pcmd->add_option("--a", pa)->required();
  pcmd->add_option("--b", pb)->required();
  pcmd->add_option("--u", pu)->required();
  pcmd->add_option("--bound", pbound, "x bound");
  pcmd->add_option("--simul", simul, "second equation c,d,v sharing y")->delimiter(',');

  // construct --------------------------------------------------------------
  int64_t cA = 0, cB = 1, cN = 1000;
  std::string con_out;
  auto* con = app.add_subcommand("construct", "witness construction D -> point");
  con->add_option("--A", cA);
  con->add_option("--B", cB);
  con->add_option("--N", cN);
  con->add_option("--out", con_out, "CSV output path (default stdout)");

  // verify -------------------------------------------------------------
  std::string verify_json;
  bool inject_fault = false;
  std::vector<std::string> verify_only;
  auto* ver = app.add_subcommand("verify", "run every module's invariant suite");
  ver->add_option("--json", verify_json, "JSON report path");
  ver->add_flag("--inject-fault", inject_fault,
                "corrupt one check (harness self-test)");
  ver->add_option("--only", verify_only, "restrict to named suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scan) {
      twists::Corpus corpus = run_scan(scan_args);
      if (scan_args.out.empty() && scan_args.cache_dir.empty())
        twists::save_corpus(corpus, default_cache_name(scan_args));
      json summary;
      summary["model"] = scan_args.model;
      summary["A"] = scan_args.A;
      summary["B"] = scan_args.B;
      summary["N"] = scan_args.N;
      summary["xmax"] = scan_args.xmax;
      summary["complete_up_to_xmax"] = true;
      int64_t torsion = 0, nontorsion = 0, compact = 0, nonempty = 0;
      for (auto& cp : corpus.curves) {
        bool any = false;
        for (auto& p : cp.pts) {
          if (p.torsion) ++torsion;
          else { ++nontorsion; any = true; }
          if (p.compact) ++compact;
        }
        nonempty += any;
      }
      summary["points_torsion"] = torsion;
      summary["points_nontorsion"] = nontorsion;
      summary["points_compact"] = compact;
      summary["curves_with_nontorsion_point"] = nonempty;
      summary["curves"] = corpus.curves.size();
      std::string text = summary.dump(2) + "\n";
      if (!scan_args.summary.empty()) write_lines(scan_args.summary, text);
      else std::cout << text;
    } else if (*dens) {
      twists::Corpus corpus = dens_corpus.empty()
                                  ? run_scan(dens_args)
                                  : twists::load_corpus(dens_corpus);
      auto rows = twists::density_table(corpus, dens_grid,
                                        Rat(Int(kappa_num), Int(kappa_den)),
                                        dens_construct);
      std::ostringstream os;
      os << "N,nonempty,total,sqrt_ref,log_ref";
      if (dens_construct) os << ",constructed";
      os << "\n";
      for (auto& r : rows) {
        os << r.Nprime << "," << r.nonempty << "," << r.total << ","
           << csv_field(r.sqrt_ref) << "," << csv_field(r.log_ref);
        if (dens_construct) os << "," << r.constructed;
        os << "\n";
      }
      write_lines(dens_out, os.str());
    } else if (*mom) {
      twists::Corpus corpus = mom_corpus.empty()
                                  ? run_scan(mom_args)
                                  : twists::load_corpus(mom_corpus);
      Rat m = twists::moments(corpus, mom_k);
      std::cout << "k=" << mom_k << " moment=" << m.to_string()
                << " decimal=" << m.to_decimal(8)
                << " (complete up to xmax=" << corpus.x_max << ")\n";
    } else if (*surf) {
      arith::BinaryCubic C = parse_cubic(surf_cubic);
      if (!C.separable()) {
        std::cerr << "error: cubic is not separable\n";
        return 2;
      }
      auto [Cn, shear] = surface::normalize_cubic(C);
      if (shear != 0)
        std::cerr << "note: C(1,0) = 0; descent uses the sheared form (b="
                  << shear << "); lattice counts stay on the original box\n";
      if (surf_verify_B > 0) {
        int64_t brute = surface::brute_count(C, surf_verify_B).count;
        int64_t viaL = surface::count_via_lattices(C, surf_verify_B);
        std::cout << "verify B=" << surf_verify_B << ": brute=" << brute
                  << " lattices=" << viaL
                  << (brute == viaL ? " EQUAL" : " MISMATCH") << "\n";
        if (brute != viaL) return 1;
      }
      auto rows = surface::growth_table(C, surf_grid);
      std::ostringstream os;
      os << "B,count,count_per_B,count_per_B_logs,lambda\n";
      int lam = C.lambda();
      for (auto& r : rows)
        os << r.B << "," << r.count << "," << csv_field(r.per_B) << ","
           << csv_field(r.per_B_logs) << "," << lam << "\n";
      write_lines(surf_out, os.str());
      if (!surf_dump.empty()) {
        auto res = surface::brute_count(C, surf_grid.back(), true);
        std::ostringstream ds;
        ds << "# surface solutions x1 x2 x3 x4 (x3 > 0 representatives)\n";
        for (auto& s : res.solutions)
          ds << s.x1 << " " << s.x2 << " " << s.x3 << " " << s.x4 << "\n";
        write_lines(surf_dump, ds.str());
      }
    } else if (*rho) {
      arith::BinaryCubic C = parse_cubic(rho_cubic);
      if (!C.separable()) {
        std::cerr << "error: cubic is not separable\n";
        return 2;
      }
      if (C.c3 == 0) C = surface::normalize_cubic(C).first;
      auto sum = arith::rho_mean_sum(C, (uint64_t)rho_N);
      std::ostringstream os;
      os << "# fixed-point accumulation, absolute error < pi(N) * 2^-64\n";
      os << "quantity,value\n";
      os << "lambda," << C.lambda() << "\n";
      os << "sum_rho_p_over_p,"
         << Rat(Int((long long)(sum.fixed_q64 >> 16)), Int(1) << 48)
                .to_decimal(9)
         << "\n";
      if (sum.exact_valid)
        os << "sum_exact_decimal," << sum.exact.to_decimal(20) << "\n";
      os << "loglog_N," << q48_to_decimal(loglog_q48((uint64_t)rho_N), 9) << "\n";
      write_lines(rho_out, os.str());
    } else if (*dv) {
      auto model = twists::model_from_name(dv_args.model);
      if (!model || *model == twists::Model::Short)
        throw CLI::ValidationError("descent-verify needs --model full|partial");
      twists::Corpus corpus = run_scan(dv_args);
      std::ostringstream os;
      os << "D,x,y,g,Dt,branch,ok\n";
      int64_t bad = 0;
      for (auto& cp : corpus.curves) {
        if (cp.D <= 0) continue;
        twists::TwistCurve curve{*model, dv_args.A, dv_args.B, cp.D};
        for (auto& p : cp.pts) {
          if (p.torsion) continue;
          bool ok = true;
          int64_t g = 0, Dt = 0;
          if (*model == twists::Model::Full) {
            auto d = descent::full2_decompose(p.x, p.y, curve);
            g = d.g;
            Dt = d.Dt;
            if (!d.compact) {
              auto tc = descent::triple_classes(d, dv_args.A, dv_args.B);
              ok = descent::local_conditions_full(tc.n1, tc.n2, tc.n3, tc.R) &&
                   descent::indicator_triple(tc.n1, tc.n2, tc.n3, tc.R) ==
                       Rat(Int(1));
              auto r = descent::full2_recover(d.G[0] * d.y[0] * d.y[0],
                                              d.G[1] * d.y[1] * d.y[1], 1, 2,
                                              dv_args.A, dv_args.B);
              ok = ok && r && r->valid_point && r->x == p.x && r->D == cp.D;
            }
          } else {
            auto d = descent::partial_decompose(p.x, p.y, curve);
            g = d.g;
            Dt = d.Dt;
            if (!d.compact)
              ok = descent::local_conditions_partial(d, dv_args.A, dv_args.B);
          }
          bad += !ok;
          os << cp.D << "," << p.x << "," << p.y << "," << g << "," << Dt
             << "," << (p.compact ? "compact" : "unbounded") << ","
             << (ok ? "1" : "0") << "\n";
        }
      }
      write_lines(dv_out, os.str());
      // compact catalogue cap Dt <= (log N)^kappa; defaults 13 (full) and
      // 49/4 (partial)
      if (dv_kappa_num == 0) {
        dv_kappa_num = *model == twists::Model::Full ? 13 : 49;
        dv_kappa_den = *model == twists::Model::Full ? 1 : 4;
      }
      int64_t dt_cap = dv_args.N;
      {
        Rat lnN = q48_to_rat(ln_q48((uint64_t)std::max<int64_t>(3, dv_args.N)));
        // (ln N)^(num/den) >= N at desk scale for the default kappas; cap at N
        Rat powed(Int(1));
        for (int i = 0; i < dv_kappa_num / dv_kappa_den; ++i) powed = powed * lnN;
        if (powed < Rat(Int(dv_args.N)))
          dt_cap = Int::fdiv(powed.num(), powed.den()).to_int64();
      }
      auto compact = descent::compact_catalogue(corpus, dt_cap);
      std::cerr << "descent-verify: compact catalogue " << compact.size()
                << " points (Dt <= " << dt_cap << ")\n";
      if (bad) {
        std::cerr << "descent-verify: " << bad << " violations\n";
        return 1;
      }
      std::cerr << "descent-verify: all points consistent\n";
    } else if (*pcmd) {
      if (!simul.empty()) {
        if (simul.size() != 3)
          throw CLI::ValidationError("--simul needs c,d,v");
        auto sols = pell::simultaneous_solve(pa, pb, Int(pu), simul[0],
                                             simul[1], Int(simul[2]),
                                             Int(pbound));
        std::cout << "x,y,z\n";
        for (auto& s : sols)
          std::cout << s[0].to_string() << "," << s[1].to_string() << ","
                    << s[2].to_string() << "\n";
      } else {
        auto sols = pell::enumerate_solutions(pa, pb, Int(pu), Int(pbound));
        std::cout << "x,y\n";
        for (auto& [x, y] : sols)
          std::cout << x.to_string() << "," << y.to_string() << "\n";
      }
    } else if (*con) {
      auto m = twists::construct_points(cA, cB, cN);
      std::ostringstream os;
      os << "D,x,y,alpha,beta\n";
      for (auto& [D, w] : m)
        os << D << "," << w.x << "," << w.y << "," << w.alpha << "," << w.beta
           << "\n";
      write_lines(con_out, os.str());
      auto [sq, _] = arith::int_sqrt(Int(cN) * Int(10000));
      std::cerr << "construct: " << m.size() << " distinct D, sqrt(N) ~ "
                << Rat(sq, Int(100)).to_decimal(2) << "\n";
    } else if (*ver) {
      selfcheck::Options opt;
      opt.seed = seed;
      opt.inject_fault = inject_fault;
      auto results = selfcheck::run_suites(opt, verify_only);
      json rep = json::array();
      bool all_ok = true;
      for (auto& r : results) {
        std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail
                  << "\n";
        all_ok &= r.ok;
        rep.push_back({{"suite", r.name},
                       {"ok", r.ok},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
      }
      if (!verify_json.empty()) write_lines(verify_json, rep.dump(2) + "\n");
      if (!all_ok) return 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
