// coxdet: determinants of irreducible representations of the finite
// irreducible Coxeter groups, and counts of irreducibles per multiplicative
// character (closed formulas cross-checked against brute-force enumeration).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxdet/binmath.hpp"
#include "coxdet/count_report.hpp"
#include "coxdet/other_types.hpp"
#include "coxdet/partition.hpp"
#include "coxdet/sn_counts.hpp"
#include "coxdet/towers.hpp"
#include "coxdet/type_b.hpp"

namespace {

using coxdet::BigInt;
using coxdet::CountReport;
using coxdet::Partition;
namespace typeb = coxdet::typeb;
namespace typed = coxdet::typed;
namespace sn = coxdet::sn;

struct DetOptions {
  std::string type;
  std::string lambda, alpha, beta;
  bool has_alpha = false, has_beta = false, has_lambda = false;
};

int run_det(const DetOptions& opt) {
  if (opt.type == "A") {
    if (!opt.has_lambda) throw std::invalid_argument("--type A requires --lambda");
    std::cout << to_string(coxdet::determinant(Partition::parse(opt.lambda))) << "\n";
    return 0;
  }
  if (opt.type == "B") {
    if (!opt.has_alpha || !opt.has_beta)
      throw std::invalid_argument("--type B requires --alpha and --beta");
    typeb::Bipartition bp{Partition::parse(opt.alpha), Partition::parse(opt.beta)};
    std::cout << typeb::to_string(typeb::determinant(bp)) << "\n";
    return 0;
  }
  if (opt.type == "D") {
    if (!opt.has_alpha) throw std::invalid_argument("--type D requires --alpha");
    const Partition alpha = Partition::parse(opt.alpha);
    if (opt.has_beta) {
      const Partition beta = Partition::parse(opt.beta);
      const unsigned n = alpha.size() + beta.size();
      std::cout << typed::to_string(typed::determinant(typed::TypeI{alpha, beta}, n)) << "\n";
    } else {
      const unsigned n = 2 * alpha.size();
      std::cout << typed::to_string(typed::determinant(typed::TypeII{alpha, +1}, n)) << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("unknown group type '" + opt.type + "'");
}

struct CountOptions {
  std::string type;
  long long n = -1;
  long long p = -1;
  std::string name;
  std::string method = "closed";
  long long limit = 30;
};

void check_enumeration_cap(long long n, long long limit) {
  if (n > limit)
    throw std::invalid_argument("enumeration is capped at n <= " + std::to_string(limit) +
                                "; raise with --limit");
}

int run_count(const CountOptions& opt) {
  const bool enumerate = opt.method == "enumerate";
  if (!enumerate && opt.method != "closed")
    throw std::invalid_argument("--method must be 'closed' or 'enumerate'");
  CountReport report;
  report.method = enumerate ? "enumeration" : "closed";

  if (opt.type == "A") {
    if (opt.n < 1) throw std::invalid_argument("--type A requires --n >= 1");
    const unsigned n = static_cast<unsigned>(opt.n);
    report.group = "A";
    report.n = opt.n;
    if (enumerate) {
      check_enumeration_cap(opt.n, opt.limit);
      BigInt chiral = 0;
      for (const auto& p : coxdet::partitions_of(n))
        if (n >= 2 && coxdet::determinant(p) == coxdet::SnChar::sgn) ++chiral;
      report.counts["sgn"] = chiral;
      report.counts["triv"] = typeb::partition_count(n) - chiral;
    } else {
      const BigInt chiral = n < 2 ? BigInt(0) : sn::chiral_partition_count(n);
      report.counts["sgn"] = chiral;
      report.counts["triv"] = typeb::partition_count(n) - chiral;
    }
  } else if (opt.type == "B") {
    if (opt.n < 1) throw std::invalid_argument("--type B requires --n >= 1");
    const unsigned n = static_cast<unsigned>(opt.n);
    report.group = "B";
    report.n = opt.n;
    if (enumerate) check_enumeration_cap(opt.n, opt.limit);
    const auto counts = enumerate ? typeb::counts_enumerated(n) : typeb::counts_closed(n);
    for (const auto& [omega, value] : counts) report.counts[typeb::to_string(omega)] = value;
  } else if (opt.type == "D") {
    if (opt.n < 4) throw std::invalid_argument("--type D requires --n >= 4");
    const unsigned n = static_cast<unsigned>(opt.n);
    report.group = "D";
    report.n = opt.n;
    if (enumerate) {
      check_enumeration_cap(opt.n, opt.limit);
      const BigInt sgn = typed::sgn_count_enumerated(n);
      report.counts["sgn"] = sgn;
      report.counts["triv"] = typed::irrep_count_enumerated(n) - sgn;
    } else {
      const BigInt sgn = typed::sgn_count(n);
      report.counts["sgn"] = sgn;
      report.counts["triv"] = typed::irrep_count(n) - sgn;
    }
  } else if (opt.type == "I2") {
    if (opt.p < 3) throw std::invalid_argument("--type I2 requires --p >= 3");
    if (enumerate) throw std::invalid_argument("--type I2 is closed-form only");
    report = coxdet::dihedral::counts(static_cast<unsigned>(opt.p));
  } else if (opt.type == "exceptional") {
    if (opt.name.empty()) throw std::invalid_argument("--type exceptional requires --name");
    if (enumerate) throw std::invalid_argument("exceptional types are table-only");
    report = coxdet::exceptional::counts(opt.name);
  } else {
    throw std::invalid_argument("unknown group type '" + opt.type + "'");
  }

  std::cout << to_json(report) << "\n";
  return 0;
}

int run_table(const std::string& type, long long max_n, const std::string& format) {
  if (type != "B") throw std::invalid_argument("table supports --type B only");
  if (format != "csv") throw std::invalid_argument("table supports --format csv only");
  std::cout << "n,N_triv,N_sgn0,N_sgn1,N_eps\n";
  for (long long n = 1; n <= max_n; ++n) {
    const auto counts = typeb::counts_closed(static_cast<unsigned>(n));
    std::cout << n << "," << counts.at(typeb::BChar::triv).str() << ","
              << counts.at(typeb::BChar::sgn0).str() << ","
              << counts.at(typeb::BChar::sgn1).str() << ","
              << counts.at(typeb::BChar::eps).str() << "\n";
  }
  return 0;
}

std::string log2_fixed(const BigInt& value) {
  // values beyond double range enter via their top bits
  double lg;
  if (const unsigned bits = boost::multiprecision::msb(value); bits >= 1000) {
    const unsigned shift = bits - 52;
    lg = std::log2((value >> shift).convert_to<double>()) + shift;
  } else {
    lg = std::log2(value.convert_to<double>());
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", lg);
  return buf;
}

int run_plot_data(const std::string& type, long long max_n) {
  if (type != "B") throw std::invalid_argument("plot-data supports --type B only");
  std::cout << "n,log2_N_triv,log2_N_sgn0,log2_N_sgn1,log2_N_eps\n";
  for (long long n = 2; n <= max_n; ++n) {
    const auto counts = typeb::counts_closed(static_cast<unsigned>(n));
    std::cout << n << "," << log2_fixed(counts.at(typeb::BChar::triv)) << ","
              << log2_fixed(counts.at(typeb::BChar::sgn0)) << ","
              << log2_fixed(counts.at(typeb::BChar::sgn1)) << ","
              << log2_fixed(counts.at(typeb::BChar::eps)) << "\n";
  }
  return 0;
}

int run_tower(const std::string& lambda, const std::string& format) {
  const coxdet::CoreTower tower = coxdet::build_tower(Partition::parse(lambda));
  if (format == "json") {
    std::cout << coxdet::tower_to_json(tower) << "\n";
  } else if (format == "ascii") {
    std::cout << coxdet::tower_to_ascii(tower);
  } else {
    throw std::invalid_argument("--format must be 'json' or 'ascii'");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: cross-module invariant suites, one status line per check.

struct Verifier {
  bool all_ok = true;
  std::string first_failure;

  void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok && all_ok) {
      all_ok = false;
      first_failure = name + (detail.empty() ? "" : ": " + detail);
    }
  }
};

int run_verify(long long max_n, long long limit, bool inject_fault) {
  const unsigned N = static_cast<unsigned>(max_n);
  const unsigned enum_cap = static_cast<unsigned>(std::min(max_n, limit));
  Verifier v;

  {  // closed vs enumerated, hyperoctahedral
    std::string detail = "n=2.." + std::to_string(enum_cap);
    bool ok = true;
    for (unsigned n = 2; n <= enum_cap && ok; ++n) {
      auto closed = typeb::counts_closed(n);
      if (inject_fault) closed[typeb::BChar::eps] += 1;  // simulated formula corruption
      const auto enumerated = typeb::counts_enumerated(n);
      for (typeb::BChar omega : typeb::kAllChars)
        if (closed.at(omega) != enumerated.at(omega)) {
          detail = "n=" + std::to_string(n) + " omega=" + typeb::to_string(omega) + ": closed " +
                   closed.at(omega).str() + " != enumerated " + enumerated.at(omega).str();
          ok = false;
          break;
        }
    }
    v.report("typeB closed=enumerated", ok, detail);
  }

  {  // closed vs enumerated, demihyperoctahedral
    std::string detail = "n=4.." + std::to_string(enum_cap);
    bool ok = true;
    for (unsigned n = 4; n <= enum_cap && ok; ++n) {
      if (typed::sgn_count(n) != typed::sgn_count_enumerated(n)) {
        detail = "n=" + std::to_string(n) + " sgn";
        ok = false;
      } else if (typed::irrep_count(n) != typed::irrep_count_enumerated(n)) {
        detail = "n=" + std::to_string(n) + " total";
        ok = false;
      }
    }
    v.report("typeD closed=enumerated", ok, detail);
  }

  {  // odd-partition census and dimension parity
    std::string detail = "n=0.." + std::to_string(enum_cap);
    bool ok = true;
    for (unsigned n = 0; n <= enum_cap && ok; ++n) {
      BigInt census = 0;
      for (const auto& p : coxdet::partitions_of(n)) {
        const bool odd = sn::is_odd_partition(p);
        if (odd != static_cast<bool>(coxdet::specht_dim(p) & 1)) {
          detail = "parity mismatch at " + p.to_string();
          ok = false;
          break;
        }
        if (odd) ++census;
      }
      if (ok && census != sn::odd_partition_count(n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    }
    v.report("macdonald odd census", ok, detail);
  }

  {  // chiral census, three routes, and the domino census
    std::string detail = "n=2.." + std::to_string(enum_cap);
    bool ok = true;
    for (unsigned n = 2; n <= enum_cap && ok; ++n) {
      BigInt census = 0;
      std::map<unsigned, BigInt> domino_census;
      for (const auto& p : coxdet::partitions_of(n)) {
        const bool chiral = sn::is_chiral(p);
        if (chiral != (coxdet::neg_mult_parity(p) == 1)) {
          detail = "classification mismatch at " + p.to_string();
          ok = false;
          break;
        }
        if (chiral) ++census;
        if (const auto info = sn::domino_info(p); info.is_domino) ++domino_census[info.row];
      }
      if (ok && census != sn::chiral_partition_count(n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
      if (ok && n >= 2) {
        const unsigned k = coxdet::ord_nprime(n);
        for (unsigned j = 1; j + 1 <= k && ok; ++j)
          if (domino_census[j] != sn::domino_tower_count(n, j)) {
            detail = "domino n=" + std::to_string(n) + " j=" + std::to_string(j);
            ok = false;
          }
      }
    }
    v.report("aps chiral census", ok, detail);
  }

  {  // eps + sgn1 totals against the doubled chiral count
    std::string detail = "n=1.." + std::to_string(N);
    bool ok = true;
    for (unsigned n = 1; n <= N && ok; ++n)
      if (typeb::count_closed(typeb::BChar::eps, n) + typeb::count_closed(typeb::BChar::sgn1, n) !=
          sn::chiral_partition_count(2 * n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    v.report("identity eps+sgn1 = chiral(2n)", ok, detail);
  }

  {  // the two equal-count identities
    bool ok = true;
    std::string detail;
    for (unsigned n = 2; n <= N && ok; n += 2)
      if (typeb::count_closed(typeb::BChar::eps, n) != typeb::count_closed(typeb::BChar::sgn0, n)) {
        detail = "even n=" + std::to_string(n);
        ok = false;
      }
    for (unsigned n = 3; n <= N && ok; n += 2) {
      const BigInt quarter = coxdet::pow2_alpha(2ull * n) / 4;
      if (typeb::count_closed(typeb::BChar::eps, n) != quarter ||
          typeb::count_closed(typeb::BChar::sgn1, n) != quarter) {
        detail = "odd n=" + std::to_string(n);
        ok = false;
      }
    }
    v.report("identity eps=sgn0 (even), eps=sgn1=A(2n)/4 (odd)", ok, detail);
  }

  {  // merging identities wherever their hypotheses apply
    bool ok = true;
    std::string detail = "a+b<=" + std::to_string(N);
    for (unsigned a = 0; a <= N && ok; ++a)
      for (unsigned b = 0; a + b <= N && ok; ++b) {
        const bool neat = coxdet::is_neat(a, b);
        const bool dotted = a > 0 && b > 0 && coxdet::ord2(a) == coxdet::ord2(b) &&
                            coxdet::ord2(a) >= 1 &&
                            (std::uint64_t{a} & b) == std::uint64_t{1} << coxdet::ord2(a);
        if (!neat && !dotted) continue;
        if (!sn::merge_identity_holds(a, b)) {
          detail = "a=" + std::to_string(a) + " b=" + std::to_string(b);
          ok = false;
        }
      }
    v.report("merge counting identities", ok, detail);
  }

  if (N >= 10) {  // strict ordering of the four counts
    bool ok = true;
    std::string detail = "n=10.." + std::to_string(N);
    for (unsigned n = 10; n <= N && ok; ++n)
      if (!typeb::inequality_chain_holds(n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    v.report("count inequalities", ok, detail);
  }

  if (!v.all_ok) {
    std::cout << "first failure: " << v.first_failure << "\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinants of irreducible representations of finite Coxeter groups"};
  app.require_subcommand(1);

  DetOptions det;
  CLI::App* cmd_det = app.add_subcommand("det", "Determinant of one irreducible representation");
  cmd_det->add_option("--type", det.type, "Group type: A, B, or D")->required();
  auto* lambda_opt = cmd_det->add_option("--lambda", det.lambda, "Partition (type A)");
  auto* alpha_opt = cmd_det->add_option("--alpha", det.alpha, "First partition (types B, D)");
  auto* beta_opt = cmd_det->add_option("--beta", det.beta, "Second partition (types B, D)");

  CountOptions count;
  CLI::App* cmd_count = app.add_subcommand("count", "Counts per multiplicative character");
  cmd_count->add_option("--type", count.type, "Group type: A, B, D, I2, exceptional")->required();
  cmd_count->add_option("--n", count.n, "Rank (types A, B, D)");
  cmd_count->add_option("--p", count.p, "Dihedral parameter (type I2)");
  cmd_count->add_option("--name", count.name, "Exceptional type name (H3, H4, E6, E7, E8, F4)");
  cmd_count->add_option("--method", count.method, "closed or enumerate (default closed)");
  cmd_count->add_option("--limit", count.limit, "Enumeration size cap (default 30)");

  std::string table_type = "B", table_format = "csv";
  long long table_max_n = 0;
  CLI::App* cmd_table = app.add_subcommand("table", "CSV table of type B counts");
  cmd_table->add_option("--type", table_type, "Group type (only B)");
  cmd_table->add_option("--max-n", table_max_n, "Last row")->required()->check(CLI::Range(1LL, 10000LL));
  cmd_table->add_option("--format", table_format, "Output format (only csv)");

  std::string plot_type = "B";
  long long plot_max_n = 0;
  CLI::App* cmd_plot = app.add_subcommand("plot-data", "Base-2 log of each type B count, CSV");
  cmd_plot->add_option("--type", plot_type, "Group type (only B)");
  cmd_plot->add_option("--max-n", plot_max_n, "Last row")->required()->check(CLI::Range(2LL, 10000LL));

  std::string tower_lambda, tower_format = "json";
  CLI::App* cmd_tower = app.add_subcommand("tower", "2-core tower of a partition");
  cmd_tower->add_option("--lambda", tower_lambda, "Partition")->required();
  cmd_tower->add_option("--format", tower_format, "json or ascii (default json)");

  long long verify_max_n = 0, verify_limit = 30;
  bool verify_inject = false;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the cross-module invariant suites");
  cmd_verify->add_option("--max-n", verify_max_n, "Upper bound for all sweeps")
      ->required()
      ->check(CLI::Range(2LL, 1000000LL));
  cmd_verify->add_option("--limit", verify_limit, "Enumeration size cap (default 30)");
  cmd_verify->add_flag("--inject-fault", verify_inject)->group("");  // test harness hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  det.has_lambda = lambda_opt->count() > 0;
  det.has_alpha = alpha_opt->count() > 0;
  det.has_beta = beta_opt->count() > 0;

  try {
    if (app.got_subcommand(cmd_det)) return run_det(det);
    if (app.got_subcommand(cmd_count)) return run_count(count);
    if (app.got_subcommand(cmd_table)) return run_table(table_type, table_max_n, table_format);
    if (app.got_subcommand(cmd_plot)) return run_plot_data(plot_type, plot_max_n);
    if (app.got_subcommand(cmd_tower)) return run_tower(tower_lambda, tower_format);
    if (app.got_subcommand(cmd_verify)) return run_verify(verify_max_n, verify_limit, verify_inject);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
