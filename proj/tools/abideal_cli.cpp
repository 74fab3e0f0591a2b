// Command-line surface: enumerate ideals, decompose X, print dimension
// tables, and run the verification suites. All output is deterministic.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "abideal/serialize.hpp"
#include "abideal/verify.hpp"

namespace {

using namespace abideal;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct SystemArgs {
  std::string type;
  int rank = 0;
};

RootSystem build_or_exit(const SystemArgs& args) {
  auto series = args.type.size() == 1 ? series_from_char(args.type[0]) : std::nullopt;
  if (!series) {
    std::cerr << "error: --type must be one of A,B,C,D,E,F,G (got '" << args.type << "')\n";
    std::exit(kExitUsage);
  }
  try {
    return RootSystem::build(*series, args.rank);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::string> h;
  for (const auto& c : header) h.push_back(csv_escape(c));
  std::cout << join(h, ",") << "\n";
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(csv_escape(c));
    std::cout << join(cells, ",") << "\n";
  }
}

void print_text(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  auto measure = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      std::cout << row[i];
      if (i + 1 < row.size()) std::cout << std::string(width[i] - row[i].size() + 2, ' ');
    }
    std::cout << "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
}

int run_enumerate(const SystemArgs& sysargs, bool abelian, bool all, const std::string& format) {
  RootSystem sys = build_or_exit(sysargs);
  if (abelian == all) {
    std::cerr << "error: pass exactly one of --abelian / --all\n";
    return kExitUsage;
  }
  if (all && sys.rank() > 6)
    std::cerr << "note: --all at rank " << sys.rank()
              << " enumerates every ad-nilpotent ideal; expect a large table\n";
  auto ideals = all ? enumerate_ad_nilpotent(sys) : enumerate_abelian(sys);

  if (format == "json") {
    json rows = json::array();
    for (const Ideal& i : ideals) rows.push_back(ideal_record(sys, i));
    json doc{{"command", "enumerate"},
             {"system", sys.name()},
             {"filter", all ? "all" : "abelian"},
             {"count", ideals.size()},
             {"rows", rows}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::vector<std::string> header{"index", "dim", "abelian", "nilpotence", "generators", "tau",
                                  "F"};
  std::vector<std::vector<std::string>> rows;
  for (size_t idx = 0; idx < ideals.size(); ++idx) {
    const Ideal& i = ideals[idx];
    AffineWeylElement w = w_of_ideal(sys, i);
    std::vector<std::string> gens;
    for (const Root& r : generators(sys, i)) gens.push_back(coeff_str(sys, r.c));
    rows.push_back({std::to_string(idx), std::to_string(i.dim()),
                    is_abelian_set(sys, i.phi) ? "true" : "false",
                    std::to_string(nilpotence_index(sys, i)), join(gens, " "),
                    coeff_str(sys, w.tau.c), coeff_str(sys, F_map(sys, w).c)});
  }
  if (format == "csv") print_csv(header, rows);
  else print_text(header, rows);
  return 0;
}

int run_decompose_x(const SystemArgs& sysargs, const std::string& format) {
  RootSystem sys = build_or_exit(sysargs);
  auto xs = enumerate_X(sys);
  if (format == "json") {
    json rows = json::array();
    for (const XPoint& xp : xs) rows.push_back(xpoint_record(sys, xp));
    json doc{{"command", "decompose-x"}, {"system", sys.name()}, {"count", xs.size()},
             {"rows", rows}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> header{"tau", "coweights", "label", "k", "chain"};
  std::vector<std::vector<std::string>> rows;
  for (const XPoint& xp : xs) {
    std::vector<std::string> chain;
    for (int i = 0; i < xp.chain.length(); ++i) {
      SubsystemDescriptor sub{parabolic_basis(sys, xp.chain.pis[i]), true};
      std::string members;
      for (int a : xp.chain.pis[i]) {
        if (!members.empty()) members += ",";
        members += std::to_string(a + 1);
      }
      chain.push_back(classify_subsystem(sys, sub).str() + "<" + members + ">");
    }
    rows.push_back({coeff_str(sys, xp.tau.c), coweight_label(sys, xp.tau),
                    theta_sum_label(sys, xp), std::to_string(xp.chain.length()),
                    join(chain, " > ")});
  }
  if (format == "csv") print_csv(header, rows);
  else print_text(header, rows);
  return 0;
}

int run_tower(const SystemArgs& sysargs, int alpha_bourbaki, const std::string& root_coeffs,
              const std::string& format) {
  RootSystem sys = build_or_exit(sysargs);
  Root alpha;
  if (!root_coeffs.empty()) {
    std::stringstream ss(root_coeffs);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= sys.rank()) break;
      alpha.c[i++] = static_cast<int16_t>(std::stoi(tok));
    }
    if (i != sys.rank()) {
      std::cerr << "error: --root needs " << sys.rank() << " comma-separated coefficients\n";
      return kExitUsage;
    }
  } else {
    if (alpha_bourbaki < 1 || alpha_bourbaki > sys.rank()) {
      std::cerr << "error: --alpha must be in 1.." << sys.rank() << "\n";
      return kExitUsage;
    }
    alpha = sys.simple_root(alpha_bourbaki - 1);
  }
  if (!sys.is_positive_root(alpha) || !sys.is_long(alpha)) {
    std::cerr << "error: the chosen root is not a long positive root of " << sys.name() << "\n";
    return kExitUsage;
  }

  GoodChain chain = maximal_good_chain(sys, alpha);
  json jrows = json::array();
  std::vector<std::vector<std::string>> rows;
  std::vector<int> gseq{sys.dual_coxeter()};
  for (int h = 1; h <= chain.length(); ++h) {
    Coroot tau = tau_h_of_chain(sys, chain, h);
    XPoint xp = xpoint_of(sys, tau);
    Ideal m = m_h(sys, alpha, h);
    int dim_formula = dim_m_h(sys, alpha, h);
    std::string hat_type, hat_basis_text;
    json hat_basis = json::array();
    if (h < chain.length()) {
      SubsystemDescriptor hat = hat_delta_h(sys, alpha, h);
      hat_type = classify_subsystem(sys, hat).str();
      for (const AffineRoot& b : hat.basis) {
        hat_basis.push_back(to_json(sys, b));
        if (!hat_basis_text.empty()) hat_basis_text += " ";
        if (b.level == 0) {
          for (int i = 0; i < sys.rank(); ++i)
            if (b.finite == sys.simple_root(i)) hat_basis_text += "a" + std::to_string(i + 1);
        } else {
          hat_basis_text += "-theta" + std::to_string(h) + "+d";
        }
      }
    }
    json grow = json::array();
    for (int g : gseq) grow.push_back(g);
    jrows.push_back(json{{"h", h},
                         {"tau", theta_sum_label(sys, xp)},
                         {"tau_coeffs", to_json(sys, tau)},
                         {"hat_delta_h", hat_type},
                         {"hat_basis", hat_basis},
                         {"g_sequence", grow},
                         {"dim", dim_formula},
                         {"dim_explicit", m.dim()},
                         {"equal", dim_formula == m.dim()}});
    std::string gs;
    for (int g : gseq) gs += (gs.empty() ? "" : ",") + std::to_string(g);
    rows.push_back({std::to_string(h), theta_sum_label(sys, xp), hat_type, hat_basis_text, gs,
                    std::to_string(dim_formula), std::to_string(m.dim()),
                    dim_formula == m.dim() ? "yes" : "NO"});
    if (h < chain.length()) gseq.push_back(g_h(sys, alpha, h));
  }
  if (format == "json") {
    json doc{{"command", "tower"},
             {"system", sys.name()},
             {"alpha", to_json(sys, alpha)},
             {"k", chain.length()},
             {"rows", jrows}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> header{"h", "tau", "hat_delta_h", "hat_basis", "g_seq", "dim",
                                  "dim_explicit", "equal"};
  if (format == "csv") print_csv(header, rows);
  else print_text(header, rows);
  return 0;
}

// Closed-form string for the footnote column; B/D rows beyond h = 1 carry
// the two-case expression, with the maximal case at h = k(alpha).
std::string closed_form_note(const RootSystem& sys, int alpha1, int h, int k) {
  const int n = sys.rank();
  std::ostringstream os;
  switch (sys.series()) {
    case Series::A: os << "i(n-i+1)=" << h * (n - h + 1) << " at i=" << h; break;
    case Series::C: os << "(2n-i+1)i/2=" << (2 * n - h + 1) * h / 2 << " at i=" << h; break;
    case Series::B: {
      if (h == 1) { os << "2n-2=" << 2 * n - 2; break; }
      if (alpha1 == 1) { os << "2n-1=" << 2 * n - 1; break; }
      int hh = alpha1;
      if (h == k) os << "(4n+h^2-3h-2)/2=" << (4 * n + hh * hh - 3 * hh - 2) / 2;
      else os << "2(n-i^2)+(i-1)(2h+1)=" << 2 * (n - h * h) + (h - 1) * (2 * hh + 1);
      break;
    }
    case Series::D: {
      if (h == 1) { os << "2n-3=" << 2 * n - 3; break; }
      if (alpha1 == 1) { os << "2n-2=" << 2 * n - 2; break; }
      int hh = std::min(alpha1, n - 1);  // alpha_n mirrors alpha_{n-1}
      if (h == k) os << "(4n+h^2-3h-4)/2=" << (4 * n + hh * hh - 3 * hh - 4) / 2;
      else os << "2(n-i^2)+(i-1)(2h+1)-1=" << 2 * (n - h * h) + (h - 1) * (2 * hh + 1) - 1;
      break;
    }
    default: return "";
  }
  return os.str();
}

int run_tables_for(const RootSystem& sys, const std::string& format, bool emit_json,
                   json* accum) {
  auto rows = tower_table(sys);
  auto golden = golden_dims(sys);
  int d = malcev_dimension(sys);

  if (emit_json) {
    json jrows = json::array();
    for (const TowerRow& r : rows) {
      json g = json::array();
      for (int x : r.g_seq) g.push_back(x);
      auto it = golden.find({r.alpha, r.h});
      jrows.push_back(json{{"type", sys.name()},
                           {"alpha", r.alpha + 1},
                           {"h", r.h},
                           {"tau", r.tau_label},
                           {"dim", r.dim_formula},
                           {"g_sequence", g},
                           {"published", it == golden.end() ? json() : json(it->second)}});
    }
    (*accum)[sys.name()] = json{{"rows", jrows}, {"malcev_d", d}};
    return 0;
  }

  std::vector<std::string> header{"type", "alpha", "h", "tau", "g_seq", "dim", "published",
                                  "closed_form", "d"};
  std::vector<std::vector<std::string>> cells;
  std::map<int, int> k_of;
  for (const TowerRow& r : rows) k_of[r.alpha] = std::max(k_of[r.alpha], r.h);
  for (const TowerRow& r : rows) {
    std::string gs;
    for (int g : r.g_seq) gs += (gs.empty() ? "" : ",") + std::to_string(g);
    auto it = golden.find({r.alpha, r.h});
    cells.push_back({sys.name(), std::to_string(r.alpha + 1), std::to_string(r.h), r.tau_label,
                     gs, std::to_string(r.dim_formula),
                     it == golden.end() ? "-" : std::to_string(it->second),
                     closed_form_note(sys, r.alpha + 1, r.h, k_of[r.alpha]),
                     std::to_string(d)});
  }
  if (format == "csv") print_csv(header, cells);
  else {
    print_text(header, cells);
    std::cout << sys.name() << ": d = " << d << "\n";
  }
  return 0;
}

int run_tables(const SystemArgs& sysargs, bool all_types, int max_rank,
               const std::string& format) {
  std::vector<RootSystem> systems;
  if (all_types) {
    for (int n = 1; n <= max_rank; ++n) systems.push_back(RootSystem::build(Series::A, n));
    for (int n = 3; n <= max_rank; ++n) systems.push_back(RootSystem::build(Series::B, n));
    for (int n = 2; n <= max_rank; ++n) systems.push_back(RootSystem::build(Series::C, n));
    for (int n = 4; n <= max_rank; ++n) systems.push_back(RootSystem::build(Series::D, n));
    for (int n = 6; n <= std::min(8, max_rank); ++n)
      systems.push_back(RootSystem::build(Series::E, n));
    if (max_rank >= 4) systems.push_back(RootSystem::build(Series::F, 4));
    if (max_rank >= 2) systems.push_back(RootSystem::build(Series::G, 2));
  } else {
    systems.push_back(build_or_exit(sysargs));
  }
  if (format == "json") {
    json doc{{"command", "tables"}, {"systems", json::object()}};
    for (const RootSystem& sys : systems) run_tables_for(sys, format, true, &doc["systems"]);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (const RootSystem& sys : systems) run_tables_for(sys, format, false, nullptr);
  return 0;
}

int run_verify(const SystemArgs& sysargs, const std::string& suite, const std::string& format) {
  RootSystem sys = build_or_exit(sysargs);
  Report report;
  if (suite == "counts") report = verify_counts(sys);
  else if (suite == "encodings") report = verify_encodings(sys);
  else if (suite == "posets") report = verify_posets(sys);
  else if (suite == "towers") report = verify_towers(sys);
  else if (suite == "all") report = verify_all(sys);
  else {
    std::cerr << "error: --suite must be one of counts|encodings|posets|towers|all\n";
    return kExitUsage;
  }

  if (format == "json") {
    json rows = json::array();
    for (const Check& c : report.checks)
      rows.push_back(json{{"anchor", c.anchor},
                          {"check", c.description},
                          {"pass", c.pass},
                          {"detail", c.detail}});
    json doc{{"command", "verify"},
             {"system", sys.name()},
             {"suite", suite},
             {"pass", report.all_pass()},
             {"failures", report.failures()},
             {"rows", rows}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const Check& c : report.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.anchor << ": " << c.description;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << sys.name() << " " << suite << ": " << (report.checks.size() - report.failures())
              << "/" << report.checks.size() << " checks passed\n";
  }
  return report.all_pass() ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abideal: ad-nilpotent and abelian ideal combinatorics of simple Lie algebras"};
  app.require_subcommand(1);

  SystemArgs sysargs;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd, bool system_required) {
    auto* t = cmd->add_option("--type", sysargs.type, "series letter A..G");
    auto* r = cmd->add_option("--rank", sysargs.rank, "rank");
    if (system_required) {
      t->required();
      r->required();
    }
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  bool abelian = false, all = false;
  auto* enumerate = app.add_subcommand("enumerate", "list ideals of the Borel");
  add_common(enumerate, true);
  enumerate->add_flag("--abelian", abelian, "abelian ideals only");
  enumerate->add_flag("--all", all, "all ad-nilpotent ideals");

  auto* decompose = app.add_subcommand("decompose-x", "X and standard orthogonal decompositions");
  add_common(decompose, true);

  int alpha = 0;
  std::string root_coeffs;
  auto* tower = app.add_subcommand("tower", "the tower m_1(alpha) < ... < m_k(alpha)");
  add_common(tower, true);
  tower->add_option("--alpha", alpha, "Bourbaki index of a long simple root");
  tower->add_option("--root", root_coeffs, "coefficients of a long positive root, e.g. 1,2,2,1");

  bool all_types = false;
  int max_rank = 8;
  auto* tables = app.add_subcommand("tables", "dimension tables of the maximal ideals");
  add_common(tables, false);
  tables->add_flag("--all-types", all_types, "every supported type up to --max-rank");
  tables->add_option("--max-rank", max_rank, "rank bound for --all-types")
      ->check(CLI::Range(1, 8));

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify, true);
  verify->add_option("--suite", suite, "counts|encodings|posets|towers|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(sysargs, abelian, all, format);
    if (decompose->parsed()) return run_decompose_x(sysargs, format);
    if (tower->parsed()) {
      if ((alpha == 0) == root_coeffs.empty()) {
        std::cerr << "error: pass exactly one of --alpha / --root\n";
        return kExitUsage;
      }
      return run_tower(sysargs, alpha, root_coeffs, format);
    }
    if (tables->parsed()) {
      if (!all_types && (sysargs.type.empty() || sysargs.rank == 0)) {
        std::cerr << "error: tables needs --type/--rank or --all-types\n";
        return kExitUsage;
      }
      return run_tables(sysargs, all_types, max_rank, format);
    }
    if (verify->parsed()) return run_verify(sysargs, suite, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
