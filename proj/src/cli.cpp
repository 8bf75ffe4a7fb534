#include "ginv/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "ginv/catalog.hpp"
#include "ginv/chartab.hpp"
#include "ginv/errors.hpp"
#include "ginv/invariants.hpp"
#include "ginv/predicates.hpp"
#include "ginv/report.hpp"

namespace ginv {

namespace {

void print_info(const FiniteGroup& G, bool exact_gap, bool include_heavy, bool with_chartab,
                const std::string& format, std::ostream& out) {
  if (!G.enumerated()) {
    out << G.name() << ": metadata only, |G| = " << G.order() << "\n";
    return;
  }
  InvariantReport inv = invariant_report(G);
  OliverResult oliver = is_oliver(G);
  GapOptions gopt;
  if (include_heavy) gopt.exact_order_cap = 50000;
  GapVerdict gap = gap_status(G, exact_gap ? GapMode::Exact : GapMode::Sufficient, gopt);
  ClassificationVerdict cls = classification_match(G);

  if (format == "json") {
    GroupEntry e;
    e.name = G.name();
    e.order = G.order();
    e.enumerated = true;
    e.inv = inv;
    e.oliver = oliver.oliver;
    e.cp = is_cp(G);
    e.ep = is_ep(G);
    e.gap = to_string(gap);
    e.classification_case = cls.matched_case;
    out << group_entry_json(e).dump(2) << "\n";
    return;
  }

  out << G.name() << ": |G| = " << G.order() << ", degree " << G.degree() << "\n";
  out << "  conjugacy classes: " << G.classes().size()
      << ", real classes: " << G.real_classes().size() << "\n";
  out << "  a_G = " << inv.a_g << "; NPP element orders:";
  if (inv.npp_orders.empty()) out << " none (CP group)";
  for (auto o : inv.npp_orders) out << " " << o;
  out << "\n";
  out << "  oliver = " << (oliver.oliver ? "true" : "false");
  if (oliver.witness)
    out << "  (witness series |P| = " << oliver.witness->p_order
        << ", |H| = " << oliver.witness->h_order << ")";
  out << "\n";
  out << "  CP = " << (is_cp(G) ? "true" : "false") << ", EP = " << (is_ep(G) ? "true" : "false")
      << ", P(G) disjoint from L(G) = " << (p_l_disjoint(G) ? "true" : "false") << "\n";
  out << "  gap (" << (exact_gap ? "exact" : "sufficient") << ") = " << to_string(gap) << "\n";
  out << "  rk IO(G) = " << inv.rk_io << ", rk IO(G,G) = " << inv.rk_io_gg << ", rk LO(G) in ["
      << inv.lo.lower << ", " << inv.lo.upper << "]" << (inv.lo.exact ? " (exact)" : "") << "\n";
  out << "  rank table over normal subgroups:\n";
  out << "    |H|      b_{G/H}  rk IO(G,H)\n";
  for (const auto& row : inv.b_table)
    out << "    " << std::setw(8) << std::left << row.h_order << " " << std::setw(8)
        << row.b << " " << row.rk_io_gh << "\n";
  if (cls.matched_case)
    out << "  classification case: " << cls.matched_case << "\n";
  else if (cls.oliver && cls.a_g <= 1)
    out << "  classification case: NONE MATCHED (unexpected for Oliver, a_G <= 1)\n";
  if (with_chartab) {
    ChartabCaps caps;
    if (include_heavy) caps.order_cap = 50000;
    const CharacterTable& tab = character_table(G, caps);
    out << "  character table (rows = irreducibles, cols = classes by order/size):\n";
    out << "    deg\tfs";
    for (std::size_t c = 0; c < G.classes().size(); ++c)
      out << "\t" << G.classes()[c].element_order << "^" << G.classes()[c].members.size();
    out << "\n";
    for (std::size_t i = 0; i < tab.chars.size(); ++i) {
      out << "    " << tab.degrees[i] << "\t" << tab.fs[i];
      for (std::size_t c = 0; c < tab.chars[i].size(); ++c) {
        const auto& z = tab.chars[i][c];
        out << "\t" << std::setprecision(4) << z.real();
        if (std::abs(z.imag()) > 1e-8) out << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
      }
      out << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite group invariant toolkit"};
  app.require_subcommand(1);

  std::string catalog_file;
  std::uint64_t max_order = kDefaultElementCap;
  bool exact_gap = false;
  bool include_heavy = false;
  std::string json_path;
  std::string format = "text";
  app.add_option("--catalog", catalog_file, "extra group file (.grp text or .json)");
  app.add_option("--max-order", max_order, "element cap override");
  app.add_flag("--exact-gap", exact_gap, "decide gap status by the exact LP");
  app.add_flag("--include-heavy", include_heavy, "include heavy catalog entries");
  app.add_option("--json", json_path, "write the JSON report here");
  app.add_option("--format", format, "output format: text, json or tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));

  auto* info = app.add_subcommand("info", "print invariants of one group");
  std::string selector;
  bool with_chartab = false;
  info->add_option("group", selector, "catalog name or constructor expression")->required();
  info->add_flag("--chartab", with_chartab, "dump the character table");

  auto* verify = app.add_subcommand("verify", "run a verification suite over the catalog");
  std::string suite;
  verify->add_option("suite", suite, "ranks, classification, vgg, a2, keylemma or all")
      ->required()
      ->check(CLI::IsMember({"ranks", "classification", "vgg", "a2", "keylemma", "all"}));

  auto* list = app.add_subcommand("list", "list catalog groups");

  std::vector<const char*> argv;
  argv.push_back("groupinv");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& spec : builtin_catalog()) {
        out << spec.name << "\torder " << spec.expected_order;
        if (!spec.tags.empty()) {
          out << "\t[";
          for (std::size_t i = 0; i < spec.tags.size(); ++i)
            out << (i ? "," : "") << spec.tags[i];
          out << "]";
        }
        out << "\n";
      }
      return 0;
    }
    if (info->parsed()) {
      GroupPtr g = build(selector, max_order);
      print_info(*g, exact_gap, include_heavy, with_chartab, format, out);
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions opt;
      opt.include_heavy = include_heavy;
      opt.exact_gap = exact_gap;
      opt.max_order = max_order;
      if (include_heavy) opt.exact_gap_cap = 50000;
      if (!catalog_file.empty()) opt.catalog_files.push_back(catalog_file);
      RunContext ctx = RunContext::make(opt);
      VerificationReport rep = verify_suite(suite, ctx);
      if (!json_path.empty()) {
        std::ofstream jf(json_path);
        jf << report_to_json(rep).dump(2) << "\n";
      }
      if (format == "json")
        out << report_to_json(rep).dump(2) << "\n";
      else if (format == "tsv")
        out << report_to_tsv(rep);
      else
        out << report_to_text(rep);
      return rep.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << "unknown name: " << e.what() << "\n";
    return 2;
  } catch (const OrderMismatch& e) {
    err << "order mismatch: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ginv
