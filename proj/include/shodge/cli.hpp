#pragma once

// Command-line front end. Everything lives in run() so the whole command
// surface, including exit codes, can be driven in-process by tests.
//
// Exit codes: 0 success, 1 validation failure, 2 input or parse error,
// 3 enumeration budget exceeded, 4 internal consistency failure.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shodge/diamond_json.hpp"
#include "shodge/error.hpp"
#include "shodge/flagcoh.hpp"
#include "shodge/rootsys.hpp"
#include "shodge/sasaki.hpp"

namespace shodge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kInternalError = 4,
};

inline constexpr const char* kBudgetEnvVar = "SHODGE_ENUM_BUDGET";

/// A parsed `TYPE RANK [--levi NODES]` expression.
struct GroupExpr {
  std::string source;
  CartanType type = CartanType::A;
  int rank = 1;
  /// Explicit node list; empty when no --levi was given or an alias was used.
  std::vector<int> levi_nodes;
  /// Named Levi subdiagram such as "E6" (written @E6).
  std::optional<std::string> levi_alias;
  bool has_levi = false;

  /// Canonical form: upper-case type, no inner spaces, sorted node list.
  std::string render() const {
    std::string s = to_char(type) + std::to_string(rank);
    if (!has_levi) return s;
    s += " --levi ";
    if (levi_alias) return s + "@" + *levi_alias;
    if (levi_nodes.empty()) return s + "none";
    for (std::size_t i = 0; i < levi_nodes.size(); ++i) s += (i ? "," : "") + std::to_string(levi_nodes[i]);
    return s;
  }
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  bool consume(const std::string& token) {
    skip_ws();
    if (s_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  char type_letter() {
    skip_ws();
    const char c = peek();
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up < 'A' || up > 'G') throw ParseError(pos_, "Cartan type letter A-G");
    ++pos_;
    return up;
  }

  int number(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 100000) throw ParseError(start, std::string(what) + " of reasonable size");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, what);
    return static_cast<int>(value);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `TYPE RANK [--levi NODES]`, where NODES is a comma-separated list,
/// `none`, or an alias `@TYPE RANK`. Whitespace is ignored between tokens and
/// the type letter is case-insensitive. Throws ParseError or RankError.
inline GroupExpr parse_group_expr(const std::string& text) {
  GroupExpr g;
  g.source = text;
  detail::Cursor cur(text);
  g.type = cartan_type_from_char(cur.type_letter());
  g.rank = cur.number("rank digits");
  if (!is_valid_simple_type(g.type, g.rank))
    throw RankError(std::string("no simple root system of type ") + to_char(g.type) + std::to_string(g.rank));

  if (cur.at_end()) return g;
  if (!cur.consume("--levi")) throw ParseError(cur.pos(), "'--levi' or end of input");
  g.has_levi = true;
  if (cur.at_end() || cur.consume("none")) {
    // empty node set
  } else if (cur.consume("@")) {
    const char t = cur.type_letter();
    const int r = cur.number("alias rank digits");
    g.levi_alias = std::string(1, t) + std::to_string(r);
  } else {
    g.levi_nodes.push_back(cur.number("node number"));
    while (cur.consume(",")) g.levi_nodes.push_back(cur.number("node number"));
    std::sort(g.levi_nodes.begin(), g.levi_nodes.end());
  }
  if (!cur.at_end()) throw ParseError(cur.pos(), "',' or end of input");
  return g;
}

/// Named Levi subsets. The standard E_6 inside E_7 (or E_8) is nodes 1..6, and
/// E_7 inside E_8 is nodes 1..7.
inline LeviSpec resolve_alias(CartanType type, int rank, const std::string& alias) {
  auto first_nodes = [rank](int k) {
    std::vector<int> v;
    for (int i = 1; i <= k; ++i) v.push_back(i);
    return LeviSpec(rank, v);
  };
  if (type == CartanType::E && alias == "E6" && rank >= 7) return first_nodes(6);
  if (type == CartanType::E && alias == "E7" && rank == 8) return first_nodes(7);
  if (alias == std::string(1, to_char(type)) + std::to_string(rank)) return LeviSpec::all(rank);
  throw InvalidLevi("no Levi alias @" + alias + " in " + std::string(1, to_char(type)) + std::to_string(rank));
}

inline LeviSpec resolve_levi(const GroupExpr& g) {
  if (g.levi_alias) return resolve_alias(g.type, g.rank, *g.levi_alias);
  return LeviSpec(g.rank, g.levi_nodes);
}

namespace detail {

inline std::size_t budget_from_env() {
  const char* v = std::getenv(kBudgetEnvVar);
  if (!v || !*v) return kDefaultEnumerationBudget;
  char* end = nullptr;
  const unsigned long long b = std::strtoull(v, &end, 10);
  if (*end != '\0' || b == 0) throw InputError(std::string(kBudgetEnvVar) + " must be a positive integer");
  return static_cast<std::size_t>(b);
}

inline std::string join_u64(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline void print_diamond(std::ostream& out, const HodgeDiamond& d) {
  std::size_t w = 1;
  for (const auto& row : d.entries())
    for (auto v : row) w = std::max(w, std::to_string(v).size());
  w = std::max<std::size_t>(w, std::to_string(d.n()).size() + 2);
  out << "  h^{p,q}";
  for (int q = 0; q <= d.n(); ++q) out << ' ' << std::setw(static_cast<int>(w)) << ("q" + std::to_string(q));
  out << '\n';
  for (int p = 0; p <= d.n(); ++p) {
    out << "  " << std::setw(7) << ("p" + std::to_string(p));
    for (int q = 0; q <= d.n(); ++q) out << ' ' << std::setw(static_cast<int>(w)) << d.at(p, q);
    out << '\n';
  }
}

inline void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& r : report.rules) {
    out << (r.passed ? "PASS " : "FAIL ") << r.rule << '\n';
    for (const auto& w : r.witnesses) out << "     at (" << w.p << "," << w.q << "): " << w.detail << '\n';
  }
}

inline std::string help_footer() {
  return std::string(dynkin_diagrams()) +
         "\nGroups are written TYPE RANK, e.g. E7 or a3. Levi nodes are a comma list,\n"
         "'none', or an alias: @E6 in E7/E8 (nodes 1-6), @E7 in E8 (nodes 1-7).\n"
         "Without --levi the Levi subset is empty (full flag manifold G/T).\n\n"
         "Exit codes: 0 ok, 1 validation failure, 2 input error, 3 budget exceeded,\n"
         "4 internal consistency failure. " +
         kBudgetEnvVar + " overrides the enumeration budget (default 10000000).\n";
}

struct Options {
  std::string format = "text";
  std::vector<std::string> group;
  std::string levi;
  bool levi_given = false;
  bool verify = false;
  int sphere_n = 0;
  std::string file;
  bool lefschetz = false;
  bool finite_leaves = false;
  bool positive = false;
};

inline GroupExpr group_from_options(const Options& o) {
  std::string text;
  for (const auto& t : o.group) text += t + " ";
  if (o.levi_given) text += "--levi " + o.levi;
  return parse_group_expr(text);
}

inline Json group_json(const GroupExpr& g, const LeviSpec& levi, const std::string& label) {
  return {{"group", std::string(1, to_char(g.type)) + std::to_string(g.rank)},
          {"levi", levi.nodes()},
          {"label", label}};
}

inline int cmd_poincare(const Options& o, std::ostream& out, std::size_t budget) {
  const GroupExpr g = group_from_options(o);
  const RootSystem rs = build_root_system(g.type, g.rank);
  const LeviSpec levi = resolve_levi(g);
  const GroupSpec h = levi_decompose(rs, levi);
  const std::string label = rs.name() + "/" + h.to_string();
  const IntPolynomial borel = poincare_borel(exponents(rs), levi_exponents(h));

  std::optional<IntPolynomial> bruhat;
  if (o.verify) bruhat = poincare_coset(rs, levi, budget);
  const bool agree = !bruhat || *bruhat == borel;

  if (o.format == "json") {
    Json j = group_json(g, levi, label);
    j["poincare"] = polynomial_to_json(borel);
    if (bruhat) {
      j["poincare_bruhat"] = polynomial_to_json(*bruhat);
      j["verified"] = agree;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "G/H      = " << label << '\n';
    out << "P_t(G/H) = " << borel << '\n';
    if (bruhat) {
      out << "Bruhat   = " << *bruhat << '\n';
      out << "verified: " << (agree ? "yes" : "NO") << '\n';
    }
  }
  return agree ? kSuccess : kInternalError;
}

inline int cmd_euler(const Options& o, std::ostream& out) {
  const GroupExpr g = group_from_options(o);
  const RootSystem rs = build_root_system(g.type, g.rank);
  const LeviSpec levi = resolve_levi(g);
  const GroupSpec h = levi_decompose(rs, levi);
  const ExponentSet ge = exponents(rs), le = levi_exponents(h);
  const std::string label = rs.name() + "/" + h.to_string();
  const EulerRoutes r{euler_number(ge, le), euler_weyl(rs, levi), to_u64(eval_at_one(poincare_borel(ge, le)))};
  const bool agree = r.degree_formula == r.weyl_quotient && r.weyl_quotient == r.poincare_at_one;

  if (o.format == "json") {
    Json j = group_json(g, levi, label);
    j["euler"] = r.degree_formula;
    j["euler_routes"] = {{"degree_formula", r.degree_formula},
                         {"weyl_quotient", r.weyl_quotient},
                         {"poincare_at_one", r.poincare_at_one}};
    j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    out << "G/H                          = " << label << '\n';
    out << "chi, prod (g_i+1)/(l_i+1)    = " << r.degree_formula << '\n';
    out << "chi, |W(G)|/|W(H)|           = " << r.weyl_quotient << '\n';
    out << "chi, P_t(G/H) at t = 1       = " << r.poincare_at_one << '\n';
    out << "agree: " << (agree ? "yes" : "NO") << '\n';
  }
  return agree ? kSuccess : kInternalError;
}

inline int cmd_diamond(const Options& o, std::ostream& out, std::size_t budget) {
  const GroupExpr g = group_from_options(o);
  const RootSystem rs = build_root_system(g.type, g.rank);
  const LeviSpec levi = resolve_levi(g);
  const FlagCohomology flag = compute_flag_cohomology(rs, levi, budget);
  const SasakiStructureRecord rec = flag_record(flag);

  if (o.format == "json") {
    Json j = record_to_json(rec);
    j["poincare"] = polynomial_to_json(flag.poincare);
    j["euler"] = flag.euler;
    j["levi"] = levi.nodes();
    out << j.dump(2) << '\n';
  } else {
    out << "Sasakian structure over " << rec.name << " (n = " << rec.diamond.n() << ")\n";
    print_diamond(out, rec.diamond);
    out << "basic Betti  = " << join_u64(flag.betti.entries) << '\n';
    out << "P_t(M,F)     = " << flag.poincare << '\n';
    out << "closed leaves = " << *rec.closed_leaf_count << '\n';
  }
  return kSuccess;
}

inline int cmd_sphere(const Options& o, std::ostream& out) {
  const HodgeDiamond d = sphere_diamond(o.sphere_n);
  const std::string name = "S" + std::to_string(2 * o.sphere_n + 1);
  if (o.format == "json") {
    Json j = diamond_to_json(d);
    j["name"] = name;
    out << j.dump(2) << '\n';
  } else {
    out << "Basic Hodge diamond of a Sasakian " << name << " (n = " << d.n() << ")\n";
    print_diamond(out, d);
  }
  return kSuccess;
}

inline int cmd_validate(const Options& o, std::ostream& out) {
  std::ifstream in(o.file);
  if (!in) throw InputError("cannot open " + o.file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(o.file + ": " + e.what());
  }
  DiamondDocument doc = record_from_json(j);
  if (!doc.has_name) doc.record.name = o.file;

  ValidationReport report = validate_diamond(doc.record.diamond, {o.lefschetz});
  if (o.finite_leaves) {
    if (!doc.has_closed_leaves) doc.record.closed_leaf_count = 1;
    for (auto& r : check_finite_closed_leaves_vanishing(doc.record).rules) report.rules.push_back(std::move(r));
  }
  if (o.positive) {
    if (!doc.has_positivity) doc.record.positivity = Positivity::positive;
    for (auto& r : check_positivity_vanishing(doc.record).rules) report.rules.push_back(std::move(r));
  }

  if (o.format == "json") {
    Json rj = report_to_json(report);
    rj["name"] = doc.record.name;
    out << rj.dump(2) << '\n';
  } else {
    out << doc.record.name << '\n';
    print_report(out, report);
    out << (report.passed() ? "valid" : "INVALID") << '\n';
  }
  return report.passed() ? kSuccess : kValidationFailure;
}

inline int cmd_fixtures(const Options& o, std::ostream& out) {
  const auto fixtures = builtin_fixtures();
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& f : fixtures) {
      Json j = record_to_json(f);
      j["betti"] = betti_from_diamond(f.diamond);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return kSuccess;
  }
  for (const auto& f : fixtures) {
    out << f.name << "  (n = " << f.diamond.n() << ", " << to_string(f.positivity) << ", closed leaves "
        << (f.closed_leaf_count ? std::to_string(*f.closed_leaf_count) : "infinite") << ")\n";
    print_diamond(out, f.diamond);
    out << "  basic Betti:";
    for (auto b : betti_from_diamond(f.diamond)) out << ' ' << b;
    out << "\n\n";
  }
  return kSuccess;
}

}  // namespace detail

/// Runs the command line given as argv (argv[0] is the program name).
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Basic Hodge numbers of Sasakian structures over generalized flag manifolds", "sasaki-hodge"};
  app.footer(detail::help_footer());
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});
  app.add_option("--format", o.format, "Output format")->check(formats);

  auto add_group_args = [&](CLI::App* sub) {
    sub->add_option("group", o.group, "Group, e.g. E7 or A3")->required()->expected(1, 2);
    sub->add_option("--levi", o.levi, "Levi nodes: 1,3 | none | @E6");
    sub->add_option("--format", o.format, "Output format")->check(formats);
  };
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of G/H");
  add_group_args(poincare);
  poincare->add_flag("--verify", o.verify, "Also compute it from the Bruhat decomposition");
  auto* euler = app.add_subcommand("euler", "Euler number of G/H by three routes");
  add_group_args(euler);
  auto* diamond = app.add_subcommand("diamond", "Basic Hodge diamond and closed-leaf count over G/H");
  add_group_args(diamond);
  auto* sphere = app.add_subcommand("sphere", "Basic Hodge diamond of a Sasakian (2n+1)-sphere");
  sphere->add_option("n", o.sphere_n, "n >= 1")->required();
  sphere->add_option("--format", o.format, "Output format")->check(formats);
  auto* validate = app.add_subcommand("validate", "Audit a diamond JSON file");
  validate->add_option("file", o.file, "Diamond JSON file")->required();
  validate->add_flag("--lefschetz", o.lefschetz, "Check h^{p,q} <= h^{p+1,q+1} for p+q < n");
  validate->add_flag("--finite-leaves", o.finite_leaves, "Check off-diagonal vanishing (finitely many closed leaves)");
  validate->add_flag("--positive", o.positive, "Check h^{p,0} = h^{0,p} = 0 (positive structure)");
  validate->add_option("--format", o.format, "Output format")->check(formats);
  auto* fixtures = app.add_subcommand("fixtures", "Dump the built-in reference structures");
  fixtures->add_option("--format", o.format, "Output format")->check(formats);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  for (auto* sub : {poincare, euler, diamond})
    if (sub->parsed() && sub->count("--levi") > 0) o.levi_given = true;

  try {
    const std::size_t budget = detail::budget_from_env();
    if (poincare->parsed()) return detail::cmd_poincare(o, out, budget);
    if (euler->parsed()) return detail::cmd_euler(o, out);
    if (diamond->parsed()) return detail::cmd_diamond(o, out, budget);
    if (sphere->parsed()) return detail::cmd_sphere(o, out);
    if (validate->parsed()) return detail::cmd_validate(o, out);
    if (fixtures->parsed()) return detail::cmd_fixtures(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const EnumerationBudgetExceeded& e) {
    err << "error: " << e.what() << " (raise " << kBudgetEnvVar << " to allow it)\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace shodge::cli
