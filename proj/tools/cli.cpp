#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "parcomp/classify.hpp"
#include "parcomp/json_io.hpp"

namespace parcomp::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv, Table };

struct CliConfig {
  std::string command;
  std::string pair_tag;
  std::optional<int> n;
  std::optional<int> m;
  std::string base;
  std::string host;
  std::optional<int> rank;
  std::string name;
  std::optional<std::string> pi;
  std::optional<std::string> witness;
  std::string format;
  std::string output_path;
  unsigned jobs = 1;
};

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw UsageError("unknown format '" + s + "' (expected json, csv or table)");
}

ColorMode color_mode(const Environment& env, std::ostream& err) {
  if (!env.color || env.color->empty() || *env.color == "auto") return ColorMode::Auto;
  if (*env.color == "never") return ColorMode::Never;
  if (*env.color == "always") return ColorMode::Always;
  err << "warning: ignoring PARCOMP_COLOR=" << *env.color << " (expected auto, never or always)\n";
  return ColorMode::Auto;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') text.erase(0, 1);
  if (!text.empty() && text.back() == '}') text.pop_back();
  std::vector<std::string> items;
  if (trim(text).empty()) return items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(trim(item));
  return items;
}

ParabolicIndex parse_pi(const std::string& text, int rank) {
  std::vector<int> idx;
  for (const auto& item : split_list(text)) {
    if (item.empty() || item.size() > 4 || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw UsageError("malformed --pi list '" + text + "'");
    }
    idx.push_back(std::stoi(item));
  }
  ParabolicIndex pi(std::move(idx));
  try {
    pi.validate(rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--pi: ") + e.what());
  }
  return pi;
}

RatVector parse_rational_list(const std::string& text) {
  RatVector v;
  for (const auto& item : split_list(text)) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw UsageError("malformed rational list '" + text + "'");
    }
  }
  return v;
}

std::string join(std::span<const Rational> v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s;
}

std::string classes_str(const std::vector<std::vector<int>>& classes) {
  std::string s;
  for (const auto& c : classes) {
    if (!s.empty()) s += ' ';
    s += ParabolicIndex(c).str();
  }
  return s;
}

PairFamily family_from(const CliConfig& cfg) {
  if (cfg.pair_tag.empty()) throw UsageError("--pair is required");
  FamilyKind kind;
  try {
    kind = family_kind_from_tag(cfg.pair_tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string(flag) + " is required for --pair " + cfg.pair_tag);
    return *v;
  };
  auto cartan = [&](const std::string& label, const char* flag) {
    if (label.empty()) throw UsageError(std::string(flag) + " is required for --pair " + cfg.pair_tag);
    std::string full = label;
    if (cfg.rank) full += std::to_string(*cfg.rank);
    try {
      return CartanType::parse(full);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  };
  PairFamily f;
  switch (kind) {
    case FamilyKind::SlSoOdd: f = PairFamily::sl_so_odd(need(cfg.n, "--n")); break;
    case FamilyKind::SlSoEven: f = PairFamily::sl_so_even(need(cfg.n, "--n")); break;
    case FamilyKind::SlSp: f = PairFamily::sl_sp(need(cfg.n, "--n")); break;
    case FamilyKind::SoSoOddOdd: f = PairFamily::so_so(need(cfg.m, "--m"), need(cfg.n, "--n")); break;
    case FamilyKind::E6Sp8: f = PairFamily::e6_sp8(); break;
    case FamilyKind::E6F4: f = PairFamily::e6_f4(); break;
    case FamilyKind::Diagonal: f = PairFamily::diagonal(cartan(cfg.base, "--base")); break;
    case FamilyKind::EqualRank: f = PairFamily::equal_rank(cartan(cfg.host, "--host"), cfg.name); break;
  }
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return f;
}

SymmetricPair pair_from(const CliConfig& cfg) { return build_pair(family_from(cfg)); }

std::vector<PairFamily> reference_families() {
  return {PairFamily::sl_so_odd(2),        PairFamily::sl_so_even(2), PairFamily::sl_sp(2),
          PairFamily::so_so(2, 1),         PairFamily::e6_sp8(),      PairFamily::e6_f4(),
          PairFamily::diagonal(CartanType::A(2)), PairFamily::equal_rank(CartanType::A(3), "s(gl(2)+gl(2))")};
}

std::vector<PairFamily> acceptance_families() {
  return {PairFamily::sl_so_odd(2),
          PairFamily::sl_so_odd(3),
          PairFamily::sl_so_even(2),
          PairFamily::sl_so_even(3),
          PairFamily::sl_sp(2),
          PairFamily::sl_sp(3),
          PairFamily::so_so(2, 1),
          PairFamily::so_so(2, 2),
          PairFamily::so_so(3, 1),
          PairFamily::e6_sp8(),
          PairFamily::e6_f4(),
          PairFamily::diagonal(CartanType::A(1)),
          PairFamily::diagonal(CartanType::A(2)),
          PairFamily::diagonal(CartanType::A(3)),
          PairFamily::equal_rank(CartanType::A(3)),
          PairFamily::equal_rank(CartanType::D(4)),
          PairFamily::equal_rank(CartanType::E6())};
}

struct Table2Row {
  PairFamily reference;  // parameters at which the closed form is re-derived
  std::string g;
  std::string g_tau;
  std::string simple_system;
  std::string classes;
};

std::vector<Table2Row> table2_rows() {
  return {
      {PairFamily::sl_so_odd(3), "sl(2n+1)", "so(2n+1)", "{a_i-a_{i+1} | 1<=i<=2n}",
       "{a_k-a_{k+1}, a_{2n+1-k}-a_{2n+2-k}} for 1<=k<=n"},
      {PairFamily::sl_so_even(3), "sl(2n)", "so(2n)", "{a_i-a_{i+1} | 1<=i<=2n-1}",
       "{a_k-a_{k+1}, a_{2n-k}-a_{2n+1-k}} for 1<=k<=n-1"},
      {PairFamily::sl_sp(3), "sl(2n)", "sp(2n)", "{a_i-a_{i+1} | 1<=i<=2n-1}",
       "{a_k-a_{k+1}, a_{2n-k}-a_{2n+1-k}} for 1<=k<=n-1"},
      {PairFamily::so_so(2, 2), "so(2m+2n)", "so(2m-1)+so(2n+1)",
       "{a_i-a_{i+1} | 1<=i<=m+n-1} u {a_{m+n-1}+a_{m+n}}", "{a_{m+n-1}-a_{m+n}, a_{m+n-1}+a_{m+n}}"},
      {PairFamily::e6_sp8(), "e6", "sp(8)", "{alpha_i | 1<=i<=6}", "{alpha_2, alpha_6} and {alpha_3, alpha_5}"},
      {PairFamily::e6_f4(), "e6", "f4", "{alpha_i | 1<=i<=6}", "{alpha_2, alpha_6} and {alpha_3, alpha_5}"},
  };
}

std::string reference_params(const PairFamily& f) {
  switch (f.kind) {
    case FamilyKind::SlSoOdd:
    case FamilyKind::SlSoEven:
    case FamilyKind::SlSp: return "n=" + std::to_string(f.n);
    case FamilyKind::SoSoOddOdd: return "m=" + std::to_string(f.m) + ",n=" + std::to_string(f.n);
    default: return "fixed";
  }
}

std::vector<std::vector<int>> paired(const std::vector<std::vector<int>>& classes) {
  std::vector<std::vector<int>> out;
  for (const auto& c : classes) {
    if (c.size() > 1) out.push_back(c);
  }
  return out;
}

class Painter {
 public:
  explicit Painter(bool enabled) : enabled_(enabled) {}
  std::string yes_no(bool v) const {
    if (!enabled_) return v ? "yes" : "no";
    return v ? "\033[32myes\033[0m" : "\033[31mno\033[0m";
  }

 private:
  bool enabled_;
};

void print_pair_header(std::ostream& os, const SymmetricPair& pair) {
  os << pair.family.describe() << "  host " << pair.host.label() << "  dim h' = " << pair.hprime_dim << '\n';
  os << "restriction classes: " << classes_str(pair.classes) << '\n';
}

int cmd_list_pairs(const CliConfig& cfg, std::ostream& out) {
  std::vector<SymmetricPair> pairs;
  if (!cfg.pair_tag.empty()) {
    pairs.push_back(pair_from(cfg));
  } else {
    for (const auto& f : reference_families()) pairs.push_back(build_pair(f));
  }
  if (parse_format(cfg.format, Format::Table) == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pairs) arr.push_back(to_json(p));
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  out << std::left << std::setw(12) << "tag" << std::setw(34) << "pair" << std::setw(8) << "host" << std::setw(6)
      << "h'" << "classes\n";
  for (const auto& p : pairs) {
    out << std::setw(12) << tag(p.family.kind) << std::setw(34) << p.family.describe() << std::setw(8)
        << p.host.label() << std::setw(6) << p.hprime_dim << classes_str(p.classes) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const CliConfig& cfg, std::ostream& out, const Painter& paint) {
  SymmetricPair pair = pair_from(cfg);
  Classification c = classify_all(pair, cfg.jobs);
  switch (parse_format(cfg.format, Format::Table)) {
    case Format::Json: out << to_json(c).dump(2) << '\n'; break;
    case Format::Csv: out << to_csv(c); break;
    case Format::Table:
      print_pair_header(out, pair);
      out << std::left << std::setw(24) << "pi" << std::setw(12) << "compatible" << "witness\n";
      for (const auto& r : c.results) {
        std::string mark = paint.yes_no(r.compatible);
        out << std::setw(24) << r.pi.str() << mark << std::string(12 - (r.compatible ? 3 : 2), ' ')
            << (r.witness ? join(*r.witness) : "") << '\n';
      }
      out << "compatible: " << c.compatible_count << " of " << c.total() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
  SymmetricPair pair = pair_from(cfg);
  if (!cfg.pi) throw UsageError("--pi is required for check");
  ParabolicIndex pi = parse_pi(*cfg.pi, pair.rank());
  CompatibilityResult r = is_compatible(pair, pi);
  bool predicted = class_predicate(pair, pi);
  if (parse_format(cfg.format, Format::Table) == Format::Json) {
    nlohmann::json j = to_json(r);
    j["pair"] = to_json(pair);
    j["predicate"] = predicted;
    out << j.dump(2) << '\n';
  } else {
    out << pair.family.describe() << " pi=" << pi.str() << ": " << (r.compatible ? "compatible" : "incompatible")
        << '\n';
    if (r.compatible) {
      out << "witness (h'): " << join(*r.witness) << '\n';
      out << "embedded (h): " << join(*r.embedded_witness) << '\n';
      out << "simple-root values: " << join(pair.host.simple_values(*r.embedded_witness)) << '\n';
    }
    out << "class predicate: " << (predicted ? "compatible" : "incompatible") << '\n';
  }
  return predicted == r.compatible ? kExitOk : kExitIntegrity;
}

int cmd_witness(const CliConfig& cfg, std::ostream& out) {
  SymmetricPair pair = pair_from(cfg);
  ParabolicIndex pi = cfg.pi ? parse_pi(*cfg.pi, pair.rank()) : ParabolicIndex();
  const bool explicit_borel = !cfg.witness;
  if (explicit_borel && !pi.empty()) throw UsageError("--w is required unless --pi is empty");
  RatVector w;
  if (explicit_borel) {
    try {
      w = borel_witness(pair);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(e.what()) + "; pass --w");
    }
  } else {
    w = parse_rational_list(*cfg.witness);
    if (w.size() != pair.hprime_dim) {
      throw UsageError("--w has " + std::to_string(w.size()) + " entries, dim h' = " +
                       std::to_string(pair.hprime_dim));
    }
  }
  bool valid = verify_witness(pair, pi, w);
  RatVector h = pair.embed(w);
  RatVector values = pair.host.simple_values(h);
  if (parse_format(cfg.format, Format::Table) == Format::Json) {
    nlohmann::json j = {{"pair", to_json(pair)},
                        {"pi", pi.indices()},
                        {"witness", to_json(w)},
                        {"embedded_witness", to_json(h)},
                        {"simple_root_values", to_json(values)},
                        {"valid", valid}};
    out << j.dump(2) << '\n';
  } else {
    out << pair.family.describe() << " pi=" << pi.str() << '\n';
    out << "witness (h'): " << join(w) << '\n';
    out << "embedded (h): " << join(h) << '\n';
    out << "simple-root values: " << join(values) << '\n';
    out << (valid ? "valid" : "invalid") << '\n';
  }
  // The built-in Borel witnesses must always verify.
  return explicit_borel && !valid ? kExitIntegrity : kExitOk;
}

int cmd_table2(const CliConfig& cfg, std::ostream& out) {
  auto rows = table2_rows();
  bool all_ok = true;
  std::vector<bool> verified;
  for (const auto& row : rows) {
    SymmetricPair pair = build_pair(row.reference);
    bool ok = paired(pair.classes) == literal_paired_classes(row.reference) && cross_check(pair).ok();
    verified.push_back(ok);
    all_ok = all_ok && ok;
  }
  switch (parse_format(cfg.format, Format::Table)) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        arr.push_back({{"family", std::string(tag(row.reference.kind))},
                       {"g", row.g},
                       {"g_tau", row.g_tau},
                       {"simple_system", row.simple_system},
                       {"classes", row.classes},
                       {"reference", reference_params(row.reference)},
                       {"reference_classes", literal_paired_classes(row.reference)},
                       {"verified", static_cast<bool>(verified[k])}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "family;g;g_tau;simple_system;classes;reference;verified\n";
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        out << tag(row.reference.kind) << ';' << row.g << ';' << row.g_tau << ';' << row.simple_system << ';'
            << row.classes << ';' << reference_params(row.reference) << ';' << (verified[k] ? "true" : "false")
            << '\n';
      }
      break;
    case Format::Table:
      out << "Compatible standard parabolics p_Pi: for each class P', either P' in Pi or P' and Pi disjoint\n";
      out << std::left << std::setw(12) << "family" << std::setw(11) << "g" << std::setw(19) << "g^tau"
          << std::setw(52) << "simple system" << std::setw(54) << "classes P'" << "verified at\n";
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        out << std::setw(12) << tag(row.reference.kind) << std::setw(11) << row.g << std::setw(19) << row.g_tau
            << std::setw(52) << row.simple_system << std::setw(54) << row.classes
            << (verified[k] ? reference_params(row.reference) : std::string("MISMATCH")) << '\n';
      }
      break;
  }
  return all_ok ? kExitOk : kExitIntegrity;
}

int cmd_cross_check(const CliConfig& cfg, std::ostream& out) {
  std::vector<PairFamily> families;
  if (!cfg.pair_tag.empty()) {
    families.push_back(family_from(cfg));
  } else {
    families = acceptance_families();
  }
  const bool json = parse_format(cfg.format, Format::Table) == Format::Json;
  nlohmann::json arr = nlohmann::json::array();
  std::size_t mismatches = 0;
  for (const auto& f : families) {
    SymmetricPair pair = build_pair(f);
    CrossCheckReport report = cross_check(pair, cfg.jobs);
    mismatches += report.mismatches.size();
    if (json) {
      nlohmann::json j = to_json(report);
      j["pair"] = to_json(pair);
      arr.push_back(j);
    } else {
      out << std::left << std::setw(36) << f.describe() << (report.ok() ? "OK" : "MISMATCH") << "  subsets "
          << report.total << "  compatible " << report.oracle_compatible << '\n';
      for (const auto& pi : report.mismatches) out << "  mismatch at pi=" << pi.str() << '\n';
    }
  }
  if (json) {
    out << arr.dump(2) << '\n';
  } else {
    out << "mismatches: " << mismatches << '\n';
  }
  return mismatches == 0 ? kExitOk : kExitIntegrity;
}

void add_pair_options(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--pair", cfg.pair_tag,
                  "pair family: sl-so-odd, sl-so-even, sl-sp, so-so, e6-sp8, e6-f4, diagonal, equal-rank");
  sub->add_option("--n", cfg.n, "family parameter n");
  sub->add_option("--m", cfg.m, "family parameter m (so-so)");
  sub->add_option("--base", cfg.base, "diagonal: base root system, e.g. A2 (or A with --rank)");
  sub->add_option("--host", cfg.host, "equal-rank: host root system, e.g. E6 (or E with --rank)");
  sub->add_option("--rank", cfg.rank, "rank completing --base/--host");
  sub->add_option("--name", cfg.name, "equal-rank: display name of the subalgebra");
}

void add_output_options(CLI::App* sub, CliConfig& cfg, const std::string& formats) {
  sub->add_option("--format", cfg.format, "output format: " + formats);
  sub->add_option("--output", cfg.output_path, "write data to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CliConfig cfg;
  CLI::App app{"Compatible standard parabolic subalgebras for complex symmetric pairs", "parcomp"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list-pairs", "list the pair catalog");
  add_pair_options(list, cfg);
  add_output_options(list, cfg, "json|table");

  auto* classify = app.add_subcommand("classify", "decide compatibility of every standard parabolic");
  add_pair_options(classify, cfg);
  add_output_options(classify, cfg, "json|csv|table");
  classify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* check = app.add_subcommand("check", "decide compatibility of one standard parabolic");
  add_pair_options(check, cfg);
  add_output_options(check, cfg, "json|table");
  check->add_option("--pi", cfg.pi, "simple-root indices, e.g. 3,5");

  auto* witness = app.add_subcommand("witness", "verify a hyperbolic element of h' against Pi");
  add_pair_options(witness, cfg);
  add_output_options(witness, cfg, "json|table");
  witness->add_option("--pi", cfg.pi, "simple-root indices (default: empty, the Borel)");
  witness->add_option("--w", cfg.witness, "element of h' as comma-separated rationals (default: built-in Borel witness)");

  auto* table2 = app.add_subcommand("table2", "closed-form classification for the unequal-rank families");
  add_output_options(table2, cfg, "json|csv|table");

  auto* cross = app.add_subcommand("cross-check", "compare the feasibility oracle with the class predicate");
  add_pair_options(cross, cfg);
  add_output_options(cross, cfg, "json|table");
  cross->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  Painter paint(false);
  switch (color_mode(env, err)) {
    case ColorMode::Always: paint = Painter(true); break;
    case ColorMode::Never: break;
    case ColorMode::Auto: paint = Painter(env.stdout_is_tty && cfg.output_path.empty()); break;
  }

  std::ofstream file;
  std::ostream* data = &out;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      err << "error: cannot open " << cfg.output_path << " for writing\n";
      return kExitUsage;
    }
    data = &file;
  }

  try {
    int code = kExitOk;
    if (list->parsed()) {
      code = cmd_list_pairs(cfg, *data);
    } else if (classify->parsed()) {
      code = cmd_classify(cfg, *data, paint);
    } else if (check->parsed()) {
      code = cmd_check(cfg, *data);
    } else if (witness->parsed()) {
      code = cmd_witness(cfg, *data);
    } else if (table2->parsed()) {
      code = cmd_table2(cfg, *data);
    } else if (cross->parsed()) {
      code = cmd_cross_check(cfg, *data);
    }
    if (code == kExitIntegrity) err << "error: integrity check failed\n";
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitIntegrity;
  }
}

}  // namespace parcomp::cli
