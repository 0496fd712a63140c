#include "osalg/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "osalg/errors.hpp"
#include "osalg/io.hpp"

namespace osalg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

int max_enumeration_size() {
  const char* env = std::getenv("OSALG_MAX_N");
  if (!env || !*env) return 12;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw input_error("OSALG_MAX_N must be an integer");
  }
}

struct SourceOptions {
  std::string matroid_file;
  std::string arrangement_file;
  std::string algebra = "os";
  std::string config_file;
  bool json = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--matroid", src.matroid_file, "matroid JSON file");
  cmd->add_option("--arrangement", src.arrangement_file, "arrangement JSON file");
  cmd->add_option("--algebra", src.algebra, "chi kind: os, ot or sign (default os)");
  cmd->add_option("--config", src.config_file, "algebra config JSON (beta overrides)");
  cmd->add_flag("--json", src.json, "emit JSON instead of text");
}

struct Context {
  Matroid matroid;
  std::optional<Arrangement> arrangement;
  std::optional<ChiMap> chi;  // built on demand
};

Matroid load_source_matroid(const SourceOptions& src, std::optional<Arrangement>& arrangement) {
  if (src.matroid_file.empty() == src.arrangement_file.empty())
    throw input_error("exactly one of --matroid and --arrangement is required");
  if (!src.arrangement_file.empty()) {
    arrangement = load_arrangement_file(src.arrangement_file);
    return matroid_from_vectors(*arrangement);
  }
  return load_matroid_file(src.matroid_file);
}

Context build_context(const SourceOptions& src, bool need_chi) {
  if (src.algebra != "os" && src.algebra != "ot" && src.algebra != "sign")
    throw input_error("--algebra must be one of os, ot, sign");
  Context ctx{Matroid(0, {}), std::nullopt, std::nullopt};
  ctx.matroid = load_source_matroid(src, ctx.arrangement);
  if (!need_chi) return ctx;

  if ((src.algebra == "ot" || src.algebra == "sign") && !ctx.arrangement)
    throw input_error("--algebra " + src.algebra + " requires --arrangement");

  std::optional<BetaTable> beta;
  if (!src.config_file.empty()) {
    Scalar def = src.algebra == "os" ? Scalar(-1) : Scalar(1);
    beta = load_beta_config_file(src.config_file, ctx.matroid.ambient_size(), def);
  }
  if (src.algebra == "os")
    ctx.chi = make_chi_os(ctx.matroid, std::move(beta));
  else if (src.algebra == "ot")
    ctx.chi = make_chi_ot(*ctx.arrangement, std::move(beta));
  else
    ctx.chi = make_chi_sign(*ctx.arrangement, std::move(beta));
  return ctx;
}

OrderedTuple parse_tuple_list(const std::string& text, const char* flag) {
  OrderedTuple t;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      t.entries.push_back(v);
    } catch (const std::exception&) {
      throw input_error(std::string(flag) + ": \"" + part + "\" is not an element index");
    }
  }
  if (t.entries.empty()) throw input_error(std::string(flag) + " must list at least one element");
  return t;
}

std::string format_support(ElementSet s) {
  std::string out;
  bool compact = s.empty() || s.max() <= 9;
  for (GroundElement e : s.elements()) {
    if (!compact && !out.empty()) out += ",";
    out += std::to_string(e);
  }
  return out;
}

std::string format_element(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [support, coeff] : e.terms()) {
    if (!out.empty()) out += "  ";
    out += "e[" + format_support(support) + "]: " + scalar_to_string(coeff);
  }
  return out;
}

nlohmann::json element_json(const AlgebraElement& e) {
  return nlohmann::json::parse(element_to_json(e));
}

DiagonalBasisCandidate default_candidate(const Matroid& m, int level) {
  return nbc_candidate(m, level);
}

int cmd_nbc(const SourceOptions& src, int level, std::ostream& out) {
  Context ctx = build_context(src, /*need_chi=*/false);
  if (level < 0 || level > ctx.matroid.rank())
    throw input_error("--level must be between 0 and the rank " +
                      std::to_string(ctx.matroid.rank()));
  std::vector<ElementSet> sets = ctx.matroid.nbc_sets(level);
  if (src.json) {
    nlohmann::json j;
    j["level"] = level;
    auto arr = nlohmann::json::array();
    for (ElementSet s : sets) arr.push_back(s.elements());
    j["sets"] = std::move(arr);
    out << j.dump() << "\n";
  } else {
    for (ElementSet s : sets) out << s.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_dims(const SourceOptions& src, std::ostream& out) {
  Context ctx = build_context(src, /*need_chi=*/false);
  std::vector<int> dims;
  for (int level = 0; level <= ctx.matroid.rank(); ++level)
    dims.push_back(dimension(ctx.matroid, level));
  if (src.json) {
    nlohmann::json j;
    j["dims"] = dims;
    out << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) out << i << ": " << dims[i] << "\n";
  }
  return kExitOk;
}

int cmd_expand(const SourceOptions& src, const std::string& monomial, const std::string& basis_file,
               std::ostream& out, std::ostream& err) {
  Context ctx = build_context(src, /*need_chi=*/true);
  OrderedTuple t = parse_tuple_list(monomial, "--monomial");
  Monomial mono = normalize_tuple(*ctx.chi, t);
  AlgebraElement input = AlgebraElement::monomial(mono.support, mono.coeff);

  DiagonalBasisCandidate cand;
  if (basis_file.empty()) {
    int level = t.size();
    if (level > ctx.matroid.rank())
      throw input_error("--monomial has more entries than the rank " +
                        std::to_string(ctx.matroid.rank()));
    cand = default_candidate(ctx.matroid, level);
  } else {
    cand = load_diagonal_basis_file(basis_file);
  }
  if (!is_diagonal_basis(ctx.matroid, cand)) {
    err << "basis rejected: not a diagonal basis\n";
    return kExitVerificationFailure;
  }

  AlgebraElement coords = expand(*ctx.chi, cand, input);
  if (src.json)
    out << element_json(coords).dump() << "\n";
  else
    out << format_element(coords) << "\n";
  return kExitOk;
}

int cmd_residue(const SourceOptions& src, const std::string& order_text,
                const std::string& monomial, std::ostream& out) {
  Context ctx = build_context(src, /*need_chi=*/true);
  OrderedTuple order = parse_tuple_list(order_text, "--order");
  OrderedTuple t = parse_tuple_list(monomial, "--monomial");
  Monomial mono = normalize_tuple(*ctx.chi, t);
  AlgebraElement input = AlgebraElement::monomial(mono.support, mono.coeff);
  Scalar value = iterated_residue(*ctx.chi, order, input);
  if (src.json) {
    nlohmann::json j;
    j["value"] = scalar_to_string(value);
    out << j.dump() << "\n";
  } else {
    out << scalar_to_string(value) << "\n";
  }
  return kExitOk;
}

int cmd_check_diagonal(const SourceOptions& src, const std::string& basis_file, std::ostream& out) {
  Context ctx = build_context(src, /*need_chi=*/false);
  DiagonalBasisCandidate cand = load_diagonal_basis_file(basis_file);
  bool accepted = is_diagonal_basis(ctx.matroid, cand);
  if (src.json) {
    nlohmann::json j;
    j["accepted"] = accepted;
    out << j.dump() << "\n";
  } else {
    out << "diagonal basis: " << (accepted ? "accepted" : "rejected") << "\n";
  }
  return accepted ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const SourceOptions& src, bool check_chi, int exact_sequence_x, bool sum_residues_run,
               std::ostream& out, std::ostream& err) {
  int selected = (check_chi ? 1 : 0) + (exact_sequence_x != 0 ? 1 : 0) + (sum_residues_run ? 1 : 0);
  if (selected != 1)
    throw input_error("verify needs exactly one of --chi, --exact-sequence, --sum-residues");

  Context ctx = build_context(src, /*need_chi=*/true);
  int cap = max_enumeration_size();
  if (ctx.matroid.size() > cap)
    throw input_error("ground set size " + std::to_string(ctx.matroid.size()) +
                      " exceeds the exhaustive enumeration cap " + std::to_string(cap) +
                      " (set OSALG_MAX_N to raise it)");

  if (check_chi) {
    UcReport report = verify_uc(*ctx.chi);
    out << "UC1 checks: " << report.uc1_checked << "\n";
    out << "UC2 checks: " << report.uc2_checked << "\n";
    for (const UcViolation& v : report.violations)
      out << "violation (" << (v.rule == UcViolation::Rule::uc1 ? "UC1" : "UC2") << "): " << v.detail
          << "\n";
    out << (report.ok() ? "chi map: ok" : "chi map: FAILED") << "\n";
    return report.ok() ? kExitOk : kExitVerificationFailure;
  }

  if (exact_sequence_x != 0) {
    ExactSequenceReport report = verify_exact_sequence(*ctx.chi, exact_sequence_x);
    if (!report.simple)
      err << "warning: matroid is not simple; the splitting is not guaranteed\n";
    for (const ExactSequenceDegree& d : report.degrees)
      out << "degree " << d.level << ": dim " << d.dim_full << " = " << d.dim_deleted << " + "
          << d.dim_contracted << (d.ok() ? " ok" : " FAILED") << "\n";
    for (const std::string& f : report.failures) out << "failure: " << f << "\n";
    out << (report.ok() ? "exact sequence: ok" : "exact sequence: FAILED") << "\n";
    return report.ok() ? kExitOk : kExitVerificationFailure;
  }

  // Affine sum rule over the top degree.
  if (src.algebra != "ot")
    throw input_error("--sum-residues applies to the determinant algebra; pass --algebra ot");
  if (!ctx.arrangement || !ctx.arrangement->is_affine())
    throw input_error("--sum-residues requires an affine arrangement (all last coordinates 1)");
  int top = ctx.matroid.rank();
  DiagonalBasisCandidate cand = default_candidate(ctx.matroid, top);
  bool ok = true;
  long checked = 0;
  std::vector<GroundElement> elems = ctx.matroid.ground().elements();
  auto scan = [&](auto&& self, ElementSet cur, std::size_t next, int remaining) -> void {
    if (remaining == 0) {
      AlgebraElement mono = AlgebraElement::monomial(cur);
      if (reduce_to_nbc(*ctx.chi, mono).is_zero()) return;
      Scalar sum = sum_residues(*ctx.chi, cand, mono);
      ++checked;
      if (sum != 1) {
        ok = false;
        out << "sum of coefficients of e" << cur.to_string() << " is " << scalar_to_string(sum)
            << ", expected 1\n";
      }
      return;
    }
    for (std::size_t i = next; i + remaining <= elems.size(); ++i) {
      ElementSet cand_set = cur.with(elems[i]);
      if (ctx.matroid.is_independent(cand_set)) self(self, cand_set, i + 1, remaining - 1);
    }
  };
  scan(scan, ElementSet(), 0, top);
  out << "sum rule checked on " << checked << " monomials of degree " << top << "\n";
  out << (ok ? "sum rule: ok" : "sum rule: FAILED") << "\n";
  return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chi-algebra toolkit: NBC bases, expansions and residues"};
  app.require_subcommand(1);

  SourceOptions nbc_src;
  int nbc_level = 0;
  CLI::App* nbc = app.add_subcommand("nbc", "list NBC sets of a level");
  add_source_options(nbc, nbc_src);
  nbc->add_option("--level", nbc_level, "degree to list")->required();

  SourceOptions dims_src;
  CLI::App* dims = app.add_subcommand("dims", "graded dimensions");
  add_source_options(dims, dims_src);

  SourceOptions expand_src;
  std::string expand_monomial;
  std::string expand_basis;
  CLI::App* expand_cmd = app.add_subcommand("expand", "expand a monomial in a diagonal basis");
  add_source_options(expand_cmd, expand_src);
  expand_cmd->add_option("--monomial", expand_monomial, "comma-separated entries")->required();
  expand_cmd->add_option("--basis", expand_basis, "diagonal basis JSON (default: NBC)");

  SourceOptions residue_src;
  std::string residue_order;
  std::string residue_monomial;
  CLI::App* residue_cmd = app.add_subcommand("residue", "iterated residue of a monomial");
  add_source_options(residue_cmd, residue_src);
  residue_cmd->add_option("--order", residue_order, "comma-separated residue order")->required();
  residue_cmd->add_option("--monomial", residue_monomial, "comma-separated entries")->required();

  SourceOptions check_src;
  std::string check_basis;
  CLI::App* check = app.add_subcommand("check-diagonal", "validate a diagonal basis file");
  add_source_options(check, check_src);
  check->add_option("--basis", check_basis, "diagonal basis JSON")->required();

  SourceOptions verify_src;
  bool verify_chi = false;
  int verify_exact_x = 0;
  bool verify_sum = false;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_source_options(verify, verify_src);
  verify->add_flag("--chi", verify_chi, "exhaustive UC1/UC2 verification");
  verify->add_option("--exact-sequence", verify_exact_x, "deletion-contraction sequence at element X");
  verify->add_flag("--sum-residues", verify_sum, "affine sum rule over the top degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (nbc->parsed()) return cmd_nbc(nbc_src, nbc_level, out);
    if (dims->parsed()) return cmd_dims(dims_src, out);
    if (expand_cmd->parsed())
      return cmd_expand(expand_src, expand_monomial, expand_basis, out, err);
    if (residue_cmd->parsed()) return cmd_residue(residue_src, residue_order, residue_monomial, out);
    if (check->parsed()) return cmd_check_diagonal(check_src, check_basis, out);
    if (verify->parsed())
      return cmd_verify(verify_src, verify_chi, verify_exact_x, verify_sum, out, err);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no command\n";
  return kExitInputError;
}

}  // namespace osalg
