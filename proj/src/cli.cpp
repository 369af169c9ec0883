#include "bipolar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "bipolar/algebra.hpp"
#include "bipolar/audit.hpp"
#include "bipolar/io.hpp"
#include "bipolar/measures.hpp"
#include "bipolar/metrics.hpp"

namespace bipolar::cli {

namespace {

struct Common {
  std::vector<std::string> inputs;
  std::string format = "csv";
  std::string input_format;
  std::string out_path;
  bool paper_rounding = false;

  NumberStyle style() const { return paper_rounding ? NumberStyle::paper() : NumberStyle{}; }
};

void add_common(CLI::App* cmd, Common& common, std::size_t min_inputs, std::size_t max_inputs) {
  cmd->add_option("inputs", common.inputs, "Dataset file(s) with columns id,mu,nu")
      ->required()
      ->expected(static_cast<int>(min_inputs), static_cast<int>(max_inputs))
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--input-format", common.input_format,
                  "Input format (default: from the file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", common.out_path, "Write the report here instead of stdout");
  cmd->add_flag("--paper-rounding", common.paper_rounding,
                "Two decimals, truncated, as in published tables");
}

BipolarFuzzySet load(const std::string& path, const std::string& input_format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  const Format format = input_format.empty() ? format_from_path(path) : *parse_format(input_format);
  try {
    return read_dataset(in, format);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.location());
  }
}

std::string joined(const std::vector<std::string>& parts, std::string_view sep = ",") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

ReportMetadata metadata(const std::string& command, const Common& common) {
  ReportMetadata meta;
  meta.dataset = joined(common.inputs, " ");
  meta.tool_version = std::string(kVersion);
  meta.settings.emplace_back("command", command);
  meta.settings.emplace_back("rounding", common.paper_rounding ? "paper" : "significant6");
  return meta;
}

// Writes the rendered report to --out or the output stream.
void emit(const std::string& text, const Common& common, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw Error(common.out_path + ": cannot open for writing");
  file << text;
  if (!file) throw Error(common.out_path + ": write failed");
}

Format output_format(const Common& common) { return *parse_format(common.format); }

MeasureReport decomposition_report(const std::string& command, const Common& common,
                                   const BipolarFuzzySet& set) {
  MeasureReport report;
  report.metadata = metadata(command, common);
  for (const auto& [id, x] : set) report.elements.push_back(describe(id, x));
  return report;
}

std::string run_penta(const Common& common) {
  const auto set = load(common.inputs.front(), common.input_format);
  std::ostringstream text;
  write_report(text, decomposition_report("penta", common, set), output_format(common),
               common.style());
  return text.str();
}

std::string run_pairwise(bool similarity, const Common& common, const std::string& kind_name,
                         const std::string& aggregation_name) {
  const DistanceKind kind = *parse_distance_kind(kind_name);
  const std::string measure = similarity ? "similarity" : "distance";
  const auto first = load(common.inputs.front(), common.input_format);

  MeasureReport report;
  if (common.inputs.size() == 1) {
    report = decomposition_report(similarity ? "sim" : "dist", common, first);
    report.metadata.settings.emplace_back("kind", kind_name);
    report.similarity = PairwiseMatrix{
        measure, kind_name, first.ids(),
        similarity ? similarity_matrix(kind, first) : distance_matrix(kind, first)};
  } else {
    const auto second = load(common.inputs[1], common.input_format);
    const Aggregation aggregation = *parse_aggregation(aggregation_name);
    report.metadata = metadata(similarity ? "sim" : "dist", common);
    report.metadata.settings.emplace_back("kind", kind_name);
    report.metadata.settings.emplace_back("aggregation", aggregation_name);
    const double d = set_distance(kind, first, second, aggregation);
    report.aggregates.emplace_back(measure + "[" + kind_name + "," + aggregation_name + "]",
                                   similarity ? 1.0 - d : d);
  }
  std::ostringstream text;
  write_report(text, report, output_format(common), common.style());
  return text.str();
}

std::string run_card(const Common& common, const std::vector<std::string>& kind_names) {
  const auto set = load(common.inputs.front(), common.input_format);
  MeasureReport report = decomposition_report("card", common, set);
  report.metadata.settings.emplace_back("kinds", joined(kind_names));
  report.cardinality_kinds = kind_names;
  for (const auto& name : kind_names) {
    const CardinalityKind kind = *parse_cardinality_kind(name);
    for (std::size_t k = 0; k < set.size(); ++k) {
      report.elements[k].cardinality.push_back(cardinality_point(kind, set[k].second));
    }
    report.aggregates.emplace_back("cardinality[" + name + "]", cardinality_set(kind, set));
    report.aggregates.emplace_back("border_cardinality[" + name + "]",
                                   border_cardinality(kind, set));
  }
  std::ostringstream text;
  write_report(text, report, output_format(common), common.style());
  return text.str();
}

std::string run_entropy(const Common& common, const std::vector<std::string>& kind_names,
                        const std::string& norm_name) {
  const auto set = load(common.inputs.front(), common.input_format);
  const VectorNorm norm = *parse_vector_norm(norm_name);
  MeasureReport report = decomposition_report("entropy", common, set);
  report.metadata.settings.emplace_back("kinds", joined(kind_names));
  report.metadata.settings.emplace_back("norm", norm_name);
  report.entropy_kinds = kind_names;
  for (const auto& name : kind_names) {
    const EntropyKind kind = *parse_entropy_kind(name);
    for (std::size_t k = 0; k < set.size(); ++k) {
      report.elements[k].entropy.push_back(entropy_point(kind, set[k].second, norm).scalar);
    }
    report.aggregates.emplace_back("entropy[" + name + "]", entropy_set(kind, set, norm));
  }
  std::ostringstream text;
  write_report(text, report, output_format(common), common.style());
  return text.str();
}

std::string run_setop(const Common& common, const std::string& op_name,
                      const std::string& tnorm_name) {
  const SetOpKind op = *parse_set_op(op_name);
  const std::size_t needed = is_binary(op) ? 2 : 1;
  if (common.inputs.size() != needed) {
    throw CLI::ValidationError("setop", op_name + " takes exactly " + std::to_string(needed) +
                                            " input file(s)");
  }
  const auto a = load(common.inputs[0], common.input_format);
  std::optional<BipolarFuzzySet> b;
  if (needed == 2) b = load(common.inputs[1], common.input_format);
  const auto result =
      set_op(op, a, b ? &*b : nullptr, NormPair(*parse_norm_kind(tnorm_name)));
  std::ostringstream text;
  write_dataset(text, result, output_format(common), common.style());
  return text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measures for bipolar fuzzy sets: penta-valued decomposition, distances, "
               "similarities, cardinality, entropy and axiom audits.",
               "bipolar"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const std::vector<std::string> distance_kinds{"ph", "pe", "pp"};
  const std::vector<std::string> card_kinds{"pe", "ph", "pp", "min", "med", "max"};
  const std::vector<std::string> entropy_kinds{"pe", "ph", "pp", "sk", "skpi", "bb", "gm"};

  Common penta_opts;
  auto* penta = app.add_subcommand("penta", "Penta-valued decomposition of every element");
  add_common(penta, penta_opts, 1, 1);

  Common dist_opts;
  std::string dist_kind = "pe";
  std::string dist_agg = "mean";
  auto* dist = app.add_subcommand("dist", "Pairwise distance matrix, or distance of two sets");
  add_common(dist, dist_opts, 1, 2);
  dist->add_option("--kind", dist_kind, "ph | pe | pp")->check(CLI::IsMember(distance_kinds));
  dist->add_option("--aggregation", dist_agg, "mean | max (two inputs)")
      ->check(CLI::IsMember({"mean", "max"}));

  Common sim_opts;
  std::string sim_kind = "pe";
  std::string sim_agg = "mean";
  auto* sim = app.add_subcommand("sim", "Pairwise similarity matrix, or similarity of two sets");
  add_common(sim, sim_opts, 1, 2);
  sim->add_option("--kind", sim_kind, "ph | pe | pp")->check(CLI::IsMember(distance_kinds));
  sim->add_option("--aggregation", sim_agg, "mean | max (two inputs)")
      ->check(CLI::IsMember({"mean", "max"}));

  Common card_opts;
  std::vector<std::string> card_selected;
  auto* card = app.add_subcommand("card", "Set and border cardinality");
  add_common(card, card_opts, 1, 1);
  card->add_option("--kind", card_selected, "pe | ph | pp | min | med | max (repeatable)")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->check(CLI::IsMember(card_kinds));

  Common entropy_opts;
  std::vector<std::string> entropy_selected;
  std::string entropy_norm = "max";
  auto* entropy = app.add_subcommand("entropy", "Set entropy");
  add_common(entropy, entropy_opts, 1, 1);
  entropy->add_option("--kind", entropy_selected, "pe | ph | pp | sk | skpi | bb | gm (repeatable)")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->check(CLI::IsMember(entropy_kinds));
  entropy->add_option("--norm", entropy_norm, "Norm reducing the gm vector: max | sum")
      ->check(CLI::IsMember({"max", "sum"}));

  Common setop_opts;
  std::string setop_name;
  std::string tnorm = "minmax";
  auto* setop = app.add_subcommand("setop", "Union, intersection, complement, dual or negation");
  setop->add_option("operation", setop_name, "union | intersection | complement | dual | negation")
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "complement", "dual", "negation"}));
  add_common(setop, setop_opts, 1, 2);
  setop->add_option("--tnorm", tnorm, "minmax | lukasiewicz | product")
      ->check(CLI::IsMember({"minmax", "lukasiewicz", "product"}));

  std::string audit_kind;
  std::string audit_family;
  std::string audit_norm = "max";
  std::string audit_format = "csv";
  std::string audit_out;
  bool audit_paper_rounding = false;
  bool expect_paper = false;
  AuditOptions audit_options;
  auto* audit = app.add_subcommand("audit", "Check the cardinality or entropy axioms for a kind");
  audit->add_option("--kind", audit_kind, "Cardinality or entropy kind")
      ->required()
      ->check(CLI::IsMember({"pe", "ph", "pp", "min", "med", "max", "sk", "skpi", "bb", "gm"}));
  audit->add_option("--family", audit_family, "card | entropy (required for pe, ph, pp)")
      ->check(CLI::IsMember({"card", "entropy"}));
  audit->add_option("--norm", audit_norm, "Norm reducing the gm vector: max | sum")
      ->check(CLI::IsMember({"max", "sum"}));
  audit->add_flag("--expect-paper", expect_paper,
                  "Exit 1 unless the outcome matches the published pass/fail pattern");
  audit->add_option("--grid-step", audit_options.grid_step, "Grid step over the (mu, nu) square")
      ->check(CLI::Range(0.001, 1.0));
  audit->add_option("--samples", audit_options.random_points, "Random sample points");
  audit->add_option("--seed", audit_options.seed, "Seed for the random sample");
  audit->add_option("--format", audit_format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  audit->add_option("--out", audit_out, "Write the report here instead of stdout");
  audit->add_flag("--paper-rounding", audit_paper_rounding,
                  "Two decimals, truncated, as in published tables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (card_selected.empty()) card_selected = {"pe"};
    if (entropy_selected.empty()) entropy_selected = {"pe"};

    if (penta->parsed()) {
      emit(run_penta(penta_opts), penta_opts, out);
    } else if (dist->parsed()) {
      emit(run_pairwise(false, dist_opts, dist_kind, dist_agg), dist_opts, out);
    } else if (sim->parsed()) {
      emit(run_pairwise(true, sim_opts, sim_kind, sim_agg), sim_opts, out);
    } else if (card->parsed()) {
      emit(run_card(card_opts, card_selected), card_opts, out);
    } else if (entropy->parsed()) {
      emit(run_entropy(entropy_opts, entropy_selected, entropy_norm), entropy_opts, out);
    } else if (setop->parsed()) {
      emit(run_setop(setop_opts, setop_name, tnorm), setop_opts, out);
    } else if (audit->parsed()) {
      const bool ambiguous = audit_kind == "pe" || audit_kind == "ph" || audit_kind == "pp";
      if (ambiguous && audit_family.empty()) {
        throw CLI::ValidationError("--family", "kind '" + audit_kind +
                                                   "' exists in both families; pass "
                                                   "--family card or --family entropy");
      }
      const bool is_card = audit_family == "card" ||
                           (audit_family.empty() && parse_cardinality_kind(audit_kind) &&
                            !parse_entropy_kind(audit_kind));
      if (is_card && !parse_cardinality_kind(audit_kind)) {
        throw CLI::ValidationError("--kind", "'" + audit_kind + "' is not a cardinality kind");
      }
      if (!is_card && !parse_entropy_kind(audit_kind)) {
        throw CLI::ValidationError("--kind", "'" + audit_kind + "' is not an entropy kind");
      }

      const AuditReport report =
          is_card ? audit_cardinality(*parse_cardinality_kind(audit_kind), audit_options)
                  : audit_entropy(*parse_entropy_kind(audit_kind),
                                  *parse_vector_norm(audit_norm), audit_options);

      ReportMetadata meta;
      meta.dataset = "grid";
      meta.tool_version = std::string(kVersion);
      meta.settings = {
          {"command", "audit"},
          {"family", report.family()},
          {"kind", report.measure()},
          {"grid_step", format_number(audit_options.grid_step)},
          {"samples", std::to_string(audit_options.random_points)},
          {"seed", std::to_string(audit_options.seed)},
      };
      Common sink;
      sink.out_path = audit_out;
      std::ostringstream text;
      write_audit(text, report, meta, *parse_format(audit_format),
                  audit_paper_rounding ? NumberStyle::paper() : NumberStyle{});
      emit(text.str(), sink, out);

      if (expect_paper && !matches_expected_pattern(report)) {
        err << "bipolar: audit of " << report.family() << " '" << report.measure()
            << "' does not match the expected pass/fail pattern\n";
        return kExitValidation;
      }
    }
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bipolar: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "bipolar: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace bipolar::cli
