#include "vspace/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vspace/census.hpp"
#include "vspace/coviolator.hpp"
#include "vspace/cospanning.hpp"
#include "vspace/error.hpp"
#include "vspace/instances.hpp"
#include "vspace/io.hpp"
#include "vspace/violator.hpp"

namespace vspace::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json_output = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool allow_large = false;

  std::string input;
  std::string out;
  std::string relation;
  std::string mode = "violator";
  std::string set;
  std::string points;
  std::string emit_table;
  std::string name;
  unsigned census_n = 0;
};

/// Accumulates the same content as text lines and as a JSON object.
class Report {
 public:
  json doc = json::object();

  void line(const std::string& s) { text_ << s << '\n'; }

  void axioms(const GroundSet& ground, const std::vector<AxiomReport>& reports, const char* key) {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(report_to_json(ground, r));
      std::string s = r.axiom + (r.holds ? " holds" : " fails");
      if (!r.holds) {
        s += "  witness:";
        for (auto w : r.witness) s += " " + ground.format(w);
      }
      line(s);
    }
    doc[key] = std::move(arr);
  }

  std::string render(bool as_json) const { return as_json ? doc.dump(2) + "\n" : text_.str(); }

 private:
  std::ostringstream text_;
};

SubsetMask parse_set(const GroundSet& ground, const std::string& text) {
  std::vector<std::string> labels;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) labels.push_back(item);
  }
  return ground.encode(labels);
}

OperatorTable as_phi(const OperatorTable& t, Report& rep) {
  if (t.kind() != OperatorKind::nu) return t;
  rep.line("converted nu -> phi");
  return nu_phi_convert(t);
}

void emit_table(const OperatorTable& t, const std::string& out, Report& rep) {
  if (out.empty()) {
    rep.doc["table"] = save_operator(t);
    rep.line(save_operator(t).dump(2));
  } else {
    write_operator_file(t, out);
    rep.line("wrote " + out);
  }
}

CommandOutcome finish(const Options& opt, Report& rep, int code) {
  rep.doc["exit_code"] = code;
  return {code, rep.render(opt.json_output)};
}

CommandOutcome cmd_verify(const Options& opt) {
  Report rep;
  const auto t = read_operator_file(opt.input);
  rep.doc["kind"] = std::string(to_string(t.kind()));
  rep.line("kind: " + std::string(to_string(t.kind())));
  const auto reports = t.kind() == OperatorKind::choice ? verify_coviolator(t) : verify_violator(t);
  rep.axioms(t.ground(), reports, "axioms");
  return finish(opt, rep, all_hold(reports) ? 0 : 1);
}

CommandOutcome cmd_analyze(const Options& opt) {
  Report rep;
  const auto loaded = read_operator_file(opt.input);
  rep.doc["kind"] = std::string(to_string(loaded.kind()));

  if (loaded.kind() == OperatorKind::choice) {
    const auto axioms = verify_coviolator(loaded);
    rep.axioms(loaded.ground(), axioms, "axioms");
    if (!all_hold(axioms)) return finish(opt, rep, 1);
    rep.axioms(loaded.ground(), check_co_laws(loaded), "laws");
    const bool nonempty = is_nonempty_choice(loaded);
    rep.doc["nonempty_choice"] = nonempty;
    rep.line(std::string("nonempty choice: ") + (nonempty ? "true" : "false"));
    return finish(opt, rep, 0);
  }

  const auto phi = as_phi(loaded, rep);
  const auto axioms = verify_violator(phi);
  rep.axioms(phi.ground(), axioms, "axioms");
  if (!all_hold(axioms)) return finish(opt, rep, 1);
  rep.axioms(phi.ground(), check_derived_laws(phi), "laws");
  rep.axioms(phi.ground(), check_ex_laws(phi, opt.allow_large), "ex_laws");

  const auto verdict = is_uniquely_generated(phi, opt.allow_large);
  json ug{{"uniquely_generated", verdict.uniquely_generated},
          {"criteria",
           {{"single_basis", verdict.method_agreement.single_basis},
            {"intersection_closed", verdict.method_agreement.intersection_closed},
            {"extremes_generate", verdict.method_agreement.extremes_generate}}}};
  std::string s = std::string("UG=") + (verdict.uniquely_generated ? "true" : "false");
  if (verdict.witness) {
    ug["witness"] = subset_to_json(phi.ground(), *verdict.witness);
    s += "  witness: " + phi.ground().format(*verdict.witness) + " has several bases";
  }
  rep.doc["verdict"] = std::move(ug);
  rep.line(s);
  return finish(opt, rep, 0);
}

void describe_bases(const OperatorTable& phi, SubsetMask x, Report& rep) {
  const auto& g = phi.ground();
  const auto b = bases(phi, x);
  json list = json::array();
  std::string s;
  for (auto basis : b.bases) {
    list.push_back(subset_to_json(g, basis));
    s += " " + g.format(basis);
  }
  rep.doc["set"] = subset_to_json(g, x);
  rep.doc["phi"] = subset_to_json(g, phi(x));
  rep.doc["extreme_points"] = subset_to_json(g, extreme_points(phi, x));
  rep.doc["generators_count"] = b.generators_count;
  rep.doc["bases"] = std::move(list);
  rep.line("set " + g.format(x) + "  phi " + g.format(phi(x)) + "  ex " + g.format(extreme_points(phi, x)));
  rep.line("generators: " + std::to_string(b.generators_count));
  rep.line("bases: " + std::to_string(b.bases.size()) + " ->" + s);
}

CommandOutcome cmd_bases(const Options& opt) {
  Report rep;
  const auto loaded = read_operator_file(opt.input);
  require_kind(loaded, {OperatorKind::phi, OperatorKind::nu}, "bases");
  const auto phi = as_phi(loaded, rep);
  describe_bases(phi, parse_set(phi.ground(), opt.set), rep);
  return finish(opt, rep, 0);
}

void describe_partition(const CospanningPartition& p, Report& rep) {
  rep.doc["class_count"] = p.class_count();
  rep.line("classes: " + std::to_string(p.class_count()));
  rep.axioms(p.ground(), verify_relation_axioms(p), "relation_axioms");
  rep.axioms(p.ground(), {is_hypercube_partition(p)}, "hypercube");
}

CommandOutcome cmd_partition(const Options& opt) {
  Report rep;
  const auto p = cospanning_partition(read_operator_file(opt.input));
  describe_partition(p, rep);
  if (!opt.out.empty()) {
    write_relation_file(p, opt.out);
    rep.line("wrote " + opt.out);
  }
  return finish(opt, rep, 0);
}

CommandOutcome cmd_synthesize(const Options& opt) {
  Report rep;
  const auto p = read_relation_file(opt.relation);
  const auto mode = opt.mode == "violator" ? SynthesisMode::violator : SynthesisMode::coviolator;
  const auto reports = verify_relation_axioms(p);
  rep.axioms(p.ground(), reports, "relation_axioms");
  const bool ok = find_report(reports, "R2").holds &&
                  find_report(reports, mode == SynthesisMode::violator ? "R1" : "R3").holds;
  if (!ok) {
    rep.line("relation is not the cospanning relation of a " + opt.mode + " space");
    return finish(opt, rep, 1);
  }
  emit_table(synthesize_from_relation(p, mode), opt.out, rep);
  return finish(opt, rep, 0);
}

CommandOutcome cmd_dualize(const Options& opt) {
  Report rep;
  emit_table(dualize(read_operator_file(opt.input)), opt.out, rep);
  return finish(opt, rep, 0);
}

CommandOutcome cmd_census(const Options& opt) {
  Report rep;
  const auto rec = census_report(opt.census_n);
  const auto audit = census_audit(opt.census_n);
  rep.doc["record"] = {{"n", rec.n},
                       {"extensive_count", rec.extensive_count},
                       {"violator_count", rec.violator_count},
                       {"uniquely_generated_count", rec.uniquely_generated_count},
                       {"hypercube_partition_count", rec.hypercube_partition_count},
                       {"elapsed_seconds", rec.elapsed.count()}};
  const std::pair<const char*, std::uint64_t> counters[] = {
      {"outcast_equivalence", audit.outcast_equivalence},
      {"intersection_criterion", audit.intersection_criterion},
      {"extremes_generate", audit.extremes_generate},
      {"dual_correspondence", audit.dual_correspondence},
      {"dual_involution", audit.dual_involution},
      {"class_correspondence", audit.class_correspondence},
      {"extreme_point_laws", audit.extreme_point_laws},
      {"relation_necessity", audit.relation_necessity},
      {"synthesis_round_trip", audit.synthesis_round_trip},
      {"hypercube_equivalence", audit.hypercube_equivalence},
      {"class_intervals", audit.class_intervals},
  };
  json violations = json::object();
  for (const auto& [name, count] : counters) violations[name] = count;
  rep.doc["violations"] = std::move(violations);

  std::ostringstream t;
  t << "n                          " << rec.n << '\n'
    << "extensive tables           " << rec.extensive_count << '\n'
    << "violator spaces            " << rec.violator_count << '\n'
    << "uniquely generated         " << rec.uniquely_generated_count << '\n'
    << "hypercube partitions       " << rec.hypercube_partition_count << '\n'
    << "elapsed                    " << std::fixed << std::setprecision(3) << rec.elapsed.count() << " s";
  rep.line(t.str());

  int code = 0;
  if (rec.uniquely_generated_count != rec.hypercube_partition_count) {
    rep.line("MISMATCH uniquely generated vs hypercube partitions");
    code = 1;
  }
  for (const auto& [name, count] : counters) {
    if (count != 0) {
      rep.line(std::string("VIOLATION ") + name + ": " + std::to_string(count) + " tables");
      code = 1;
    }
  }
  if (code == 0) rep.line("all characterizations agree on " + std::to_string(audit.tables_checked) + " tables");
  return finish(opt, rep, code);
}

CommandOutcome cmd_seb(const Options& opt) {
  Report rep;
  const auto ps = read_points_file(opt.points);
  const auto nu = seb_space(ps, opt.threads);
  const auto axioms = verify_violator(nu);
  rep.axioms(nu.ground(), axioms, "axioms");
  if (!opt.set.empty()) {
    const SubsetMask x = parse_set(ps.ground(), opt.set);
    const Ball ball = miniball(ps, x);
    json jb = {{"support", subset_to_json(ps.ground(), ball.support)}};
    if (ball.is_empty()) {
      jb["radius"] = nullptr;
      rep.line("ball: empty");
    } else {
      jb["center"] = {ball.center.x(), ball.center.y()};
      jb["radius"] = ball.radius;
      std::ostringstream s;
      s << std::setprecision(17) << "ball: center (" << ball.center.x() << ", " << ball.center.y()
        << ") radius " << ball.radius << "  support " << ps.ground().format(ball.support);
      rep.line(s.str());
    }
    rep.doc["ball"] = std::move(jb);
    describe_bases(nu_phi_convert(nu), x, rep);
  }
  if (!opt.emit_table.empty()) {
    write_operator_file(nu, opt.emit_table);
    rep.line("wrote " + opt.emit_table);
  }
  return finish(opt, rep, all_hold(axioms) ? 0 : 1);
}

CommandOutcome cmd_example(const Options& opt) {
  Report rep;
  constexpr std::string_view random_prefix = "random_ug_";
  if (std::string_view(opt.name).starts_with(random_prefix)) {
    const auto n_text = opt.name.substr(random_prefix.size());
    unsigned n = 0;
    try {
      std::size_t used = 0;
      n = static_cast<unsigned>(std::stoul(n_text, &used));
      if (used != n_text.size()) throw std::invalid_argument(n_text);
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownExample, opt.name);
    }
    emit_table(random_ug_space(n, opt.seed), opt.out, rep);
  } else {
    emit_table(example_space(opt.name), opt.out, rep);
  }
  return finish(opt, rep, 0);
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"Violator and co-violator space toolkit", "vspace"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", opt.json_output, "Emit JSON reports");
  app.add_option("--threads", opt.threads, "Worker threads for whole-space sweeps")->check(CLI::Range(1U, 256U));
  app.add_option("--seed", opt.seed, "Seed for randomized commands");
  app.add_flag("--allow-large", opt.allow_large, "Allow whole-space analyses above n=12");

  auto* verify = app.add_subcommand("verify", "Check the axioms of the table's kind");
  verify->add_option("--input", opt.input, "Operator-table file")->required();

  auto* analyze = app.add_subcommand("analyze", "Derived laws, X1-X7 and unique generation");
  analyze->add_option("--input", opt.input, "Operator-table file")->required();

  auto* bases_cmd = app.add_subcommand("bases", "Generators and bases of a set");
  bases_cmd->add_option("--input", opt.input, "Operator-table file")->required();
  bases_cmd->add_option("--set", opt.set, "Comma-separated labels")->required();

  auto* partition = app.add_subcommand("partition", "Cospanning partition and relation axioms");
  partition->add_option("--input", opt.input, "Operator-table file")->required();
  partition->add_option("--out", opt.out, "Relation file to write");

  auto* synthesize = app.add_subcommand("synthesize", "Operator from a relation file");
  synthesize->add_option("--relation", opt.relation, "Relation file")->required();
  synthesize->add_option("--as", opt.mode, "violator or coviolator")
      ->required()
      ->check(CLI::IsMember({"violator", "coviolator"}));
  synthesize->add_option("--out", opt.out, "Operator-table file to write");

  auto* dualize_cmd = app.add_subcommand("dualize", "c(X) = E - phi(E - X)");
  dualize_cmd->add_option("--input", opt.input, "Operator-table file")->required();
  dualize_cmd->add_option("--out", opt.out, "Operator-table file to write");

  auto* census = app.add_subcommand("census", "Exhaustive enumeration for n <= 3");
  census->add_option("--n", opt.census_n, "Ground-set size")->required()->check(CLI::Range(1U, kCensusMaxN));

  auto* seb = app.add_subcommand("seb", "Smallest-enclosing-ball violator space");
  seb->add_option("--points", opt.points, "CSV file label,x,y")->required();
  seb->add_option("--set", opt.set, "Comma-separated labels");
  seb->add_option("--emit-table", opt.emit_table, "Write the nu-table here");

  auto* example = app.add_subcommand("example", "Built-in spaces");
  example->add_option("--name", opt.name, "example1 | example2 | identity_<n> | random_ug_<n>")->required();
  example->add_option("--out", opt.out, "Operator-table file to write");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("usage error: ") + e.what() + "\n"};
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (analyze->parsed()) return cmd_analyze(opt);
    if (bases_cmd->parsed()) return cmd_bases(opt);
    if (partition->parsed()) return cmd_partition(opt);
    if (synthesize->parsed()) return cmd_synthesize(opt);
    if (dualize_cmd->parsed()) return cmd_dualize(opt);
    if (census->parsed()) return cmd_census(opt);
    if (seb->parsed()) return cmd_seb(opt);
    if (example->parsed()) return cmd_example(opt);
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const nlohmann::json::exception& e) {
    return {2, std::string("error: malformed document: ") + e.what() + "\n"};
  }
  return {2, "usage error: no subcommand\n"};
}

}  // namespace vspace::cli
