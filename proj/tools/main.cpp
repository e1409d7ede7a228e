// odo: invariants, decisions, full-group elements and oracle suites for
// Z^d odometers. JSON goes to stdout, human-readable text to stderr.
// Exit status: 0 decided, 2 inconclusive, 1 error.

#include "odo/json_io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

namespace {

using namespace odo;

constexpr int kDecided = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_invariants(const std::string& path) {
  const ZdScale scale = load_scale(path);
  const ScaleInvariants inv = compute_invariants(scale);
  Json out = invariants_block(inv);
  out["name"] = inv.name;
  out["certificate"] = certificate_to_json(inv.certificate);
  out["supernatural_text"] = inv.supernatural.render();
  out["type_text"] = inv.type ? Json(inv.type->render()) : Json(nullptr);
  if (!inv.type_error.empty()) out["type_error"] = inv.type_error;
  const bool evidence = inv.certificate.status != TrivialityCertificate::Status::Certified ||
                        (inv.type && inv.type->evidence_only);
  out["banner"] = evidence ? Json("evidence-only") : Json(nullptr);
  Json indices = Json::array();
  for (const auto& i : inv.indices) indices.push_back(int_to_json(i));
  out["indices"] = indices;
  emit(out);

  if (evidence) std::cerr << "[evidence-only] finite data; exponents marked >=k are lower bounds\n";
  std::cerr << inv.name << ": supernatural " << inv.supernatural.render() << "\n";
  std::cerr << "  type " << (inv.type ? inv.type->render() : "unavailable (" + inv.type_error + ")") << "\n";
  std::cerr << "  min generators "
            << (inv.min_generators ? std::to_string(*inv.min_generators) : std::string("unknown")) << "\n";
  std::cerr << "  trivial intersection: " << status_name(inv.certificate.status) << " (" << inv.certificate.rule
            << ")\n";
  return kDecided;
}

int cmd_decide(const std::string& question, const std::string& a, const std::string& b) {
  const auto q = parse_question(question);
  if (!q) throw Error(Errc::InvalidArgument, "unknown question '" + question + "' (oe, stab-iso, coe)");
  const ZdScale s1 = load_scale(a), s2 = load_scale(b);
  DecisionReport report;
  switch (*q) {
    case Question::OE: report = decide_oe(s1, s2); break;
    case Question::StabIso: report = decide_stab_iso(s1, s2); break;
    case Question::COE: report = decide_coe(s1, s2); break;
  }
  emit(report_to_json(report));

  std::cerr << question_name(report.question) << "(" << s1.name() << ", " << s2.name()
            << "): " << verdict_name(report.verdict) << "\n";
  if (report.witness)
    std::cerr << "  witness: " << report.witness->type.render() << " of index " << to_string(report.witness->index)
              << "\n";
  if (report.distinguishing) {
    const auto& d = *report.distinguishing;
    std::cerr << "  distinguishing " << d.kind;
    if (d.prime) std::cerr << " at p = " << to_string(*d.prime);
    std::cerr << ": " << d.first << " vs " << d.second << "\n";
  }
  for (const auto& note : report.notes) std::cerr << "  note: " << note << "\n";
  return report.verdict == Verdict::Inconclusive ? kInconclusive : kDecided;
}

int cmd_fullgroup(const std::string& action, const std::string& scale_path, const std::vector<std::string>& files) {
  const std::size_t expected = action == "compose" ? 2 : 1;
  if (files.size() != expected)
    throw Error(Errc::InvalidArgument, "fullgroup " + action + " takes " + std::to_string(expected) + " element file" +
                                           (expected == 1 ? "" : "s"));
  const ZdScale scale = load_scale(scale_path);
  std::vector<Json> docs;
  unsigned depth = 0;
  for (const auto& f : files) {
    docs.push_back(load_json(f));
    depth = std::max(depth, element_shape(docs.back()).second);
  }
  const TowerPtr tower = QuotientTower::build(scale, depth);
  std::vector<FullGroupElement> elems;
  for (const auto& d : docs) elems.push_back(element_from_json(tower, d));

  if (action == "compose") {
    emit(element_to_json(compose(elems[0], elems[1])));
  } else if (action == "invert") {
    emit(element_to_json(invert(elems[0])));
  } else if (action == "decompose") {
    emit(decomposition_to_json(decompose(elems[0])));
  } else {
    const bool mp = is_measure_preserving(elems[0]);
    emit({{"valid", true}, {"measure_preserving", mp}, {"level", elems[0].level()}, {"depth", elems[0].depth()}});
    std::cerr << "element is a bijection" << (mp ? " and preserves the uniform measure" : "") << "\n";
    if (!mp) return kError;
  }
  return kDecided;
}

int cmd_oracle(const std::string& suite, std::uint64_t seed) {
  const auto checks = run_suite(suite, seed);
  Json out = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    out.push_back(check_to_json(c));
    ok = ok && c.passed;
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.check << " [" << c.subject << "] " << mode_name(c.mode);
    if (c.seed) std::cerr << " seed=" << *c.seed;
    std::cerr << "\n";
    for (const auto& f : c.failures) std::cerr << "    " << f << "\n";
  }
  emit(out);
  std::cerr << checks.size() << " checks, " << (ok ? "all passed" : "FAILURES") << "\n";
  return ok ? kDecided : kError;
}

int cmd_paper_examples(bool json) {
  const auto records = run_worked_examples();
  std::size_t flagged = 0;
  std::cerr << std::left << std::setw(18) << "example" << std::setw(14) << "question" << std::setw(14) << "asserted"
            << std::setw(14) << "computed" << "\n";
  for (const auto& r : records) {
    for (const auto& rep : r.computed) {
      std::string asserted = "-";
      for (const auto& [q, v] : r.asserted)
        if (q == rep.question) asserted = verdict_name(v);
      const bool differs = asserted != "-" && asserted != verdict_name(rep.verdict);
      std::cerr << std::setw(18) << r.id << std::setw(14) << question_name(rep.question) << std::setw(14) << asserted
                << std::setw(14) << verdict_name(rep.verdict) << (differs ? "DISCREPANCY" : "") << "\n";
    }
    for (const auto& [k, v] : r.facts) std::cerr << "    " << k << ": " << v << "\n";
    for (const auto& n : r.notes) std::cerr << "    note: " << n << "\n";
    if (r.discrepancy) ++flagged;
  }
  std::cerr << records.size() << " examples, " << flagged << " discrepanc" << (flagged == 1 ? "y" : "ies") << "\n";
  if (json) {
    Json out = Json::array();
    for (const auto& r : records) out.push_back(example_to_json(r));
    emit(out);
  }
  return kDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Z^d odometers"};
  app.require_subcommand(1);

  std::string inv_file;
  auto* inv = app.add_subcommand("invariants", "Supernatural number, profinite type and certificate of a scale");
  inv->add_option("file", inv_file, "scale JSON")->required();

  std::string question, file_a, file_b;
  auto* dec = app.add_subcommand("decide", "Decide oe, stab-iso or coe for two scales");
  dec->add_option("question", question, "oe | stab-iso | coe")->required();
  dec->add_option("first", file_a, "scale JSON")->required();
  dec->add_option("second", file_b, "scale JSON")->required();

  std::string fg_action, fg_scale;
  std::vector<std::string> fg_files;
  auto* fg = app.add_subcommand("fullgroup", "Compose, invert, decompose or verify full-group elements");
  fg->add_option("action", fg_action, "compose | invert | decompose | verify")
      ->required()
      ->check(CLI::IsMember({"compose", "invert", "decompose", "verify"}));
  fg->add_option("--scale", fg_scale, "scale JSON the elements live over")->required();
  fg->add_option("elements", fg_files, "element JSON files (compose G F gives G after F)")->required();

  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  auto* oracle = app.add_subcommand("oracle", "Brute-force oracle suites");
  auto* run = oracle->add_subcommand("run", "Run a named suite");
  oracle->require_subcommand(1);
  run->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  run->add_option("--seed", seed, "seed for sampled checks");

  bool json = false;
  auto* ex = app.add_subcommand("paper-examples", "Run the bundled worked examples");
  ex->add_flag("--json", json, "also print the records as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*inv) return cmd_invariants(inv_file);
    if (*dec) return cmd_decide(question, file_a, file_b);
    if (*fg) return cmd_fullgroup(fg_action, fg_scale, fg_files);
    if (*run) return cmd_oracle(suite, seed);
    if (*ex) return cmd_paper_examples(json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
