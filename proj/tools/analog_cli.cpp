// Command-line front end: log and model measures, discovery, sublog
// comparison, corpus reproduction and fuzzing.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "analog/report_io.hpp"

using namespace analog;

namespace {

struct Shared {
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;
  bool no_tau_duplicates = false;
  std::string duplicates = "accumulate";
  std::string block_rule = "first";

  Format fmt() const { return format == "csv" ? Format::csv : Format::json; }
  NetOptions net() const { return {!no_tau_duplicates}; }
  ParseOptions parse() const {
    ParseOptions p;
    p.duplicates = duplicates == "reject" ? DuplicateMode::reject
                   : duplicates == "warn" ? DuplicateMode::warn
                                          : DuplicateMode::accumulate;
    return p;
  }
  LogOptions log() const {
    LogOptions o;
    o.block_rule = block_rule == "lightest" ? BlockRule::lightest_subtree
                   : block_rule == "heaviest" ? BlockRule::heaviest_subtree
                                              : BlockRule::first_created;
    return o;
  }
};

void emit(const Shared& s, const std::string& text) {
  if (s.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(s.output, std::ios::binary);
  if (!out) throw input_error("cannot write " + s.output);
  out << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + '\n'; }

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// Rejects unknown names with the valid list and the closest match.
std::string check_name(const std::string& v, const std::vector<std::string>& valid, const std::string& what) {
  if (std::find(valid.begin(), valid.end(), v) != valid.end()) return {};
  std::string list, best;
  std::size_t best_d = SIZE_MAX;
  for (const auto& n : valid) {
    list += (list.empty() ? "" : ", ") + n;
    if (auto d = edit_distance(v, n); d < best_d) best_d = d, best = n;
  }
  std::string msg = "unknown " + what + " '" + v + "'; expected one of: " + list;
  if (best_d <= 3) msg += " (did you mean '" + best + "'?)";
  return msg;
}

std::vector<std::string> miner_list() {
  std::vector<std::string> out;
  for (const auto& [m, n] : miner_names) out.emplace_back(n);
  return out;
}

CLI::Validator name_check(std::vector<std::string> valid, std::string what) {
  return CLI::Validator([valid, what](std::string& v) { return check_name(v, valid, what); }, what, "");
}

Miner to_miner(const std::string& s) { return *parse_miner(s); }

int log_metrics(const Shared& s, const std::string& path) {
  auto r = log_report(load_log(path, s.parse()), s.log());
  emit(s, s.fmt() == Format::csv ? report_to_csv(r) : dump(report_to_json(r)));
  return 0;
}

int discover_cmd(const Shared& s, const std::string& path, const std::string& miner, const std::string& dot) {
  auto l = load_log(path, s.parse());
  const Miner m = to_miner(miner);
  if (m == Miner::dfg) {
    auto d = build_dfg(l);
    if (!dot.empty()) {
      std::ofstream out(dot, std::ios::binary);
      if (!out) throw input_error("cannot write " + dot);
      out << dfg_to_dot(d);
    }
    emit(s, s.fmt() == Format::csv ? report_to_csv(dfg_report(d)) : dump(dfg_to_json(d)));
    return 0;
  }
  auto net = discover(m, l);
  if (!dot.empty()) {
    std::ofstream out(dot, std::ios::binary);
    if (!out) throw input_error("cannot write " + dot);
    out << net_to_dot(net);
  }
  emit(s, s.fmt() == Format::csv ? report_to_csv(model_report(net, s.net())) : dump(net_to_json(net)));
  return 0;
}

int model_metrics(const Shared& s, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid JSON net: ") + e.what());
  }
  auto r = model_report(net_from_json(j), s.net());
  emit(s, s.fmt() == Format::csv ? report_to_csv(r) : dump(report_to_json(r)));
  return 0;
}

int dfg_metrics(const Shared& s, const std::string& path) {
  auto r = dfg_report(build_dfg(load_log(path, s.parse())));
  emit(s, s.fmt() == Format::csv ? report_to_csv(r) : dump(report_to_json(r)));
  return 0;
}

int compare_cmd(const Shared& s, const std::string& p1, const std::string& p2, const std::string& miner) {
  auto l1 = load_log(p1, s.parse()), l2 = load_log(p2, s.parse());
  if (!is_proper_sublog(l1, l2))
    throw input_error("'" + p1 + "' is not a proper sublog of '" + p2 + "'");
  const Miner m = to_miner(miner);
  auto a = measure(m, std::move(l1), s.net()), b = measure(m, std::move(l2), s.net());
  if (!a.mr || !b.mr) throw resource_error(a.mr ? b.failure : a.failure);
  Evidence ev(m);
  observe(ev, p1 + " -> " + p2, a, b);
  ev.finalize();
  if (s.fmt() == Format::csv) {
    emit(s, evidence_to_csv(ev));
  } else {
    nlohmann::ordered_json j = {{"miner", miner_name(m)},
                                {"log_before", report_to_json(a.lr)},
                                {"log_after", report_to_json(b.lr)},
                                {"model_before", report_to_json(*a.mr)},
                                {"model_after", report_to_json(*b.mr)},
                                {"evidence", evidence_to_json(ev)}};
    emit(s, dump(j));
  }
  return 0;
}

int reproduce_cmd(const Shared& s, const std::string& suite, double tolerance) {
  std::vector<Miner> miners;
  if (suite == "all")
    for (const auto& [m, n] : miner_names) miners.push_back(m);
  else
    miners.push_back(to_miner(suite));
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  std::string csv;
  std::size_t falsified = 0, mismatched = 0, unconfirmed = 0;
  for (Miner m : miners) {
    auto res = evaluate_corpus(m, s.jobs, s.net(), tolerance);
    falsified += res.evidence.falsifications();
    unconfirmed += res.evidence.unconfirmed_backed_x();
    mismatched += res.mismatches.size();
    std::cerr << miner_name(m) << ": " << res.entries << " entries, " << res.evidence.pairs << " pairs, "
              << res.evidence.falsifications() << " falsifications, " << res.mismatches.size()
              << " fixture mismatches, " << res.evidence.unconfirmed_backed_x() << " unconfirmed X cells\n";
    if (s.fmt() == Format::csv) {
      if (!csv.empty()) csv += '\n';
      csv += evidence_to_csv(res.evidence);
      if (!res.mismatches.empty()) csv += '\n' + mismatches_to_csv(res.mismatches);
    } else {
      nlohmann::ordered_json ms = nlohmann::ordered_json::array();
      for (const auto& x : res.mismatches) ms.push_back(mismatch_to_json(x));
      suites.push_back({{"miner", miner_name(m)},
                        {"entries", res.entries},
                        {"fixture_mismatches", ms},
                        {"evidence", evidence_to_json(res.evidence)}});
    }
  }
  const bool ok = falsified == 0 && mismatched == 0 && unconfirmed == 0;
  if (s.fmt() == Format::csv)
    emit(s, csv);
  else
    emit(s, dump({{"suite", suite},
                  {"tolerance", tolerance},
                  {"falsifications", falsified},
                  {"fixture_mismatches", mismatched},
                  {"unconfirmed_backed_x", unconfirmed},
                  {"status", ok ? "pass" : "fail"},
                  {"suites", suites}}));
  return ok ? 0 : 2;
}

int fuzz_cmd(const Shared& s, const std::string& miner, std::uint64_t seed, std::uint64_t pairs, const FuzzConfig& cfg) {
  Evidence ev(to_miner(miner));
  fuzz_pairs(ev, seed, pairs, cfg, s.jobs, s.net());
  ev.finalize();
  std::cerr << miner << ": " << ev.pairs << " pairs, " << ev.falsifications() << " falsifications\n";
  if (s.fmt() == Format::csv)
    emit(s, evidence_to_csv(ev));
  else
    emit(s, dump({{"seed", seed}, {"evidence", evidence_to_json(ev)}}));
  return ev.falsifications() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-log and process-model complexity measures"};
  app.require_subcommand(1);
  Shared s;
  auto shared = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", s.output, "Write output to this file instead of stdout");
    sub->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_flag("--no-tau-duplicates", s.no_tau_duplicates, "Do not count repeated silent transitions as duplicates");
    sub->add_option("--duplicates", s.duplicates, "Repeated variant lines: accumulate, warn or reject")
        ->check(CLI::IsMember({"accumulate", "warn", "reject"}));
    sub->add_option("--block-rule", s.block_rule, "Prefix-automaton block rule: first, lightest or heaviest")
        ->check(CLI::IsMember({"first", "lightest", "heaviest"}));
  };
  const auto miners = miner_list();
  std::string log1, log2, miner = "flower", dot, suite = "all";
  double tolerance = fixture_tolerance;
  std::uint64_t seed = 1, pairs = 100;
  FuzzConfig cfg;

  auto* lm = app.add_subcommand("log-metrics", "Measures of an event log");
  lm->add_option("log", log1, "Log file")->required();
  shared(lm);

  auto* dc = app.add_subcommand("discover", "Discover a model from a log");
  dc->add_option("log", log1, "Log file")->required();
  dc->add_option("--miner", miner, "Miner")->required()->check(name_check(miners, "miner"));
  dc->add_option("--dot", dot, "Also write the model as Graphviz DOT");
  shared(dc);

  auto* mmc = app.add_subcommand("model-metrics", "Measures of a workflow net given as JSON");
  mmc->add_option("net", log1, "Net file")->required();
  shared(mmc);

  auto* dm = app.add_subcommand("dfg-metrics", "Measures of the directly-follows graph of a log");
  dm->add_option("log", log1, "Log file")->required();
  shared(dm);

  auto* cmp = app.add_subcommand("compare", "Measure changes between a log and a proper superlog");
  cmp->add_option("sublog", log1, "Smaller log")->required();
  cmp->add_option("superlog", log2, "Larger log")->required();
  cmp->add_option("--miner", miner, "Miner")->required()->check(name_check(miners, "miner"));
  shared(cmp);

  auto* rep = app.add_subcommand("reproduce", "Evaluate the embedded counterexample corpus");
  auto suites = miners;
  suites.insert(suites.begin(), "all");
  rep->add_option("--suite", suite, "all or one miner")->check(name_check(suites, "suite"));
  rep->add_option("--tolerance", tolerance, "Tolerance for non-integral fixture values")->check(CLI::PositiveNumber);
  shared(rep);

  auto* fz = app.add_subcommand("fuzz", "Random sublog pairs against the relation table of a miner");
  fz->add_option("--miner", miner, "Miner")->required()->check(name_check(miners, "miner"));
  fz->add_option("--seed", seed, "Random seed");
  fz->add_option("--pairs", pairs, "Number of pairs");
  fz->add_option("--max-alphabet", cfg.max_alphabet, "Alphabet limit")->check(CLI::Range(1, 26));
  fz->add_option("--max-length", cfg.max_length, "Trace length limit")->check(CLI::PositiveNumber);
  fz->add_option("--max-variants", cfg.max_variants, "Variant limit")->check(CLI::Range(2, 1000));
  fz->add_option("--max-count", cfg.max_count, "Count limit")->check(CLI::PositiveNumber);
  shared(fz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*lm) return log_metrics(s, log1);
    if (*dc) return discover_cmd(s, log1, miner, dot);
    if (*mmc) return model_metrics(s, log1);
    if (*dm) return dfg_metrics(s, log1);
    if (*cmp) return compare_cmd(s, log1, log2, miner);
    if (*rep) return reproduce_cmd(s, suite, tolerance);
    if (*fz) return fuzz_cmd(s, miner, seed, pairs, cfg);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const undefined_measure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
