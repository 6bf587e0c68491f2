#include "awn/cli.hpp"

#include <csignal>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "awn/error.hpp"
#include "awn/metrics.hpp"
#include "awn/project.hpp"
#include "awn/service.hpp"

namespace awn::cli {

namespace {

using metrics::Table;

struct Options {
  std::string config = "awn.json";
  std::string format = "table";
  bool force = false;
  std::string scope = "approved-only";
  std::string updated = "lemma-or-gap";
  std::string export_format;
  std::string out_dir;
  std::string actor;
  std::string state;
  std::string pos;
  std::string host = "127.0.0.1";
  std::optional<int> port;
};

class Printer {
public:
  Printer(std::ostream& out, bool tsv) : out_(out), tsv_(tsv) {}

  void section(const std::string& title, const Table& table) {
    if (printed_) out_ << "\n";
    printed_ = true;
    if (tsv_) {
      out_ << "# " << title << "\n" << metrics::render_tsv(table);
    } else {
      out_ << title << "\n" << metrics::render_text(table);
    }
  }

private:
  std::ostream& out_;
  bool tsv_;
  bool printed_ = false;
};

int do_ingest(const Options& o, std::ostream& out, Printer& print) {
  auto config = project::ProjectConfig::load(o.config);
  auto summary = project::ingest(config, o.force);
  Table files;
  files.header = {"file", "accepted", "rejected", "warnings"};
  Table rejects;
  rejects.header = {"file", "row", "kind", "message"};
  for (const auto& f : summary.files) {
    files.rows.push_back({f.file, std::to_string(f.report.accepted),
                          std::to_string(f.report.rejected.size()),
                          std::to_string(f.report.warnings.size())});
    for (const auto& r : f.report.rejected) {
      rejects.rows.push_back({f.file, std::to_string(r.row), std::string(to_string(r.kind)), r.message});
    }
  }
  print.section("Inputs", files);
  if (!rejects.rows.empty()) print.section("Rejected rows", rejects);

  Table tasks;
  tasks.header = {"", "Noun", "Verb", "Adjective", "Adverb", "Total"};
  auto row = [&](const char* label, const std::map<PartOfSpeech, std::size_t>& counts) {
    std::vector<std::string> r{label};
    std::size_t total = 0;
    for (PartOfSpeech pos : kAllPos) {
      auto it = counts.find(pos);
      std::size_t n = it == counts.end() ? 0 : it->second;
      total += n;
      r.push_back(std::to_string(n));
    }
    r.push_back(std::to_string(total));
    tasks.rows.push_back(std::move(r));
  };
  row("Tasks", summary.tasks_per_pos);
  row("Imported synsets", summary.imported_synsets);
  print.section("Project", tasks);
  out << "\nexcluded named entities: " << summary.excluded
      << "\nunresolved alignments: " << summary.unresolved.size()
      << "\nimported changes: " << summary.imported_changes << "\n";
  for (const auto& u : summary.unresolved) out << "  " << u << "\n";
  return 0;
}

int do_stats(const Options& o, Printer& print) {
  project::Project p(project::ProjectConfig::load(o.config));
  auto scope = metrics::parse_scope(o.scope);
  auto rule = metrics::parse_updated_rule(o.updated);
  const auto& log = p.engine().log();
  print.section("Input dataset", metrics::input_table(p.input_stats()));
  print.section("Contributions (" + std::string(metrics::to_string(scope)) + ")",
                metrics::contribution_table(metrics::compute_contribution_stats(log, scope, rule)));
  auto correctness = metrics::compute_correctness(log);
  print.section("Correctness (undecided " + std::to_string(correctness.undecided) + ", superseded " +
                    std::to_string(correctness.superseded) + ")",
                metrics::correctness_table(correctness));
  return 0;
}

int do_audit(const Options& o, std::ostream& err, Printer& print) {
  project::Project p(project::ProjectConfig::load(o.config));
  auto findings = metrics::completeness_audit(p.engine().target());
  // Locators point into the canonical target document.
  for (auto& f : findings) f.locator = std::string(project::kTargetFile) + ":" + f.locator;
  print.section("Completeness findings", metrics::findings_table(findings));
  err << findings.size() << " finding(s)\n";
  return 0;
}

int do_export(const Options& o, std::ostream& out) {
  project::Project p(project::ProjectConfig::load(o.config));
  auto format = project::parse_export_format(o.export_format);
  std::filesystem::path dir = o.out_dir.empty() ? p.config().storage / "export" : std::filesystem::path(o.out_dir);
  for (const auto& f : project::export_project(p, format, dir)) out << f.string() << "\n";
  return 0;
}

int do_tasks(const Options& o, Printer& print) {
  project::Project p(project::ProjectConfig::load(o.config));
  const auto& engine = p.engine();
  std::optional<workflow::StateKind> state;
  std::optional<PartOfSpeech> pos;
  if (!o.state.empty()) state = workflow::parse_state_kind(o.state);
  if (!o.pos.empty()) pos = parse_pos(o.pos);
  std::vector<const workflow::Task*> tasks;
  if (!o.actor.empty()) {
    tasks = engine.actionable_for(o.actor);
  } else {
    for (const auto& [id, t] : engine.tasks()) tasks.push_back(&t);
  }
  Table t;
  t.header = {"task", "pos", "state", "actor", "author", "version"};
  for (const auto* task : tasks) {
    if (state && task->state.kind != *state) continue;
    if (pos && task->pos != *pos) continue;
    t.rows.push_back({task->id, std::string(to_string(task->pos)),
                      std::string(workflow::to_string(task->state.kind)), task->state.actor,
                      task->author, std::to_string(task->version)});
  }
  print.section("Tasks", t);
  return 0;
}

service::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int do_serve(const Options& o, std::ostream& out) {
  auto config = project::ProjectConfig::load(o.config);
  config.require_workflow_roster();
  project::Project p(config);
  service::Server server(p);
  int port = server.bind(o.host, o.port.value_or(config.port));
  out << "listening on http://" << o.host << ":" << port << std::endl;
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  g_server = nullptr;
  p.snapshot();
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arabic wordnet workbench: ingest, workflow service, metrics, export", "awn"};
  app.option_defaults()->always_capture_default();
  app.add_option("--config", o.config, "Project configuration file");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"tsv", "table"}));
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Parse inputs and (re)build the project storage");
  ingest->add_flag("--force", o.force, "Discard existing workflow activity");
  auto* stats = app.add_subcommand("stats", "Input, contribution and correctness tables");
  stats->add_option("--scope", o.scope, "approved-only or all")
      ->check(CLI::IsMember({"approved-only", "all"}));
  stats->add_option("--updated", o.updated, "What makes a synset updated")
      ->check(CLI::IsMember({"lemma-or-gap", "any-component"}));
  auto* audit = app.add_subcommand("audit", "Completeness findings on the target lexicon");
  auto* exp = app.add_subcommand("export", "Write canonical, result-sheets or task-sheets files");
  exp->add_option("format", o.export_format, "canonical | result-sheets | task-sheets")
      ->required()
      ->check(CLI::IsMember({"canonical", "result-sheets", "task-sheets"}));
  exp->add_option("--out", o.out_dir, "Output directory (default <storage>/export)");
  auto* tasks = app.add_subcommand("tasks", "List tasks");
  tasks->add_option("--actor", o.actor, "Only tasks this actor can act on");
  tasks->add_option("--state", o.state, "Filter by state");
  tasks->add_option("--pos", o.pos, "Filter by part of speech");
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", o.host, "Address to bind");
  serve->add_option("--port", o.port, "Port (default from config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version come through here with code 0.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Printer print(out, o.format == "tsv");
  try {
    if (*ingest) return do_ingest(o, out, print);
    if (*stats) return do_stats(o, print);
    if (*audit) return do_audit(o, err, print);
    if (*exp) return do_export(o, out);
    if (*tasks) return do_tasks(o, print);
    if (*serve) return do_serve(o, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace awn::cli
