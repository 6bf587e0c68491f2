#include "awn/project.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "awn/error.hpp"
#include "awn/serialize.hpp"

namespace awn::project {

namespace {

Error config_error(const std::string& message, const std::string& field) {
  return Error(ErrorCode::invalid_config, message, field);
}

fs::path resolve(const fs::path& base_dir, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base_dir / path;
}

std::vector<fs::path> path_list(const nlohmann::json& j, const char* key, const fs::path& base_dir) {
  std::vector<fs::path> out;
  if (!j.contains(key)) return out;
  const auto& v = j.at(key);
  if (v.is_string()) {
    out.push_back(resolve(base_dir, v.get<std::string>()));
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (!item.is_string()) throw config_error(std::string(key) + " entries must be paths", key);
      out.push_back(resolve(base_dir, item.get<std::string>()));
    }
  } else {
    throw config_error(std::string(key) + " must be a path or a list of paths", key);
  }
  return out;
}

void require_exists(const fs::path& p) {
  if (!fs::exists(p)) throw Error(ErrorCode::io, "no such file: " + p.string(), p.string());
}

void fsync_path(const fs::path& p, int flags) {
  int fd = ::open(p.c_str(), flags);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

void write_all(int fd, std::string_view bytes, const fs::path& path) {
  while (!bytes.empty()) {
    ssize_t n = ::write(fd, bytes.data(), bytes.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::io, "cannot write " + path.string() + ": " + std::strerror(errno),
                  path.string());
    }
    bytes.remove_prefix(static_cast<std::size_t>(n));
  }
}

void merge_into(Lexicon& into, const ingest::LexiconParse& parsed, ingest::ParseReport& report) {
  for (const auto& [id, synset] : parsed.lexicon.synsets()) {
    try {
      into.add(synset);
    } catch (const Error& e) {
      if (report.accepted > 0) --report.accepted;
      report.rejected.push_back({0, e.code(), e.what()});
    }
  }
}

}  // namespace

namespace detail {
struct Loaded {
  Lexicon pivot;
  Lexicon v1;
  Lexicon base;
  std::vector<workflow::AuditEvent> log;
};
}  // namespace detail

namespace {

using detail::Loaded;

Loaded load_storage(const ProjectConfig& config) {
  const fs::path& dir = config.storage;
  for (const char* name : {kPivotFile, kV1File, kBaseFile, kLogFile}) {
    if (!fs::exists(dir / name)) {
      throw Error(ErrorCode::no_project,
                  "no ingested project in " + dir.string() + " (run ingest first)", "storage");
    }
  }
  Loaded out;
  out.pivot = deserialize_lexicon(read_file(dir / kPivotFile));
  out.v1 = deserialize_lexicon(read_file(dir / kV1File));
  out.base = deserialize_lexicon(read_file(dir / kBaseFile));
  out.log = workflow::parse_log(read_file(dir / kLogFile));
  return out;
}

workflow::Engine open_engine(const ProjectConfig& config, Loaded& loaded) {
  std::uint64_t events = loaded.log.size();
  workflow::Clock clock =
      config.clock == "logical" ? workflow::logical_clock(events) : workflow::system_clock();
  try {
    return workflow::Engine(config.roster(), std::move(loaded.log), config.language, clock,
                            loaded.base);
  } catch (const Error& e) {
    throw Error(ErrorCode::storage_corruption, std::string("audit log does not replay: ") + e.what(),
                kLogFile);
  }
}

}  // namespace

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path.string(), path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) {
    throw Error(ErrorCode::io, "cannot write " + tmp.string() + ": " + std::strerror(errno),
                path.string());
  }
  try {
    write_all(fd, bytes, tmp);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::fsync(fd);
  ::close(fd);
  fs::rename(tmp, path);
  fsync_path(path.parent_path().empty() ? fs::path(".") : path.parent_path(), O_RDONLY);
}

ProjectConfig ProjectConfig::load(const fs::path& file) {
  require_exists(file);
  ProjectConfig c = parse(read_file(file), file.parent_path());
  c.origin = file;
  return c;
}

ProjectConfig ProjectConfig::parse(std::string_view json_text, const fs::path& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what(), "");
  }
  if (!j.is_object()) throw config_error("config must be a JSON object", "");

  ProjectConfig c;
  try {
    c.language = j.value("language", "ar");
    c.pivot_tag = j.value("pivot_tag", "pwn");
    c.v1_tag = j.value("v1_tag", "awn");
    c.pivot_lexicon = path_list(j, "pivot_lexicon", base_dir);
    c.v1_lexicon = path_list(j, "v1_lexicon", base_dir);
    if (j.contains("ne_filter")) c.ne_filter = resolve(base_dir, j.at("ne_filter").get<std::string>());
    if (j.contains("result_sheets")) {
      for (const auto& [pos, files] : j.at("result_sheets").items()) {
        auto p = try_parse_pos(pos);
        if (!p) throw config_error("unknown part of speech: " + pos, "result_sheets");
        c.result_sheets[*p] = {resolve(base_dir, files.at("final").get<std::string>()),
                               resolve(base_dir, files.at("delta").get<std::string>())};
      }
    }
    if (j.contains("column_mappings")) {
      for (const auto& [key, file] : j.at("column_mappings").items()) {
        c.column_mappings[key] = resolve(base_dir, file.get<std::string>());
      }
    }
    if (j.contains("actors")) {
      for (const auto& a : j.at("actors")) {
        c.actors.push_back({a.at("id").get<std::string>(),
                            workflow::parse_role(a.at("role").get<std::string>())});
      }
    }
    c.storage = resolve(base_dir, j.value("storage", "store"));
    c.port = j.value("port", 8080);
    c.clock = j.value("clock", "system");
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("bad config field: ") + e.what(), "");
  }
  if (c.clock != "system" && c.clock != "logical") {
    throw config_error("clock must be system or logical", "clock");
  }
  if (c.port < 0 || c.port > 65535) throw config_error("port out of range", "port");
  if (c.v1_lexicon.empty() && c.result_sheets.empty()) {
    throw config_error("config needs v1_lexicon or result_sheets", "v1_lexicon");
  }
  if (!c.v1_lexicon.empty() && c.pivot_lexicon.empty()) {
    throw config_error("v1_lexicon needs a pivot_lexicon to align with", "pivot_lexicon");
  }
  // Validates the roster (duplicate ids).
  c.roster();

  for (const auto& p : c.pivot_lexicon) require_exists(p);
  for (const auto& p : c.v1_lexicon) require_exists(p);
  if (c.ne_filter) require_exists(*c.ne_filter);
  for (const auto& [pos, files] : c.result_sheets) {
    require_exists(files.final_sheet);
    require_exists(files.delta_sheet);
  }
  for (const auto& [key, file] : c.column_mappings) require_exists(file);
  return c;
}

workflow::Roster ProjectConfig::roster() const { return workflow::Roster(actors); }

workflow::Clock ProjectConfig::make_clock() const {
  return clock == "logical" ? workflow::logical_clock() : workflow::system_clock();
}

void ProjectConfig::require_workflow_roster() const {
  workflow::Roster r = roster();
  if (r.with_role(workflow::Role::translator).size() < 2 || r.with_role(workflow::Role::expert).empty()) {
    throw config_error("workflow needs at least two translators and one expert", "actors");
  }
}

ingest::ColumnMapping ProjectConfig::mapping(const std::string& key) const {
  auto it = column_mappings.find(key);
  if (it == column_mappings.end()) {
    auto dot = key.find('.');
    if (dot != std::string::npos) it = column_mappings.find(key.substr(0, dot));
  }
  if (it == column_mappings.end()) return {};
  try {
    return ingest::ColumnMapping::parse(read_file(it->second));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::io) throw;
    throw config_error("column mapping " + it->second.string() + ": " + e.what(), key);
  }
}

bool IngestSummary::has_rejections() const {
  for (const auto& f : files) {
    if (!f.report.rejected.empty()) return true;
  }
  return false;
}

IngestSummary ingest(const ProjectConfig& config, bool force) {
  const fs::path& dir = config.storage;
  if (fs::exists(dir / kLogFile) && !force) {
    for (const auto& e : workflow::parse_log(read_file(dir / kLogFile))) {
      if (e.actor != workflow::kSystemActor && e.actor != "import") {
        throw config_error("storage " + dir.string() +
                               " holds workflow activity; re-ingest with --force to discard it",
                           "storage");
      }
    }
  }

  IngestSummary summary;
  Lexicon pivot("en", config.pivot_tag);
  for (const auto& file : config.pivot_lexicon) {
    auto parsed = ingest::parse_pivot_lexicon(read_file(file), "en", config.pivot_tag,
                                              config.mapping("pivot_lexicon"));
    merge_into(pivot, parsed, parsed.report);
    summary.files.push_back({file.string(), std::move(parsed.report)});
  }
  Lexicon v1(config.language, config.v1_tag);
  for (const auto& file : config.v1_lexicon) {
    auto parsed = ingest::parse_pivot_lexicon(read_file(file), config.language, config.v1_tag,
                                              config.mapping("v1_lexicon"));
    merge_into(v1, parsed, parsed.report);
    summary.files.push_back({file.string(), std::move(parsed.report)});
  }
  ingest::NamedEntityFilter filter;
  if (config.ne_filter) filter = ingest::NamedEntityFilter::parse(read_file(*config.ne_filter));

  workflow::GeneratedTasks generated = workflow::generate_tasks(pivot, v1, filter);
  for (const auto& t : generated.tasks) ++summary.tasks_per_pos[t.v1.pos];
  summary.unresolved = generated.unresolved;
  summary.excluded = generated.excluded;

  Lexicon base(config.language, config.v1_tag);
  std::vector<Change> imported;
  for (const auto& [pos, files] : config.result_sheets) {
    std::string key(to_string(pos));
    auto parsed = ingest::parse_result_files(read_file(files.final_sheet), read_file(files.delta_sheet),
                                             pos, config.language, config.mapping("final." + key),
                                             config.mapping("delta." + key));
    for (auto& s : parsed.synsets) {
      try {
        base.add(s);
        ++summary.imported_synsets[pos];
      } catch (const Error& e) {
        parsed.final_report.rejected.push_back({0, e.code(), e.what()});
      }
    }
    imported.insert(imported.end(), parsed.changes.begin(), parsed.changes.end());
    summary.files.push_back({files.final_sheet.string(), std::move(parsed.final_report)});
    summary.files.push_back({files.delta_sheet.string(), std::move(parsed.delta_report)});
  }
  summary.imported_changes = imported.size();

  workflow::Engine engine(config.roster(), config.language, workflow::logical_clock(), base);
  engine.create_tasks(generated.tasks);
  if (!imported.empty()) engine.import_changes(imported);

  fs::create_directories(dir);
  write_file(dir / kPivotFile, serialize_lexicon(pivot));
  write_file(dir / kV1File, serialize_lexicon(v1));
  write_file(dir / kBaseFile, serialize_lexicon(base));
  write_file(dir / kTargetFile, serialize_lexicon(engine.target()));
  write_file(dir / kLogFile, workflow::serialize_log(engine.log()));
  return summary;
}

Project::Project(const ProjectConfig& config) : Project(config, load_storage(config)) {}

Project::Project(const ProjectConfig& config, Loaded loaded)
    : config_(config),
      pivot_(std::move(loaded.pivot)),
      v1_(std::move(loaded.v1)),
      base_(loaded.base),
      engine_(open_engine(config, loaded)) {
  persisted_ = engine_.log().size();
}

void Project::persist() {
  const auto& log = engine_.log();
  if (persisted_ == log.size()) return;
  std::string bytes;
  for (std::size_t i = persisted_; i < log.size(); ++i) bytes += workflow::to_line(log[i]);
  fs::path path = config_.storage / kLogFile;
  int fd = ::open(path.c_str(), O_WRONLY | O_APPEND);
  if (fd < 0) {
    throw Error(ErrorCode::io, "cannot append to " + path.string() + ": " + std::strerror(errno),
                path.string());
  }
  try {
    write_all(fd, bytes, path);
  } catch (...) {
    ::close(fd);
    throw;
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    throw Error(ErrorCode::io, "fsync failed on " + path.string(), path.string());
  }
  ::close(fd);
  persisted_ = log.size();
}

void Project::snapshot() const {
  write_file(config_.storage / kTargetFile, serialize_lexicon(engine_.target()));
}

const Synset* Project::find_synset(const SynsetId& id, std::string* source) const {
  auto found = [&](const Synset* s, const char* name) {
    if (s && source) *source = name;
    return s;
  };
  if (const Synset* s = engine_.target().find(id)) return found(s, "target");
  if (const Synset* s = v1_.find(id)) return found(s, "v1");
  return found(pivot_.find(id), "pivot");
}

metrics::InputStats Project::input_stats() const {
  if (engine_.tasks().empty()) return metrics::compute_input_stats(base_);
  Lexicon input(config_.language, config_.v1_tag);
  for (const auto& [id, t] : engine_.tasks()) input.put(t.v1);
  return metrics::compute_input_stats(input);
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "canonical") return ExportFormat::canonical;
  if (text == "result-sheets") return ExportFormat::result_sheets;
  if (text == "task-sheets") return ExportFormat::task_sheets;
  throw Error(ErrorCode::bad_request,
              "export format must be canonical, result-sheets or task-sheets", "format");
}

std::vector<fs::path> export_project(const Project& project, ExportFormat format,
                                     const fs::path& out_dir) {
  std::vector<fs::path> written;
  auto emit = [&](const fs::path& p, std::string_view bytes) {
    write_file(p, bytes);
    written.push_back(p);
  };
  const Lexicon& target = project.engine().target();
  switch (format) {
    case ExportFormat::canonical:
      emit(out_dir / "target.json", serialize_lexicon(target));
      project.snapshot();
      break;
    case ExportFormat::result_sheets:
      for (PartOfSpeech pos : kAllPos) {
        std::vector<const Synset*> synsets;
        for (const auto& [id, s] : target.synsets()) {
          if (s.pos == pos) synsets.push_back(&s);
        }
        auto sheets = ingest::emit_result_files(synsets);
        std::string name(to_string(pos));
        emit(out_dir / (name + ".final.tsv"), sheets.final_sheet);
        emit(out_dir / (name + ".delta.tsv"), sheets.delta_sheet);
      }
      break;
    case ExportFormat::task_sheets:
      for (PartOfSpeech pos : kAllPos) {
        std::vector<ingest::TaskRecord> records;
        for (const auto& [id, t] : project.engine().tasks()) {
          if (t.pos == pos) records.push_back(ingest::make_task_record(t.pivot, t.v1));
        }
        emit(out_dir / (std::string(to_string(pos)) + ".tasks.tsv"), ingest::emit_task_sheet(records));
      }
      break;
  }
  return written;
}

}  // namespace awn::project
