#include "awn/service.hpp"

#include <mutex>

#include <httplib.h>
#include <json.hpp>

#include "awn/metrics.hpp"
#include "awn/workflow.hpp"

namespace awn::service {

namespace {

using workflow::Task;

Reply ok(const ordered_json& j) { return {200, j.dump()}; }

Reply failure(const Error& e) { return {http_status(e.code()), error_body(e).dump()}; }

// Runs `fn`, turning module errors and malformed JSON into error replies.
template <class F>
Reply guarded(F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return failure(e);
  } catch (const nlohmann::json::exception& e) {
    return failure(Error(ErrorCode::bad_request, std::string("malformed request: ") + e.what(), "body"));
  }
}

std::optional<std::string> param(const Query& q, const std::string& key) {
  auto it = q.find(key);
  if (it == q.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

ordered_json lemmas_json(const Synset& s) {
  ordered_json arr = ordered_json::array();
  for (const Sense* sense : s.active_senses()) arr.push_back(sense->written_form);
  return arr;
}

ordered_json task_summary(const Task& t) {
  ordered_json j;
  j["id"] = t.id;
  j["pos"] = to_string(t.pos);
  j["version"] = t.version;
  j["state"] = workflow::to_json(t.state);
  j["author"] = t.author;
  j["pivot_lemmas"] = lemmas_json(t.pivot);
  j["v1_lemmas"] = lemmas_json(t.v1);
  return j;
}

ordered_json hit_json(const CrossLingualHit& h) {
  ordered_json j;
  j["pivot_id"] = h.pivot_id.value;
  j["target_id"] = h.target_id ? ordered_json(h.target_id->value) : ordered_json(nullptr);
  j["status"] = to_string(h.status);
  j["lemmas"] = h.lemmas;
  j["phrasets"] = h.phrasets;
  return j;
}

const nlohmann::json& member(const nlohmann::json& body, const char* key) {
  if (!body.contains(key)) {
    throw Error(ErrorCode::bad_request, std::string("request needs '") + key + "'", key);
  }
  return body.at(key);
}

std::string actor_of(const nlohmann::json& body) {
  const auto& a = member(body, "actor");
  if (!a.is_string()) throw Error(ErrorCode::bad_request, "actor must be a string", "actor");
  return a.get<std::string>();
}

std::uint64_t observed_version(const nlohmann::json& body) {
  const auto& v = member(body, "observedVersion");
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::bad_request, "observedVersion must be a non-negative integer",
                "observedVersion");
  }
  return v.get<std::uint64_t>();
}

template <class Fn>
auto field_scoped(const char* field, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_request, std::string("malformed ") + field + ": " + e.what(), field);
  }
}

Query query_of(const httplib::Request& req) {
  Query q;
  for (const auto& [k, v] : req.params) q.emplace(k, v);
  return q;
}

void send(httplib::Response& res, const Reply& r) {
  res.status = r.status;
  res.set_content(r.body, "application/json; charset=utf-8");
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_request:
    case ErrorCode::header_mismatch:
    case ErrorCode::missing_id:
    case ErrorCode::bad_pos:
    case ErrorCode::empty_pivot_synset:
    case ErrorCode::malformed_cell:
    case ErrorCode::invalid_decision:
    case ErrorCode::reject_without_comment:
    case ErrorCode::invalid_config: return 400;
    case ErrorCode::wrong_role:
    case ErrorCode::self_review_forbidden:
    case ErrorCode::unknown_actor: return 403;
    case ErrorCode::unknown_task:
    case ErrorCode::unknown_synset:
    case ErrorCode::not_found: return 404;
    case ErrorCode::stale_version:
    case ErrorCode::illegal_state:
    case ErrorCode::duplicate_id:
    case ErrorCode::already_deleted: return 409;
    case ErrorCode::invariant_violation:
    case ErrorCode::unknown_rank:
    case ErrorCode::conflicting_gap_flag:
    case ErrorCode::id_in_delta_missing_from_final: return 422;
    case ErrorCode::no_project: return 503;
    case ErrorCode::io:
    case ErrorCode::storage_corruption:
    case ErrorCode::gap_in_sequence:
    case ErrorCode::illegal_transition_in_log:
    case ErrorCode::illegal_log:
    case ErrorCode::port_in_use: return 500;
  }
  return 500;
}

ordered_json error_body(const Error& e) {
  ordered_json inner;
  inner["code"] = to_string(e.code());
  inner["message"] = e.what();
  inner["field"] = e.field();
  ordered_json j;
  j["error"] = std::move(inner);
  return j;
}

Reply Api::list_tasks(const Query& q) const {
  return guarded([&] {
    std::shared_lock lock(mutex_);
    const auto& engine = project_.engine();
    std::optional<workflow::StateKind> state;
    std::optional<PartOfSpeech> pos;
    if (auto s = param(q, "state")) state = workflow::parse_state_kind(*s);
    if (auto p = param(q, "pos")) pos = parse_pos(*p);
    std::vector<const Task*> tasks;
    if (auto actor = param(q, "actor")) {
      tasks = engine.actionable_for(*actor);
    } else {
      for (const auto& [id, t] : engine.tasks()) tasks.push_back(&t);
    }
    ordered_json arr = ordered_json::array();
    for (const Task* t : tasks) {
      if (state && t->state.kind != *state) continue;
      if (pos && t->pos != *pos) continue;
      arr.push_back(task_summary(*t));
    }
    ordered_json j;
    j["tasks"] = std::move(arr);
    return ok(j);
  });
}

Reply Api::get_task(const std::string& id) const {
  return guarded([&] {
    std::shared_lock lock(mutex_);
    ordered_json j;
    j["task"] = workflow::to_json(project_.engine().task(id));
    return ok(j);
  });
}

Reply Api::post_task(const std::string& id, const std::string& action, const std::string& body_text) {
  return guarded([&] {
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(body_text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::bad_request, std::string("body is not valid JSON: ") + e.what(), "body");
    }
    if (!body.is_object()) throw Error(ErrorCode::bad_request, "body must be a JSON object", "body");
    std::uint64_t version = observed_version(body);

    std::unique_lock lock(mutex_);
    auto& engine = project_.engine();
    workflow::TaskState state;
    if (action == "contribution") {
      auto c = field_scoped("contribution",
                            [&] { return workflow::contribution_from_json(member(body, "contribution")); });
      state = engine.submit(id, actor_of(body), c, version);
    } else if (action == "peer-review" || action == "expert-review") {
      auto d = field_scoped("decision",
                            [&] { return workflow::decision_from_json(member(body, "decision")); });
      state = action == "peer-review" ? engine.peer_review(id, actor_of(body), d, version)
                                      : engine.expert_review(id, actor_of(body), d, version);
    } else if (action == "claim") {
      state = engine.claim(id, actor_of(body), version);
    } else if (action == "assign-reviewer") {
      state = engine.assign_peer_reviewer(id, version);
    } else {
      throw Error(ErrorCode::not_found, "no action " + action, "path");
    }
    project_.persist();
    ordered_json j;
    j["state"] = workflow::to_json(state);
    j["task"] = workflow::to_json(engine.task(id));
    return ok(j);
  });
}

Reply Api::get_synset(const std::string& id) const {
  return guarded([&] {
    std::shared_lock lock(mutex_);
    std::string source;
    const Synset* s = project_.find_synset(SynsetId(id), &source);
    if (!s) throw Error(ErrorCode::unknown_synset, "no synset " + id, "id");
    ordered_json j;
    j["source"] = source;
    j["synset"] = to_json(*s);
    return ok(j);
  });
}

Reply Api::lookup(const Query& q) const {
  return guarded([&] {
    auto form = param(q, "form");
    if (!form) throw Error(ErrorCode::bad_request, "lookup needs a form", "form");
    std::optional<PartOfSpeech> pos;
    if (auto p = param(q, "pos")) pos = parse_pos(*p);
    std::shared_lock lock(mutex_);
    const Lexicon& target = project_.engine().target();
    ordered_json synsets = ordered_json::array();
    for (const Synset* s : target.lookup(*form, pos)) synsets.push_back(to_json(*s));
    ordered_json hits = ordered_json::array();
    for (const auto& h : cross_lingual_lookup(target, project_.pivot(), *form, pos)) {
      hits.push_back(hit_json(h));
    }
    ordered_json j;
    j["form"] = *form;
    j["target"] = std::move(synsets);
    j["cross_lingual"] = std::move(hits);
    return ok(j);
  });
}

Reply Api::contribution_metrics(const Query& q) const {
  return guarded([&] {
    metrics::Scope scope = metrics::Scope::approved_only;
    metrics::UpdatedRule rule = metrics::UpdatedRule::lemma_or_gap;
    if (auto s = param(q, "scope")) scope = metrics::parse_scope(*s);
    if (auto u = param(q, "updated")) rule = metrics::parse_updated_rule(*u);
    std::shared_lock lock(mutex_);
    ordered_json j;
    j["scope"] = metrics::to_string(scope);
    j["updated_rule"] = metrics::to_string(rule);
    j["stats"] = metrics::to_json(metrics::compute_contribution_stats(project_.engine().log(), scope, rule));
    j["input"] = metrics::to_json(project_.input_stats());
    return ok(j);
  });
}

Reply Api::correctness_metrics() const {
  return guarded([&] {
    std::shared_lock lock(mutex_);
    return ok(metrics::to_json(metrics::compute_correctness(project_.engine().log())));
  });
}

Reply Api::completeness_metrics() const {
  return guarded([&] {
    std::shared_lock lock(mutex_);
    auto findings = metrics::completeness_audit(project_.engine().target());
    ordered_json j;
    j["count"] = findings.size();
    j["findings"] = metrics::to_json(findings);
    return ok(j);
  });
}

struct Server::Impl {
  explicit Impl(project::Project& p) : api(p) {}
  Api api;
  httplib::Server http;
};

Server::Server(project::Project& project) : impl_(std::make_unique<Impl>(project)) {
  auto& http = impl_->http;
  Api& api = impl_->api;
  // httplib's default sets SO_REUSEPORT, which lets a second server share the port.
  http.set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  http.Get("/tasks", [&api](const httplib::Request& req, httplib::Response& res) {
    send(res, api.list_tasks(query_of(req)));
  });
  http.Get(R"(/tasks/([^/]+))", [&api](const httplib::Request& req, httplib::Response& res) {
    send(res, api.get_task(req.matches[1]));
  });
  http.Post(R"(/tasks/([^/]+)/(contribution|peer-review|expert-review|claim|assign-reviewer))",
            [&api](const httplib::Request& req, httplib::Response& res) {
              send(res, api.post_task(req.matches[1], req.matches[2], req.body));
            });
  http.Get(R"(/synsets/(.+))", [&api](const httplib::Request& req, httplib::Response& res) {
    send(res, api.get_synset(req.matches[1]));
  });
  http.Get("/lookup", [&api](const httplib::Request& req, httplib::Response& res) {
    send(res, api.lookup(query_of(req)));
  });
  http.Get("/metrics/contributions", [&api](const httplib::Request& req, httplib::Response& res) {
    send(res, api.contribution_metrics(query_of(req)));
  });
  http.Get("/metrics/correctness", [&api](const httplib::Request&, httplib::Response& res) {
    send(res, api.correctness_metrics());
  });
  http.Get("/metrics/completeness", [&api](const httplib::Request&, httplib::Response& res) {
    send(res, api.completeness_metrics());
  });
  http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.status == 404 && res.body.empty()) {
      send(res, failure(Error(ErrorCode::not_found, "no route " + req.method + " " + req.path, "path")));
    }
  });
  http.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          message = e.what();
        } catch (...) {
        }
        send(res, failure(Error(ErrorCode::io, message)));
      });
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  auto& http = impl_->http;
  if (port == 0) {
    int bound = http.bind_to_any_port(host);
    if (bound <= 0) throw Error(ErrorCode::port_in_use, "cannot bind any port on " + host, "port");
    return bound;
  }
  if (!http.bind_to_port(host, port)) {
    throw Error(ErrorCode::port_in_use, "port " + std::to_string(port) + " is in use", "port");
  }
  return port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

}  // namespace awn::service
