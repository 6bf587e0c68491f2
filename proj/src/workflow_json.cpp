#include "awn/error.hpp"
#include "awn/workflow.hpp"

namespace awn::workflow {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ordered_json strings(const std::vector<std::string>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : v) arr.push_back(s);
  return arr;
}

std::vector<std::string> strings_from(const nlohmann::json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& s : j.at(key)) out.push_back(s.get<std::string>());
  return out;
}

ordered_json phrasets_json(const std::vector<PhrasetDraft>& phrasets) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : phrasets) {
    ordered_json pj;
    pj["text"] = p.text;
    pj["examples"] = strings(p.examples);
    arr.push_back(std::move(pj));
  }
  return arr;
}

std::vector<PhrasetDraft> phrasets_from(const nlohmann::json& j) {
  std::vector<PhrasetDraft> out;
  if (!j.contains("phrasets")) return out;
  for (const auto& p : j.at("phrasets")) {
    out.push_back({p.at("text").get<std::string>(), strings_from(p, "examples")});
  }
  return out;
}

ordered_json translate_body(const Translate& t) {
  ordered_json j;
  j["gloss"] = t.gloss;
  ordered_json senses = ordered_json::array();
  for (const auto& s : t.senses) {
    ordered_json sj;
    sj["form"] = s.form;
    sj["examples"] = strings(s.examples);
    senses.push_back(std::move(sj));
  }
  j["senses"] = std::move(senses);
  j["phrasets"] = phrasets_json(t.phrasets);
  return j;
}

Translate translate_from(const nlohmann::json& j) {
  Translate t;
  t.gloss = j.value("gloss", "");
  if (j.contains("senses")) {
    for (const auto& s : j.at("senses")) {
      t.senses.push_back({s.at("form").get<std::string>(), strings_from(s, "examples")});
    }
  }
  t.phrasets = phrasets_from(j);
  return t;
}

ordered_json payload_json(const EventPayload& payload) {
  return std::visit(
      overloaded{
          [](const TaskCreated& p) {
            ordered_json j;
            j["pivot"] = awn::to_json(p.pivot);
            j["v1"] = awn::to_json(p.v1);
            return j;
          },
          [](const ContributionSubmitted& p) {
            ordered_json j;
            j["contribution"] = to_json(p.contribution);
            ordered_json changes = ordered_json::array();
            for (const auto& c : p.changes) changes.push_back(awn::to_json(c));
            j["changes"] = std::move(changes);
            return j;
          },
          [](const ReviewRecorded& p) {
            ordered_json j;
            j["phase"] = p.phase == ReviewPhase::peer ? "peer" : "expert";
            j["decision"] = to_json(p.decision);
            return j;
          },
          [](const StateChanged& p) {
            ordered_json j;
            j["from"] = to_json(p.from);
            j["to"] = to_json(p.to);
            return j;
          },
          [](const ChangeCommitted& p) {
            ordered_json j;
            j["source"] = p.source == ChangeSource::import ? "import" : "workflow";
            j["change"] = awn::to_json(p.change);
            return j;
          },
      },
      payload);
}

}  // namespace

ordered_json to_json(const Contribution& c) {
  ordered_json j;
  j["type"] = contribution_type(c);
  std::visit(overloaded{
                 [&](const MarkGap& g) {
                   j["phrasets"] = phrasets_json(g.phrasets);
                   j["comment"] = g.comment;
                   j["gloss"] = g.gloss ? ordered_json(*g.gloss) : ordered_json(nullptr);
                 },
                 [&](const Translate& t) {
                   ordered_json body = translate_body(t);
                   for (auto& [k, v] : body.items()) j[k] = v;
                 },
                 [&](const MergeV1& m) {
                   j["translation"] = translate_body(m.translation);
                   j["add_lemmas"] = strings(m.add_lemmas);
                   ordered_json dels = ordered_json::array();
                   for (const auto& d : m.delete_lemmas) {
                     ordered_json dj;
                     dj["form"] = d.form;
                     dj["reason"] = to_string(d.reason);
                     dels.push_back(std::move(dj));
                   }
                   j["delete_lemmas"] = std::move(dels);
                   j["copy_gloss"] = m.copy_gloss;
                   j["copy_examples"] = m.copy_examples;
                 },
                 [&](const Skip& s) { j["comment"] = s.comment; },
             },
             c);
  return j;
}

Contribution contribution_from_json(const nlohmann::json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "mark-gap") {
    MarkGap g;
    g.phrasets = phrasets_from(j);
    g.comment = j.value("comment", "");
    if (j.contains("gloss") && !j.at("gloss").is_null()) g.gloss = j.at("gloss").get<std::string>();
    return g;
  }
  if (type == "translate") return translate_from(j);
  if (type == "merge-v1") {
    MergeV1 m;
    if (j.contains("translation")) m.translation = translate_from(j.at("translation"));
    m.add_lemmas = strings_from(j, "add_lemmas");
    if (j.contains("delete_lemmas")) {
      for (const auto& d : j.at("delete_lemmas")) {
        m.delete_lemmas.push_back({d.at("form").get<std::string>(),
                                   parse_deletion_reason(d.value("reason", "not-covered-by-gloss"))});
      }
    }
    m.copy_gloss = j.value("copy_gloss", true);
    m.copy_examples = j.value("copy_examples", true);
    return m;
  }
  if (type == "skip") return Skip{j.value("comment", "")};
  throw Error(ErrorCode::bad_request, "unknown contribution type: " + type, "contribution.type");
}

ordered_json to_json(const ReviewDecision& d) {
  ordered_json j;
  j["verdict"] = d.verdict == Verdict::accept ? "accept" : "reject";
  ordered_json checklist;
  checklist["gap"] = d.checklist.gap;
  checklist["gloss"] = d.checklist.gloss;
  checklist["lemmas"] = d.checklist.lemmas;
  checklist["examples"] = d.checklist.examples;
  j["checklist"] = std::move(checklist);
  j["comment"] = d.comment;
  j["counter_lemmas"] = strings(d.counter_lemmas);
  ordered_json items = ordered_json::array();
  for (auto i : d.rejected_items) items.push_back(i);
  j["rejected_items"] = std::move(items);
  return j;
}

ReviewDecision decision_from_json(const nlohmann::json& j) {
  ReviewDecision d;
  std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "accept") {
    d.verdict = Verdict::accept;
  } else if (verdict == "reject") {
    d.verdict = Verdict::reject;
  } else {
    throw Error(ErrorCode::bad_request, "verdict must be accept or reject", "decision.verdict");
  }
  if (j.contains("checklist")) {
    const auto& c = j.at("checklist");
    d.checklist.gap = c.value("gap", true);
    d.checklist.gloss = c.value("gloss", true);
    d.checklist.lemmas = c.value("lemmas", true);
    d.checklist.examples = c.value("examples", true);
  }
  d.comment = j.value("comment", "");
  d.counter_lemmas = strings_from(j, "counter_lemmas");
  if (j.contains("rejected_items")) {
    for (const auto& i : j.at("rejected_items")) d.rejected_items.push_back(i.get<std::size_t>());
  }
  return d;
}

ordered_json to_json(const TaskState& s) {
  ordered_json j;
  j["kind"] = to_string(s.kind);
  j["actor"] = s.actor;
  j["comment"] = s.comment;
  return j;
}

TaskState state_from_json(const nlohmann::json& j) {
  return {parse_state_kind(j.at("kind").get<std::string>()), j.value("actor", ""),
          j.value("comment", "")};
}

std::string_view event_type(const EventPayload& payload) {
  return std::visit(
      overloaded{[](const TaskCreated&) { return std::string_view{"task-created"}; },
                 [](const ContributionSubmitted&) { return std::string_view{"contribution-submitted"}; },
                 [](const ReviewRecorded&) { return std::string_view{"review-recorded"}; },
                 [](const StateChanged&) { return std::string_view{"state-changed"}; },
                 [](const ChangeCommitted&) { return std::string_view{"change-committed"}; }},
      payload);
}

ordered_json to_json(const AuditEvent& e) {
  ordered_json j;
  j["seq"] = e.seq;
  j["ts"] = e.timestamp;
  j["actor"] = e.actor;
  j["task"] = e.task;
  j["type"] = event_type(e.payload);
  j["payload"] = payload_json(e.payload);
  return j;
}

AuditEvent event_from_json(const nlohmann::json& j) {
  AuditEvent e;
  e.seq = j.at("seq").get<std::uint64_t>();
  e.timestamp = j.at("ts").get<std::string>();
  e.actor = j.at("actor").get<std::string>();
  e.task = j.at("task").get<std::string>();
  std::string type = j.at("type").get<std::string>();
  const auto& p = j.at("payload");
  if (type == "task-created") {
    e.payload = TaskCreated{synset_from_json(p.at("pivot")), synset_from_json(p.at("v1"))};
  } else if (type == "contribution-submitted") {
    ContributionSubmitted cs{contribution_from_json(p.at("contribution")), {}};
    for (const auto& c : p.at("changes")) cs.changes.push_back(change_from_json(c));
    e.payload = std::move(cs);
  } else if (type == "review-recorded") {
    std::string phase = p.at("phase").get<std::string>();
    e.payload = ReviewRecorded{phase == "expert" ? ReviewPhase::expert : ReviewPhase::peer,
                               decision_from_json(p.at("decision"))};
  } else if (type == "state-changed") {
    e.payload = StateChanged{state_from_json(p.at("from")), state_from_json(p.at("to"))};
  } else if (type == "change-committed") {
    e.payload = ChangeCommitted{change_from_json(p.at("change")),
                                p.value("source", "workflow") == "import" ? ChangeSource::import
                                                                          : ChangeSource::workflow};
  } else {
    throw Error(ErrorCode::storage_corruption, "unknown event type: " + type, "type");
  }
  return e;
}

std::string to_line(const AuditEvent& e) { return to_json(e).dump() + "\n"; }

std::string serialize_log(std::span<const AuditEvent> events) {
  std::string out;
  for (const auto& e : events) out += to_line(e);
  return out;
}

std::vector<AuditEvent> parse_log(std::string_view text) {
  std::vector<AuditEvent> events;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    try {
      events.push_back(event_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::storage_corruption,
                  "audit log line " + std::to_string(line_no) + ": " + ex.what(),
                  "line " + std::to_string(line_no));
    } catch (const Error& ex) {
      throw Error(ErrorCode::storage_corruption,
                  "audit log line " + std::to_string(line_no) + ": " + ex.what(),
                  "line " + std::to_string(line_no));
    }
  }
  return events;
}

ordered_json to_json(const Task& t) {
  ordered_json j;
  j["id"] = t.id;
  j["pos"] = awn::to_string(t.pos);
  j["version"] = t.version;
  j["state"] = to_json(t.state);
  j["author"] = t.author;
  j["pivot"] = awn::to_json(t.pivot);
  j["v1"] = awn::to_json(t.v1);
  j["contribution"] = t.contribution ? to_json(*t.contribution) : ordered_json(nullptr);
  j["draft"] = t.draft ? awn::to_json(*t.draft) : ordered_json(nullptr);
  ordered_json changes = ordered_json::array();
  for (const auto& c : t.changes) changes.push_back(awn::to_json(c));
  j["changes"] = std::move(changes);
  j["last_comment"] = t.last_comment;
  j["counter_lemmas"] = strings(t.counter_lemmas);
  j["peer_decision"] = t.last_peer_decision ? to_json(*t.last_peer_decision) : ordered_json(nullptr);
  j["expert_decision"] =
      t.last_expert_decision ? to_json(*t.last_expert_decision) : ordered_json(nullptr);
  return j;
}

}  // namespace awn::workflow
