#include "awn/serialize.hpp"

#include "awn/error.hpp"

namespace awn {

namespace {

constexpr std::string_view kLexiconFormat = "awn-lexicon/1";

ordered_json examples_json(const std::vector<Example>& examples) {
  ordered_json arr = ordered_json::array();
  for (const auto& ex : examples) arr.push_back(to_json(ex));
  return arr;
}

std::vector<Example> examples_from(const nlohmann::json& j) {
  std::vector<Example> out;
  for (const auto& e : j) out.push_back(example_from_json(e));
  return out;
}

}  // namespace

ordered_json to_json(const Gloss& gloss) {
  ordered_json j;
  j["text"] = gloss.text;
  j["language"] = gloss.language;
  j["provenance"] = to_string(gloss.provenance);
  return j;
}

ordered_json to_json(const Example& example) {
  ordered_json j;
  j["text"] = example.text;
  j["language"] = example.language;
  j["provenance"] = to_string(example.provenance);
  return j;
}

ordered_json to_json(const Sense& sense) {
  ordered_json j;
  j["form"] = sense.written_form;
  j["rank"] = sense.rank;
  j["provenance"] = to_string(sense.provenance);
  j["deleted"] = sense.deleted ? ordered_json(to_string(*sense.deleted)) : ordered_json(nullptr);
  j["examples"] = examples_json(sense.examples);
  return j;
}

ordered_json to_json(const Phraset& phraset) {
  ordered_json j;
  j["text"] = phraset.text;
  j["language"] = phraset.language;
  j["provenance"] = to_string(phraset.provenance);
  j["examples"] = examples_json(phraset.examples);
  return j;
}

ordered_json to_json(const Synset& synset) {
  ordered_json j;
  j["id"] = synset.id.value;
  j["pos"] = to_string(synset.pos);
  j["pivot"] = synset.pivot ? ordered_json(synset.pivot->value) : ordered_json(nullptr);
  j["status"] = to_string(synset.status);
  j["approved"] = synset.approved;
  j["gloss"] = synset.gloss ? to_json(*synset.gloss) : ordered_json(nullptr);
  ordered_json senses = ordered_json::array();
  for (const auto& s : synset.senses) senses.push_back(to_json(s));
  j["senses"] = std::move(senses);
  ordered_json phrasets = ordered_json::array();
  for (const auto& p : synset.phrasets) phrasets.push_back(to_json(p));
  j["phrasets"] = std::move(phrasets);
  return j;
}

Gloss gloss_from_json(const nlohmann::json& j) {
  return {j.at("text").get<std::string>(), j.at("language").get<std::string>(),
          parse_provenance(j.value("provenance", "added"))};
}

Example example_from_json(const nlohmann::json& j) {
  return {j.at("text").get<std::string>(), j.value("language", ""),
          parse_provenance(j.value("provenance", "added"))};
}

Sense sense_from_json(const nlohmann::json& j) {
  Sense s;
  s.written_form = j.at("form").get<std::string>();
  s.rank = j.at("rank").get<int>();
  s.provenance = parse_provenance(j.value("provenance", "imported-v1"));
  if (j.contains("deleted") && !j.at("deleted").is_null()) {
    s.deleted = parse_deletion_reason(j.at("deleted").get<std::string>());
  }
  if (j.contains("examples")) s.examples = examples_from(j.at("examples"));
  return s;
}

Phraset phraset_from_json(const nlohmann::json& j) {
  Phraset p;
  p.text = j.at("text").get<std::string>();
  p.language = j.value("language", "");
  p.provenance = parse_provenance(j.value("provenance", "added"));
  if (j.contains("examples")) p.examples = examples_from(j.at("examples"));
  return p;
}

Synset synset_from_json(const nlohmann::json& j) {
  Synset s;
  s.id = SynsetId(j.at("id").get<std::string>());
  s.pos = parse_pos(j.at("pos").get<std::string>());
  if (j.contains("pivot") && !j.at("pivot").is_null()) {
    s.pivot = SynsetId(j.at("pivot").get<std::string>());
  }
  s.status = parse_status(j.at("status").get<std::string>());
  s.approved = j.value("approved", false);
  if (j.contains("gloss") && !j.at("gloss").is_null()) s.gloss = gloss_from_json(j.at("gloss"));
  for (const auto& sj : j.at("senses")) s.senses.push_back(sense_from_json(sj));
  for (const auto& pj : j.at("phrasets")) s.phrasets.push_back(phraset_from_json(pj));
  return s;
}

std::string serialize_lexicon(const Lexicon& lexicon) {
  ordered_json doc;
  doc["format"] = kLexiconFormat;
  doc["language"] = lexicon.language();
  doc["tag"] = lexicon.tag();
  ordered_json synsets = ordered_json::array();
  for (const auto& [id, synset] : lexicon.synsets()) synsets.push_back(to_json(synset));
  doc["synsets"] = std::move(synsets);
  return doc.dump(1) + "\n";
}

Lexicon deserialize_lexicon(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::storage_corruption, std::string("lexicon document: ") + e.what());
  }
  if (doc.value("format", "") != kLexiconFormat) {
    throw Error(ErrorCode::storage_corruption, "not a lexicon document", "format");
  }
  Lexicon lexicon(doc.at("language").get<std::string>(), doc.value("tag", ""));
  try {
    for (const auto& sj : doc.at("synsets")) lexicon.add(synset_from_json(sj));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::storage_corruption, std::string("lexicon document: ") + e.what());
  }
  return lexicon;
}

}  // namespace awn
