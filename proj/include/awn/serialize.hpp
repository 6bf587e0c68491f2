#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "awn/lexicon.hpp"

namespace awn {

using ordered_json = nlohmann::ordered_json;

// Fixed key order everywhere; see README "Canonical lexicon document".
ordered_json to_json(const Gloss& gloss);
ordered_json to_json(const Example& example);
ordered_json to_json(const Sense& sense);
ordered_json to_json(const Phraset& phraset);
ordered_json to_json(const Synset& synset);

Gloss gloss_from_json(const nlohmann::json& j);
Example example_from_json(const nlohmann::json& j);
Sense sense_from_json(const nlohmann::json& j);
Phraset phraset_from_json(const nlohmann::json& j);
Synset synset_from_json(const nlohmann::json& j);

// Byte-deterministic document: synsets sorted by id, senses in stored order
// (active by rank, then deleted), phrasets by position. Ends with '\n'.
std::string serialize_lexicon(const Lexicon& lexicon);
Lexicon deserialize_lexicon(std::string_view document);

}  // namespace awn
