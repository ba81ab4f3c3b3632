#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "sdrt/document.hpp"
#include "sdrt/errors.hpp"
#include "sdrt/relations.hpp"

namespace sdrt {

namespace detail {

inline std::string json_where(const std::string& source, size_t line) {
  return source + ":" + std::to_string(line);
}

inline const nlohmann::ordered_json& require_field(const nlohmann::ordered_json& j,
                                                   const char* key,
                                                   const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error(Errc::SchemaError, where + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string require_string(const nlohmann::ordered_json& j, const char* key,
                                  const std::string& where) {
  const auto& v = require_field(j, key, where);
  if (!v.is_string())
    throw Error(Errc::SchemaError, where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

inline long require_integer(const nlohmann::ordered_json& j, const char* key,
                            const std::string& where) {
  const auto& v = require_field(j, key, where);
  if (!v.is_number_integer())
    throw Error(Errc::SchemaError, where + ": field \"" + key + "\" must be an integer");
  return v.get<long>();
}

inline const nlohmann::ordered_json& require_array(const nlohmann::ordered_json& j,
                                                   const char* key,
                                                   const std::string& where) {
  const auto& v = require_field(j, key, where);
  if (!v.is_array())
    throw Error(Errc::SchemaError, where + ": field \"" + key + "\" must be an array");
  return v;
}

inline Document parse_document_json(const nlohmann::ordered_json& j,
                                    const std::string& where) {
  if (!j.is_object()) throw Error(Errc::SchemaError, where + ": expected an object");
  Document doc;
  doc.id = require_string(j, "id", where);
  for (const auto& e : require_array(j, "edus", where)) {
    if (!e.is_object()) throw Error(Errc::SchemaError, where + ": edu must be an object");
    Edu edu;
    edu.id = require_string(e, "id", where);
    edu.start = require_integer(e, "start", where);
    edu.end = require_integer(e, "end", where);
    if (auto it = e.find("text"); it != e.end()) {
      if (!it->is_string())
        throw Error(Errc::SchemaError, where + ": edu text must be a string");
      edu.text = it->get<std::string>();
    }
    doc.edus.push_back(std::move(edu));
  }
  if (auto it = j.find("relations"); it != j.end()) {
    if (!it->is_array())
      throw Error(Errc::SchemaError, where + ": field \"relations\" must be an array");
    for (const auto& r : *it) {
      if (!r.is_object())
        throw Error(Errc::SchemaError, where + ": relation must be an object");
      RelationInstance rel;
      std::string type = require_string(r, "type", where);
      auto parsed = relation_from_string(type);
      if (!parsed)
        throw Error(Errc::UnknownRelationName, where + ": unknown relation \"" + type + "\"");
      rel.rel = *parsed;
      rel.source = require_string(r, "source", where);
      rel.target = require_string(r, "target", where);
      doc.relations.push_back(std::move(rel));
    }
  }
  if (auto it = j.find("segments"); it != j.end()) {
    if (!it->is_array())
      throw Error(Errc::SchemaError, where + ": field \"segments\" must be an array");
    for (const auto& s : *it) {
      if (!s.is_object())
        throw Error(Errc::SchemaError, where + ": segment must be an object");
      ComplexSegment seg;
      seg.id = require_string(s, "id", where);
      for (const auto& m : require_array(s, "members", where)) {
        if (!m.is_string())
          throw Error(Errc::SchemaError, where + ": segment members must be strings");
        seg.members.push_back(m.get<std::string>());
      }
      doc.segments.push_back(std::move(seg));
    }
  }
  return doc;
}

}  // namespace detail

// Reads newline-delimited JSON, one document per line. Every document is
// validated on the way in: EDU spans are checked and ordered, and the full
// discourse graph is built once to reject duplicate ids, dangling
// endpoints, and membership cycles with a file:line diagnostic.
inline std::vector<Document> parse_corpus(std::istream& in,
                                          const std::string& source = "<input>") {
  std::vector<Document> docs;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (blank) continue;
    const std::string where = detail::json_where(source, line_no);
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::SchemaError, where + ": invalid JSON: " + e.what());
    }
    Document doc = detail::parse_document_json(j, where);
    if (!seen_ids.insert(doc.id).second)
      throw Error(Errc::SchemaError, where + ": duplicate document id \"" + doc.id + "\"");
    try {
      normalize_edu_order(doc);
      document_sdrs(doc);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": document \"" + doc.id + "\": " + e.what());
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline std::vector<Document> parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::SchemaError, "cannot open corpus file: " + path);
  return parse_corpus(in, path);
}

inline nlohmann::ordered_json document_json(const Document& doc) {
  nlohmann::ordered_json j;
  j["id"] = doc.id;
  j["edus"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.edus)
    j["edus"].push_back({{"id", e.id}, {"start", e.start}, {"end", e.end}, {"text", e.text}});
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : doc.relations)
    j["relations"].push_back(
        {{"type", std::string(to_string(r.rel))}, {"source", r.source}, {"target", r.target}});
  j["segments"] = nlohmann::ordered_json::array();
  for (const auto& s : doc.segments)
    j["segments"].push_back({{"id", s.id}, {"members", s.members}});
  return j;
}

inline void serialize_corpus(const std::vector<Document>& docs, std::ostream& out) {
  for (const auto& d : docs) out << document_json(d).dump() << "\n";
}

inline const Document& find_document(const std::vector<Document>& docs,
                                     const std::string& id) {
  for (const auto& d : docs)
    if (d.id == id) return d;
  throw Error(Errc::UnknownDocument, "no document with id \"" + id + "\"");
}

}  // namespace sdrt
