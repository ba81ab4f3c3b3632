#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sdrt/validator.hpp"

namespace sdrt {

namespace detail {

inline std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// One row per verdict, RFC 4180 (CRLF line endings, quoted fields).
inline std::string verdicts_csv(const ValidationReport& report) {
  std::string out =
      "doc,step,subject,relation,source,target,point,status,via,distance,adjacent\r\n";
  for (const auto& d : report.documents) {
    for (const auto& v : d.verdicts) {
      std::vector<std::string> row{
          v.doc_id,
          std::to_string(v.step),
          v.subject,
          std::string(to_string(v.decision.rel)),
          v.decision.source,
          v.decision.target,
          v.point,
          std::string(to_string(v.status)),
          v.via ? std::string(to_string(*v.via)) : std::string(),
          v.distance ? std::to_string(*v.distance) : std::string(),
          v.adjacent ? std::string(*v.adjacent ? "true" : "false") : std::string(),
      };
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += detail::csv_escape(row[i]);
      }
      out += "\r\n";
    }
  }
  return out;
}

inline nlohmann::ordered_json stats_json(const CorpusStats& st) {
  nlohmann::ordered_json j;
  auto fraction = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  j["documents"] = st.documents;
  j["decisions"] = st.decisions;
  j["compliant"] = st.compliant;
  j["violating"] = st.violating;
  j["exempt"] = st.exempt;
  j["unresolvable"] = st.unresolvable;
  j["coordinating_rescues"] = st.coordinating_rescues;
  j["rfc_edu"] = fraction(st.rfc_edu);
  j["rfc_r"] = fraction(st.rfc_r);
  j["open_fraction"] = st.open_fraction;
  j["nonlocal_fraction"] = fraction(st.nonlocal_fraction);
  j["nonadjacent_fraction"] = fraction(st.nonadjacent_fraction);
  j["docs_over_5_violations_fraction"] = st.docs_over_5_violations_fraction;
  j["distance_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [dist, count] : st.distance_histogram)
    j["distance_histogram"][std::to_string(dist)] = count;
  j["violations_per_doc"] = nlohmann::ordered_json::object();
  for (const auto& [id, count] : st.violations_per_doc)
    j["violations_per_doc"][id] = count;
  return j;
}

inline nlohmann::ordered_json report_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["documents"] = nlohmann::ordered_json::array();
  for (const auto& d : report.documents) {
    nlohmann::ordered_json dj;
    dj["id"] = d.id;
    dj["violations"] = d.violations;
    dj["components"] = d.components_at_end;
    dj["coordinating_rescues"] = d.coordinating_rescues;
    dj["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : d.verdicts) {
      nlohmann::ordered_json vj;
      vj["step"] = v.step;
      vj["subject"] = v.subject;
      vj["relation"] = std::string(to_string(v.decision.rel));
      vj["source"] = v.decision.source;
      vj["target"] = v.decision.target;
      vj["point"] = v.point;
      vj["status"] = std::string(to_string(v.status));
      vj["via"] = v.via ? nlohmann::ordered_json(std::string(to_string(*v.via)))
                        : nlohmann::ordered_json(nullptr);
      vj["distance"] =
          v.distance ? nlohmann::ordered_json(*v.distance) : nlohmann::ordered_json(nullptr);
      vj["adjacent"] =
          v.adjacent ? nlohmann::ordered_json(*v.adjacent) : nlohmann::ordered_json(nullptr);
      vj["unresolvable"] = v.unresolvable;
      dj["verdicts"].push_back(std::move(vj));
    }
    j["documents"].push_back(std::move(dj));
  }
  j["stats"] = stats_json(report.stats);
  return j;
}

inline std::string histogram_csv(const CorpusStats& st) {
  std::string out = "distance,count\r\n";
  for (const auto& [dist, count] : st.distance_histogram)
    out += std::to_string(dist) + "," + std::to_string(count) + "\r\n";
  return out;
}

}  // namespace sdrt
