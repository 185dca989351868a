#include "nonblock/report.hpp"

#include "json.hpp"

namespace nonblock {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "nonblock/1";

json stats_fields(const SearchStats& stats) {
  return json{{"explored", stats.explored},
              {"frontier_peak", stats.frontier_peak},
              {"millis", stats.millis},
              {"limit_hit", stats.limit_hit}};
}

json witness_field(const std::optional<EventString>& witness) {
  if (!witness) return nullptr;
  return json(*witness);
}

json verdict_fields(const Verdict& v) {
  json doc = stats_fields(v.stats);
  doc["schema"] = kSchema;
  doc["nonblocking"] = v.nonblocking;
  doc["witness"] = witness_field(v.witness);
  return doc;
}

json certificate_fields(const LassoCertificate& c) {
  json doc;
  doc["k"] = c.k.to_decimal();
  doc["ell"] = c.ell ? json(c.ell->to_decimal()) : json(nullptr);
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2); }

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  return dump(verdict_fields(v));
}

std::string prefix_report_to_json(const PrefixReport& r) {
  json doc = stats_fields(r.stats);
  doc["schema"] = kSchema;
  doc["prefix_closed"] = r.prefix_closed;
  doc["violation"] = witness_field(r.violation);
  return dump(doc);
}

std::string certificate_to_json(const LassoCertificate& c) {
  json doc = certificate_fields(c);
  doc["schema"] = kSchema;
  return dump(doc);
}

std::string unary_decision_to_json(const UnaryDecision& d) {
  json doc = verdict_fields(d.verdict);
  doc["certificate"] =
      d.certificate ? certificate_fields(*d.certificate) : json(nullptr);
  return dump(doc);
}

std::string manifest_to_json(const std::string& kind,
                             const std::vector<std::string>& files,
                             const std::string& expected) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = kind;
  doc["components"] = files;
  doc["expected"] = expected;
  return dump(doc);
}

}  // namespace nonblock
