#include "coxdet/count_report.hpp"

#include <nlohmann/json.hpp>

namespace coxdet {

std::string to_json(const CountReport& report) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [name, value] : report.counts) counts[name] = value.str();
  nlohmann::json doc{{"group", report.group}, {"method", report.method},
                     {"counts", std::move(counts)}};
  if (report.n) doc["n"] = *report.n;
  return doc.dump();
}

CountReport count_report_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  CountReport report;
  report.group = doc.at("group").get<std::string>();
  report.method = doc.at("method").get<std::string>();
  if (doc.contains("n")) report.n = doc.at("n").get<long long>();
  for (const auto& [name, value] : doc.at("counts").items())
    report.counts[name] = BigInt(value.get<std::string>());
  return report;
}

}  // namespace coxdet
