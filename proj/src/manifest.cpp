#include "rhaudit/manifest.hpp"

#include <algorithm>

#include "json.hpp"
#include "manifest_data.hpp"
#include "rhaudit/errors.hpp"

namespace rhaudit::manifest {

namespace {

std::vector<Entry> load() {
  const auto doc = nlohmann::json::parse(detail::kManifestJson);
  std::vector<Entry> out;
  for (const auto& item : doc.at("claims")) {
    Entry e;
    e.id = item.at("id").get<std::string>();
    e.paperEq = item.at("paperEq").get<std::string>();
    e.description = item.value("description", "");
    e.identity = item.at("kind").get<std::string>() == "identity";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = load();
  return table;
}

const Entry* find(std::string_view id) {
  const auto& table = entries();
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.id == id; });
  return it == table.end() ? nullptr : &*it;
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& e : entries()) {
    if (!e.identity) out.push_back(e.id);
  }
  return out;
}

}  // namespace rhaudit::manifest
