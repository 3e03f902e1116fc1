#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rhaudit::manifest {

struct Entry {
  std::string id;
  std::string paperEq;
  std::string description;
  bool identity = false;  // classical identity (hard check) rather than audited claim
};

/// Entries of the shipped claims manifest, in file order.
const std::vector<Entry>& entries();

const Entry* find(std::string_view id);

/// Ids of the audited claims, the set a full ledger must cover.
std::vector<std::string> claim_ids();

}  // namespace rhaudit::manifest
