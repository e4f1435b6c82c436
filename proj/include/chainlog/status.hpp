#pragma once

#include <initializer_list>
#include <optional>
#include <string_view>

namespace chainlog {

// Three-valued security status, totally ordered by impact.
enum class SecurityStatus { Safe = 0, Vulnerable = 1, Malicious = 2 };

constexpr SecurityStatus maxStatus(SecurityStatus a, SecurityStatus b) {
  return a < b ? b : a;
}

// Greatest status in a collection; an empty collection combines to Safe.
template <typename Range>
constexpr SecurityStatus maxStatus(const Range& statuses) {
  SecurityStatus out = SecurityStatus::Safe;
  for (SecurityStatus s : statuses) out = maxStatus(out, s);
  return out;
}

constexpr SecurityStatus maxStatus(std::initializer_list<SecurityStatus> xs) {
  return maxStatus<std::initializer_list<SecurityStatus>>(xs);
}

constexpr std::string_view statusName(SecurityStatus s) {
  switch (s) {
    case SecurityStatus::Safe: return "safe";
    case SecurityStatus::Vulnerable: return "vulnerable";
    case SecurityStatus::Malicious: return "malicious";
  }
  return "unknown";
}

constexpr std::optional<SecurityStatus> statusFromName(std::string_view name) {
  if (name == "safe") return SecurityStatus::Safe;
  if (name == "vulnerable") return SecurityStatus::Vulnerable;
  if (name == "malicious") return SecurityStatus::Malicious;
  return std::nullopt;
}

}  // namespace chainlog
