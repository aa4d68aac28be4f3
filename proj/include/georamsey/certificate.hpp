#pragma once

#include "georamsey/errors.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace georamsey {

enum class Verdict { Pass, Fail };

/// Outcome of an exhaustive check, serialized as one line of key=value pairs:
///
///   verdict=pass property=stepup examined=1240 witness=none
///
/// `examined` counts the objects the check ruled on (subsets, tuples, ...).
/// Checks that look for a violation attach it as the witness on failure;
/// searches that look for a configuration attach it on success.
struct Certificate {
  Verdict verdict = Verdict::Pass;
  std::string property;
  std::uint64_t examined = 0;
  std::optional<std::vector<std::size_t>> witness;
  std::vector<std::pair<std::string, std::string>> details;

  bool passed() const noexcept { return verdict == Verdict::Pass; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline std::string to_string(const Certificate& c) {
  std::ostringstream out;
  out << "verdict=" << (c.passed() ? "pass" : "fail") << " property=" << c.property << " examined=" << c.examined
      << " witness=";
  if (!c.witness) {
    out << "none";
  } else {
    for (std::size_t i = 0; i < c.witness->size(); ++i) {
      out << (i ? "," : "") << (*c.witness)[i];
    }
  }
  for (const auto& [k, v] : c.details) {
    out << ' ' << k << '=' << v;
  }
  return out.str();
}

inline Certificate parse_certificate(const std::string& line) {
  Certificate c;
  std::istringstream in(line);
  std::string field;
  bool saw_verdict = false;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw ParseError(1, "certificate field without '=': " + field);
    }
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == "verdict") {
      if (value != "pass" && value != "fail") {
        throw ParseError(1, "bad verdict '" + value + "'");
      }
      c.verdict = value == "pass" ? Verdict::Pass : Verdict::Fail;
      saw_verdict = true;
    } else if (key == "property") {
      c.property = value;
    } else if (key == "examined") {
      c.examined = std::stoull(value);
    } else if (key == "witness") {
      if (value != "none") {
        std::vector<std::size_t> w;
        std::istringstream items(value);
        for (std::string item; std::getline(items, item, ',');) {
          w.push_back(std::stoull(item));
        }
        c.witness = std::move(w);
      }
    } else {
      c.details.emplace_back(std::move(key), std::move(value));
    }
  }
  if (!saw_verdict) {
    throw ParseError(1, "certificate without a verdict");
  }
  return c;
}

}  // namespace georamsey
