// Experiment configuration: a JSON file with nested sections (type, flag or
// S, weights, bounds) resolved into a fully validated plan. Unknown keys and
// schema violations are reported exhaustively; a zero central charge is
// rejected at load time.
#pragma once

#include <optional>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kmlie/numeric.hpp"
#include "kmlie/typelabel.hpp"

namespace kmlie {

// parses a covector expression such as "m2-m0" or "1/2*m1+m0-3*m3";
// reports the byte offset on garbage
inline VecQ parse_functional(const std::string& s, int n) {
  VecQ out(n, Rat(0));
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("functional parse error at position " + std::to_string(i) + ": " +
                                what + " in '" + s + "'");
  };
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i == s.size()) {
      if (first) fail("empty functional");
      break;
    }
    Rat sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    // optional rational coefficient followed by '*'
    Rat coef = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      try {
        coef = parse_rat(s.substr(start, i - start));
      } catch (const std::invalid_argument&) {
        i = start;
        fail("bad rational coefficient");
      }
      skip_ws();
      if (i >= s.size() || s[i] != '*') fail("expected '*' after coefficient");
      ++i;
      skip_ws();
    }
    if (i >= s.size() || s[i] != 'm') fail("expected coordinate 'm<index>'");
    ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected node index after 'm'");
    int idx = std::stoi(s.substr(start, i - start));
    if (idx < 0 || idx >= n) fail("node index out of range 0.." + std::to_string(n - 1));
    out[idx] += sign * coef;
  }
  return out;
}

struct ExperimentPlan {
  TypeLabel type;
  int alpha0 = -1;  // -1 means: the first admissible node
  std::optional<std::vector<int>> S;
  std::optional<std::vector<std::string>> flag;  // functional expressions
  std::optional<VecQ> lambda;
  std::optional<Rat> charge;
  Int depth = 2;
  Int window = 3;
  Int operators = 3;
};

inline ExperimentPlan parse_config_text(const std::string& text) {
  nlohmann::json j;
  std::vector<std::string> errors;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  ExperimentPlan plan;
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  static const std::vector<std::string> known = {"type", "alpha0", "S", "flag", "weights", "bounds"};
  for (const auto& [key, unused] : j.items()) {
    bool ok = false;
    for (const auto& k : known) ok = ok || k == key;
    if (!ok) errors.push_back("unknown key '" + key + "'");
  }

  if (!j.contains("type") || !j["type"].is_string()) {
    errors.push_back("missing or non-string 'type'");
  } else {
    try {
      plan.type = parse_label(j["type"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      errors.push_back(e.what());
    }
  }
  if (j.contains("alpha0")) {
    if (!j["alpha0"].is_number_integer())
      errors.push_back("'alpha0' must be an integer node index");
    else
      plan.alpha0 = j["alpha0"].get<int>();
  }
  if (j.contains("S") && j.contains("flag")) errors.push_back("'S' and 'flag' are mutually exclusive");
  if (j.contains("S")) {
    if (!j["S"].is_array())
      errors.push_back("'S' must be an array of node indices");
    else {
      std::vector<int> s;
      for (const auto& x : j["S"]) {
        if (!x.is_number_integer()) {
          errors.push_back("'S' entries must be integers");
          break;
        }
        s.push_back(x.get<int>());
      }
      plan.S = std::move(s);
    }
  }
  if (j.contains("flag")) {
    if (!j["flag"].is_array())
      errors.push_back("'flag' must be an array of functional expressions");
    else {
      std::vector<std::string> fs;
      for (const auto& x : j["flag"]) {
        if (!x.is_string()) {
          errors.push_back("'flag' entries must be strings");
          break;
        }
        fs.push_back(x.get<std::string>());
      }
      plan.flag = std::move(fs);
    }
  }
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_object()) {
      errors.push_back("'weights' must be an object with 'lambda' and 'charge'");
    } else {
      for (const auto& [key, unused] : w.items())
        if (key != "lambda" && key != "charge") errors.push_back("unknown key 'weights." + key + "'");
      if (w.contains("lambda") && w["lambda"].is_array()) {
        VecQ lam;
        for (const auto& x : w["lambda"]) {
          try {
            lam.push_back(parse_rat(x.get<std::string>()));
          } catch (...) {
            errors.push_back("'weights.lambda' entries must be exact rationals \"p/q\"");
            break;
          }
        }
        plan.lambda = std::move(lam);
      } else {
        errors.push_back("'weights.lambda' must be an array of exact rationals");
      }
      if (w.contains("charge")) {
        try {
          plan.charge = parse_rat(w["charge"].get<std::string>());
          if (*plan.charge == 0)
            errors.push_back("'weights.charge' must be nonzero (the central element acts injectively)");
        } catch (...) {
          errors.push_back("'weights.charge' must be an exact rational \"p/q\"");
        }
      } else {
        errors.push_back("'weights.charge' is required when 'weights' is present");
      }
    }
  }
  if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    if (!b.is_object()) {
      errors.push_back("'bounds' must be an object");
    } else {
      for (const auto& [key, val] : b.items()) {
        if (key != "depth" && key != "window" && key != "operators") {
          errors.push_back("unknown key 'bounds." + key + "'");
          continue;
        }
        if (!val.is_number_integer() || val.get<long>() < 0) {
          errors.push_back("'bounds." + key + "' must be a nonnegative integer");
          continue;
        }
        Int v(val.get<long>());
        if (key == "depth") plan.depth = v;
        if (key == "window") plan.window = v;
        if (key == "operators") plan.operators = v;
      }
    }
  }

  if (!errors.empty()) {
    std::ostringstream os;
    os << "config schema violations (" << errors.size() << "):";
    for (const auto& e : errors) os << "\n  - " << e;
    throw std::invalid_argument(os.str());
  }
  return plan;
}

}  // namespace kmlie
