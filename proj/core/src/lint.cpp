/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/lint.hpp"

#include <sstream>

#include "certkit/util.hpp"

namespace certkit {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

bool is_keyword(const std::string& token, std::string_view keyword) {
  return to_lower(token) == keyword;
}

std::string join(const std::vector<std::string>& tokens, size_t begin,
                 size_t end) {
  std::string out;
  for (size_t i = begin; i < end && i < tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

LintResult lint_requirement(std::string_view text) {
  LintResult result;
  std::string s = trim(text);
  if (s.empty()) {
    result.diagnostics.push_back("empty statement");
    return result;
  }
  if (s.back() == '.')
    s.pop_back();
  else
    result.diagnostics.push_back("statement must end with a period");

  std::vector<std::string> tokens = tokenize(s);

  size_t shall = tokens.size();
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (is_keyword(tokens[i], "shall")) {
      shall = i;
      break;
    }
  }
  if (shall == tokens.size()) {
    result.diagnostics.push_back("missing 'shall'");
    return result;
  }

  RequirementParts parts;

  // ---- scope / condition / component (before 'shall') ----
  size_t when = shall;
  for (size_t i = 0; i < shall; ++i) {
    if (is_keyword(tokens[i], "when")) {
      when = i;
      break;
    }
  }

  if (when < shall) {
    // condition clause ends at the first comma before 'shall'
    size_t comma = shall;
    for (size_t i = when + 1; i < shall; ++i) {
      if (tokens[i] == "," || tokens[i].back() == ',') {
        comma = i;
        break;
      }
    }
    if (comma == shall) {
      result.diagnostics.push_back("missing comma after condition");
      return result;
    }
    parts.scope = join(tokens, 0, when);
    std::string condition = join(tokens, when + 1, comma);
    if (tokens[comma] != ",") {
      if (!condition.empty()) condition += ' ';
      condition += tokens[comma].substr(0, tokens[comma].size() - 1);
    }
    parts.condition = condition;
    if (parts.condition.empty())
      result.diagnostics.push_back("empty condition after 'when'");
    size_t clause = comma + 1;
    if (clause >= shall || !is_keyword(tokens[clause], "the")) {
      result.diagnostics.push_back("expected 'the <component>' after the condition");
      return result;
    }
    parts.component = join(tokens, clause + 1, shall);
  } else {
    // no condition: the component is introduced by the last 'the'
    // before 'shall'; anything before that is the scope
    size_t the = shall;
    for (size_t i = shall; i-- > 0;) {
      if (is_keyword(tokens[i], "the")) {
        the = i;
        break;
      }
    }
    if (the == shall) {
      result.diagnostics.push_back("missing 'the' before the component");
      return result;
    }
    parts.scope = join(tokens, 0, the);
    parts.component = join(tokens, the + 1, shall);
  }
  if (parts.component.empty())
    result.diagnostics.push_back("missing component between 'the' and 'shall'");

  // ---- timing / response (after 'shall') ----
  size_t pos = shall + 1;
  if (pos < tokens.size() && is_keyword(tokens[pos], "within")) {
    if (pos + 2 >= tokens.size()) {
      result.diagnostics.push_back("incomplete timing clause after 'within'");
      return result;
    }
    auto value = parse_int(tokens[pos + 1]);
    if (!value || *value < 0) {
      result.diagnostics.push_back("timing value must be a non-negative integer");
    } else {
      parts.timing_value = static_cast<unsigned>(*value);
    }
    std::string unit = to_lower(tokens[pos + 2]);
    if (unit != "ms" && unit != "s")
      result.diagnostics.push_back("timing unit must be 'ms' or 's'");
    else
      parts.timing_unit = unit;
    pos += 3;
  }
  parts.response = join(tokens, pos, tokens.size());
  if (parts.response.empty())
    result.diagnostics.push_back("missing response after 'shall'");

  if (result.diagnostics.empty()) {
    result.verdict = LintVerdict::conformant;
    result.parts = std::move(parts);
  }
  return result;
}

std::string render_requirement(const RequirementParts& parts) {
  std::string out;
  if (!parts.scope.empty()) out += parts.scope + " ";
  if (!parts.condition.empty()) out += "when " + parts.condition + ", ";
  out += "the " + parts.component + " shall ";
  if (parts.timing_value)
    out += "within " + std::to_string(*parts.timing_value) + " " +
           parts.timing_unit + " ";
  out += parts.response + ".";
  return out;
}

}  // namespace certkit
