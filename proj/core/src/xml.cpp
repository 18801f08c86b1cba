/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/xml.hpp"

#include <cctype>

#include "certkit/errors.hpp"
#include "certkit/util.hpp"

namespace certkit {

std::optional<std::string> XmlElement::attr(std::string_view name) const {
  for (const auto& [k, v] : attributes)
    if (k == name) return v;
  return std::nullopt;
}

std::string XmlElement::attr_or(std::string_view name,
                                std::string_view fallback) const {
  auto v = attr(name);
  return v ? *v : std::string(fallback);
}

const XmlElement* XmlElement::first_child(std::string_view name) const {
  for (const auto& c : children)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<const XmlElement*> XmlElement::children_named(
    std::string_view name) const {
  std::vector<const XmlElement*> out;
  for (const auto& c : children)
    if (c.name == name) out.push_back(&c);
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view content, std::string_view source)
      : content_(content), source_(source) {}

  XmlElement parse_document() {
    skip_misc();
    XmlElement root = parse_element();
    skip_misc();
    if (pos_ != content_.size()) fail("trailing content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    int line = 1;
    for (size_t i = 0; i < pos_ && i < content_.size(); ++i)
      if (content_[i] == '\n') ++line;
    fail_usage(std::string(source_) + ":" + std::to_string(line) + ": " +
               message);
  }

  bool eof() const { return pos_ >= content_.size(); }
  char peek() const { return eof() ? '\0' : content_[pos_]; }

  bool try_consume(std::string_view token) {
    if (content_.substr(pos_).substr(0, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_whitespace() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // whitespace, <?...?> declarations and <!-- --> comments between elements
  void skip_misc() {
    while (true) {
      skip_whitespace();
      if (try_consume("<?")) {
        size_t end = content_.find("?>", pos_);
        if (end == std::string_view::npos) fail("unterminated declaration");
        pos_ = end + 2;
      } else if (try_consume("<!--")) {
        size_t end = content_.find("-->", pos_);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
      } else {
        return;
      }
    }
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.' || c == ':';
  }

  std::string parse_name() {
    size_t start = pos_;
    while (!eof() && is_name_char(peek())) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(content_.substr(start, pos_ - start));
  }

  std::string decode_entities(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity");
      std::string_view entity = raw.substr(i + 1, semi - i - 1);
      if (entity == "amp")
        out += '&';
      else if (entity == "lt")
        out += '<';
      else if (entity == "gt")
        out += '>';
      else if (entity == "quot")
        out += '"';
      else if (entity == "apos")
        out += '\'';
      else if (!entity.empty() && entity[0] == '#') {
        long code = 0;
        try {
          code = (entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X'))
                     ? std::stol(std::string(entity.substr(2)), nullptr, 16)
                     : std::stol(std::string(entity.substr(1)));
        } catch (...) {
          fail("bad character reference '&" + std::string(entity) + ";'");
        }
        if (code < 0 || code > 0x10FFFF)
          fail("character reference out of range");
        // encode as UTF-8
        unsigned cp = static_cast<unsigned>(code);
        if (cp < 0x80) {
          out += static_cast<char>(cp);
        } else if (cp < 0x800) {
          out += static_cast<char>(0xC0 | (cp >> 6));
          out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
          out += static_cast<char>(0xE0 | (cp >> 12));
          out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
          out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
          out += static_cast<char>(0xF0 | (cp >> 18));
          out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
          out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
          out += static_cast<char>(0x80 | (cp & 0x3F));
        }
      } else {
        fail("unknown entity '&" + std::string(entity) + ";'");
      }
      i = semi;
    }
    return out;
  }

  XmlElement parse_element() {
    if (!try_consume("<")) fail("expected '<'");
    XmlElement element;
    element.name = parse_name();
    while (true) {
      skip_whitespace();
      if (try_consume("/>")) return element;
      if (try_consume(">")) break;
      std::string key = parse_name();
      skip_whitespace();
      if (!try_consume("=")) fail("expected '=' after attribute name");
      skip_whitespace();
      char quote = peek();
      if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
      ++pos_;
      size_t end = content_.find(quote, pos_);
      if (end == std::string_view::npos) fail("unterminated attribute value");
      element.attributes.emplace_back(
          key, decode_entities(content_.substr(pos_, end - pos_)));
      pos_ = end + 1;
    }
    // content until matching close tag
    while (true) {
      size_t lt = content_.find('<', pos_);
      if (lt == std::string_view::npos) fail("unterminated element <" +
                                             element.name + ">");
      element.text += decode_entities(content_.substr(pos_, lt - pos_));
      pos_ = lt;
      if (try_consume("<!--")) {
        size_t end = content_.find("-->", pos_);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
        continue;
      }
      if (content_.substr(pos_).substr(0, 2) == "</") {
        pos_ += 2;
        std::string name = parse_name();
        if (name != element.name)
          fail("mismatched close tag </" + name + "> for <" + element.name +
               ">");
        skip_whitespace();
        if (!try_consume(">")) fail("expected '>' in close tag");
        element.text = trim(element.text);
        return element;
      }
      element.children.push_back(parse_element());
    }
  }

  std::string_view content_;
  std::string_view source_;
  size_t pos_ = 0;
};

void render_element(const XmlElement& e, int depth, std::string& out) {
  std::string indent(static_cast<size_t>(depth) * 2, ' ');
  out += indent + "<" + e.name;
  for (const auto& [k, v] : e.attributes)
    out += " " + k + "=\"" + xml_escape(v) + "\"";
  if (e.children.empty() && e.text.empty()) {
    out += "/>\n";
    return;
  }
  out += ">";
  if (!e.text.empty()) out += xml_escape(e.text);
  if (!e.children.empty()) {
    out += "\n";
    for (const auto& c : e.children) render_element(c, depth + 1, out);
    out += indent;
  }
  out += "</" + e.name + ">\n";
}

}  // namespace

XmlElement parse_xml(std::string_view content, std::string_view source_name) {
  return Parser(content, source_name).parse_document();
}

std::string render_xml(const XmlElement& root) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  render_element(root, 0, out);
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace certkit
