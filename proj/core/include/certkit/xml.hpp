/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace certkit {

/// Minimal XML element tree: tags, attributes, child elements and text.
/// Covers the small document shapes this tool reads and writes (test-run
/// record files); no namespaces, CDATA or DTDs.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  std::string text;  // concatenated character data directly inside this tag

  std::optional<std::string> attr(std::string_view name) const;
  std::string attr_or(std::string_view name, std::string_view fallback) const;
  const XmlElement* first_child(std::string_view name) const;
  std::vector<const XmlElement*> children_named(std::string_view name) const;
};

/// Parses a document and returns its root element. Throws Error(usage) with
/// a line number on malformed input.
XmlElement parse_xml(std::string_view content, std::string_view source_name);

/// Serializes with 2-space indentation and escaped attribute/text content.
std::string render_xml(const XmlElement& root);

std::string xml_escape(std::string_view s);

}  // namespace certkit
