#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mimgraph {

/// Minimal element tree produced by `parse_xml`.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;  // document order
  std::vector<XmlElement> children;
  std::string text;  // concatenated character data directly inside this element
  int line = 0;

  const std::string* attribute(std::string_view key) const;
};

/// Parses a UTF-8 document. DOCTYPE declarations are refused.
/// Errors: MalformedXml (detail "line N").
XmlElement parse_xml(std::string_view document);

/// Shortest decimal that reads back to the same double; "-0" is written "0".
std::string format_number(double v);

/// Strict decimal parse of the whole string; rejects non-finite values.
bool parse_number(std::string_view text, double& out);

using XmlAttributes = std::vector<std::pair<std::string_view, std::string>>;

/// Streaming writer with fixed two-space indentation and escaping.
class XmlWriter {
 public:
  XmlWriter();

  void open(std::string_view name, const XmlAttributes& attributes = {});
  void close();
  void leaf(std::string_view name, const XmlAttributes& attributes = {});
  void text_element(std::string_view name, const XmlAttributes& attributes, std::string_view text);
  void comment(std::string_view text);

  /// Closes any open elements and returns the document.
  std::string finish();

 private:
  void start_tag(std::string_view name, const XmlAttributes& attributes);
  void indent();

  std::string out_;
  std::vector<std::string> open_;
};

std::string xml_escape(std::string_view text, bool attribute);

/// `<!-- text -->` plus newline; "--" inside `text` is broken up.
std::string xml_comment(std::string_view text);

}  // namespace mimgraph
