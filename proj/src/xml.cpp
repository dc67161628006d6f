#include "mimgraph/xml.hpp"

#include <expat.h>

#include <charconv>
#include <cmath>
#include <memory>

#include "mimgraph/error.hpp"

namespace mimgraph {

namespace {

struct ParseState {
  XML_Parser parser = nullptr;
  XmlElement root;
  bool have_root = false;
  std::vector<XmlElement*> stack;
  std::string failure;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* st = static_cast<ParseState*>(data);
  XmlElement el;
  el.name = name;
  el.line = static_cast<int>(XML_GetCurrentLineNumber(st->parser));
  for (const XML_Char** a = attrs; *a; a += 2) el.attributes.emplace_back(a[0], a[1]);
  if (st->stack.empty()) {
    st->root = std::move(el);
    st->have_root = true;
    st->stack.push_back(&st->root);
  } else {
    auto& siblings = st->stack.back()->children;
    siblings.push_back(std::move(el));
    st->stack.push_back(&siblings.back());
  }
}

void XMLCALL on_end(void* data, const XML_Char*) {
  static_cast<ParseState*>(data)->stack.pop_back();
}

void XMLCALL on_text(void* data, const XML_Char* s, int len) {
  auto* st = static_cast<ParseState*>(data);
  if (!st->stack.empty()) st->stack.back()->text.append(s, static_cast<std::size_t>(len));
}

void XMLCALL on_doctype(void* data, const XML_Char*, const XML_Char*, const XML_Char*, int) {
  auto* st = static_cast<ParseState*>(data);
  st->failure = "DOCTYPE declarations are not accepted";
  XML_StopParser(st->parser, XML_FALSE);
}

}  // namespace

const std::string* XmlElement::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

XmlElement parse_xml(std::string_view document) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw Error(ErrorCode::malformed_xml, "could not create XML parser");
  ParseState st;
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  XML_SetStartDoctypeDeclHandler(parser.get(), on_doctype);

  const auto status = XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE);
  if (status != XML_STATUS_OK || !st.failure.empty()) {
    const auto line = XML_GetCurrentLineNumber(parser.get());
    std::string message = st.failure.empty() ? XML_ErrorString(XML_GetErrorCode(parser.get())) : st.failure;
    throw Error(ErrorCode::malformed_xml, message, "line " + std::to_string(line));
  }
  if (!st.have_root) throw Error(ErrorCode::malformed_xml, "document has no root element", "line 1");
  return std::move(st.root);
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool parse_number(std::string_view text, double& out) {
  if (text.empty()) return false;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) return false;
  out = v;
  return true;
}

std::string xml_escape(std::string_view text, bool attribute) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

XmlWriter::XmlWriter() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

void XmlWriter::indent() { out_.append(2 * open_.size(), ' '); }

void XmlWriter::start_tag(std::string_view name, const XmlAttributes& attributes) {
  indent();
  out_ += '<';
  out_ += name;
  for (const auto& [k, v] : attributes) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += xml_escape(v, true);
    out_ += '"';
  }
}

void XmlWriter::open(std::string_view name, const XmlAttributes& attributes) {
  start_tag(name, attributes);
  out_ += ">\n";
  open_.emplace_back(name);
}

void XmlWriter::close() {
  const std::string name = std::move(open_.back());
  open_.pop_back();
  indent();
  out_ += "</" + name + ">\n";
}

void XmlWriter::leaf(std::string_view name, const XmlAttributes& attributes) {
  start_tag(name, attributes);
  out_ += "/>\n";
}

void XmlWriter::text_element(std::string_view name, const XmlAttributes& attributes, std::string_view text) {
  start_tag(name, attributes);
  out_ += '>';
  out_ += xml_escape(text, false);
  out_ += "</";
  out_ += name;
  out_ += ">\n";
}

void XmlWriter::comment(std::string_view text) {
  indent();
  out_ += xml_comment(text);
}

std::string xml_comment(std::string_view text) {
  std::string safe(text);
  for (std::size_t i = safe.find("--"); i != std::string::npos; i = safe.find("--", i)) safe.replace(i, 2, "- -");
  return "<!-- " + safe + " -->\n";
}

std::string XmlWriter::finish() {
  while (!open_.empty()) close();
  return std::move(out_);
}

}  // namespace mimgraph
