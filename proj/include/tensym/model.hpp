#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensym/duality.hpp"

namespace tensym {

enum class ModelKind { algebra, space };

/// Raw parse of a model file: named elements, the order pairs, the unary
/// tables and relations by key, before any structural checking.
struct ModelDocument {
  ModelKind kind = ModelKind::algebra;
  int m = -1;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq, rg, rh;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> maps;  // N,G,H,g
  std::vector<std::string> present;  // keys seen, in order
};

struct ParsedModel {
  ModelKind kind = ModelKind::algebra;
  std::vector<std::string> names;
  std::optional<TmsAlgebra> algebra;
  std::optional<TmsSpace> space;
};

namespace detail {

struct Token {
  enum Kind { name, lbrace, rbrace, lparen, rparen, comma, colon, arrow, end } kind;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/';
  }

  void advance() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    tok_ = Token{Token::end, "", line_, col_};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '{': single(Token::lbrace); return;
      case '}': single(Token::rbrace); return;
      case '(': single(Token::lparen); return;
      case ')': single(Token::rparen); return;
      case ',': single(Token::comma); return;
      case ':': single(Token::colon); return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          tok_.kind = Token::arrow;
          tok_.text = "->";
          pos_ += 2;
          col_ += 2;
          return;
        }
        throw ParseError("stray '-'", line_, col_);
      default:
        if (!name_char(c)) throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        tok_.kind = Token::name;
        while (pos_ < text_.size() && name_char(text_[pos_])) {
          tok_.text += text_[pos_++];
          ++col_;
        }
        return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

inline const std::vector<std::string>& algebra_keys() {
  static const std::vector<std::string> k = {"m", "elements", "leq", "N", "G", "H"};
  return k;
}
inline const std::vector<std::string>& space_keys() {
  static const std::vector<std::string> k = {"m", "points", "leq", "g", "RG", "RH"};
  return k;
}

inline bool contains(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& x : v)
    if (x == s) return true;
  return false;
}

}  // namespace detail

inline ModelDocument parse_model_document(std::string_view text) {
  using detail::Token;
  detail::Lexer lex(text);

  auto expect = [&](Token::Kind k, const char* what) {
    if (lex.peek().kind != k)
      throw ParseError(std::string("expected ") + what, lex.peek().line, lex.peek().col);
    return lex.take();
  };

  const Token head = expect(Token::name, "'algebra' or 'space'");
  ModelDocument doc;
  if (head.text == "algebra")
    doc.kind = ModelKind::algebra;
  else if (head.text == "space")
    doc.kind = ModelKind::space;
  else
    throw ParseError("expected 'algebra' or 'space'", head.line, head.col);
  expect(Token::lbrace, "'{'");

  const auto& keys =
      doc.kind == ModelKind::algebra ? detail::algebra_keys() : detail::space_keys();

  while (lex.peek().kind != Token::rbrace) {
    const Token key = expect(Token::name, "a section key");
    expect(Token::colon, "':' after section key");
    if (!detail::contains(keys, key.text))
      throw SemanticError("key '" + key.text + "' is not valid in a " +
                          (doc.kind == ModelKind::algebra ? std::string("algebra")
                                                          : std::string("space")) +
                          " model");
    if (detail::contains(doc.present, key.text))
      throw SemanticError("duplicate section '" + key.text + "'");
    doc.present.push_back(key.text);

    // items run until the next `key:` or the closing brace
    auto at_section_end = [&] {
      if (lex.peek().kind == Token::rbrace || lex.peek().kind == Token::end) return true;
      if (lex.peek().kind != Token::name) return false;
      detail::Lexer probe = lex;  // one-token lookahead past the name
      probe.take();
      return probe.peek().kind == Token::colon;
    };

    const bool pair_section = key.text == "leq" || key.text == "RG" || key.text == "RH";
    const bool map_section =
        key.text == "N" || key.text == "G" || key.text == "H" || key.text == "g";
    while (!at_section_end()) {
      if (lex.peek().kind == Token::name && lex.peek().text == "N/A") {
        lex.take();
        continue;
      }
      if (pair_section) {
        expect(Token::lparen, "'(' opening a pair");
        const Token a = expect(Token::name, "an element name");
        expect(Token::comma, "',' inside a pair");
        const Token b = expect(Token::name, "an element name");
        expect(Token::rparen, "')' closing a pair");
        auto& dst = key.text == "leq" ? doc.leq : (key.text == "RG" ? doc.rg : doc.rh);
        dst.emplace_back(a.text, b.text);
      } else if (map_section) {
        const Token a = expect(Token::name, "an element name");
        expect(Token::arrow, "'->' in a map entry");
        const Token b = expect(Token::name, "an element name");
        doc.maps[key.text].emplace_back(a.text, b.text);
      } else if (key.text == "m") {
        const Token v = expect(Token::name, "a positive integer");
        try {
          std::size_t used = 0;
          doc.m = std::stoi(v.text, &used);
          if (used != v.text.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw ParseError("'" + v.text + "' is not an integer", v.line, v.col);
        }
      } else {  // elements / points
        const Token v = expect(Token::name, "an element name");
        doc.names.push_back(v.text);
      }
    }
  }
  expect(Token::rbrace, "'}'");
  if (lex.peek().kind != Token::end)
    throw ParseError("trailing input after the closing brace", lex.peek().line,
                     lex.peek().col);
  return doc;
}

namespace detail {

inline int resolve(const std::map<std::string, int>& index, const std::string& name) {
  const auto it = index.find(name);
  if (it == index.end()) throw SemanticError("unknown element '" + name + "'");
  return it->second;
}

inline std::vector<std::uint8_t> build_table(const ModelDocument& doc,
                                             const std::map<std::string, int>& index,
                                             const std::string& key) {
  const auto it = doc.maps.find(key);
  const int n = static_cast<int>(doc.names.size());
  std::vector<int> table(static_cast<std::size_t>(n), -1);
  if (it != doc.maps.end())
    for (const auto& [from, to] : it->second) {
      const int a = resolve(index, from);
      const int b = resolve(index, to);
      if (table[a] != -1)
        throw SemanticError(key + " maps '" + from + "' twice");
      table[a] = b;
    }
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (table[i] == -1) throw SemanticError(key + " not total");
    out[i] = static_cast<std::uint8_t>(table[i]);
  }
  return out;
}

inline std::vector<std::pair<int, int>> resolve_pairs(
    const std::map<std::string, int>& index,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : pairs)
    out.emplace_back(resolve(index, a), resolve(index, b));
  return out;
}

}  // namespace detail

/// Parse and build the structure with canonical indices in declaration order.
/// Structural failures (unknown names, partial tables, non-lattice orders)
/// are semantic errors; axiom failures are not checked here.
inline ParsedModel parse_model(std::string_view text) {
  const ModelDocument doc = parse_model_document(text);
  if (doc.names.empty())
    throw SemanticError(doc.kind == ModelKind::algebra ? "no elements declared"
                                                       : "no points declared");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < doc.names.size(); ++i) {
    if (doc.names[i] == "N/A") throw SemanticError("'N/A' is reserved");
    if (!index.emplace(doc.names[i], static_cast<int>(i)).second)
      throw SemanticError("duplicate element name '" + doc.names[i] + "'");
  }
  if (doc.m < 1) throw SemanticError("m must be declared and positive");
  const int n = static_cast<int>(doc.names.size());
  const Poset order = build_poset(n, detail::resolve_pairs(index, doc.leq));

  ParsedModel out;
  out.kind = doc.kind;
  out.names = doc.names;
  if (doc.kind == ModelKind::algebra) {
    out.algebra = make_tms_algebra(lattice_from_poset(order),
                                   detail::build_table(doc, index, "N"),
                                   detail::build_table(doc, index, "G"),
                                   detail::build_table(doc, index, "H"), doc.m);
  } else {
    out.space = make_tms_space(
        order, detail::build_table(doc, index, "g"),
        Relation::from_pairs(n, detail::resolve_pairs(index, doc.rg)),
        Relation::from_pairs(n, detail::resolve_pairs(index, doc.rh)), doc.m);
  }
  return out;
}

namespace detail {

inline std::vector<std::string> default_names(int n, const std::vector<std::string>& given) {
  if (static_cast<int>(given.size()) == n) return given;
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline std::string render_pairs(const std::vector<std::pair<int, int>>& pairs,
                                const std::vector<std::string>& names) {
  if (pairs.empty()) return "N/A";
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += " ";
    out += "(" + names[pairs[i].first] + "," + names[pairs[i].second] + ")";
  }
  return out;
}

inline std::string render_map(const std::vector<std::uint8_t>& table,
                              const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += " ";
    out += names[i] + "->" + names[table[i]];
  }
  return out;
}

inline std::string render_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += " ";
    out += names[i];
  }
  return out;
}

}  // namespace detail

/// Canonical text form; parse_model of the output reproduces the structure.
inline std::string render_model(const TmsAlgebra& a,
                                const std::vector<std::string>& names = {}) {
  const auto nm = detail::default_names(a.n(), names);
  std::string out = "algebra {\n";
  out += "  m: " + std::to_string(a.m) + "\n";
  out += "  elements: " + detail::render_names(nm) + "\n";
  out += "  leq: " + detail::render_pairs(cover_pairs(a.lat.order), nm) + "\n";
  out += "  N: " + detail::render_map(a.N, nm) + "\n";
  out += "  G: " + detail::render_map(a.G, nm) + "\n";
  out += "  H: " + detail::render_map(a.H, nm) + "\n";
  out += "}\n";
  return out;
}

inline std::string render_model(const TmsSpace& s,
                                const std::vector<std::string>& names = {}) {
  const auto nm = detail::default_names(s.n(), names);
  std::string out = "space {\n";
  out += "  m: " + std::to_string(s.m) + "\n";
  out += "  points: " + detail::render_names(nm) + "\n";
  out += "  leq: " + detail::render_pairs(cover_pairs(s.order), nm) + "\n";
  out += "  g: " + detail::render_map(s.g, nm) + "\n";
  out += "  RG: " + detail::render_pairs(s.rg.pairs(), nm) + "\n";
  out += "  RH: " + detail::render_pairs(s.rh.pairs(), nm) + "\n";
  out += "}\n";
  return out;
}

}  // namespace tensym
