#include "assemblies/format.hpp"

#include <algorithm>      // for max
#include <fstream>        // for ifstream, ofstream
#include <sstream>        // for ostringstream
#include <unordered_map>  // for unordered_map

namespace assemblies {

  char const* to_string(ParseErrorCategory c) noexcept {
    switch (c) {
      case ParseErrorCategory::unknown_name:
        return "unknown name";
      case ParseErrorCategory::wrong_arity:
        return "wrong arity";
      case ParseErrorCategory::duplicate_name:
        return "duplicate name";
      case ParseErrorCategory::missing_section:
        return "missing section";
      case ParseErrorCategory::syntax:
        return "syntax";
    }
    return "syntax";
  }

  char const* to_string(TableKind k) noexcept {
    return k == TableKind::group ? "group" : "semigroup";
  }

  namespace {

    // file:line:column: category: detail
    std::string located(std::string const& file, std::size_t line, std::size_t column) {
      std::string out = file.empty() ? "" : file + ":";
      if (line != 0) {
        out += std::to_string(line) + ":" + std::to_string(column) + ":";
      }
      return out.empty() ? out : out + " ";
    }

    struct Token {
      std::string text;
      std::size_t column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
    }

    // Significant lines, comments stripped, split on whitespace.
    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      while (!text.empty()) {
        ++number;
        std::size_t const eol  = text.find('\n');
        std::string_view  line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
          while (i < line.size() && is_space(line[i])) {
            ++i;
          }
          std::size_t const start = i;
          while (i < line.size() && !is_space(line[i])) {
            ++i;
          }
          if (i > start) {
            l.tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
          }
        }
        if (!l.tokens.empty()) {
          out.push_back(std::move(l));
        }
      }
      return out;
    }

    // "key:" either as its own token or glued to the first value ("kind:group").
    bool take_key(Line& l, std::string_view key) {
      std::string const head = std::string(key) + ":";
      Token&            t    = l.tokens.front();
      if (t.text == head) {
        l.tokens.erase(l.tokens.begin());
        return true;
      }
      if (t.text.starts_with(head)) {
        t.text   = t.text.substr(head.size());
        t.column += head.size();
        return true;
      }
      return false;
    }

  }  // namespace

  ParseError::ParseError(ParseErrorCategory category,
                         std::size_t        line,
                         std::size_t        column,
                         std::string const& detail,
                         std::string const& file)
      : Error(located(file, line, column) + to_string(category) + ": " + detail),
        _category(category),
        _line(line),
        _column(column),
        _detail(detail) {}

  TableDocument parse_table_document(std::string_view text) {
    using enum ParseErrorCategory;
    auto           lines = tokenize(text);
    TableDocument  doc;
    std::size_t    i = 0;

    if (i == lines.size() || !take_key(lines[i], "kind")) {
      auto const line = i < lines.size() ? lines[i].number : 0;
      throw ParseError(missing_section, line, 1, "expected 'kind: semigroup|group'");
    }
    {
      Line const& l = lines[i];
      if (l.tokens.size() != 1) {
        throw ParseError(syntax, l.number, 1, "'kind:' takes exactly one value");
      }
      if (l.tokens[0].text == "semigroup") {
        doc.kind = TableKind::semigroup;
      } else if (l.tokens[0].text == "group") {
        doc.kind = TableKind::group;
      } else {
        throw ParseError(syntax,
                         l.number,
                         l.tokens[0].column,
                         "unknown kind '" + l.tokens[0].text + "'");
      }
      doc.kind_location = {l.number, 1};
      ++i;
    }

    if (i == lines.size() || !take_key(lines[i], "elements")) {
      auto const line = i < lines.size() ? lines[i].number : 0;
      throw ParseError(missing_section, line, 1, "expected 'elements:'");
    }
    std::unordered_map<std::string, ElementId> index;
    {
      Line const& l         = lines[i];
      doc.elements_location = {l.number, 1};
      if (l.tokens.empty()) {
        throw ParseError(wrong_arity, l.number, 1, "no elements declared");
      }
      for (auto const& tok : l.tokens) {
        if (!is_valid_element_name(tok.text)) {
          throw ParseError(syntax, l.number, tok.column, "invalid name '" + tok.text + "'");
        }
        if (!index.emplace(tok.text, static_cast<ElementId>(doc.names.size())).second) {
          throw ParseError(duplicate_name,
                           l.number,
                           tok.column,
                           "'" + tok.text + "' is declared twice");
        }
        doc.names.push_back(tok.text);
      }
      ++i;
    }

    if (i == lines.size() || !take_key(lines[i], "table")) {
      auto const line = i < lines.size() ? lines[i].number : 0;
      throw ParseError(missing_section, line, 1, "expected 'table:'");
    }
    if (!lines[i].tokens.empty()) {
      throw ParseError(syntax,
                       lines[i].number,
                       lines[i].tokens[0].column,
                       "rows start on the line after 'table:'");
    }
    std::size_t const table_line = lines[i].number;
    ++i;

    std::size_t const n = doc.names.size();
    for (; i < lines.size(); ++i) {
      Line const& l = lines[i];
      if (doc.rows.size() == n) {
        throw ParseError(wrong_arity, l.number, 1, "more than " + std::to_string(n) + " rows");
      }
      if (l.tokens.size() != n) {
        std::size_t const col = l.tokens.size() > n ? l.tokens[n].column : 1;
        throw ParseError(wrong_arity,
                         l.number,
                         col,
                         "row has " + std::to_string(l.tokens.size()) + " entries, expected "
                             + std::to_string(n));
      }
      std::vector<std::string> row;
      for (auto const& tok : l.tokens) {
        if (!index.contains(tok.text)) {
          throw ParseError(unknown_name, l.number, tok.column, "'" + tok.text + "' is not declared");
        }
        row.push_back(tok.text);
      }
      doc.rows.push_back(std::move(row));
      doc.row_locations.push_back({l.number, 1});
    }
    if (doc.rows.size() != n) {
      throw ParseError(wrong_arity,
                       table_line,
                       1,
                       "table has " + std::to_string(doc.rows.size()) + " rows, expected "
                           + std::to_string(n));
    }
    return doc;
  }

  SemigroupTable TableDocument::table() const {
    std::unordered_map<std::string, ElementId> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      index.emplace(names[i], static_cast<ElementId>(i));
    }
    std::vector<ElementId> products;
    for (auto const& row : rows) {
      for (auto const& entry : row) {
        products.push_back(index.at(entry));
      }
    }
    return SemigroupTable(names, std::move(products));
  }

  SemigroupTable parse_table(std::string_view text, TableKind* kind) {
    auto const     doc = parse_table_document(text);
    SemigroupTable t   = doc.table();
    if (auto v = t.validate(); !v) {
      auto const& w = *v.witness;
      throw AssociativityError("not associative: (" + t.name(w[0]) + t.name(w[1]) + ")"
                                   + t.name(w[2]) + " != " + t.name(w[0]) + "("
                                   + t.name(w[1]) + t.name(w[2]) + ") at (" + t.name(w[0])
                                   + "," + t.name(w[1]) + "," + t.name(w[2]) + ")",
                               w);
    }
    if (doc.kind == TableKind::group) {
      GroupTable::certify(t);
    }
    if (kind != nullptr) {
      *kind = doc.kind;
    }
    return t;
  }

  std::string render_table(SemigroupTable const& t, TableKind kind) {
    std::size_t width = 0;
    for (auto const& name : t.names()) {
      width = std::max(width, name.size());
    }
    auto pad = [width](std::string const& s, bool last) {
      return last ? s : s + std::string(width - s.size() + 1, ' ');
    };
    std::ostringstream out;
    out << "kind: " << to_string(kind) << '\n';
    out << "elements:";
    for (auto const& name : t.names()) {
      out << ' ' << name;
    }
    out << "\ntable:\n";
    for (ElementId x = 0; x < t.order(); ++x) {
      for (ElementId y = 0; y < t.order(); ++y) {
        out << pad(t.name(t(x, y)), y + 1 == t.order());
      }
      out << '\n';
    }
    return out.str();
  }

  SemigroupTable read_table_file(std::filesystem::path const& path, TableKind* kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError(ParseErrorCategory::missing_section, 0, 0, "cannot read file", path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      return parse_table(buf.str(), kind);
    } catch (ParseError const& e) {
      throw ParseError(e.category(), e.line(), e.column(), e.detail(), path.string());
    }
  }

  void write_table_file(std::filesystem::path const& path,
                        SemigroupTable const&        t,
                        TableKind                    kind) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + path.string());
    }
    out << render_table(t, kind);
  }

  GroupTable load_group(std::filesystem::path const& path) {
    TableKind kind = TableKind::semigroup;
    auto      t    = read_table_file(path, &kind);
    if (kind != TableKind::group) {
      throw ValidationError(path.string() + " is not declared 'kind: group'");
    }
    return GroupTable::certify(std::move(t));
  }

}  // namespace assemblies
