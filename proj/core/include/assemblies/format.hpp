#ifndef ASSEMBLIES_FORMAT_HPP_
#define ASSEMBLIES_FORMAT_HPP_

#include <cstddef>      // for size_t
#include <filesystem>   // for path
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "assemblies/errors.hpp"  // for Error
#include "assemblies/group.hpp"   // for GroupTable
#include "assemblies/table.hpp"   // for SemigroupTable

namespace assemblies {

  // Text format (.sgt):
  //
  //   # comment to end of line
  //   kind: semigroup            (or group)
  //   elements: e a b
  //   table:
  //   e a b
  //   a b e
  //   b e a
  //
  // Row i, column j of the table is (element i)(element j).

  enum class TableKind { semigroup, group };

  enum class ParseErrorCategory {
    unknown_name,
    wrong_arity,
    duplicate_name,
    missing_section,
    syntax,
  };

  char const* to_string(ParseErrorCategory c) noexcept;
  char const* to_string(TableKind k) noexcept;

  class ParseError : public Error {
   public:
    // line and column are 1-based; 0 when the error has no position.
    ParseError(ParseErrorCategory category,
               std::size_t        line,
               std::size_t        column,
               std::string const& detail,
               std::string const& file = "");

    ParseErrorCategory category() const noexcept {
      return _category;
    }
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }
    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ParseErrorCategory _category;
    std::size_t        _line;
    std::size_t        _column;
    std::string        _detail;
  };

  struct SourceLocation {
    std::size_t line   = 0;
    std::size_t column = 0;
  };

  struct TableDocument {
    TableKind                kind = TableKind::semigroup;
    std::vector<std::string> names;
    // rows[i][j] names the product, as written.
    std::vector<std::vector<std::string>> rows;

    SourceLocation kind_location;
    SourceLocation elements_location;
    std::vector<SourceLocation> row_locations;

    // Structurally valid, not yet validated.
    SemigroupTable table() const;
  };

  // Syntax only; throws ParseError.
  TableDocument parse_table_document(std::string_view text);

  // Parses and validates. Throws ParseError, AssociativityError when the
  // table is not associative, or ValidationError when kind is group but the
  // table is not a group.
  SemigroupTable parse_table(std::string_view text, TableKind* kind = nullptr);

  // Columns padded to the longest name.
  std::string render_table(SemigroupTable const& t,
                           TableKind             kind = TableKind::semigroup);

  SemigroupTable read_table_file(std::filesystem::path const& path,
                                 TableKind*                   kind = nullptr);
  void write_table_file(std::filesystem::path const& path,
                        SemigroupTable const&        t,
                        TableKind                    kind = TableKind::semigroup);

  // Reads a file whose header is `kind: group`.
  GroupTable load_group(std::filesystem::path const& path);

}  // namespace assemblies

#endif  // ASSEMBLIES_FORMAT_HPP_
