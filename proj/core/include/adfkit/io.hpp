#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "adfkit/adf.hpp"
#include "adfkit/frameworks.hpp"

namespace adfkit {

enum class DocKind { af, setaf, eafc, afn, adf };

const char* to_token(DocKind k);
std::optional<DocKind> doc_kind_from_token(std::string_view token);

struct Document {
  DocKind kind;
  std::variant<Af, Setaf, Eafc, Afn, Adf> body;

  const Af& as_af() const { return std::get<Af>(body); }
  const Setaf& as_setaf() const { return std::get<Setaf>(body); }
  const Eafc& as_eafc() const { return std::get<Eafc>(body); }
  const Afn& as_afn() const { return std::get<Afn>(body); }
  const Adf& as_adf() const { return std::get<Adf>(body); }
};

struct parse_error : std::runtime_error {
  parse_error(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Fact-based text formats, whitespace-insensitive, '%' line comments, each
// fact terminated by '.':
//   AF:     arg(X).  att(X,Y).
//   SETAF:  arg(X).  satt([X1,...,Xk],Y).
//   EAFC:   arg(X).  att(X,Y).  datt([X1,...,Xk],Y,Z).   (set attacks (Y,Z))
//   AFN:    arg(X).  att(X,Y).  nec([X1,...,Xk],Y).
//   ADF:    s(X).    ac(X, F).  F ::= c(v) | c(f) | atom | neg(F)
//                                   | and(F,F) | or(F,F)
// A declared ADF argument without an ac fact defaults to c(v).
Document parse_document(std::string_view text, DocKind kind);

// Canonical form: argument facts first, sorted by name, then relation facts
// sorted lexicographically; every ADF argument gets an explicit ac fact;
// n-ary connectives fold left.  LF line endings, one fact per line.
std::string serialize(const Document& doc);

// Structural equality modulo declaration order: same kind, same argument
// set, same relations, and exactly equal condition trees.
bool structurally_equal(const Document& a, const Document& b);

Document make_document(SourceFramework f);
Document make_document(Adf adf);

}  // namespace adfkit
