#pragma once

// The workbench file format: a line-oriented plain-text syntax for
// structure constants. One declaration per block, matrices given by sparse
// `entry row col value` lines with exact rationals, names resolved in file
// order. Serialization is canonical, so printed results reparse to equal
// in-memory models and reports are byte-stable.

#include "wb/adjlift.hpp"
#include "wb/comodcat.hpp"
#include "wb/dgchain.hpp"
#include "wb/oplaxfun.hpp"
#include "wb/structures.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wb {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
};

struct ComoduleDecl {
  std::string over;  // name of the coalgebra or bialgebra
  Comodule value;
};

struct OplaxDecl {
  std::string from, to;
  OplaxStructure value;
};

struct DgComoduleDecl {
  std::string over;
  DgComodule value;
};

using DeclValue = std::variant<FinCoalgebra, FinAlgebra, FinBialgebra, ComoduleDecl, OplaxDecl,
                               AdjunctionData, ChainComplex, DgComoduleDecl>;

struct Declaration {
  std::string name;
  DeclValue value;
};

struct WorkbenchFile {
  std::vector<Declaration> decls;

  const Declaration* find(const std::string& name) const;
};

// Parses text or a file. Throws ParseError with a line number on the first
// syntax error, undeclared reference, malformed rational (including p/0),
// or shape mismatch.
WorkbenchFile parse_workbench(const std::string& text);
WorkbenchFile parse_workbench_file(const std::string& path);

// Canonical text form; parse(serialize(f)) reproduces f exactly.
std::string serialize(const WorkbenchFile& f);
std::string serialize(const Declaration& d);

}  // namespace wb
