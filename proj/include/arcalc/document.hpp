#pragma once

#include <string>
#include <variant>

#include "arcalc/hobjects.hpp"

namespace arcalc {

// A parsed object document: either a submodule object (monic structure map)
// or a plain map in the morphism category.
using ParsedObject = std::variant<SObject, HObject>;

// Reads a JSON object document, schema "arcalc/object-v1".  The document
// names the algebra, then either an ambient module together with `sub`
// (basis rows in ambient coordinates, "zero", or "full") or a `map` with
// source, target, and matrix.  Modules are given by partition or by an
// explicit T matrix (with degrees on the graded backend).  Malformed or
// inconsistent documents raise InvalidInput.
ParsedObject parse_object_document(const std::string& text);

// Writers emit documents that re-parse to the same object.
std::string write_object_document(const SObject& x);
std::string write_object_document(const HObject& f);

} // namespace arcalc
