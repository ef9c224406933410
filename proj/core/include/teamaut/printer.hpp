#ifndef TEAMAUT_PRINTER_HPP
#define TEAMAUT_PRINTER_HPP

#include <string>

#include "teamaut/parser.hpp"

namespace teamaut {

/// Canonical document text; parse(print(doc)) reproduces the document.
std::string print_document(const ModelDocument& doc);

}  // namespace teamaut

#endif
