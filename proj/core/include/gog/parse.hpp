#pragma once

#include <stdexcept>
#include <string>

#include "gog/graph.hpp"

namespace gog {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

// Text grammar (one declaration per line or semicolon-separated, '#' comments):
//   vertex <id> <label>
//   edge <id> <origin> <terminus> <label> <inj> <inj>
//   label := Z | Z/<n> | 1 | atom:<name>[flags,...] | prod(<label>,...) | quot{ decls }
//   inj   := *<k> | *<k>%<n> | emb:<tag> | triv
GraphOfGroups parseGog(const std::string& text);

GroupLabel parseLabel(const std::string& text);
Injection parseInjection(const std::string& text);

}  // namespace gog
