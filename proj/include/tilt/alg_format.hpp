#pragma once
// The line-oriented ALG text format: an algebra with named modules and two-term complexes.
//
//   field F 2                 # or: field Q
//   vertices 4
//   arrow alpha 1 2
//   relation beta*alpha       # terms [c*]arrowN*...*arrow1 joined by " + "
//   module S1
//   dim 1 0 0 0
//   map alpha 0               # row-major, dim[tgt] x dim[src]
//   complex P
//   row 2 2 4 4               # summands P(v) in degree -1
//   col 1 3                   # summands P(v) in degree 0
//   entry 1 1 alpha           # row r, column c: a combination of paths from col[c] to row[r]

#include "tilt/proj.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilt {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& detail, const std::string& file = "")
        : std::runtime_error((file.empty() ? "line " : file + ":") + std::to_string(line) + ": " + detail),
          line(line),
          detail(detail) {}
    int line;
    std::string detail;
};

struct AlgDocument {
    AlgPtr alg;
    std::vector<std::pair<std::string, Rep>> modules;
    std::vector<std::pair<std::string, TwoTermComplex>> complexes;

    const Rep& module(const std::string& name) const;
    const TwoTermComplex& complex(const std::string& name) const;
};

// `field_override` replaces the declared field; scalars are then read in the new field.
AlgDocument parse_alg(const std::string& text, std::optional<Field> field_override = std::nullopt);
AlgDocument load_alg(const std::string& path, std::optional<Field> field_override = std::nullopt);
Field parse_field(const std::string& text);  // "Q", "F2", "F 2"

Elem parse_element(const AlgPtr& a, const std::string& text);

std::string emit_alg(const AlgDocument& doc);
std::string emit_module(const std::string& name, const Rep& m);
std::string emit_complex(const std::string& name, const TwoTermComplex& p);

}  // namespace tilt
