#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "paracert/braids.hpp"
#include "paracert/gf2.hpp"

namespace paracert::cli {

/// Parsed surgery-diagram input file: either a closed braid (optionally
/// framed) or a raw mod-2 linking-parity matrix, plus metadata.
///
/// Line-oriented format; '#' starts a comment, blank lines are ignored:
///   name: <free text>
///   comment: <free text>
///   braid: <strands> | <letters...>
///   framings: <one integer per closure component>
///   matrix:
///   <row of 0/1 entries>
///   ...
/// Exactly one of braid/matrix must be present; framings require a
/// braid; the matrix must be square, symmetric, with unit diagonal.
struct DiagramFile {
    std::optional<std::string> name;
    std::optional<std::string> comment;
    std::optional<braids::BraidWord> braid;
    std::optional<std::vector<std::int64_t>> framings;
    std::optional<gf2::LinkingParity> matrix;
};

DiagramFile parse_diagram(std::istream& in);
DiagramFile parse_diagram_text(const std::string& text);
DiagramFile load_diagram(const std::string& path);

}  // namespace paracert::cli
