#pragma once

#include <stdexcept>
#include <string>

#include "dessin/combinatorial_map.hpp"
#include "dessin/involution.hpp"

// Text formats.
//
// walk:       balanced parentheses, position i = dart i of the face walk,
//             matched positions = the two darts of one edge.
// rotation:   one line per vertex, "v: u1 u2 ... uk", neighbors listed
//             counterclockwise; must describe a tree.
// involution: one line of 2n integers phi(0) ... phi(2n-1); admits any
//             genus of unicellular dessin.

namespace dessin {

enum class Format { Walk, Rotation, Involution };

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Walk iff it contains parentheses, rotation iff it contains ':',
// otherwise involution.  Throws on empty input.
Format detect_format(const std::string& text);

PlaneTree parse_walk(const std::string& text);
PlaneTree parse_rotation(const std::string& text);
DartInvolution parse_involution(const std::string& text);

// Uniform entry point; walk and rotation inputs always yield trees.
CombinatorialMap parse(const std::string& text, Format format);

// Requires a non-crossing (genus-0) involution.
std::string to_walk_string(const DartInvolution& phi);
std::string to_walk_string(const PlaneTree& tree);

std::string to_involution_line(const DartInvolution& phi);

// One line per vertex in internal id order, neighbors counterclockwise
// starting from the smallest incident dart.
std::string to_rotation_lines(const CombinatorialMap& map);

} // namespace dessin
