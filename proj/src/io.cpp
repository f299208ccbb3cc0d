#include "dessin/io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace dessin {

namespace {

bool has_content(const std::string& text) {
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

std::vector<int> read_integers(std::istream& in, const std::string& what) {
    std::vector<int> values;
    std::string token;
    while (in >> token) {
        try {
            size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(value);
        } catch (const std::exception&) {
            throw ParseError(what + ": expected an integer, got '" + token + "'");
        }
    }
    return values;
}

} // namespace

Format detect_format(const std::string& text) {
    if (!has_content(text)) throw ParseError("empty input");
    for (char c : text) {
        if (c == '(' || c == ')') return Format::Walk;
        if (c == ':') return Format::Rotation;
    }
    return Format::Involution;
}

PlaneTree parse_walk(const std::string& text) {
    std::vector<int> positions;
    std::vector<int> open;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '(') {
            open.push_back(static_cast<int>(positions.size()));
            positions.push_back(-1);
        } else if (c == ')') {
            if (open.empty()) throw ParseError("walk string: unmatched ')'");
            const int i = open.back();
            open.pop_back();
            const int j = static_cast<int>(positions.size());
            positions.push_back(i);
            positions[i] = j;
        } else {
            throw ParseError(std::string("walk string: unexpected character '") + c + "'");
        }
    }
    if (!open.empty()) throw ParseError("walk string: unmatched '('");
    if (positions.empty()) throw ParseError("walk string: empty");
    return PlaneTree(to_map(DartInvolution(std::move(positions))));
}

PlaneTree parse_rotation(const std::string& text) {
    // Vertex lines in input order; neighbor occurrences become darts in
    // reading order.
    std::map<int, std::vector<int>> neighbors;
    std::vector<int> vertex_order;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!has_content(line)) continue;
        const size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("rotation line without ':': " + line);
        std::istringstream head(line.substr(0, colon));
        const std::vector<int> ids = read_integers(head, "rotation vertex id");
        if (ids.size() != 1) throw ParseError("rotation line needs one vertex id: " + line);
        const int v = ids[0];
        if (v < 0) throw ParseError("rotation vertex ids must be non-negative");
        if (neighbors.count(v)) throw ParseError("duplicate rotation line for vertex");
        std::istringstream tail(line.substr(colon + 1));
        std::vector<int> list = read_integers(tail, "rotation neighbor");
        if (list.empty()) throw ParseError("rotation line lists no neighbors: " + line);
        neighbors[v] = std::move(list);
        vertex_order.push_back(v);
    }
    if (vertex_order.empty()) throw ParseError("rotation input: no vertex lines");

    // Trees have no repeated adjacencies, so each (v, u) names one dart.
    std::map<std::pair<int, int>, Dart> dart_of;
    std::vector<std::pair<int, int>> ends;
    for (int v : vertex_order) {
        for (int u : neighbors[v]) {
            if (u == v) throw ParseError("rotation input: self-loop at a vertex");
            if (!neighbors.count(u))
                throw ParseError("rotation input: neighbor without its own line");
            if (dart_of.count({v, u}))
                throw ParseError("rotation input: repeated neighbor in a list");
            dart_of[{v, u}] = static_cast<Dart>(ends.size());
            ends.emplace_back(v, u);
        }
    }
    const int darts = static_cast<int>(ends.size());
    std::vector<Dart> rho0(darts);
    std::vector<Dart> rho1(darts);
    for (int v : vertex_order) {
        const auto& list = neighbors[v];
        const int k = static_cast<int>(list.size());
        for (int j = 0; j < k; ++j)
            rho0[dart_of[{v, list[j]}]] = dart_of[{v, list[(j + 1) % k]}];
    }
    for (Dart d = 0; d < darts; ++d) {
        const auto [v, u] = ends[d];
        const auto back = dart_of.find({u, v});
        if (back == dart_of.end())
            throw ParseError("rotation input: edge listed on one side only");
        rho1[d] = back->second;
    }
    try {
        return PlaneTree(CombinatorialMap(std::move(rho0), std::move(rho1)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("rotation input: ") + e.what());
    }
}

DartInvolution parse_involution(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> image = read_integers(in, "involution line");
    if (image.empty()) throw ParseError("involution line: empty");
    try {
        return DartInvolution(std::move(image));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("involution line: ") + e.what());
    }
}

CombinatorialMap parse(const std::string& text, Format format) {
    switch (format) {
        case Format::Walk: return parse_walk(text).map();
        case Format::Rotation: return parse_rotation(text).map();
        case Format::Involution: return to_map(parse_involution(text));
    }
    throw ParseError("unknown format");
}

std::string to_walk_string(const DartInvolution& phi) {
    if (!is_noncrossing(phi))
        throw std::invalid_argument("walk strings only describe genus-0 involutions");
    std::string walk(phi.dart_count(), ')');
    for (int i = 0; i < phi.dart_count(); ++i)
        if (phi(i) > i) walk[i] = '(';
    return walk;
}

std::string to_walk_string(const PlaneTree& tree) {
    return to_walk_string(to_involution(tree.map()).involution);
}

std::string to_involution_line(const DartInvolution& phi) {
    std::string line;
    for (int i = 0; i < phi.dart_count(); ++i) {
        if (i > 0) line += ' ';
        line += std::to_string(phi(i));
    }
    return line;
}

std::string to_rotation_lines(const CombinatorialMap& map) {
    std::string out;
    for (int v = 0; v < map.vertex_count(); ++v) {
        out += std::to_string(v);
        out += ':';
        for (Dart d : map.vertex_cycles()[v]) {
            out += ' ';
            out += std::to_string(map.vertex_of(map.reverse(d)));
        }
        out += '\n';
    }
    return out;
}

} // namespace dessin
