#include "dessin/cover.hpp"

#include <stdexcept>
#include <vector>

namespace dessin {

namespace {

int positive_mod(int value, int modulus) {
    const int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

DartInvolution reduced(const DartInvolution& phi, int d) {
    std::vector<int> image(2 * d);
    for (int i = 0; i < 2 * d; ++i) image[i] = phi(i) % (2 * d);
    return DartInvolution(std::move(image));
}

} // namespace

CoverReport covers_dessin(const DartInvolution& phi, int d) {
    if (d <= 0) throw std::invalid_argument("covering degree must be positive");
    const int n = phi.edge_count();
    if (n % d != 0) return {d, false, std::nullopt, CoverFailure::Divisibility};
    const int m = 2 * n;
    const int block = 2 * d;
    for (int i = 0; i < m; ++i)
        if (positive_mod(static_cast<int>(phi.at(i + block)) - phi(i), block) != 0)
            return {d, false, std::nullopt, CoverFailure::Periodicity};
    for (int i = 0; i < m; ++i)
        if (positive_mod(phi(i) - i, block) == 0)
            return {d, false, std::nullopt, CoverFailure::FixedBlock};
    return {d, true, reduced(phi, d), CoverFailure::None};
}

CoverReport covers_tree(const DartInvolution& phi, int d) {
    if (genus(phi) != 0)
        throw std::invalid_argument("tree covering test needs a genus-0 involution");
    if (d <= 0) throw std::invalid_argument("covering degree must be positive");
    const int n = phi.edge_count();
    if (n % d != 0) return {d, false, std::nullopt, CoverFailure::Divisibility};
    const int m = 2 * n;
    const int block = 2 * d;
    for (int i = 0; i < m; ++i)
        if (positive_mod(static_cast<int>(phi.at(i + block)) - phi(i), block) != 0)
            return {d, false, std::nullopt, CoverFailure::Periodicity};
    return {d, true, reduced(phi, d), CoverFailure::None};
}

DartInvolution quotient(const DartInvolution& phi, int d) {
    CoverReport report = covers_dessin(phi, d);
    if (!report.covers) throw std::invalid_argument("quotient requested for a non-covering");
    return *std::move(report.quotient);
}

bool is_chain(const DartInvolution& phi) {
    const int m = phi.dart_count();
    for (int i = 0; i < m; ++i)
        if (positive_mod(phi(i) - phi((i + 1) % m), m) != 1) return false;
    return true;
}

bool is_chain_closed_form(const DartInvolution& phi) {
    const int m = phi.dart_count();
    const int c = phi(0);
    if (c % 2 == 0) return false;
    for (int i = 0; i < m; ++i)
        if (phi(i) != positive_mod(c - i, m)) return false;
    return true;
}

namespace {

bool has_valency_one_vertex(const DartInvolution& phi) {
    const int m = phi.dart_count();
    for (int i = 0; i < m; ++i)
        if ((phi(i) + 1) % m == i) return true;
    return false;
}

} // namespace

bool is_star(const DartInvolution& phi) {
    if (!has_valency_one_vertex(phi)) return false;
    const int m = phi.dart_count();
    for (int i = 0; i < m; ++i)
        if (positive_mod(phi(i) + phi((i + 1) % m) - 2 * i - 1, m) != 0) return false;
    return true;
}

bool is_star_closed_form(const DartInvolution& phi) {
    const int m = phi.dart_count();
    const int c = phi(0);
    if (c != 1 && c != m - 1) return false;
    for (int j = 0; j < m; ++j)
        if (phi(j) != positive_mod(j % 2 == 0 ? j + c : j - c, m)) return false;
    return true;
}

bool covers_chain(const DartInvolution& phi, int d) {
    if (d <= 0) throw std::invalid_argument("covering degree must be positive");
    const int n = phi.edge_count();
    if (n % d != 0) return false;
    const int m = 2 * n;
    const int block = 2 * d;
    for (int i = 0; i < m; ++i)
        if (positive_mod(phi(i) - phi((i + 1) % m), block) != 1) return false;
    return true;
}

bool covers_star(const DartInvolution& phi, int d) {
    if (d <= 0) throw std::invalid_argument("covering degree must be positive");
    const int n = phi.edge_count();
    if (n % d != 0) return false;
    const int m = 2 * n;
    const int block = 2 * d;
    for (int i = 0; i < m; ++i)
        if (positive_mod(phi(i) + phi((i + 1) % m) - 2 * i - 1, block) != 0) return false;
    return true;
}

} // namespace dessin
