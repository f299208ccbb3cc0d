#include "dessin/involution.hpp"

#include <stdexcept>
#include <utility>

namespace dessin {

DartInvolution::DartInvolution(std::vector<int> image) : image_(std::move(image)) {
    const int m = static_cast<int>(image_.size());
    if (m == 0 || m % 2 != 0)
        throw std::invalid_argument("involution needs a positive even number of darts");
    for (int i = 0; i < m; ++i) {
        const int j = image_[i];
        if (j < 0 || j >= m) throw std::invalid_argument("involution image out of range");
        if (j == i) throw std::invalid_argument("involution has a fixed point");
        if (image_[j] != i) throw std::invalid_argument("map is not an involution");
    }
}

long long DartInvolution::at(long long x) const {
    const long long m = dart_count();
    long long r = x % m;
    if (r < 0) r += m;
    return x - r + image_[static_cast<int>(r)];
}

FaceLabelling to_involution(const CombinatorialMap& map) {
    if (!map.is_unicellular())
        throw std::invalid_argument("face-walk relabelling needs a one-faced map");
    const int m = map.dart_count();
    std::vector<Dart> dart_of_label(m);
    std::vector<int> label_of_dart(m);
    Dart cur = 0;
    for (int i = 0; i < m; ++i) {
        dart_of_label[i] = cur;
        label_of_dart[cur] = i;
        cur = map.face_next(cur);
    }
    std::vector<int> image(m);
    for (int i = 0; i < m; ++i) image[i] = label_of_dart[map.reverse(dart_of_label[i])];
    return {DartInvolution(std::move(image)), std::move(dart_of_label)};
}

CombinatorialMap to_map(const DartInvolution& phi) {
    const int m = phi.dart_count();
    std::vector<Dart> rho0(m);
    for (int i = 0; i < m; ++i) rho0[i] = (phi(i) + 1) % m;
    return CombinatorialMap(std::move(rho0), phi.image());
}

DartInvolution rotate_labels(const DartInvolution& phi, int k) {
    const int m = phi.dart_count();
    k = ((k % m) + m) % m;
    std::vector<int> image(m);
    for (int x = 0; x < m; ++x) image[x] = (phi((x - k + m) % m) + k) % m;
    return DartInvolution(std::move(image));
}

DartInvolution canonical_form(const DartInvolution& phi) {
    DartInvolution best = phi;
    for (int k = 1; k < phi.dart_count(); ++k) {
        DartInvolution candidate = rotate_labels(phi, k);
        if (candidate.image() < best.image()) best = std::move(candidate);
    }
    return best;
}

bool is_canonical(const DartInvolution& phi) {
    const int m = phi.dart_count();
    for (int k = 1; k < m; ++k) {
        for (int x = 0; x < m; ++x) {
            const int rotated = (phi((x - k + m) % m) + k) % m;
            if (rotated < phi(x)) return false;
            if (rotated > phi(x)) break;
        }
    }
    return true;
}

int genus(const DartInvolution& phi) {
    return to_map(phi).genus();
}

bool is_noncrossing(const DartInvolution& phi) {
    std::vector<int> open;
    for (int i = 0; i < phi.dart_count(); ++i) {
        if (phi(i) > i) {
            open.push_back(i);
        } else {
            if (open.empty() || open.back() != phi(i)) return false;
            open.pop_back();
        }
    }
    return true;
}

bool has_odd_displacements(const DartInvolution& phi) {
    for (int i = 0; i < phi.dart_count(); ++i)
        if ((phi(i) - i) % 2 == 0) return false;
    return true;
}

bool displacements_match_branch_weights(const PlaneTree& tree) {
    const FaceLabelling labelling = to_involution(tree.map());
    const int m = tree.map().dart_count();
    for (int i = 0; i < m; ++i) {
        const int w = tree.branch_weight(labelling.dart_of_label[i]);
        const int displacement = ((labelling.involution(i) - i) % m + m) % m;
        if (displacement != (2 * w - 1) % m) return false;
    }
    return true;
}

} // namespace dessin
