#ifndef FANO_GEOMETRY_HPP
#define FANO_GEOMETRY_HPP

#include <stdexcept>
#include <string>

namespace fano {

// The three ambient threefolds handled by this library.
enum class Geometry { Quadric, V5, V22 };

struct GeometryTag {
    Geometry kind;
    int index;   // i_X
    int q;       // quotient of i_X by 2
    int r;       // remainder of i_X by 2
    long degree; // H^3
    int genus;   // only meaningful for V22
    // For V22 the net parameter k corresponds to second Chern class k + 7.
    int c2_offset;
};

inline GeometryTag geometry_tag(Geometry g) {
    switch (g) {
        case Geometry::Quadric: return {Geometry::Quadric, 3, 1, 1, 2, -1, 0};
        case Geometry::V5: return {Geometry::V5, 2, 1, 0, 5, -1, 0};
        case Geometry::V22: return {Geometry::V22, 1, 0, 1, 22, 12, 7};
    }
    throw std::logic_error("geometry_tag: bad geometry");
}

inline std::string geometry_name(Geometry g) {
    switch (g) {
        case Geometry::Quadric: return "quadric";
        case Geometry::V5: return "v5";
        case Geometry::V22: return "v22";
    }
    return "?";
}

inline Geometry geometry_from_name(const std::string& s) {
    if (s == "quadric") return Geometry::Quadric;
    if (s == "v5") return Geometry::V5;
    if (s == "v22") return Geometry::V22;
    throw std::invalid_argument("unknown geometry '" + s + "' (expected quadric, v5 or v22)");
}

// Monad dimension table per geometry, in the net parameter k.
struct MonadDims {
    int dim_i;
    int dim_w;
    int dim_u;
    bool symmetric_duality;
};

inline MonadDims monad_dims(Geometry g, int k) {
    switch (g) {
        case Geometry::Quadric:
            if (k < 2) throw std::invalid_argument("quadric monads need k >= 2");
            return {k - 1, k, 4, true};
        case Geometry::V5:
            if (k < 2) throw std::invalid_argument("v5 monads need k >= 2");
            return {k, 4 * k + 2, 5, false};
        case Geometry::V22:
            if (k < 1) throw std::invalid_argument("v22 monads need k >= 1");
            return {k, 3 * k + 1, 4, true};
    }
    throw std::logic_error("monad_dims: bad geometry");
}

} // namespace fano

#endif
