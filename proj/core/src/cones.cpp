#include "morikit/cones.hpp"

#include "morikit/errors.hpp"
#include "morikit/qmatrix.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace morikit {

namespace {

// Active-constraint bitmask over the processed normals.
struct Mask {
    std::vector<std::uint64_t> words;

    explicit Mask(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool get(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
    Mask operator&(const Mask& o) const {
        Mask r(*this);
        for (std::size_t w = 0; w < words.size(); ++w) r.words[w] &= o.words[w];
        return r;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
};

struct Ray {
    QVector v;
    Mask active;
};

Mask active_mask(const QVector& v, const std::vector<QVector>& processed, std::size_t total) {
    Mask m(total);
    for (std::size_t i = 0; i < processed.size(); ++i)
        if (dot(processed[i], v) == 0) m.set(i);
    return m;
}

// r1, r2 are adjacent iff their common active normals span a subspace of
// rank ambient - lineality_dim - 2, i.e. the two rays share a 2-face.
bool adjacent(const Ray& r1, const Ray& r2, const std::vector<QVector>& processed,
              std::size_t lineality_dim, std::size_t ambient) {
    if (ambient < lineality_dim + 2) return false;
    const std::size_t need = ambient - lineality_dim - 2;
    const Mask common = r1.active & r2.active;
    if (common.count() < need) return false;
    std::vector<QVector> rows;
    rows.reserve(common.count());
    for (std::size_t i = 0; i < processed.size(); ++i)
        if (common.get(i)) rows.push_back(processed[i]);
    return rank(QMatrix(std::move(rows))) == need;
}

std::vector<QVector> echelon_basis(std::vector<QVector> vectors) {
    if (vectors.empty()) return {};
    QMatrix m(std::move(vectors));
    reduced_row_echelon(m);
    std::vector<QVector> basis;
    for (auto& row : m.rows)
        if (!row.is_zero()) basis.push_back(primitive_signed(row));
    return basis;
}

} // namespace

HCone make_hcone(int ambient_dim, std::vector<QVector> normals) {
    if (ambient_dim < 1) throw ValidationError("ambient dimension must be >= 1");
    std::vector<QVector> canon;
    canon.reserve(normals.size());
    for (auto& n : normals) {
        if (static_cast<int>(n.size()) != ambient_dim)
            throw ValidationError("normal length does not match ambient dimension");
        if (n.is_zero()) continue; // trivial constraint
        canon.push_back(primitive(n));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    return HCone{ambient_dim, std::move(canon)};
}

VCone h_to_v(const HCone& cone, const ConeOptions& options) {
    const std::size_t dim = static_cast<std::size_t>(cone.ambient_dim);
    const std::size_t total = cone.normals.size();

    // Start from the full space and cut by one normal at a time.
    std::vector<QVector> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        QVector e(dim);
        e[i] = 1;
        lineality.push_back(e);
    }
    std::vector<Ray> rays;
    std::vector<QVector> processed;
    processed.reserve(total);

    for (const QVector& n : cone.normals) {
        std::size_t split = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            if (dot(n, lineality[i]) != 0) {
                split = i;
                break;
            }
        }
        if (split < lineality.size()) {
            // The normal cuts the lineality space: one basis vector becomes a
            // ray on the positive side, the rest are projected into n = 0.
            QVector l0 = lineality[split];
            const Rational nl0 = dot(n, l0);
            if (nl0 < 0) l0 = -l0;
            const Rational d0 = dot(n, l0);
            std::vector<QVector> new_lineality;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == split) continue;
                const QVector& l = lineality[i];
                new_lineality.push_back(primitive_signed(l - l0 * (dot(n, l) / d0)));
            }
            lineality = std::move(new_lineality);
            for (Ray& r : rays) {
                r.v = primitive(r.v - l0 * (dot(n, r.v) / d0));
                // processed normals vanish on l0, so active sets are unchanged
            }
            Ray promoted{primitive(l0), Mask(total)};
            for (std::size_t i = 0; i < processed.size(); ++i) promoted.active.set(i);
            rays.push_back(std::move(promoted));
        } else {
            std::vector<std::size_t> pos, neg, zero;
            std::vector<Rational> vals(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i) {
                vals[i] = dot(n, rays[i].v);
                if (vals[i] > 0) pos.push_back(i);
                else if (vals[i] < 0) neg.push_back(i);
                else zero.push_back(i);
            }
            if (!neg.empty()) {
                std::vector<Ray> created;
                for (std::size_t ip : pos) {
                    for (std::size_t in : neg) {
                        if (!adjacent(rays[ip], rays[in], processed, lineality.size(), dim))
                            continue;
                        QVector comb = primitive(rays[in].v * vals[ip] - rays[ip].v * vals[in]);
                        created.push_back(Ray{comb, active_mask(comb, processed, total)});
                        if (pos.size() + zero.size() + created.size() > options.ray_cap)
                            throw ResourceLimitError(
                                "double description exceeded ray cap of " +
                                std::to_string(options.ray_cap));
                    }
                }
                std::vector<Ray> next;
                next.reserve(pos.size() + zero.size() + created.size());
                for (std::size_t i : pos) next.push_back(std::move(rays[i]));
                for (std::size_t i : zero) next.push_back(std::move(rays[i]));
                for (Ray& r : created) next.push_back(std::move(r));
                rays = std::move(next);
            }
        }
        const std::size_t idx = processed.size();
        processed.push_back(n);
        for (Ray& r : rays)
            if (dot(n, r.v) == 0) r.active.set(idx);
        if (rays.size() > options.ray_cap)
            throw ResourceLimitError("double description exceeded ray cap of " +
                                     std::to_string(options.ray_cap));
    }

    VCone out;
    out.ambient_dim = cone.ambient_dim;
    out.lineality = echelon_basis(std::move(lineality));
    out.rays.reserve(rays.size());
    for (Ray& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

HCone v_to_h(const VCone& cone, const ConeOptions& options) {
    // The dual of cone(R) + span(L) is {y : r.y >= 0, l.y = 0}; its extreme
    // rays are the facet normals of the original and its lineality space
    // collects the implicit equalities.
    std::vector<QVector> constraints = cone.rays;
    for (const QVector& l : cone.lineality) {
        constraints.push_back(l);
        constraints.push_back(-l);
    }
    const VCone dual_v = h_to_v(make_hcone(cone.ambient_dim, std::move(constraints)), options);
    std::vector<QVector> normals = dual_v.rays;
    for (const QVector& l : dual_v.lineality) {
        normals.push_back(l);
        normals.push_back(-l);
    }
    return make_hcone(cone.ambient_dim, std::move(normals));
}

VCone dual(const HCone& cone, const ConeOptions& options) {
    // cone(normals) is the dual; reduce it to extreme rays via two passes.
    const VCone primal = h_to_v(cone, options);
    std::vector<QVector> constraints = primal.rays;
    for (const QVector& l : primal.lineality) {
        constraints.push_back(l);
        constraints.push_back(-l);
    }
    return h_to_v(make_hcone(cone.ambient_dim, std::move(constraints)), options);
}

HCone dual(const VCone& cone) {
    std::vector<QVector> normals = cone.rays;
    for (const QVector& l : cone.lineality) {
        normals.push_back(l);
        normals.push_back(-l);
    }
    return make_hcone(cone.ambient_dim, std::move(normals));
}

PointClass classify_point(const HCone& cone, const QVector& v) {
    if (static_cast<int>(v.size()) != cone.ambient_dim)
        throw ValidationError("point length does not match ambient dimension");
    PointClass pc;
    for (std::size_t i = 0; i < cone.normals.size(); ++i) {
        const int sign = sgn(dot(cone.normals[i], v));
        if (sign == 0) pc.active.push_back(i);
        else if (sign < 0) pc.violated.push_back(i);
    }
    if (!pc.violated.empty()) pc.side = Side::Outside;
    else if (!pc.active.empty()) pc.side = Side::Boundary;
    else pc.side = Side::Interior;
    return pc;
}

bool contains(const HCone& cone, const QVector& v) {
    return classify_point(cone, v).side != Side::Outside;
}

} // namespace morikit
