#include "morikit/chambers.hpp"

#include "morikit/errors.hpp"
#include "morikit/subsets.hpp"

#include <algorithm>

namespace morikit {

namespace {

void check_m(int m) {
    if (m < 2) throw ValidationError("X^m_{m+2} needs m >= 2");
}

// The wall arrangement has ~2^(m+2) members; keep it at desk scale.
void check_wall_scale(int m) {
    check_m(m);
    if (m > 16)
        throw ValidationError("the wall arrangement is only enumerated up to m = 16");
}

QVector wall_normal(int m, int k, WallKind kind, const std::vector<int>& I) {
    QVector n(m + 3);
    if (kind == WallKind::A) {
        n[0] = 2 - k;
        for (int i : I) n[i] = n[i] - 1;
    } else {
        n[0] = m - k + 1;
        for (int i = 1; i <= m + 2; ++i) n[i] = 1;
        for (int i : I) n[i] = n[i] - 1;
    }
    return n;
}

std::vector<int> one_based(const std::vector<int>& zero_based) {
    std::vector<int> out(zero_based.size());
    for (std::size_t i = 0; i < zero_based.size(); ++i) out[i] = zero_based[i] + 1;
    return out;
}

std::vector<Wall> level_walls(int m, int k) {
    std::vector<Wall> out;
    for_each_subset(m + 2, k - 1, [&](const std::vector<int>& s) {
        const std::vector<int> I = one_based(s);
        out.push_back(Wall{k, WallKind::A, I, wall_normal(m, k, WallKind::A, I)});
    });
    for_each_subset(m + 2, k, [&](const std::vector<int>& s) {
        const std::vector<int> I = one_based(s);
        out.push_back(Wall{k, WallKind::B, I, wall_normal(m, k, WallKind::B, I)});
    });
    return out;
}

int top_level(int m) { return (m + 3) / 2; }

} // namespace

std::vector<Wall> walls(int m) {
    check_wall_scale(m);
    std::vector<Wall> out;
    for (int k = 2; k <= top_level(m); ++k) {
        auto level = level_walls(m, k);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

HCone eff_cone(int m) {
    check_m(m);
    std::vector<QVector> normals;
    for (int i = 1; i <= m + 2; ++i) {
        QVector n(m + 3);
        n[0] = 1;
        n[i] = 1;
        normals.push_back(std::move(n));
    }
    QVector total(m + 3);
    total[0] = m;
    for (int i = 1; i <= m + 2; ++i) total[i] = 1;
    normals.push_back(std::move(total));
    return make_hcone(m + 3, std::move(normals));
}

VCone eff_generators(int m) {
    check_m(m);
    VCone v;
    v.ambient_dim = m + 3;
    for (int i = 1; i <= m + 2; ++i) {
        QVector e(m + 3);
        e[i] = 1;
        v.rays.push_back(std::move(e));
    }
    for_each_subset(m + 2, m, [&](const std::vector<int>& s) {
        QVector h(m + 3);
        h[0] = 1;
        for (int i : s) h[i + 1] = -1;
        v.rays.push_back(std::move(h));
    });
    for (auto& r : v.rays) r = primitive(r);
    std::sort(v.rays.begin(), v.rays.end());
    return v;
}

HCone mov_cone(int m) {
    check_m(m);
    std::vector<QVector> normals;
    for_each_subset(m + 2, 2, [&](const std::vector<int>& s) {
        normals.push_back(wall_normal(m, 2, WallKind::B, one_based(s)));
    });
    for (int i = 1; i <= m + 2; ++i) {
        QVector n(m + 3);
        n[i] = -1;
        normals.push_back(std::move(n));
    }
    const HCone eff = eff_cone(m);
    normals.insert(normals.end(), eff.normals.begin(), eff.normals.end());
    return make_hcone(m + 3, std::move(normals));
}

HCone nef_cone(int m) {
    check_m(m);
    std::vector<QVector> normals;
    for (int i = 1; i <= m + 2; ++i) {
        QVector n(m + 3);
        n[i] = -1;
        normals.push_back(std::move(n));
    }
    for_each_subset(m + 2, 2, [&](const std::vector<int>& s) {
        QVector n(m + 3);
        n[0] = 1;
        n[s[0] + 1] = 1;
        n[s[1] + 1] = 1;
        normals.push_back(std::move(n));
    });
    return make_hcone(m + 3, std::move(normals));
}

HCone fano_chamber(int m) {
    check_wall_scale(m);
    if (m % 2 != 0) throw ValidationError("fano_chamber is the even-dimensional chamber; use fano_locus for odd m");
    const int g = m / 2;
    std::vector<QVector> normals;
    for (const Wall& w : level_walls(m, g + 1)) normals.push_back(w.normal);
    return make_hcone(m + 3, std::move(normals));
}

std::vector<Wall> fano_locus(int m) {
    check_wall_scale(m);
    if (m % 2 != 1) throw ValidationError("fano_locus is the odd-dimensional wall set; use fano_chamber for even m");
    const int g = (m + 1) / 2;
    return level_walls(m, g + 1);
}

ChamberReport locate_divisor(const DivisorClass& d) {
    const int m = d.model.m;
    check_m(m);
    if (d.model.s != m + 2)
        throw ValidationError("locate_divisor needs a class on X^m_{m+2}");
    const QVector v = d.coords();

    ChamberReport report;
    report.in_eff = classify_point(eff_cone(m), v);
    report.in_mov = classify_point(mov_cone(m), v);
    report.in_nef = classify_point(nef_cone(m), v);
    if (m % 2 == 0) {
        report.in_fano = classify_point(fano_chamber(m), v);
    } else {
        // The locus is an intersection of hyperplanes: on it means on all.
        PointClass pc;
        const auto locus = fano_locus(m);
        for (std::size_t i = 0; i < locus.size(); ++i) {
            const int sign = sgn(dot(locus[i].normal, v));
            if (sign == 0) pc.active.push_back(i);
            else pc.violated.push_back(i);
        }
        pc.side = pc.violated.empty() ? Side::Boundary : Side::Outside;
        report.in_fano = pc;
    }
    for (const Wall& w : walls(m)) {
        const int sign = sgn(dot(w.normal, v));
        if (sign == 0) report.active_walls.push_back(w);
        else if (sign < 0) report.violated_walls.push_back(w);
    }
    return report;
}

std::pair<int, int> flip_type(const Wall& w, int m) {
    check_m(m);
    if (w.k < 3)
        throw ValidationError("level-2 walls bound the movable cone and are divisorial, not flips");
    if (w.k > top_level(m)) throw ValidationError("wall level out of range for this m");
    return {w.k - 2, m + 1 - w.k};
}

std::vector<FlipStage> flip_sequence(int g) {
    if (g < 1) throw ValidationError("flip_sequence needs g >= 1");
    std::vector<FlipStage> stages;
    for (int i = 1; i <= g - 1; ++i) {
        FlipStage st;
        st.stage = i;
        st.center_dim = i;
        st.center_count = binomial(Integer(2 * g + 2), static_cast<unsigned long>(i) + 1);
        st.inserted_dim = 2 * g - 1 - i;
        stages.push_back(std::move(st));
    }
    return stages;
}

QVector functional_to_curve(const QVector& normal) {
    QVector c = normal;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
    return c;
}

NeExtremalRays ne_extremal_rays(int g, const ConeOptions& options) {
    if (g < 1) throw ValidationError("ne_extremal_rays needs g >= 1");
    NeExtremalRays out;
    out.count = binomial(Integer(2 * g + 3), static_cast<unsigned long>(g) + 1);
    if (g > 2) return out;

    const int m = 2 * g;
    const HCone chamber = fano_chamber(m);
    const VCone dual_cone = dual(chamber, options);
    if (!dual_cone.lineality.empty())
        throw std::logic_error("Fano chamber dual unexpectedly has lineality");
    if (Integer(static_cast<long>(dual_cone.rays.size())) != out.count)
        throw std::logic_error("Fano chamber dual ray count does not match binom(2g+3, g+1)");

    const auto chamber_walls = level_walls(m, g + 1);
    for (const QVector& functional : dual_cone.rays) {
        const Wall* tag = nullptr;
        for (const Wall& w : chamber_walls) {
            if (proportional(w.normal, functional)) {
                tag = &w;
                break;
            }
        }
        if (tag == nullptr)
            throw std::logic_error("extremal curve ray does not match any chamber wall");
        out.rays.push_back(
            NeRay{functional_to_curve(functional), *tag, tag->kind == WallKind::B ? 'C' : 'D'});
    }
    return out;
}

std::vector<MovingRay> moving_curve_rays(int g, const ConeOptions& options) {
    if (g < 1) throw ValidationError("moving_curve_rays needs g >= 1");
    const int m = 2 * g;
    const HCone eff = eff_cone(m);
    const VCone dual_cone = dual(eff, options);
    if (!dual_cone.lineality.empty() || dual_cone.rays.size() != static_cast<std::size_t>(m) + 3)
        throw std::logic_error("moving-curve cone should have exactly 2g+3 rays");

    std::vector<MovingRay> out;
    for (const QVector& functional : dual_cone.rays) {
        const QVector curve = functional_to_curve(functional);
        std::string label;
        if (curve[0] == m) {
            label = "degree-" + std::to_string(m) + " rational normal curve through all points";
        } else {
            int through = 0;
            for (int i = 1; i <= m + 2; ++i)
                if (curve[i] != 0) through = i;
            label = "line through p_" + std::to_string(through);
        }
        out.push_back(MovingRay{curve, std::move(label)});
    }
    std::sort(out.begin(), out.end(),
              [](const MovingRay& a, const MovingRay& b) { return a.curve < b.curve; });
    return out;
}

} // namespace morikit
