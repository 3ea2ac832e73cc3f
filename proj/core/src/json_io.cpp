#include "morikit/json_io.hpp"

namespace morikit {

const char* side_name(Side s) {
    switch (s) {
        case Side::Interior: return "INTERIOR";
        case Side::Boundary: return "BOUNDARY";
        default: return "OUTSIDE";
    }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v) {
    Json arr = Json::array();
    for (const auto& e : v.entries) arr.push_back(to_string(e));
    return arr;
}

Json to_json(const QPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs) arr.push_back(to_string(c));
    return arr;
}

Json to_json(const HCone& c) {
    Json j;
    j["dim"] = c.ambient_dim;
    Json normals = Json::array();
    for (const auto& n : c.normals) normals.push_back(to_json(n));
    j["normals"] = std::move(normals);
    return j;
}

Json to_json(const VCone& c) {
    Json j;
    j["dim"] = c.ambient_dim;
    Json rays = Json::array(), lin = Json::array();
    for (const auto& r : c.rays) rays.push_back(to_json(r));
    for (const auto& l : c.lineality) lin.push_back(to_json(l));
    j["rays"] = std::move(rays);
    j["lineality"] = std::move(lin);
    return j;
}

Json to_json(const PointClass& pc) {
    Json j;
    j["side"] = side_name(pc.side);
    j["active"] = pc.active;
    j["violated"] = pc.violated;
    return j;
}

Json to_json(const Wall& w) {
    Json j;
    j["k"] = w.k;
    j["I"] = w.I;
    j["kind"] = w.kind == WallKind::A ? "A" : "B";
    j["normal"] = to_json(w.normal);
    return j;
}

Json to_json(const DivisorClass& d) {
    Json j;
    j["model"] = Json{{"m", d.model.m}, {"s", d.model.s}};
    j["y"] = to_string(d.y);
    Json x = Json::array();
    for (const auto& e : d.x) x.push_back(to_string(e));
    j["x"] = std::move(x);
    return j;
}

Json to_json(const CurveClass& c) {
    Json j;
    j["model"] = Json{{"m", c.model.m}, {"s", c.model.s}};
    j["a"] = to_string(c.a);
    Json cc = Json::array();
    for (const auto& e : c.c) cc.push_back(to_string(e));
    j["c"] = std::move(cc);
    return j;
}

Json to_json(const ChamberReport& r) {
    Json j;
    j["in_eff"] = to_json(r.in_eff);
    j["in_mov"] = to_json(r.in_mov);
    j["in_nef"] = to_json(r.in_nef);
    j["in_fano"] = to_json(r.in_fano);
    Json active = Json::array(), violated = Json::array();
    for (const auto& w : r.active_walls) active.push_back(to_json(w));
    for (const auto& w : r.violated_walls) violated.push_back(to_json(w));
    j["active_walls"] = std::move(active);
    j["violated_walls"] = std::move(violated);
    return j;
}

Json to_json(const LinearSystem& sys) {
    Json j;
    j["n"] = sys.n;
    j["d"] = to_string(sys.d);
    Json mults = Json::array();
    for (const auto& m : sys.mults) mults.push_back(to_string(m));
    j["mults"] = std::move(mults);
    return j;
}

Json to_json(const HilbertData& h) {
    Json j;
    j["polynomial"] = to_json(h.polynomial);
    j["degree"] = to_string(h.degree);
    j["N"] = to_string(h.embedding_dim);
    j["h1"] = to_string(Integer(h.embedding_dim + 1));
    j["s_at_bound"] = h.s_at_bound;
    return j;
}

Json to_json(const FactSheet& f) {
    Json j;
    j["m"] = f.m;
    j["parity"] = f.parity;
    j["g"] = f.g;
    j["canonical_multiple"] = f.canonical_multiple;
    j["pic_rank"] = to_string(f.pic_rank);
    if (f.class_group_rank) j["class_group_rank"] = to_string(*f.class_group_rank);
    j["singular_count"] = to_string(f.singular_count);
    if (f.sing_multiplicity) j["sing_multiplicity"] = to_string(*f.sing_multiplicity);
    Json planes;
    for (const auto& fam : f.gplane_counts) planes[fam.name] = to_string(fam.count);
    j["gplane_counts"] = std::move(planes);
    if (f.distinguished_points) j["distinguished_points"] = to_string(*f.distinguished_points);
    j["aut_order"] = to_string(f.aut_order);
    j["degree"] = to_string(f.degree);
    j["N"] = to_string(f.embedding_dim);
    return j;
}

Json to_json(const WeightVector& w) {
    Json arr = Json::array();
    for (const auto& ai : w.a) arr.push_back(to_string(ai));
    return arr;
}

} // namespace morikit
