#include "morikit/picard.hpp"

#include "morikit/errors.hpp"
#include "morikit/subsets.hpp"

#include <algorithm>
#include <set>

namespace morikit {

BlowupModel make_model(int m, int s) {
    if (m < 2) throw ValidationError("blow-up model needs m >= 2");
    if (s < 1) throw ValidationError("blow-up model needs s >= 1");
    return BlowupModel{m, s};
}

QVector DivisorClass::coords() const {
    QVector v(x.size() + 1);
    v[0] = y;
    for (std::size_t i = 0; i < x.size(); ++i) v[i + 1] = x[i];
    return v;
}

QVector CurveClass::coords() const {
    QVector v(c.size() + 1);
    v[0] = a;
    for (std::size_t i = 0; i < c.size(); ++i) v[i + 1] = c[i];
    return v;
}

DivisorClass make_divisor(const BlowupModel& model, Rational y, std::vector<Rational> x) {
    if (static_cast<int>(x.size()) != model.s)
        throw ValidationError("divisor class needs exactly s = " + std::to_string(model.s) +
                              " exceptional coefficients");
    return DivisorClass{model, std::move(y), std::move(x)};
}

CurveClass make_curve(const BlowupModel& model, Rational a, std::vector<Rational> c) {
    if (static_cast<int>(c.size()) != model.s)
        throw ValidationError("curve class needs exactly s = " + std::to_string(model.s) +
                              " exceptional coefficients");
    return CurveClass{model, std::move(a), std::move(c)};
}

DivisorClass divisor_from_coords(const BlowupModel& model, const QVector& coords) {
    if (coords.size() != static_cast<std::size_t>(model.s) + 1)
        throw ValidationError("divisor coordinate vector has wrong length");
    std::vector<Rational> x(coords.entries.begin() + 1, coords.entries.end());
    return DivisorClass{model, coords[0], std::move(x)};
}

Rational intersect(const DivisorClass& d, const CurveClass& c) {
    if (!(d.model == c.model)) throw ValidationError("divisor and curve live on different models");
    Rational v = d.y * c.a;
    for (int i = 0; i < d.model.s; ++i) v -= d.x[i] * c.c[i];
    return v;
}

std::vector<int> default_cremona_base(const BlowupModel& model) {
    std::vector<int> base(model.m + 1);
    for (int i = 0; i <= model.m; ++i) base[i] = i + 1;
    return base;
}

DivisorClass cremona_pushforward(const DivisorClass& d, const std::vector<int>& base) {
    const int m = d.model.m;
    std::set<int> b(base.begin(), base.end());
    if (static_cast<int>(b.size()) != m + 1 || b.size() != base.size())
        throw ValidationError("Cremona base must consist of m+1 = " + std::to_string(m + 1) +
                              " distinct point indices");
    for (int i : b)
        if (i < 1 || i > d.model.s)
            throw ValidationError("Cremona base index " + std::to_string(i) + " out of range");

    // Multiplicity view: deg = y, mult_i = -x_i.
    const Rational deg = d.y;
    Rational base_mult_sum = 0;
    for (int i : b) base_mult_sum += -d.x[i - 1];

    DivisorClass out = d;
    out.y = deg * m - base_mult_sum;
    for (int i : b) {
        const Rational mult_i = -d.x[i - 1];
        out.x[i - 1] = -(deg * (m - 1) - (base_mult_sum - mult_i));
    }
    return out;
}

DivisorClass anticanonical(const BlowupModel& model) {
    DivisorClass d;
    d.model = model;
    d.y = model.m + 1;
    d.x.assign(model.s, Rational(-(model.m - 1)));
    return d;
}

std::vector<CurveClass> contracted_rnc_classes(int g) {
    if (g < 2) throw ValidationError("contracted rational normal curves need g >= 2");
    const BlowupModel model = make_model(2 * g - 1, 2 * g + 1);
    std::vector<CurveClass> classes;
    for_each_subset(2 * g + 1, g, [&](const std::vector<int>& subset) {
        CurveClass c;
        c.model = model;
        c.a = g - 1;
        c.c.assign(model.s, Rational(0));
        for (int i : subset) c.c[i] = -1;
        classes.push_back(std::move(c));
    });
    return classes;
}

Integer picard_rank_stage(int s, int c) {
    if (c < 0) throw ValidationError("picard_rank_stage needs c >= 0");
    Integer rank = 1;
    for (int j = 0; j <= c; ++j) rank += binomial(Integer(s), static_cast<unsigned long>(j) + 1);
    return rank;
}

} // namespace morikit
