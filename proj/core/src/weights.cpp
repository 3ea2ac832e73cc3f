#include "morikit/weights.hpp"

#include "morikit/errors.hpp"
#include "morikit/subsets.hpp"

#include <map>

namespace morikit {

Polarization make_polarization(std::vector<Integer> b) {
    if (b.size() < 3) throw ValidationError("polarization needs n >= 3 entries");
    for (const Integer& bi : b)
        if (bi < 1) throw ValidationError("polarization entries must be positive integers");
    return Polarization{std::move(b)};
}

bool is_hassett(const WeightVector& w) {
    for (const Rational& ai : w.a)
        if (ai <= 0 || ai > 1) return false;
    return true;
}

Rational weight_sum(const WeightVector& w) {
    Rational s = 0;
    for (const Rational& ai : w.a) s += ai;
    return s;
}

WeightVector phi(const DivisorClass& d) {
    const int m = d.model.m;
    if (d.model.s != m + 2) throw ValidationError("phi needs a divisor class on X^m_{m+2}");
    Rational denom = d.y * (m + 1);
    for (const Rational& xi : d.x) denom += xi;
    if (denom == 0)
        throw ValidationError("phi undefined: the divisor lies on the degree-0 hyperplane");

    WeightVector w;
    w.a.reserve(m + 3);
    Rational partial = 0;
    for (int j = 0; j < m + 2; ++j) {
        w.a.push_back((d.y + d.x[j]) / denom);
        partial += w.a.back();
    }
    w.a.push_back(Rational(2) - partial);
    return w;
}

WeightVector weights_from_polarization(const Polarization& b) {
    Integer total = 0;
    for (const Integer& bi : b.b) total += bi;
    WeightVector w;
    w.a.reserve(b.b.size());
    for (const Integer& bi : b.b) {
        Rational ai(2 * bi, total);
        ai.canonicalize();
        w.a.push_back(std::move(ai));
    }
    return w;
}

Polarization polarization_from_weights(const WeightVector& a) {
    if (weight_sum(a) != 2) throw ValidationError("weights must sum to exactly 2");
    Integer lcm = 1;
    for (const Rational& ai : a.a) {
        if (ai <= 0) throw ValidationError("weights must be positive");
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ai.get_den().get_mpz_t());
    }
    std::vector<Integer> b;
    b.reserve(a.a.size());
    for (const Rational& ai : a.a) b.push_back(ai.get_num() * (lcm / ai.get_den()));
    return make_polarization(std::move(b));
}

std::vector<WallSide> weight_wall_sides(const WeightVector& w) {
    const int n = static_cast<int>(w.a.size());
    std::vector<WallSide> out;
    for (int size = 2; size <= n / 2; ++size) {
        for_each_subset(n, size, [&](const std::vector<int>& s) {
            Rational sum = -1;
            WallSide ws;
            ws.I.reserve(s.size());
            for (int i : s) {
                sum += w.a[i];
                ws.I.push_back(i + 1);
            }
            ws.sign = sgn(sum);
            out.push_back(std::move(ws));
        });
    }
    return out;
}

std::vector<WallSideGroup> weight_wall_sides_grouped(const WeightVector& w) {
    std::map<std::pair<int, int>, Integer> buckets;
    for (const WallSide& ws : weight_wall_sides(w))
        buckets[{static_cast<int>(ws.I.size()), ws.sign}] += 1;
    std::vector<WallSideGroup> out;
    out.reserve(buckets.size());
    for (const auto& [key, count] : buckets)
        out.push_back(WallSideGroup{key.first, key.second, count});
    return out;
}

bool reduction_admissible(const WeightVector& a, const WeightVector& b) {
    if (a.a.size() != b.a.size()) throw ValidationError("weight vectors have different lengths");
    for (std::size_t i = 0; i < a.a.size(); ++i)
        if (a.a[i] < b.a[i]) return false;
    return true;
}

} // namespace morikit
