#include "morikit/linear_systems.hpp"

#include "morikit/errors.hpp"
#include "morikit/subsets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace morikit {

namespace {

// counts[r][sum] = number of (r+1)-subsets of the multiplicity list with the
// given sum. Grouping by sum is enough because the k-values depend on the
// subset only through its sum.
std::vector<std::map<Integer, Integer>> subset_sum_counts(const std::vector<Integer>& mults) {
    const std::size_t s = mults.size();
    std::vector<std::map<Integer, Integer>> counts(s + 1);
    counts[0][Integer(0)] = 1;
    for (const Integer& m : mults) {
        for (std::size_t size = s; size-- > 0;) {
            for (const auto& [sum, c] : counts[size]) counts[size + 1][sum + m] += c;
        }
    }
    counts.erase(counts.begin());
    return counts;
}

Integer k_from_sum(const Integer& sum, int r, const Integer& d) {
    const Integer k = sum - r * d;
    return k > 0 ? k : Integer(0);
}

void cross_check(const HilbertData& h, int n) {
    if (h.polynomial(Integer(0)) != 1)
        throw std::logic_error("Hilbert polynomial does not evaluate to 1 at t = 0");
    const Rational lead =
        h.polynomial.degree() == n ? h.polynomial.leading() : Rational(0);
    if (Rational(h.degree) != lead * Rational(factorial(static_cast<unsigned long>(n))))
        throw std::logic_error("degree and n! * leading coefficient disagree");
}

HilbertData assemble(QPolynomial poly, Integer degree, int n, bool s_at_bound) {
    HilbertData h;
    h.polynomial = std::move(poly);
    h.degree = std::move(degree);
    h.s_at_bound = s_at_bound;
    cross_check(h, n);
    const Rational h1 = h.polynomial(Integer(1));
    if (h1.get_den() != 1) throw std::logic_error("h(1) is not an integer");
    h.embedding_dim = h1.get_num() - 1;
    return h;
}

} // namespace

LinearSystem make_system(int n, Integer d, std::vector<Integer> mults) {
    if (n < 1) throw ValidationError("linear system needs n >= 1");
    if (d < 0) throw ValidationError("linear system needs degree d >= 0");
    for (const Integer& m : mults)
        if (m < 0) throw ValidationError("multiplicities must be nonnegative");
    return LinearSystem{n, std::move(d), std::move(mults)};
}

Integer k_value(const LinearSystem& sys, const std::vector<int>& I) {
    if (I.empty()) throw ValidationError("k_value needs a nonempty index subset");
    Integer sum = 0;
    for (int i : I) {
        if (i < 1 || i > sys.s()) throw ValidationError("k_value index out of range");
        sum += sys.mults[i - 1];
    }
    return k_from_sum(sum, static_cast<int>(I.size()) - 1, sys.d);
}

Integer linear_virtual_dim(const LinearSystem& sys) {
    const unsigned long n = static_cast<unsigned long>(sys.n);
    Integer total = binomial(Integer(sys.n) + sys.d, n);
    const auto counts = subset_sum_counts(sys.mults);
    for (int r = 0; r < sys.s(); ++r) {
        const int sign = (r % 2 == 0) ? -1 : 1; // (-1)^(r+1)
        for (const auto& [sum, c] : counts[r]) {
            const Integer k = k_from_sum(sum, r, sys.d);
            total += sign * c * binomial(Integer(sys.n) + k - r - 1, n);
        }
    }
    return total;
}

Integer linear_expected_dim(const LinearSystem& sys) {
    const Integer v = linear_virtual_dim(sys);
    return v > -1 ? v : Integer(-1);
}

HilbertData hilbert(const LinearSystem& sys) {
    if (sys.s() > sys.n + 2)
        throw ValidationError("hilbert requires s <= n+2 points, got s = " +
                              std::to_string(sys.s()));
    const unsigned long n = static_cast<unsigned long>(sys.n);
    QPolynomial poly = binomial_poly(sys.d, Integer(sys.n), n);
    Integer degree = int_pow(sys.d, n);
    const auto counts = subset_sum_counts(sys.mults);
    for (int r = 0; r < sys.s(); ++r) {
        const int sign = (r % 2 == 0) ? -1 : 1;
        for (const auto& [sum, c] : counts[r]) {
            const Integer k = k_from_sum(sum, r, sys.d);
            if (k == 0) continue; // binom(n-r-1, n) terms vanish identically
            poly = poly + binomial_poly(k, Integer(sys.n - r - 1), n) * Rational(sign * c);
            degree += sign * c * int_pow(k, n);
        }
    }
    return assemble(std::move(poly), std::move(degree), sys.n, sys.s() == sys.n + 2);
}

LinearSystem sigma_system(int g) {
    if (g < 2) throw ValidationError("sigma_system needs g >= 2");
    return make_system(2 * g - 1, Integer(g),
                       std::vector<Integer>(2 * g + 1, Integer(g - 1)));
}

LinearSystem mu_system(int g) {
    if (g < 1) throw ValidationError("mu_system needs g >= 1");
    return make_system(2 * g, Integer(2 * g + 1),
                       std::vector<Integer>(2 * g + 2, Integer(2 * g - 1)));
}

HilbertData hilbert_sigma_odd(int g) {
    if (g < 2) throw ValidationError("hilbert_sigma_odd needs g >= 2");
    const unsigned long n = static_cast<unsigned long>(2 * g - 1);
    QPolynomial poly = binomial_poly(Integer(g), Integer(2 * g - 1), n);
    Integer degree = int_pow(Integer(g), n);
    for (int r = 0; r <= g - 2; ++r) {
        const int sign = (r % 2 == 0) ? -1 : 1;
        const Integer ways = binomial(Integer(2 * g + 1), static_cast<unsigned long>(r) + 1);
        poly = poly +
               binomial_poly(Integer(g - r - 1), Integer(2 * g - 2 - r), n) * Rational(sign * ways);
        degree += sign * ways * int_pow(Integer(g - r - 1), n);
    }
    return assemble(std::move(poly), std::move(degree), 2 * g - 1, true);
}

HilbertData hilbert_sigma_even(int g) {
    if (g < 1) throw ValidationError("hilbert_sigma_even needs g >= 1");
    const unsigned long n = 2 * static_cast<unsigned long>(g);
    QPolynomial poly = binomial_poly(Integer(2 * g + 1), Integer(2 * g), n);
    Integer degree = int_pow(Integer(2 * g + 1), n);
    for (int r = 0; r <= (2 * g - 1) / 2; ++r) {
        const int sign = (r % 2 == 0) ? -1 : 1;
        const Integer ways = binomial(Integer(2 * g + 2), static_cast<unsigned long>(r) + 1);
        poly = poly + binomial_poly(Integer(2 * g - 2 * r - 1), Integer(2 * g - r - 1), n) *
                          Rational(sign * ways);
        degree += sign * ways * int_pow(Integer(2 * g - 2 * r - 1), n);
    }
    return assemble(std::move(poly), std::move(degree), 2 * g, true);
}

KumarSystem kumar_system(const std::vector<Integer>& b) {
    const int n = static_cast<int>(b.size());
    if (n < 5) throw ValidationError("kumar_system needs at least 5 weights");
    Integer total = 0;
    for (const Integer& bi : b) {
        if (bi < 1) throw ValidationError("polarization entries must be positive");
        total += bi;
    }
    for (const Integer& bi : b)
        if (!(bi < total - bi))
            throw ValidationError("kumar_system needs b_i < sum of the other entries");

    Integer d;
    std::vector<Integer> raw(n - 1);
    if (total % 2 == 0) {
        const Integer half = total / 2;
        d = half - b[n - 1];
        for (int i = 0; i < n - 1; ++i) raw[i] = half - b[i] - b[n - 1];
    } else {
        d = total - 2 * b[n - 1];
        for (int i = 0; i < n - 1; ++i) raw[i] = total - 2 * b[i] - 2 * b[n - 1];
    }
    bool clamped = false;
    for (Integer& m : raw) {
        if (m < 0) {
            m = 0;
            clamped = true;
        }
    }
    return KumarSystem{make_system(n - 3, std::move(d), std::move(raw)), clamped};
}

QMatrix section_relation_matrix(int g) {
    if (g < 2) throw ValidationError("section relations need g >= 2");
    std::vector<std::vector<int>> cols;
    for_each_subset(2 * g, g, [&](const std::vector<int>& I) { cols.push_back(I); });
    std::vector<QVector> rows;
    for_each_subset(2 * g, g - 2, [&](const std::vector<int>& J) {
        QVector row(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            bool subset = true;
            for (int j : J)
                if (!std::binary_search(cols[c].begin(), cols[c].end(), j)) {
                    subset = false;
                    break;
                }
            row[c] = subset ? 1 : 0;
        }
        rows.push_back(std::move(row));
    });
    return QMatrix(std::move(rows));
}

Integer section_space_dim_odd(int g) {
    const QMatrix m = section_relation_matrix(g);
    return Integer(static_cast<long>(m.cols)) - Integer(static_cast<long>(rank(m)));
}

} // namespace morikit
