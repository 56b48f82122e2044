#include "pascaldet/series2d.hpp"

namespace pascaldet {

namespace {
constexpr auto kU = static_cast<std::size_t>(Var::u);
constexpr auto kV = static_cast<std::size_t>(Var::v);
}

std::map<std::pair<long, long>, MPoly> uv_buckets(const MPoly& p) {
    std::map<std::pair<long, long>, MPoly> buckets;
    for (const auto& [e, c] : p.terms()) {
        ExpVec stripped = e;
        const long uexp = e[kU], vexp = e[kV];
        stripped[kU] = 0;
        stripped[kV] = 0;
        buckets[{uexp, vexp}].add_term(stripped, c);
    }
    return buckets;
}

Series2D series_from_ratfunc(const MPoly& num, const MPoly& den, long order) {
    const auto dbuckets = uv_buckets(den);
    const auto it = dbuckets.find({0, 0});
    if (it == dbuckets.end())
        throw NonInvertibleConstantTerm();
    const auto unit = it->second.as_constant();
    if (!unit || *unit == 0)
        throw NonInvertibleConstantTerm();
    const Rational inv_unit = Rational(1) / *unit;

    const auto nbuckets = uv_buckets(num);
    Series2D s(order);
    for (long i = 0; i <= order; ++i) {
        for (long j = 0; j <= order; ++j) {
            MPoly acc;
            if (auto nit = nbuckets.find({i, j}); nit != nbuckets.end())
                acc = nit->second;
            for (const auto& [kl, dcoeff] : dbuckets) {
                const auto [k, l] = kl;
                if (k == 0 && l == 0)
                    continue;
                if (k > i || l > j)
                    continue;
                acc -= dcoeff * s.coeff(i - k, j - l);
            }
            s.at(i, j) = acc * MPoly(inv_unit);
        }
    }
    return s;
}

Series2D series_from_window(const PolyMatrix& window) {
    if (!window.is_square())
        throw NotSquare();
    Series2D s(window.rows() - 1);
    for (long i = 0; i <= s.order(); ++i)
        for (long j = 0; j <= s.order(); ++j)
            s.at(i, j) = window(i, j);
    return s;
}

Series2D series_mul_poly(const Series2D& s, const MPoly& p) {
    const auto buckets = uv_buckets(p);
    Series2D r(s.order());
    for (long i = 0; i <= s.order(); ++i) {
        for (long j = 0; j <= s.order(); ++j) {
            MPoly acc;
            for (const auto& [kl, coeff] : buckets) {
                const auto [k, l] = kl;
                if (k > i || l > j)
                    continue;
                acc += coeff * s.coeff(i - k, j - l);
            }
            r.at(i, j) = acc;
        }
    }
    return r;
}

} // namespace pascaldet
