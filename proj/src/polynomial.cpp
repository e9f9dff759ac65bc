#include "bettilab/polynomial.hpp"

#include <algorithm>

namespace bettilab {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) noexcept {
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != 0) return static_cast<int>(k);
    return -1;
}

Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = f.add(out[k], b[k]);
    trim(out);
    return out;
}

Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = f.sub(out[k], b[k]);
    trim(out);
    return out;
}

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

Poly poly_mod(const PrimeField& f, Poly a, const Poly& b) {
    trim(a);
    const int db = degree(b);
    if (db < 0) throw FieldError("poly_mod: division by zero polynomial");
    const std::uint32_t lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
    while (degree(a) >= db) {
        const auto da = static_cast<std::size_t>(degree(a));
        const std::uint32_t c = f.mul(a[da], lead_inv);
        const std::size_t shift = da - static_cast<std::size_t>(db);
        for (std::size_t k = 0; k <= static_cast<std::size_t>(db); ++k) a[shift + k] = f.sub(a[shift + k], f.mul(c, b[k]));
        trim(a);
    }
    return a;
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const std::uint32_t s = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, s);
    return a;
}

Poly derivative(const PrimeField& f, const Poly& a) {
    Poly out;
    for (std::size_t k = 1; k < a.size(); ++k) out.push_back(f.mul(a[k], f.from_int(static_cast<std::int64_t>(k))));
    trim(out);
    return out;
}

std::uint32_t evaluate(const PrimeField& f, const Poly& a, std::uint32_t x) noexcept {
    std::uint32_t acc = 0;
    for (std::size_t k = a.size(); k-- > 0;) acc = f.add(f.mul(acc, x), a[k]);
    return acc;
}

Poly taylor_shift(const PrimeField& f, const Poly& a, std::uint32_t x0) {
    // Repeated synthetic division by (x - x0).
    Poly work = a;
    Poly out;
    while (!work.empty()) {
        Poly q(work.size() - 1, 0);
        std::uint32_t acc = 0;
        for (std::size_t k = work.size(); k-- > 0;) {
            acc = f.add(f.mul(acc, x0), work[k]);
            if (k > 0) q[k - 1] = acc;
        }
        out.push_back(acc);
        work = std::move(q);
    }
    trim(out);
    return out;
}

bool is_squarefree(const PrimeField& f, const Poly& a) {
    if (degree(a) <= 0) return true;
    return degree(poly_gcd(f, a, derivative(f, a))) == 0;
}

} // namespace bettilab
