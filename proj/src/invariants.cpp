#include "charp/invariants.hpp"

#include <algorithm>
#include <map>

#include "charp/error.hpp"

namespace charp {

CyclicAction::CyclicAction(RingPtr ring) : ring_(std::move(ring)) {
    if (ring_->has_modulus())
        throw DomainError("cyclic actions are defined on polynomial rings");
}

Monomial rotate_monomial(const Monomial& m, int k) {
    const auto n = static_cast<int>(m.nvars());
    int shift = ((k % n) + n) % n;
    Monomial r(m.nvars());
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>((i + shift) % n)] = m[static_cast<std::size_t>(i)];
    return r;
}

Polynomial apply_action(const Polynomial& f, const CyclicAction& action, int k) {
    require_compatible(*f.ring(), *action.ring());
    std::vector<Polynomial::Term> terms;
    terms.reserve(f.num_terms());
    for (const auto& t : f.terms()) terms.push_back({rotate_monomial(t.mono, k), t.coeff});
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

bool is_invariant(const Polynomial& f, const CyclicAction& action) {
    return apply_action(f, action, 1) == f;
}

std::vector<Polynomial> orbit_sum_basis(const CyclicAction& action, std::int64_t d) {
    if (d < 0) throw DomainError("degree must be non-negative");
    const auto& ring = action.ring();
    const int n = action.order();
    std::map<std::vector<std::int32_t>, bool> seen;
    std::vector<Polynomial> basis;
    for (const auto& m : monomials_of_degree(ring->nvars(), d, ring->order())) {
        // canonical representative: lexicographically least exponent
        // vector in the orbit
        std::vector<std::int32_t> rep = m.exponents();
        std::vector<Monomial> orbit{m};
        for (int k = 1; k < n; ++k) {
            Monomial r = rotate_monomial(m, k);
            if (r.exponents() < rep) rep = r.exponents();
            orbit.push_back(std::move(r));
        }
        if (seen.count(rep)) continue;
        seen.emplace(std::move(rep), true);
        std::vector<Polynomial::Term> terms;
        std::sort(orbit.begin(), orbit.end(),
                  [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); });
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (const auto& om : orbit) terms.push_back({om, 1});
        basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    const auto order = ring->order();
    std::sort(basis.begin(), basis.end(), [order](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) > 0;
    });
    return basis;
}

std::int64_t hilbert_burnside(const CyclicAction& action, std::int64_t d) {
    if (d < 0) throw DomainError("degree must be non-negative");
    const auto& ring = action.ring();
    const int n = action.order();
    auto monos = monomials_of_degree(ring->nvars(), d, ring->order());
    std::int64_t fixed_total = 0;
    for (int k = 0; k < n; ++k) {
        for (const auto& m : monos)
            if (rotate_monomial(m, k) == m) ++fixed_total;
    }
    if (fixed_total % n != 0) throw DomainError("Burnside average is not an integer");
    return fixed_total / n;
}

namespace {

/// Rank of a dense matrix over GF(p) by Gaussian elimination.
std::int64_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
    std::int64_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        Fp inv = Fp(rows[row][col], p).inverse();
        for (std::size_t c = col; c < cols; ++c)
            rows[row][c] = (Fp(rows[row][c], p) * inv).value();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            Fp factor(rows[r][col], p);
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = (Fp(rows[r][c], p) - factor * Fp(rows[row][c], p)).value();
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

std::int64_t hilbert_linear(const CyclicAction& action, std::int64_t d) {
    if (d < 0) throw DomainError("degree must be non-negative");
    const auto& ring = action.ring();
    auto monos = monomials_of_degree(ring->nvars(), d, ring->order());
    std::map<std::vector<std::int32_t>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i].exponents(), i);
    const auto p = ring->p();
    // matrix of (sigma - id) acting on the degree-d coefficient space
    std::vector<std::vector<std::int64_t>> rows(monos.size(),
                                                std::vector<std::int64_t>(monos.size(), 0));
    for (std::size_t i = 0; i < monos.size(); ++i) {
        std::size_t j = index.at(rotate_monomial(monos[i], 1).exponents());
        rows[j][i] = (rows[j][i] + 1) % p;
        rows[i][i] = ((rows[i][i] - 1) % p + p) % p;
    }
    return static_cast<std::int64_t>(monos.size()) - rank_mod_p(std::move(rows), p);
}

GeneratesReport generates_up_to(const CyclicAction& action, const std::vector<Polynomial>& gens,
                                std::int64_t max_degree) {
    if (max_degree < 0) throw DomainError("degree bound must be non-negative");
    const auto& ring = action.ring();
    for (const auto& g : gens) {
        require_compatible(*g.ring(), *ring);
        if (g.is_constant()) throw DomainError("generators must be non-constant");
        if (!g.is_homogeneous()) throw DomainError("generators must be homogeneous");
        if (!is_invariant(g, action)) throw DomainError("generators must be invariant");
    }

    GeneratesReport report{true, std::nullopt, {}};
    for (std::int64_t d = 0; d <= max_degree; ++d) {
        std::int64_t dim = hilbert_burnside(action, d);
        std::int64_t span;
        if (d == 0) {
            span = 1;  // the empty product spans the constants
        } else {
            // all products of generators with total degree exactly d
            std::vector<Polynomial> products;
            auto extend = [&](auto&& self, std::size_t from, const Polynomial& acc,
                              std::int64_t remaining) -> void {
                for (std::size_t i = from; i < gens.size(); ++i) {
                    std::int64_t gd = gens[i].total_degree();
                    if (gd > remaining) continue;
                    Polynomial next = acc * gens[i];
                    if (gd == remaining)
                        products.push_back(next);
                    else
                        self(self, i, next, remaining - gd);
                }
            };
            extend(extend, 0, Polynomial::constant(ring, 1), d);

            auto monos = monomials_of_degree(ring->nvars(), d, ring->order());
            std::map<std::vector<std::int32_t>, std::size_t> index;
            for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i].exponents(), i);
            std::vector<std::vector<std::int64_t>> rows;
            rows.reserve(products.size());
            for (const auto& f : products) {
                std::vector<std::int64_t> row(monos.size(), 0);
                for (const auto& t : f.terms()) row[index.at(t.mono.exponents())] = t.coeff;
                rows.push_back(std::move(row));
            }
            span = rank_mod_p(std::move(rows), ring->p());
        }
        report.rows.push_back({d, span, dim});
        if (span < dim && report.success) {
            report.success = false;
            report.first_deficient_degree = d;
        }
    }
    return report;
}

}  // namespace charp
