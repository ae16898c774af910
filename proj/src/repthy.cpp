#include "hololab/repthy.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace hololab {

namespace {

std::vector<std::vector<int>> levi_positive_roots(const LeviContext& ctx) {
    std::vector<std::vector<int>> out;
    for (const auto& b : ctx.system.positive_roots) {
        bool ok = true;
        for (int j = 0; j < ctx.system.rank; ++j) {
            if (b[j] != 0 && !std::count(ctx.uncrossed.begin(), ctx.uncrossed.end(), j)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(b);
    }
    return out;
}

Int dim_from_roots(const RootSystem& rs, const std::vector<std::vector<int>>& proots,
                   const Weight& w) {
    Int num = 1, den = 1;
    for (const auto& b : proots) {
        Int n = 0, d = 0;
        for (int j = 0; j < rs.rank; ++j) {
            n += Int(w.coords[j] + 1) * b[j] * rs.symmetrizer[j];
            d += Int(b[j]) * rs.symmetrizer[j];
        }
        num *= n;
        den *= d;
    }
    if (den == 0 || num % den != 0) throw std::logic_error("Weyl dimension is not integral");
    return num / den;
}

using RatChar = std::map<std::vector<long long>, Rat>;

RatChar to_rat(const Character& a) {
    RatChar out;
    for (const auto& [k, v] : a) out.emplace(k, Rat(v));
    return out;
}

Character from_rat(const RatChar& a) {
    Character out;
    for (const auto& [k, v] : a) {
        if (v == 0) continue;
        if (denominator(v) != 1) throw std::logic_error("non-integral character coefficient");
        out.emplace(k, Int(numerator(v)));
    }
    return out;
}

RatChar rat_multiply(const RatChar& a, const RatChar& b) {
    RatChar out;
    for (const auto& [x, mx] : a)
        for (const auto& [y, my] : b) {
            std::vector<long long> z(x.size());
            for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
            auto it = out.find(z);
            if (it == out.end())
                out.emplace(std::move(z), mx * my);
            else {
                it->second += mx * my;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

RatChar power_sum(const Character& a, int i) {
    RatChar out;
    for (const auto& [k, v] : a) {
        std::vector<long long> s(k.size());
        for (size_t j = 0; j < k.size(); ++j) s[j] = i * k[j];
        out[s] += Rat(v);
    }
    return out;
}

// Newton recursion for complete (sym) or elementary (alt) symmetric functions
Character newton_power(const Character& a, int k, bool alternating) {
    size_t rank = a.empty() ? 0 : a.begin()->first.size();
    std::vector<RatChar> h(k + 1);
    h[0] = {{std::vector<long long>(rank, 0), Rat(1)}};
    for (int n = 1; n <= k; ++n) {
        RatChar acc;
        for (int i = 1; i <= n; ++i) {
            Rat sign = (alternating && i % 2 == 0) ? Rat(-1) : Rat(1);
            for (auto& [key, val] : rat_multiply(power_sum(a, i), h[n - i])) {
                acc[key] += sign * val;
                if (acc[key] == 0) acc.erase(key);
            }
        }
        for (auto& [key, val] : acc) val /= n;
        h[n] = std::move(acc);
    }
    return from_rat(h[k]);
}

}  // namespace

bool LeviContext::dominant_on_levi(const Weight& w) const {
    return std::all_of(uncrossed.begin(), uncrossed.end(),
                       [&](int i) { return w.coords[i] >= 0; });
}

std::vector<int> LeviContext::crossed() const {
    std::vector<int> out;
    for (int i = 0; i < system.rank; ++i)
        if (!std::count(uncrossed.begin(), uncrossed.end(), i)) out.push_back(i);
    return out;
}

LeviContext full_context(RootSystem rs) {
    std::vector<int> all(rs.rank);
    std::iota(all.begin(), all.end(), 0);
    return {std::move(rs), std::move(all)};
}

LeviContext make_levi(RootSystem rs, std::vector<int> uncrossed) {
    std::sort(uncrossed.begin(), uncrossed.end());
    for (int i : uncrossed)
        if (i < 0 || i >= rs.rank) throw domain_error("uncrossed node out of range");
    return {std::move(rs), std::move(uncrossed)};
}

Int ModuleDecomposition::total_dimension(const LeviContext& ctx) const {
    Int total = 0;
    for (const auto& [w, m] : terms) total += m * levi_dim(ctx, w);
    return total;
}

Int weyl_dim(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.coords.size()) != rs.rank) throw domain_error("weight rank mismatch");
    if (!w.dominant()) throw domain_error("weyl_dim requires a dominant weight");
    return dim_from_roots(rs, rs.positive_roots, w);
}

Int levi_dim(const LeviContext& ctx, const Weight& w) {
    if (!ctx.dominant_on_levi(w)) throw domain_error("weight not dominant on the Levi");
    return dim_from_roots(ctx.system, levi_positive_roots(ctx), w);
}

Character weight_multiset(const LeviContext& ctx, const Weight& w) {
    if (!ctx.dominant_on_levi(w)) throw domain_error("weight not dominant on the Levi");
    const auto& rs = ctx.system;
    const int rank = rs.rank;

    struct Key {
        std::string sys;
        std::vector<int> unc;
        std::vector<long long> w;
        auto operator<=>(const Key&) const = default;
    };
    static std::map<Key, Character> memo;
    static std::mutex memo_mutex;
    Key key{rs.name(), ctx.uncrossed, w.coords};
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }

    auto sp = levi_positive_roots(ctx);
    std::vector<std::vector<long long>> alpha(rank);
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        alpha[i] = rs.fundamental_coords(e);
    }
    std::vector<std::vector<long long>> beta_fund;
    for (const auto& b : sp) beta_fund.push_back(rs.fundamental_coords(b));

    Character mult{{w.coords, Int(1)}};
    std::map<std::vector<long long>, std::vector<int>> nvec{{w.coords, std::vector<int>(rank, 0)}};
    std::vector<std::vector<long long>> level{w.coords};
    while (!level.empty()) {
        std::map<std::vector<long long>, std::vector<int>> cand;
        for (const auto& lam : level)
            for (int i : ctx.uncrossed) {
                std::vector<long long> mu(rank);
                for (int j = 0; j < rank; ++j) mu[j] = lam[j] - alpha[i][j];
                auto n = nvec[lam];
                n[i] += 1;
                cand.emplace(std::move(mu), std::move(n));
            }
        std::vector<std::vector<long long>> next;
        for (auto& [mu, n] : cand) {
            Int num = 0;
            for (size_t bi = 0; bi < sp.size(); ++bi) {
                for (int k = 1;; ++k) {
                    std::vector<long long> lam2(rank);
                    for (int j = 0; j < rank; ++j) lam2[j] = mu[j] + k * beta_fund[bi][j];
                    auto it = mult.find(lam2);
                    if (it == mult.end()) break;
                    long long ip = 0;
                    for (int j = 0; j < rank; ++j)
                        ip += lam2[j] * sp[bi][j] * rs.symmetrizer[j];
                    num += it->second * ip;
                }
            }
            Int den = 0;
            for (int j : ctx.uncrossed)
                den += Int(n[j]) * rs.symmetrizer[j] * (w.coords[j] + mu[j] + 2);
            if (den == 0) continue;
            Int m2 = 2 * num;
            if (m2 % den != 0) throw std::logic_error("Freudenthal produced a non-integral multiplicity");
            Int m = m2 / den;
            if (m > 0) {
                mult[mu] = m;
                nvec[mu] = n;
                next.push_back(mu);
            }
        }
        level = std::move(next);
    }

    std::lock_guard lock(memo_mutex);
    memo.emplace(std::move(key), mult);
    return mult;
}

std::optional<std::vector<Rat>> root_coordinates(const RootSystem& rs,
                                                 const std::vector<long long>& fund) {
    const int n = rs.rank;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = rs.cartan[i][j];
        a[i][n] = fund[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        Rat pv = a[col][col];
        for (auto& x : a[col]) x /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<Rat> out(n);
    for (int i = 0; i < n; ++i) out[i] = a[i][n];
    return out;
}

ModuleDecomposition extract_decomposition(const LeviContext& ctx, Character ms) {
    ModuleDecomposition out;
    while (!ms.empty()) {
        const auto& base = ms.begin()->first;
        // maximal-height element (relative heights are coset-local but the
        // global argmax is maximal within its own coset)
        std::vector<long long> best;
        Rat best_h;
        bool have = false;
        for (const auto& [lam, m] : ms) {
            std::vector<long long> diff(lam.size());
            for (size_t j = 0; j < lam.size(); ++j) diff[j] = lam[j] - base[j];
            auto rc = root_coordinates(ctx.system, diff);
            Rat h = 0;
            for (const auto& x : *rc) h += x;
            if (!have || std::tie(h, lam) > std::tie(best_h, best)) {
                best = lam;
                best_h = h;
                have = true;
            }
        }
        Weight hw{best};
        if (!ctx.dominant_on_levi(hw))
            throw std::logic_error("extraction found a maximal weight that is not Levi-dominant");
        Int m = ms.at(best);
        if (m <= 0) throw std::logic_error("extraction found a non-positive leading multiplicity");
        out.terms.emplace_back(hw, m);
        for (const auto& [mu, mm] : weight_multiset(ctx, hw)) {
            auto it = ms.find(mu);
            if (it == ms.end()) throw std::logic_error("extraction underflow");
            it->second -= m * mm;
            if (it->second == 0) ms.erase(it);
            else if (it->second < 0) throw std::logic_error("extraction underflow");
        }
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& a, const auto& b) { return a.first.coords < b.first.coords; });
    return out;
}

ModuleDecomposition tensor_decompose(const LeviContext& ctx, const Weight& v, const Weight& w,
                                     const Budget& budget) {
    Int dv = levi_dim(ctx, v), dw = levi_dim(ctx, w);
    if (dv * dw > budget.max_fiber_dim)
        throw budget_error("tensor product dimension " + dv.str() + "*" + dw.str() +
                           " exceeds the fiber budget");
    return extract_decomposition(ctx, char_multiply(weight_multiset(ctx, v), weight_multiset(ctx, w)));
}

ModuleDecomposition sym_power(const LeviContext& ctx, const Weight& v, int k,
                              const Budget& budget) {
    if (k < 1) throw domain_error("sym_power requires k >= 1");
    if (k > budget.max_sym_power)
        throw budget_error("symmetric power " + std::to_string(k) + " exceeds the budget");
    Int d = levi_dim(ctx, v);
    Int binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (d + k - 1 - i) / (i + 1);
    if (binom > budget.max_fiber_dim)
        throw budget_error("symmetric power dimension " + binom.str() + " exceeds the fiber budget");
    return extract_decomposition(ctx, char_sym_power(weight_multiset(ctx, v), k));
}

Weight dual_weight(const RootSystem& rs, const Weight& w) {
    if (!w.dominant()) throw domain_error("dual_weight requires a dominant weight");
    return dominant_representative(rs, -w);
}

Weight levi_dual_weight(const LeviContext& ctx, const Weight& w) {
    if (!ctx.dominant_on_levi(w)) throw domain_error("weight not dominant on the Levi");
    // an empty node list means "all nodes" to dominant_representative, but an
    // empty Levi really has no reflections at all
    if (ctx.uncrossed.empty()) return -w;
    return dominant_representative(ctx.system, -w, ctx.uncrossed);
}

Character char_multiply(const Character& a, const Character& b) {
    return from_rat(rat_multiply(to_rat(a), to_rat(b)));
}

Character char_sym_power(const Character& a, int k) { return newton_power(a, k, false); }

Character char_alt_power(const Character& a, int k) { return newton_power(a, k, true); }

Character char_dual_levi(const LeviContext&, const Character& a) {
    Character out;
    for (const auto& [k, v] : a) {
        std::vector<long long> neg(k.size());
        for (size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
        out.emplace(std::move(neg), v);
    }
    return out;
}

}  // namespace hololab
