#include "quadric_sections.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace hololab::quadric {

namespace {

constexpr int64_t kPrimes[] = {1000003, 999983};

// multisets of size k drawn from {0..m-1}, lexicographic
void gen_monomials(int m, int k, std::vector<std::vector<int>>& out, std::vector<int>& cur,
                   int start) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < m; ++i) {
        cur.push_back(i);
        gen_monomials(m, k, out, cur, i);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> monomials(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_monomials(m, k, out, cur, 0);
    return out;
}

long long rank_mod_p(std::vector<std::vector<int64_t>>& a, int64_t p) {
    const size_t rows = a.size();
    if (rows == 0) return 0;
    const size_t cols = a[0].size();
    auto inv = [&](int64_t x) {
        // Fermat
        int64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = (__int128)r * b % p;
            b = (__int128)b * b % p;
            e >>= 1;
        }
        return r;
    };
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        int64_t ip = inv(((a[rank][col] % p) + p) % p);
        for (size_t c = col; c < cols; ++c)
            a[rank][c] = (__int128)(((a[rank][c] % p) + p) % p) * ip % p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int64_t f = ((a[r][col] % p) + p) % p;
            if (!f) continue;
            for (size_t c = col; c < cols; ++c)
                a[r][c] = ((a[r][c] - (__int128)f * a[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace

std::optional<KoszulRanks> certified_koszul_rank(int dim_v, int k) {
    const int m = dim_v;
    if (m < 3 || k < 1) return std::nullopt;

    // hyperbolic quadric q = sum_{i<m-1-i} x_i x_{m-1-i} (+ x_mid^2 when m odd)
    // R_2 basis: degree-2 monomials with x_0 x_{m-1} eliminated via q = 0
    auto deg2 = monomials(m, 2);
    std::map<std::vector<int>, int> r2_index;
    std::vector<std::vector<int>> r2_basis;
    for (const auto& mon : deg2) {
        if (mon == std::vector<int>{0, m - 1}) continue;
        r2_index[mon] = static_cast<int>(r2_basis.size());
        r2_basis.push_back(mon);
    }
    // class of x_0 x_{m-1}: minus the remaining terms of q
    std::vector<std::pair<int, int>> elim;  // (r2 index, coefficient)
    for (int i = 1; i < m - 1 - i; ++i) elim.emplace_back(r2_index.at({i, m - 1 - i}), -1);
    if (m % 2 == 1) elim.emplace_back(r2_index.at({(m - 1) / 2, (m - 1) / 2}), -1);

    auto sk = monomials(m, k);
    auto sk1 = monomials(m, k - 1);
    std::map<std::vector<int>, int> sk1_index;
    for (size_t i = 0; i < sk1.size(); ++i) sk1_index[sk1[i]] = static_cast<int>(i);

    const size_t cols = m * sk.size();          // R_1 (x) S^k V*
    const size_t rows = r2_basis.size() * sk1.size();  // R_2 (x) S^{k-1} V*
    std::vector<std::vector<int64_t>> mat(rows, std::vector<int64_t>(cols, 0));

    for (size_t pi = 0; pi < sk.size(); ++pi) {
        const auto& mon = sk[pi];
        for (int a = 0; a < m; ++a) {
            size_t col = a * sk.size() + pi;
            // comultiplication: extract each distinct variable of the monomial
            for (size_t s = 0; s < mon.size(); ++s) {
                if (s > 0 && mon[s] == mon[s - 1]) continue;
                int var = mon[s];
                int count = static_cast<int>(std::count(mon.begin(), mon.end(), var));
                std::vector<int> rest = mon;
                rest.erase(rest.begin() + static_cast<long>(s));
                int rest_idx = sk1_index.at(rest);
                // product x_a * x_var reduced in R_2
                std::vector<int> prod{std::min(a, var), std::max(a, var)};
                if (prod == std::vector<int>{0, m - 1}) {
                    for (auto [r2i, c] : elim)
                        mat[static_cast<size_t>(r2i) * sk1.size() + rest_idx][col] += c * count;
                } else {
                    mat[static_cast<size_t>(r2_index.at(prod)) * sk1.size() + rest_idx][col] += count;
                }
            }
        }
    }

    long long want = static_cast<long long>(std::min(rows, cols));
    for (int64_t p : kPrimes) {
        auto copy = mat;
        long long r = rank_mod_p(copy, p);
        if (r == want)
            return KoszulRanks{static_cast<long long>(cols), static_cast<long long>(rows), r};
    }
    return std::nullopt;
}

}  // namespace hololab::quadric
