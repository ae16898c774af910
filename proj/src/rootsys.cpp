#include "hololab/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hololab {

std::vector<long long> RootSystem::fundamental_coords(const std::vector<int>& root) const {
    std::vector<long long> out(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) out[i] += static_cast<long long>(cartan[i][j]) * root[j];
    return out;
}

Rat RootSystem::root_half_norm(const std::vector<int>& root) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            s += static_cast<long long>(symmetrizer[i]) * cartan[i][j] * root[i] * root[j];
    return Rat(s, 2);
}

int RootSystem::highest_root_index() const {
    // unique root maximal in the root order: the one of maximal height
    int best = 0;
    long long best_h = -1;
    for (size_t k = 0; k < positive_roots.size(); ++k) {
        long long h = std::accumulate(positive_roots[k].begin(), positive_roots[k].end(), 0LL);
        if (h > best_h) { best_h = h; best = static_cast<int>(k); }
    }
    return best;
}

bool Weight::dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](long long c) { return c >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

namespace {

void link(std::vector<std::vector<int>>& c, int i, int j, int a = -1, int b = -1) {
    c[i][j] = a;
    c[j][i] = b;
}

struct CartanData {
    std::vector<std::vector<int>> cartan;
    std::vector<int> sym;
};

CartanData make_cartan(Series series, int rank) {
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    std::vector<int> d(rank, 1);
    switch (series) {
        case Series::A:
            if (rank < 1) throw domain_error("series A requires rank >= 1");
            for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
            break;
        case Series::B:  // last node short
            if (rank < 2) throw domain_error("series B requires rank >= 2");
            for (int i = 0; i + 2 < rank; ++i) link(c, i, i + 1);
            link(c, rank - 2, rank - 1, -1, -2);
            std::fill(d.begin(), d.end() - 1, 2);
            break;
        case Series::C:  // last node long
            if (rank < 2) throw domain_error("series C requires rank >= 2");
            for (int i = 0; i + 2 < rank; ++i) link(c, i, i + 1);
            link(c, rank - 2, rank - 1, -2, -1);
            d[rank - 1] = 2;
            break;
        case Series::D:
            if (rank < 3) throw domain_error("series D requires rank >= 3");
            for (int i = 0; i + 3 < rank; ++i) link(c, i, i + 1);
            link(c, rank - 3, rank - 2);
            link(c, rank - 3, rank - 1);
            break;
        case Series::G:  // alpha_1 short
            if (rank != 2) throw domain_error("series G requires rank = 2");
            c = {{2, -3}, {-1, 2}};
            d = {1, 3};
            break;
        case Series::E:
        case Series::F:
            throw domain_error("series E/F not supported");
        default:
            throw domain_error("unknown series");
    }
    return {std::move(c), std::move(d)};
}

size_t expected_root_count(Series series, int rank) {
    switch (series) {
        case Series::A: return static_cast<size_t>(rank) * (rank + 1) / 2;
        case Series::B:
        case Series::C: return static_cast<size_t>(rank) * rank;
        case Series::D: return static_cast<size_t>(rank) * (rank - 1);
        case Series::G: return 6;
        default: return 0;
    }
}

}  // namespace

RootSystem build_root_system(Series series, int rank) {
    auto [cartan, sym] = make_cartan(series, rank);
    RootSystem rs{series, rank, std::move(cartan), {}, std::move(sym)};

    // closure from simple roots via root strings
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> level;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        roots.insert(e);
        level.push_back(std::move(e));
    }
    while (!level.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& r : level) {
            for (int i = 0; i < rank; ++i) {
                long long p = 0;
                for (int j = 0; j < rank; ++j) p += static_cast<long long>(rs.cartan[i][j]) * r[j];
                // back-string length: max k with r - k*alpha_i a root
                int back = 0;
                std::vector<int> rr = r;
                while (true) {
                    rr[i] -= 1;
                    bool zero = std::all_of(rr.begin(), rr.end(), [](int x) { return x == 0; });
                    if (zero) break;
                    if (!roots.count(rr)) break;
                    ++back;
                }
                if (back - p > 0) {
                    std::vector<int> nr = r;
                    nr[i] += 1;
                    if (roots.insert(nr).second) next.push_back(std::move(nr));
                }
            }
        }
        level = std::move(next);
    }

    rs.positive_roots.assign(roots.begin(), roots.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const auto& a, const auto& b) {
                  long long ha = std::accumulate(a.begin(), a.end(), 0LL);
                  long long hb = std::accumulate(b.begin(), b.end(), 0LL);
                  return std::tie(ha, a) < std::tie(hb, b);
              });
    if (rs.positive_roots.size() != expected_root_count(series, rank))
        throw std::logic_error("positive root closure produced an unexpected count for " + rs.name());
    return rs;
}

long long pairing(const RootSystem& rs, const Weight& w, int positive_root_index) {
    if (positive_root_index < 0 || positive_root_index >= static_cast<int>(rs.positive_roots.size()))
        throw domain_error("positive root index out of range");
    const auto& beta = rs.positive_roots[positive_root_index];
    Rat num = 0;
    for (int j = 0; j < rs.rank; ++j)
        num += Rat(static_cast<long long>(w.coords[j]) * beta[j] * rs.symmetrizer[j]);
    Rat val = num / rs.root_half_norm(beta);
    if (denominator(val) != 1) throw std::logic_error("non-integral coroot pairing");
    return static_cast<long long>(numerator(val));
}

Weight simple_reflection(const RootSystem& rs, const Weight& w, int node) {
    Weight r = w;
    long long wi = w.coords[node];
    for (int j = 0; j < rs.rank; ++j) r.coords[j] -= wi * rs.cartan[j][node];
    return r;
}

ChamberResult to_dominant_chamber(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.coords.size()) != rs.rank) throw domain_error("weight rank mismatch");
    Weight cur = w;
    int length = 0;
    while (true) {
        int neg = -1;
        bool wall = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (cur.coords[i] < 0 && neg < 0) neg = i;
            if (cur.coords[i] == 0) wall = true;
        }
        if (neg < 0) {
            if (wall) return {true, {}, 0};
            return {false, cur, length};
        }
        cur = simple_reflection(rs, cur, neg);
        ++length;
    }
}

Weight dominant_representative(const RootSystem& rs, Weight w, const std::vector<int>& nodes) {
    std::vector<int> ns = nodes;
    if (ns.empty()) {
        ns.resize(rs.rank);
        std::iota(ns.begin(), ns.end(), 0);
    }
    while (true) {
        int neg = -1;
        for (int i : ns)
            if (w.coords[i] < 0) { neg = i; break; }
        if (neg < 0) return w;
        w = simple_reflection(rs, w, neg);
    }
}

std::pair<Series, int> parse_system(const std::string& text) {
    if (text.size() < 2) throw domain_error("system must be a series letter followed by a rank, e.g. \"A2\"");
    char s = text[0];
    if (s < 'A' || s > 'G' || s == 'E' || s == 'F')
        throw domain_error(std::string("unsupported series letter '") + s + "' at position 0");
    for (size_t i = 1; i < text.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(text[i])))
            throw domain_error("invalid rank digit '" + std::string(1, text[i]) + "' at position " + std::to_string(i));
    return {static_cast<Series>(s), std::stoi(text.substr(1))};
}

RootSystem parse_root_system(const std::string& text) {
    auto [s, r] = parse_system(text);
    return build_root_system(s, r);
}

Weight parse_weight(const std::string& text, int rank) {
    if (text.empty() || text.front() != '[' || text.back() != ']')
        throw domain_error("weight must be a bracketed comma list, e.g. \"[1,2]\"");
    std::vector<long long> coords;
    std::string body = text.substr(1, text.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw domain_error("invalid weight coordinate '" + tok + "'");
        }
        while (pos < tok.size() && isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw domain_error("trailing characters in weight coordinate '" + tok + "'");
        coords.push_back(v);
    }
    if (rank >= 0 && static_cast<int>(coords.size()) != rank)
        throw domain_error("weight has " + std::to_string(coords.size()) + " coordinates, expected " +
                           std::to_string(rank));
    return Weight(std::move(coords));
}

std::string to_string(const RootSystem& rs) { return rs.name(); }

std::string to_string(const Weight& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.coords[i]);
    }
    return out + "]";
}

}  // namespace hololab
