#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hololab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Thrown when an operation would exceed the configured size budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on precondition violations (invalid series/rank, non-dominant weight, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Root-system data for one simple series + rank, Bourbaki node numbering.
///
/// Weights live in fundamental-weight coordinates; roots in simple-root
/// coordinates. cartan[i][j] is the pairing of alpha_j against the coroot
/// alpha_i^vee, so the fundamental coordinates of alpha_j form the j-th
/// column of the Cartan matrix.
struct RootSystem {
    Series series;
    int rank;
    std::vector<std::vector<int>> cartan;
    // positive roots in simple-root coordinates, sorted by (height, lex)
    std::vector<std::vector<int>> positive_roots;
    // d_i = (alpha_i, alpha_i)/2, normalized so short roots have d = 1;
    // d_i * cartan[i][j] is symmetric positive definite
    std::vector<int> symmetrizer;

    std::string name() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
    // fundamental coordinates of a vector given in simple-root coordinates
    std::vector<long long> fundamental_coords(const std::vector<int>& root) const;
    // (beta,beta)/2 in the symmetrizer normalization
    Rat root_half_norm(const std::vector<int>& root) const;
    int highest_root_index() const;
};

/// Integral weight in fundamental-weight coordinates.
struct Weight {
    std::vector<long long> coords;

    Weight() = default;
    explicit Weight(std::vector<long long> c) : coords(std::move(c)) {}

    bool dominant() const;
    bool is_zero() const;
    Weight operator+(const Weight& o) const;
    Weight operator-() const;
    bool operator==(const Weight& o) const { return coords == o.coords; }
    auto operator<=>(const Weight& o) const { return coords <=> o.coords; }
};

RootSystem build_root_system(Series series, int rank);

/// <w, beta^vee> for the positive root at the given index.
long long pairing(const RootSystem& rs, const Weight& w, int positive_root_index);

struct ChamberResult {
    bool singular = false;
    Weight dominant;        // valid iff !singular
    int length = 0;         // minimal Weyl word length, valid iff !singular
};

/// Walk an integral weight into the dominant chamber; detects singularity
/// (zero pairing with some positive coroot). Reflects at the lowest-index
/// strictly negative node each step.
ChamberResult to_dominant_chamber(const RootSystem& rs, const Weight& w);

/// Dominant representative of the Weyl orbit of w; walls allowed.
/// Restricted to the given nodes (empty = all nodes).
Weight dominant_representative(const RootSystem& rs, Weight w, const std::vector<int>& nodes = {});

/// s_i applied to a weight in fundamental coordinates.
Weight simple_reflection(const RootSystem& rs, const Weight& w, int node);

// --- textual grammar ("A2", "[1,2]"), lossless round-trip ---

std::pair<Series, int> parse_system(const std::string& text);
RootSystem parse_root_system(const std::string& text);
Weight parse_weight(const std::string& text, int rank);
std::string to_string(const RootSystem& rs);
std::string to_string(const Weight& w);

}  // namespace hololab
