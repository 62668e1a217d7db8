// configuration.hpp - N-particle configurations and sector basis enumeration
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xxzstrip/geometry.hpp"

namespace xxzstrip {

// Set of occupied sites (down-spins), kept sorted lexicographically by
// (col, row). Re-serialization is idempotent.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<Vertex> sites);

    int particle_count() const { return static_cast<int>(sites_.size()); }
    const std::vector<Vertex>& sites() const { return sites_; }
    bool contains(Vertex v) const;
    bool empty() const { return sites_.empty(); }

    int min_col() const;
    int max_col() const;

    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<Vertex> sites_;
};

// Text form: sorted list of (col,row) pairs, e.g. "[(1,1),(3,2)]".
std::string to_string(const Configuration& x);
Configuration parse_configuration(const std::string& text);

// Lexicographic generator over k-subsets of {0..n-1}. first() then next().
class CombinationGen {
public:
    CombinationGen(int n, int k);
    bool first(std::vector<int>& out);
    bool next(std::vector<int>& out) const;

private:
    int n_;
    int k_;
};

std::uint64_t binomial(int n, int k);   // saturates at 2^63-1

// Lexicographic rank <-> k-subset of {0..n-1}. Matches the order of
// CombinationGen and SectorBasis.
class CombinationRanker {
public:
    CombinationRanker(int n, int k);

    std::uint64_t count() const { return count_; }
    std::uint64_t rank(std::span<const std::int32_t> combo) const;
    std::vector<std::int32_t> unrank(std::uint64_t rank) const;

private:
    int n_;
    int k_;
    std::uint64_t count_;
    std::vector<std::vector<std::uint64_t>> binom_;
};

// All C(2lM, N) configurations of the N-particle sector in canonical
// (lexicographic) order, with combinatorial rank lookup.
class SectorBasis {
public:
    SectorBasis(StripGeometry geom, int particle_count, std::size_t size_cap);

    const StripGeometry& geometry() const { return geom_; }
    int particle_count() const { return particles_; }
    std::size_t size() const { return size_; }

    Configuration configuration(std::size_t rank) const;
    std::span<const std::int32_t> indices(std::size_t rank) const;
    std::size_t rank(std::span<const std::int32_t> indices) const;
    std::size_t rank_of(const Configuration& x) const;

private:
    StripGeometry geom_;
    int particles_;
    std::size_t size_;
    std::vector<std::int32_t> flat_;                 // size_ * particles_ indices
    std::vector<std::vector<std::uint64_t>> binom_;  // for rank lookup
};

inline constexpr std::size_t kDefaultSectorCap = 1'000'000;

SectorBasis enumerate_sector(const StripGeometry& geom, int particle_count,
                             std::size_t size_cap = kDefaultSectorCap);

}  // namespace xxzstrip
