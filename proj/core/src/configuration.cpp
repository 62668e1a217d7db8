#include "xxzstrip/configuration.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace xxzstrip {

Configuration::Configuration(std::vector<Vertex> sites) : sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    if (std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end())
        throw std::invalid_argument("configuration has repeated sites");
}

bool Configuration::contains(Vertex v) const {
    return std::binary_search(sites_.begin(), sites_.end(), v);
}

int Configuration::min_col() const {
    if (sites_.empty()) throw std::logic_error("min_col of empty configuration");
    return sites_.front().col;
}

int Configuration::max_col() const {
    if (sites_.empty()) throw std::logic_error("max_col of empty configuration");
    return sites_.back().col;
}

std::string to_string(const Configuration& x) {
    std::ostringstream os;
    os << "[";
    bool sep = false;
    for (Vertex v : x.sites()) {
        if (sep) os << ",";
        os << "(" << v.col << "," << v.row << ")";
        sep = true;
    }
    os << "]";
    return os.str();
}

Configuration parse_configuration(const std::string& text) {
    std::vector<Vertex> sites;
    std::size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("malformed configuration string: " + text);
        ++pos;
    };
    auto read_int = [&]() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("malformed configuration string: " + text);
        return std::stoi(text.substr(start, pos - start));
    };
    expect('[');
    while (pos < text.size() && text[pos] != ']') {
        if (!sites.empty()) expect(',');
        expect('(');
        int col = read_int();
        expect(',');
        int row = read_int();
        expect(')');
        sites.push_back({col, row});
    }
    expect(']');
    return Configuration(std::move(sites));
}

CombinationGen::CombinationGen(int n, int k) : n_(n), k_(k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("bad combination parameters");
}

bool CombinationGen::first(std::vector<int>& out) {
    out.resize(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) out[static_cast<std::size_t>(i)] = i;
    return true;
}

bool CombinationGen::next(std::vector<int>& out) const {
    // advance rightmost index that still has room
    int i = k_ - 1;
    while (i >= 0 && out[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
    if (i < 0) return false;
    ++out[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k_; ++j)
        out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    const std::uint64_t cap = std::numeric_limits<std::int64_t>::max();
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result *= (n-k+i)/i exactly, saturating
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (result > cap / num) return cap;
        result = result * num / static_cast<std::uint64_t>(i);
    }
    return result;
}

CombinationRanker::CombinationRanker(int n, int k) : n_(n), k_(k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("bad ranker parameters");
    count_ = binomial(n, k);
    binom_.assign(static_cast<std::size_t>(n + 1),
                  std::vector<std::uint64_t>(static_cast<std::size_t>(k + 1), 0));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= k; ++b)
            binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = binomial(a, b);
}

std::uint64_t CombinationRanker::rank(std::span<const std::int32_t> combo) const {
    if (static_cast<int>(combo.size()) != k_)
        throw std::invalid_argument("rank of wrong combination size");
    std::uint64_t r = 0;
    int prev = -1;
    for (int i = 0; i < k_; ++i) {
        const int ci = combo[static_cast<std::size_t>(i)];
        if (ci <= prev || ci >= n_) throw std::invalid_argument("bad combination in rank");
        for (int v = prev + 1; v < ci; ++v)
            r += binom_[static_cast<std::size_t>(n_ - 1 - v)][static_cast<std::size_t>(k_ - 1 - i)];
        prev = ci;
    }
    return r;
}

std::vector<std::int32_t> CombinationRanker::unrank(std::uint64_t rank) const {
    if (rank >= count_ && k_ > 0) throw std::invalid_argument("rank out of range");
    if (k_ == 0 && rank != 0) throw std::invalid_argument("rank out of range");
    std::vector<std::int32_t> combo;
    combo.reserve(static_cast<std::size_t>(k_));
    int v = 0;
    for (int i = 0; i < k_; ++i) {
        // skip values whose subtree of completions is exhausted by rank
        for (;; ++v) {
            const std::uint64_t below =
                binom_[static_cast<std::size_t>(n_ - 1 - v)][static_cast<std::size_t>(k_ - 1 - i)];
            if (rank < below) break;
            rank -= below;
        }
        combo.push_back(static_cast<std::int32_t>(v));
        ++v;
    }
    return combo;
}

SectorBasis::SectorBasis(StripGeometry geom, int particle_count, std::size_t size_cap)
    : geom_(geom), particles_(particle_count) {
    const int n = geom_.num_vertices();
    if (particle_count < 0 || particle_count > n)
        throw std::invalid_argument("particle count out of range for this strip");
    const std::uint64_t dim = binomial(n, particle_count);
    if (dim > size_cap)
        throw std::runtime_error("sector size " + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(size_cap));
    size_ = static_cast<std::size_t>(dim);

    flat_.reserve(size_ * static_cast<std::size_t>(particles_));
    CombinationGen gen(n, particles_);
    std::vector<int> comb;
    gen.first(comb);
    do {
        for (int c : comb) flat_.push_back(static_cast<std::int32_t>(c));
    } while (gen.next(comb));

    binom_.assign(static_cast<std::size_t>(n + 1),
                  std::vector<std::uint64_t>(static_cast<std::size_t>(particles_ + 1), 0));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= particles_; ++b)
            binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                binomial(a, b);
}

std::span<const std::int32_t> SectorBasis::indices(std::size_t rank) const {
    if (rank >= size_) throw std::invalid_argument("basis rank out of range");
    return {flat_.data() + rank * static_cast<std::size_t>(particles_),
            static_cast<std::size_t>(particles_)};
}

Configuration SectorBasis::configuration(std::size_t rank) const {
    std::vector<Vertex> sites;
    sites.reserve(static_cast<std::size_t>(particles_));
    for (std::int32_t i : indices(rank)) sites.push_back(geom_.vertex(i));
    return Configuration(std::move(sites));
}

std::size_t SectorBasis::rank(std::span<const std::int32_t> idx) const {
    if (static_cast<int>(idx.size()) != particles_)
        throw std::invalid_argument("rank lookup with wrong particle count");
    const int n = geom_.num_vertices();
    std::uint64_t r = 0;
    int prev = -1;
    for (int i = 0; i < particles_; ++i) {
        const int ci = idx[static_cast<std::size_t>(i)];
        if (ci <= prev || ci >= n) throw std::invalid_argument("bad index sequence in rank lookup");
        for (int v = prev + 1; v < ci; ++v)
            r += binom_[static_cast<std::size_t>(n - 1 - v)][static_cast<std::size_t>(particles_ - 1 - i)];
        prev = ci;
    }
    return static_cast<std::size_t>(r);
}

std::size_t SectorBasis::rank_of(const Configuration& x) const {
    if (x.particle_count() != particles_)
        throw std::invalid_argument("configuration particle count does not match sector");
    std::vector<std::int32_t> idx;
    idx.reserve(static_cast<std::size_t>(particles_));
    for (Vertex v : x.sites()) idx.push_back(static_cast<std::int32_t>(geom_.index(v)));
    return rank(idx);
}

SectorBasis enumerate_sector(const StripGeometry& geom, int particle_count,
                             std::size_t size_cap) {
    return SectorBasis(geom, particle_count, size_cap);
}

}  // namespace xxzstrip
