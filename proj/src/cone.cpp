#include "perfectforms/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace perfectforms {
namespace {

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    [[nodiscard]] Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
        return r;
    }
    [[nodiscard]] bool subset_of(const Bitset& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & ~o.words_[w]) != 0) return false;
        return true;
    }
    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVector v;
    Bitset zeros;  // processed generators on which the functional vanishes
};

}  // namespace

std::vector<ConeFacet> cone_facets(const std::vector<IntVector>& generators) {
    if (generators.empty()) throw DomainError("cone_facets: no generators");
    const std::size_t n = generators.front().size();
    const std::size_t m = generators.size();
    for (const auto& g : generators)
        if (g.size() != n) throw DimensionError("cone_facets: generators of different length");

    IncrementalRank acc(n);
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < m && basis.size() < n; ++i)
        if (acc.try_add(generators[i])) basis.push_back(i);
    if (basis.size() < n) throw DomainError("cone_facets: generators do not span the ambient space");

    // Initial simplicial cone { f : g_b . f >= 0, b in basis }: its rays are
    // the columns of the inverse of the basis matrix.
    RatMatrix bmat(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) bmat(r, c) = generators[basis[r]][c];
    RatMatrix inv = inverse(bmat);

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < n; ++j) {
        Integer den = 1;
        for (std::size_t r = 0; r < n; ++r) den = lcm(den, inv(r, j).get_den());
        IntVector v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = Rational(inv(r, j) * den).get_num();
        Ray ray{primitive(std::move(v)), Bitset(m)};
        for (std::size_t b = 0; b < n; ++b)
            if (b != j) ray.zeros.set(basis[b]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(m, false);
    for (auto b : basis) in_basis[b] = true;

    for (std::size_t gi = 0; gi < m; ++gi) {
        if (in_basis[gi]) continue;
        const IntVector& g = generators[gi];
        std::vector<Integer> vals;
        vals.reserve(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            vals.push_back(dot(g, rays[r].v));
            if (vals.back() > 0) pos.push_back(r);
            else if (vals.back() < 0) neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (vals[r] == 0) rays[r].zeros.set(gi);
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                Bitset common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < n) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v(n);
                for (std::size_t c = 0; c < n; ++c) v[c] = vals[p] * rays[q].v[c] - vals[q] * rays[p].v[c];
                Ray nr{primitive(std::move(v)), common};
                nr.zeros.set(gi);
                next.push_back(std::move(nr));
            }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (vals[r] < 0) continue;
            if (vals[r] == 0) rays[r].zeros.set(gi);
            next.push_back(std::move(rays[r]));
        }
        rays = std::move(next);
    }

    std::vector<ConeFacet> facets;
    facets.reserve(rays.size());
    for (auto& ray : rays) {
        ConeFacet f{std::move(ray.v), {}};
        for (std::size_t i = 0; i < m; ++i)
            if (dot(generators[i], f.normal) == 0) f.incident.push_back(i);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), [](const ConeFacet& a, const ConeFacet& b) { return a.normal < b.normal; });
    return facets;
}

bool cone_contains(const std::vector<ConeFacet>& facets, const IntVector& point) {
    return std::all_of(facets.begin(), facets.end(), [&](const ConeFacet& f) { return dot(f.normal, point) >= 0; });
}

}  // namespace perfectforms
