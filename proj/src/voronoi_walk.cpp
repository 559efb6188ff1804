#include "perfectforms/voronoi_walk.hpp"

#include "perfectforms/enumeration.hpp"
#include "perfectforms/reduction.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <string>
#include <thread>

namespace perfectforms {

bool operator==(const InvariantKey& a, const InvariantKey& b) {
    return a.dim == b.dim && a.normalized_det == b.normalized_det && a.min_count == b.min_count &&
           a.gram_values == b.gram_values;
}

bool operator<(const InvariantKey& a, const InvariantKey& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.normalized_det != b.normalized_det) return a.normalized_det < b.normalized_det;
    if (a.min_count != b.min_count) return a.min_count < b.min_count;
    return a.gram_values < b.gram_values;
}

InvariantKey invariant_key(const QuadForm& q) {
    MinimalVectorSet mins = arithmetical_minimum(q);
    const Rational& lambda = mins.form_min;
    InvariantKey key;
    key.dim = q.dim();
    key.normalized_det = q.det();
    for (std::size_t i = 0; i < q.dim(); ++i) key.normalized_det /= lambda;
    key.min_count = mins.count();
    const auto& v = mins.vectors;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) key.gram_values.push_back(abs(bilinear(q, v[i], v[j])) / lambda);
    std::sort(key.gram_values.begin(), key.gram_values.end());
    return key;
}

QuadForm root_form_a(std::size_t d) {
    if (d < 1) throw DomainError("root_form_a: dimension must be positive");
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = i == j ? 2 : 1;
    return QuadForm(m);
}

// ---------------------------------------------------------------------------
// Contiguous forms

QuadForm contiguous_form(const QuadForm& q, const QuadForm& facet) {
    if (facet.dim() != q.dim()) throw DimensionError("contiguous_form: dimension mismatch");
    VoronoiDomain dom = voronoi_domain(q, false);
    if (!dom.full_rank()) throw NotPerfectError("contiguous_form: form is not perfect");
    const Rational lambda = dom.minimal_vectors.form_min;

    IncrementalRank zero_rank(q.n());
    for (const auto& x : dom.generators) {
        Rational v = evaluate(facet, x);
        if (v < 0) throw DomainError("contiguous_form: functional is negative on a minimal vector");
        if (v == 0) zero_rank.try_add(phi_prime_outer(x));
    }
    if (zero_rank.rank() + 1 != q.n()) throw DomainError("contiguous_form: functional does not define a facet");

    // Find u > 0 with q + u F positive definite and of minimum below lambda.
    Rational lower = 0;
    Rational u = 1;
    std::optional<QuadForm> probe;
    for (int iter = 0; iter < 512 && !probe; ++iter) {
        QuadForm qu = q + facet.scaled(u);
        if (!is_positive_definite(qu)) {
            u = (lower + u) / 2;
            continue;
        }
        if (arithmetical_minimum(qu).form_min < lambda) {
            probe = std::move(qu);
            break;
        }
        lower = u;
        u *= 2;
    }
    if (!probe) throw WalkError("contiguous_form: no point beyond the facet lowers the minimum");

    // Every vector whose value drops below lambda at some t in (0, u] has
    // value below lambda at u, since t -> (q + tF)[y] is affine.
    std::optional<Rational> t_star;
    for (const auto& y : vectors_below(*probe, lambda)) {
        Rational fy = evaluate(facet, y);
        if (fy >= 0) continue;
        Rational t = (evaluate(q, y) - lambda) / (-fy);
        if (!t_star || t < *t_star) t_star = t;
    }
    if (!t_star || *t_star <= 0) throw WalkError("contiguous_form: degenerate crossing parameter");

    QuadForm neighbour = q + facet.scaled(*t_star);
    VoronoiDomain next = voronoi_domain(neighbour, false);
    if (next.minimal_vectors.form_min != lambda || !next.full_rank())
        throw WalkError("contiguous_form: crossing did not produce a perfect form with the same minimum");
    return neighbour;
}

// ---------------------------------------------------------------------------
// Equivalence up to scale

namespace {

struct Matcher {
    const QuadForm& q1;
    const QuadForm& q2;
    Rational alpha;
    std::vector<IntVector> ys;        // independent short vectors of q2
    std::vector<IntVector> pool;      // +- short vectors of q1
    std::vector<Rational> pool_norm;  // q1[pool[k]]
    RatMatrix y_inverse;
    std::vector<std::size_t> chosen;

    std::optional<UnimodularMatrix> search(std::size_t level) {
        const std::size_t d = ys.size();
        if (level == d) return finish();
        const Rational target = alpha * evaluate(q2, ys[level]);
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (pool_norm[k] != target) continue;
            if (level == 0 && !is_lex_positive(pool[k])) continue;  // -U is as good as U
            bool ok = true;
            for (std::size_t j = 0; j < level && ok; ++j)
                ok = bilinear(q1, pool[k], pool[chosen[j]]) == alpha * bilinear(q2, ys[level], ys[j]);
            if (!ok) continue;
            chosen.push_back(k);
            if (auto u = search(level + 1)) return u;
            chosen.pop_back();
        }
        return std::nullopt;
    }

    std::optional<UnimodularMatrix> finish() const {
        const std::size_t d = ys.size();
        RatMatrix x(d, d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r) x(r, c) = pool[chosen[c]][r];
        auto u = to_integer(x * y_inverse);
        if (!u) return std::nullopt;
        Integer det = determinant(*u);
        if (det != 1 && det != -1) return std::nullopt;
        UnimodularMatrix um(*u);
        if (apply_unimodular(q1, um) != q2.scaled(alpha)) return std::nullopt;
        return um;
    }
};

}  // namespace

std::optional<Similarity> equivalent_up_to_scale(const QuadForm& q1, const QuadForm& q2) {
    if (q1.dim() != q2.dim()) return std::nullopt;
    require_positive_definite(q1, "equivalent_up_to_scale");
    require_positive_definite(q2, "equivalent_up_to_scale");
    const std::size_t d = q1.dim();

    Rational alpha = arithmetical_minimum(q1).form_min / arithmetical_minimum(q2).form_min;
    Rational scaled_det = q2.det();
    for (std::size_t i = 0; i < d; ++i) scaled_det *= alpha;
    if (q1.det() != scaled_det) return std::nullopt;

    SuccessiveMinima sm = successive_minima(q2, d);
    const Rational& top = sm.values.back();
    std::vector<IntVector> s2 = vectors_below(q2, top);
    std::vector<IntVector> s1 = vectors_below(q1, alpha * top);
    if (s1.size() != s2.size()) return std::nullopt;
    {
        std::vector<Rational> n1, n2;
        for (const auto& x : s1) n1.push_back(evaluate(q1, x));
        for (const auto& y : s2) n2.push_back(alpha * evaluate(q2, y));
        std::sort(n1.begin(), n1.end());
        std::sort(n2.begin(), n2.end());
        if (n1 != n2) return std::nullopt;
    }

    Matcher m{q1, q2, alpha, sm.witnesses, {}, {}, RatMatrix(d, d), {}};
    for (const auto& x : s1) {
        IntVector neg(x);
        for (auto& c : neg) c = -c;
        Rational v = evaluate(q1, x);
        m.pool.push_back(x);
        m.pool_norm.push_back(v);
        m.pool.push_back(std::move(neg));
        m.pool_norm.push_back(v);
    }
    RatMatrix y(d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) y(r, c) = m.ys[c][r];
    m.y_inverse = inverse(y);
    if (auto u = m.search(0)) return Similarity{*u, alpha};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The walk

namespace {

struct Discovered {
    QuadForm normalized;  // minimum 1
    PerfectFormClass info;
};

PerfectFormClass describe(const QuadForm& normalized, std::size_t path_length) {
    QuadForm rep = lll_reduce(primitive_integral(normalized)).reduced;
    MinimalVectorSet mins = arithmetical_minimum(rep);
    PerfectFormClass c{rep, mins.form_min, rep.det(), mins.count(), invariant_key(rep), path_length};
    return c;
}

std::vector<QuadForm> cross_all(const QuadForm& form, const std::vector<VoronoiFacet>& facets, std::size_t threads) {
    std::vector<QuadForm> out(facets.size(), form);
    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, facets.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < facets.size(); ++i) out[i] = contiguous_form(form, facets[i].functional);
        return out;
    }
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < facets.size(); i += workers)
                out[i] = contiguous_form(form, facets[i].functional);
        }));
    }
    for (auto& j : jobs) j.get();
    return out;
}

}  // namespace

std::vector<PerfectFormClass> enumerate_perfect_forms(std::size_t d, const WalkOptions& options) {
    if (d < 2) throw DomainError("enumerate_perfect_forms: dimension must be at least 2");
    if (options.cap > kMaxWalkCap)
        throw CapExceededError("enumerate_perfect_forms: cap above " + std::to_string(kMaxWalkCap) + " is not supported");
    if (d > options.cap)
        throw CapExceededError("enumerate_perfect_forms: dimension " + std::to_string(d) + " exceeds the cap " +
                               std::to_string(options.cap));
    std::size_t threads = options.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    std::vector<Discovered> classes;
    std::map<InvariantKey, std::vector<std::size_t>> by_key;
    std::deque<std::size_t> pending;

    auto admit = [&](const QuadForm& normalized, std::size_t path_length) {
        PerfectFormClass info = describe(normalized, path_length);
        auto& bucket = by_key[info.key];
        for (std::size_t idx : bucket)
            if (equivalent_up_to_scale(classes[idx].info.representative, info.representative)) return;
        bucket.push_back(classes.size());
        pending.push_back(classes.size());
        if (options.on_discovered) options.on_discovered(info);
        classes.push_back({info.representative.scaled(1 / info.lambda1), std::move(info)});
    };

    admit(root_form_a(d).scaled(Rational(1, 2)), 0);
    while (!pending.empty()) {
        const std::size_t idx = pending.front();
        pending.pop_front();
        const QuadForm form = classes[idx].normalized;
        const std::size_t depth = classes[idx].info.path_length;
        VoronoiDomain dom = voronoi_domain(form, true, options.cap);
        for (const auto& next : cross_all(form, *dom.facets, threads)) admit(next, depth + 1);
    }

    std::vector<PerfectFormClass> out;
    for (auto& c : classes) out.push_back(std::move(c.info));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return out;
}

}  // namespace perfectforms
