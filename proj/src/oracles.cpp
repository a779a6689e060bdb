#include <ekrlab/oracles.hpp>
#include <ekrlab/errors.hpp>
#include <ekrlab/graph.hpp>
#include <ekrlab/paths.hpp>

#include <algorithm>

using std::int64_t;
using std::string;
using std::vector;

namespace ekrlab
{
    auto to_string(SunBoundVariant v) -> string
    {
        return v == SunBoundVariant::statement ? "statement" : "construction";
    }

    auto binomial(int64_t n, int64_t k) -> int64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        int64_t r = 1;
        for (int64_t i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    namespace
    {
        auto sun_hypothesis(unsigned n, unsigned r, unsigned s) -> bool
        {
            return s >= 1 && s + 2 <= r && 2 * r <= n + s - 1;
        }
    }

    auto sun_bound(unsigned n, unsigned t, unsigned r, unsigned s, SunBoundVariant variant) -> OracleValue
    {
        OracleValue o;
        o.source = "sun-s-star-bound/" + to_string(variant);
        o.condition = "3 <= s+2 <= r <= floor((n+s-1)/2)";
        if (! sun_hypothesis(n, r, s))
            return o;

        int64_t R = r, S = s, T = t;
        bool pair_case = variant == SunBoundVariant::statement ? r == s + 2 : r == 3;
        int64_t both_ends = pair_case ? binomial(T, 2) : T * T;
        o.value = (R - S + 1) + 2 * T * (R - S) + both_ends * (R - S - 1);
        o.applicable = true;
        return o;
    }

    auto hm_cycle_size(unsigned n, unsigned r) -> OracleValue
    {
        OracleValue o;
        o.source = "cycle-hilton-milner";
        o.condition = "(n+3)/3 <= r <= n/2";
        if (3 * r < n + 3 || 2 * r > n)
            return o;
        o.value = 3 * int64_t{r} - int64_t{n};
        o.applicable = true;
        return o;
    }

    auto theta_f_branch(unsigned k, unsigned a1, unsigned r, int branch) -> int64_t
    {
        int64_t K = k, A = a1, R = r;
        if (branch == 1)
            return K + binomial(K, 2) * (R - 2);
        return (R - A - 2) * (K - 1) * (K - 1) + (A + 2) * (K - 1) + (R - 2) * binomial(K - 1, 2);
    }

    auto theta_f(unsigned k, unsigned a1, unsigned r, std::optional<unsigned> a2) -> OracleValue
    {
        OracleValue o;
        o.source = "theta-hub-star";
        if (r >= 3 && r <= a1 + 1) {
            o.condition = "3 <= r <= a1+1";
            o.value = theta_f_branch(k, a1, r, 1);
            o.applicable = true;
        }
        else if (r >= a1 + 2 && a2 && r + 1 <= *a2) {
            o.condition = "a1+2 <= r <= a2-1";
            o.value = theta_f_branch(k, a1, r, 2);
            o.applicable = true;
        }
        else if (r >= a1 + 2 && ! a2)
            o.condition = "second branch needs a2 for its range check";
        else
            o.condition = "r outside both branches";
        return o;
    }

    auto theta_interior_star_size(const vector<unsigned> & a, unsigned i, unsigned j, unsigned r) -> OracleValue
    {
        OracleValue o;
        o.source = "theta-interior-star";
        if (a.size() < 2 || i < 1 || i > a.size() || j < 1 || j >= a[i - 1]) {
            o.condition = "no such interior vertex";
            return o;
        }

        int64_t k = static_cast<int64_t>(a.size());
        int64_t ai = a[i - 1], a1 = a[0], a2 = a[1], R = r;
        // Measure from the nearer hub.
        int64_t jj = std::min<int64_t>(j, ai - j);

        if (R < 3)
            o.condition = "r < 3";
        else if (R <= jj + 1) {
            o.condition = "r <= j+1";
            o.value = R;
            o.applicable = true;
        }
        else if (R <= ai - jj + 1) {
            o.condition = "j+1 < r <= a_i-j+1";
            o.value = (R - jj - 1) * (k - 1) + (jj + 1);
            o.applicable = true;
        }
        else if (R <= a1 + 1) {
            o.condition = "a_i-j+1 < r <= a1+1";
            o.value = (2 * R - ai - 2) * (k - 1) + (ai + 2 - R);
            o.applicable = true;
        }
        else if (i == 1 && R >= a1 + 2 && 2 * R <= a1 + a2 + 1) {
            o.condition = "strand 1, a1+2 <= r <= (a1+a2+1)/2";
            o.value = (R - a1 - 2) * (k - 1) * (k - 1) + (a1 + 2) * (k - 1);
            o.applicable = true;
        }
        else
            o.condition = "no counting case applies";
        return o;
    }

    auto sun_allpaths_counts(unsigned n, unsigned t) -> SunAllPathsCounts
    {
        if (n < 3)
            throw InvalidParameter("sun needs n >= 3");
        int64_t N = n, T = t;
        int64_t lift = (T + 1) * (T + 1);
        int64_t single_lift = binomial(T + 1, 2) + 1;
        int64_t half = (N * N + N) / 2;

        SunAllPathsCounts c;
        c.total = N * single_lift + (N * N - N) * lift;
        c.star = single_lift + (half - 1) * lift;
        c.hm = half * lift;
        c.pendant_singletons = N * T;
        return c;
    }

    namespace
    {
        struct SunPathBuilder
        {
            unsigned n, t;
            vector<std::pair<ElementSet, string>> members;

            auto cyc(unsigned i) const -> Vertex { return sun_vertex(t, i % n, 0); }

            /// Cycle part v_start..v_{start+len-1} clockwise, optionally with a
            /// pendant j at the front and k at the back (0 for none).
            void add(unsigned start, unsigned len, unsigned j, unsigned k)
            {
                vector<Vertex> seq;
                if (j)
                    seq.push_back(sun_vertex(t, start % n, j));
                for (unsigned c = 0; c < len; ++c)
                    seq.push_back(cyc(start + c));
                if (k)
                    seq.push_back(sun_vertex(t, (start + len - 1) % n, k));
                auto p = canonical_path(std::move(seq));
                members.emplace_back(p.vset, p.label());
            }
        };

        /// Cycle paths of C_n as (start, length), length 1..n.
        auto cycle_intervals(unsigned n) -> vector<std::pair<unsigned, unsigned>>
        {
            vector<std::pair<unsigned, unsigned>> out;
            for (unsigned len = 1; len <= n; ++len)
                for (unsigned start = 0; start < n; ++start)
                    out.emplace_back(start, len);
            return out;
        }

        auto interval_contains(unsigned n, unsigned start, unsigned len, unsigned v) -> bool
        {
            return (v + n - start) % n < len;
        }
    }

    auto build_sun_star_family(unsigned n, unsigned t, unsigned r, unsigned s) -> SetFamily
    {
        if (n < 3 || ! sun_hypothesis(n, r, s))
            throw InvalidParameter("star construction needs 3 <= s+2 <= r <= floor((n+s-1)/2)");

        SunPathBuilder b{n, t, {}};
        // Each class is indexed by the first cycle vertex y of the path; the
        // cycle part must cover v_{r-s}..v_{r-1}.
        for (unsigned y = 0; y <= r - s; ++y)
            b.add(y, r, 0, 0);
        for (unsigned y = 1; y <= r - s; ++y)
            for (unsigned p = 1; p <= t; ++p) {
                b.add(y, r - 1, p, 0);
                b.add(y, r - 1, 0, p);
            }
        for (unsigned y = 2; y <= r - s; ++y)
            for (unsigned j = 1; j <= t; ++j)
                for (unsigned k = 1; k <= t; ++k) {
                    // With a one-vertex cycle part both pendants hang from the
                    // same vertex and must differ; the pair is unordered.
                    if (r == 3 && j >= k)
                        continue;
                    b.add(y, r - 2, j, k);
                }

        return SetFamily::with_labels(n * (t + 1), std::move(b.members),
            "F*(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(r) + "," + std::to_string(s) + ")");
    }

    auto build_cycle_hm_family(unsigned n, unsigned r, std::array<unsigned, 3> s) -> SetFamily
    {
        if (! hm_cycle_size(n, r).applicable)
            throw InvalidParameter("cycle HM construction needs (n+3)/3 <= r <= n/2");
        for (auto v : s)
            if (v >= n)
                throw InvalidParameter("S vertex outside the cycle");
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw InvalidParameter("S must have three distinct vertices");

        SunPathBuilder b{n, 0, {}};
        for (unsigned start = 0; start < n; ++start) {
            unsigned hits = 0;
            for (auto v : s)
                hits += interval_contains(n, start, r, v);
            if (hits == 2)
                b.add(start, r, 0, 0);
        }
        return SetFamily::with_labels(n, std::move(b.members), "HM(" + std::to_string(n) + "," + std::to_string(r) + ")");
    }

    auto build_sun_hm_family(unsigned n, unsigned t) -> SetFamily
    {
        if (n < 3)
            throw InvalidParameter("sun needs n >= 3");

        vector<std::pair<unsigned, unsigned>> image;
        for (auto [start, len] : cycle_intervals(n))
            if (interval_contains(n, start, len, 0) && len > 1)
                image.emplace_back(start, len);
        image.emplace_back(1, n - 1);

        SunPathBuilder b{n, t, {}};
        for (auto [start, len] : image)
            for (unsigned j = 0; j <= t; ++j)
                for (unsigned k = 0; k <= t; ++k)
                    b.add(start, len, j, k);

        return SetFamily::with_labels(n * (t + 1), std::move(b.members),
            "H*(" + std::to_string(n) + "," + std::to_string(t) + ")");
    }
}
