#pragma once

#include <ekrlab/set_family.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ekrlab
{
    /// A closed-form expectation. When applicable is false the hypothesis of
    /// the formula fails and value carries no meaning.
    struct OracleValue
    {
        std::int64_t value = 0;
        bool applicable = false;
        std::string condition;
        std::string source;
    };

    /// Which r triggers the unordered pendant-pair coefficient binom(t,2) in
    /// the sun bound: every r = s+2, or only r = 3 where a path's cycle part
    /// is a single vertex.
    enum class SunBoundVariant
    {
        statement,
        construction
    };

    auto to_string(SunBoundVariant v) -> std::string;

    auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t;

    /// Maximum s-intersecting family of r-vertex paths in S_n^t, valid for
    /// 3 <= s+2 <= r <= floor((n+s-1)/2).
    auto sun_bound(unsigned n, unsigned t, unsigned r, unsigned s,
        SunBoundVariant variant = SunBoundVariant::statement) -> OracleValue;

    /// Largest non-star intersecting family of r-paths in C_n, valid for
    /// (n+3)/3 <= r <= n/2.
    auto hm_cycle_size(unsigned n, unsigned r) -> OracleValue;

    /// Hub star size f_k(r) on a theta graph with shortest strands a1 <= a2.
    /// The second branch needs a2 for its range check.
    auto theta_f(unsigned k, unsigned a1, unsigned r, std::optional<unsigned> a2 = std::nullopt) -> OracleValue;

    /// Raw evaluation of one branch of f_k(r), ignoring its range.
    auto theta_f_branch(unsigned k, unsigned a1, unsigned r, int branch) -> std::int64_t;

    /// Number of r-paths through interior vertex w_{i,j} (strand i is 1-based),
    /// dispatched over the four counting cases for a vertex at distance j from
    /// its nearer hub.
    auto theta_interior_star_size(const std::vector<unsigned> & a, unsigned i, unsigned j, unsigned r)
        -> OracleValue;

    struct SunAllPathsCounts
    {
        /// Paths with a non-empty cycle part, summed over lifts.
        std::int64_t total = 0;
        /// Best star: all paths through one cycle vertex.
        std::int64_t star = 0;
        /// Lifted non-star family.
        std::int64_t hm = 0;
        /// Lone pendant vertices, which have an empty cycle part.
        std::int64_t pendant_singletons = 0;
    };

    auto sun_allpaths_counts(unsigned n, unsigned t) -> SunAllPathsCounts;

    /// The extremal s-star of r-paths in S_n^t centred on cycle vertices
    /// v_{r-s}..v_{r-1}, assembled class by class from pendant choices at
    /// each end.
    auto build_sun_star_family(unsigned n, unsigned t, unsigned r, unsigned s) -> SetFamily;

    /// r-paths of C_n meeting the 3-set S in exactly two vertices.
    auto build_cycle_hm_family(unsigned n, unsigned r, std::array<unsigned, 3> s) -> SetFamily;

    /// Lift to S_n^t of the cycle family obtained from the star at v_0 by
    /// swapping the singleton v_0 for its complement path.
    auto build_sun_hm_family(unsigned n, unsigned t) -> SetFamily;
}
