#pragma once

#include <ekrlab/set_family.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ekrlab
{
    /// Element of GF(p^k) as coefficients c_0..c_{k-1} of a polynomial in the
    /// field generator, lowest degree first.
    struct FieldElement
    {
        std::vector<unsigned> coeffs;

        friend auto operator==(const FieldElement &, const FieldElement &) -> bool = default;
    };

    /// GF(p^k) realised as GF(p)[x] modulo a monic irreducible of degree k.
    class FiniteField
    {
    public:
        [[nodiscard]] auto p() const -> unsigned { return _p; }
        [[nodiscard]] auto k() const -> unsigned { return _k; }
        [[nodiscard]] auto q() const -> unsigned { return _q; }
        /// Monic modulus coefficients, lowest degree first, length k+1.
        [[nodiscard]] auto modulus() const -> const std::vector<unsigned> & { return _modulus; }

        /// Elements are numbered by their base-p digits: code = sum c_i p^i.
        [[nodiscard]] auto element(unsigned code) const -> FieldElement;
        [[nodiscard]] auto code(const FieldElement & e) const -> unsigned;

        [[nodiscard]] auto zero() const -> FieldElement;
        [[nodiscard]] auto one() const -> FieldElement;

        [[nodiscard]] auto add(const FieldElement & a, const FieldElement & b) const -> FieldElement;
        [[nodiscard]] auto neg(const FieldElement & a) const -> FieldElement;
        [[nodiscard]] auto sub(const FieldElement & a, const FieldElement & b) const -> FieldElement;
        [[nodiscard]] auto mul(const FieldElement & a, const FieldElement & b) const -> FieldElement;
        [[nodiscard]] auto pow(FieldElement a, unsigned long long e) const -> FieldElement;
        /// Throws DivisionByZero for zero.
        [[nodiscard]] auto inv(const FieldElement & a) const -> FieldElement;
        [[nodiscard]] auto div(const FieldElement & a, const FieldElement & b) const -> FieldElement;

        /// Unique square root in characteristic 2, x^(2^(k-1)).
        [[nodiscard]] auto sqrt_char2(const FieldElement & x) const -> FieldElement;

        /// Integer-code shortcuts for table-free indexing.
        [[nodiscard]] auto add(unsigned a, unsigned b) const -> unsigned { return code(add(element(a), element(b))); }
        [[nodiscard]] auto mul(unsigned a, unsigned b) const -> unsigned { return code(mul(element(a), element(b))); }

        friend auto make_field(unsigned p, unsigned k) -> FiniteField;

    private:
        FiniteField() = default;
        unsigned _p = 0, _k = 0, _q = 0;
        std::vector<unsigned> _modulus;
    };

    /// Field with the lexicographically first monic irreducible modulus, with
    /// coefficient vectors compared lowest degree first. Needs p prime and
    /// p^k <= 512.
    auto make_field(unsigned p, unsigned k) -> FiniteField;

    auto is_prime(unsigned n) -> bool;

    /// Brute-force irreducibility over GF(p): no monic factor of degree 1..deg/2.
    auto is_irreducible(const std::vector<unsigned> & poly, unsigned p) -> bool;

    /// A point or line index in (F_q u {w}) x F_q plus (w,w); nullopt is w.
    struct PGIndex
    {
        std::optional<unsigned> x;
        std::optional<unsigned> y;

        friend auto operator==(const PGIndex &, const PGIndex &) -> bool = default;
    };

    auto to_string(const PGIndex & a) -> std::string;

    /// PG(q) with points and lines both indexed by PGIndex and packed densely:
    /// (x,y) -> x*q + y, (w,y) -> q^2 + y, (w,w) -> q^2 + q.
    class ProjectivePlane
    {
    public:
        explicit ProjectivePlane(FiniteField field);

        [[nodiscard]] auto field() const -> const FiniteField & { return _field; }
        [[nodiscard]] auto q() const -> unsigned { return _field.q(); }
        [[nodiscard]] auto order() const -> unsigned { return q() * q() + q() + 1; }

        [[nodiscard]] auto dense_id(const PGIndex & a) const -> unsigned;
        [[nodiscard]] auto index_of(unsigned id) const -> PGIndex;

        /// Points of line L_alpha.
        [[nodiscard]] auto line(const PGIndex & alpha) const -> const ElementSet &;

        /// All lines as a family labelled by index.
        [[nodiscard]] auto lines() const -> SetFamily;

        /// Given lines as a family labelled by index.
        [[nodiscard]] auto family_of(const std::vector<PGIndex> & alphas, std::string name) const -> SetFamily;

        /// "dense-id x y" per point, w for the extra symbol.
        [[nodiscard]] auto emit_index_map() const -> std::string;

    private:
        FiniteField _field;
        std::vector<ElementSet> _lines;
    };

    auto build_pg(const FiniteField & field) -> ProjectivePlane;

    /// q+1 lines, pairwise meeting, no point on three: L(w,w), L(w,0), L(0,0)
    /// and L(m_b, b) with m_b = -b/(1-b) for b outside {0,1}. Needs q odd.
    auto triangular_odd(const ProjectivePlane & pg) -> SetFamily;

    /// The same lines plus L(1,1), q+2 in total. Needs characteristic 2.
    auto triangular_char2(const ProjectivePlane & pg) -> SetFamily;

    /// The h cyclic shifts of S in Z_h, merged when S is periodic.
    auto rotational_family(unsigned h, const std::vector<unsigned> & s) -> SetFamily;
}
