#include <ekrlab/projective.hpp>
#include <ekrlab/errors.hpp>

#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace ekrlab
{
    namespace
    {
        using Poly = vector<unsigned>;

        void trim(Poly & a)
        {
            while (! a.empty() && a.back() == 0)
                a.pop_back();
        }

        auto mod_inverse(unsigned a, unsigned p) -> unsigned
        {
            // p is prime and small; Fermat.
            unsigned long long r = 1, b = a % p;
            for (unsigned e = p - 2; e; e >>= 1) {
                if (e & 1)
                    r = r * b % p;
                b = b * b % p;
            }
            return static_cast<unsigned>(r);
        }

        /// Remainder of a modulo a non-zero polynomial m over GF(p).
        auto poly_mod(Poly a, const Poly & m, unsigned p) -> Poly
        {
            trim(a);
            auto lead_inv = mod_inverse(m.back(), p);
            while (a.size() >= m.size()) {
                unsigned factor = static_cast<unsigned>(1ULL * a.back() * lead_inv % p);
                auto shift = a.size() - m.size();
                for (std::size_t i = 0; i < m.size(); ++i)
                    a[shift + i] = static_cast<unsigned>((a[shift + i] + 1ULL * (p - factor) * m[i]) % p);
                trim(a);
            }
            return a;
        }

        /// Monic polynomial of degree d whose lower coefficients are the
        /// base-p digits of code, most significant digit first on c_0.
        auto monic_from_lex_code(unsigned long long code, unsigned d, unsigned p) -> Poly
        {
            Poly f(d + 1, 0);
            f[d] = 1;
            for (unsigned i = d; i-- > 0;) {
                f[i] = static_cast<unsigned>(code % p);
                code /= p;
            }
            return f;
        }

        auto ipow(unsigned long long b, unsigned e) -> unsigned long long
        {
            unsigned long long r = 1;
            while (e--)
                r *= b;
            return r;
        }
    }

    auto is_prime(unsigned n) -> bool
    {
        if (n < 2)
            return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    auto is_irreducible(const vector<unsigned> & poly, unsigned p) -> bool
    {
        Poly f = poly;
        trim(f);
        if (f.size() < 2)
            return false;
        auto deg = static_cast<unsigned>(f.size() - 1);
        for (unsigned d = 1; d <= deg / 2; ++d)
            for (unsigned long long code = 0; code < ipow(p, d); ++code)
                if (poly_mod(f, monic_from_lex_code(code, d, p), p).empty())
                    return false;
        return true;
    }

    auto make_field(unsigned p, unsigned k) -> FiniteField
    {
        if (! is_prime(p))
            throw InvalidParameter("field characteristic " + std::to_string(p) + " is not prime");
        if (k < 1)
            throw InvalidParameter("extension degree must be >= 1");
        if (ipow(p, k) > 512)
            throw InvalidParameter("field order above 512");

        FiniteField f;
        f._p = p;
        f._k = k;
        f._q = static_cast<unsigned>(ipow(p, k));

        // Lexicographic order with c_0 compared first: c_0 is the most
        // significant digit of the search counter.
        for (unsigned long long code = 0; code < ipow(p, k); ++code) {
            auto candidate = monic_from_lex_code(code, k, p);
            if (is_irreducible(candidate, p)) {
                f._modulus = candidate;
                return f;
            }
        }
        throw InvalidParameter("no irreducible polynomial found");
    }

    auto FiniteField::element(unsigned code) const -> FieldElement
    {
        FieldElement e;
        e.coeffs.assign(_k, 0);
        for (unsigned i = 0; i < _k; ++i) {
            e.coeffs[i] = code % _p;
            code /= _p;
        }
        return e;
    }

    auto FiniteField::code(const FieldElement & e) const -> unsigned
    {
        unsigned c = 0;
        for (unsigned i = _k; i-- > 0;)
            c = c * _p + e.coeffs[i];
        return c;
    }

    auto FiniteField::zero() const -> FieldElement { return element(0); }
    auto FiniteField::one() const -> FieldElement { return element(1); }

    auto FiniteField::add(const FieldElement & a, const FieldElement & b) const -> FieldElement
    {
        FieldElement r;
        r.coeffs.resize(_k);
        for (unsigned i = 0; i < _k; ++i)
            r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % _p;
        return r;
    }

    auto FiniteField::neg(const FieldElement & a) const -> FieldElement
    {
        FieldElement r;
        r.coeffs.resize(_k);
        for (unsigned i = 0; i < _k; ++i)
            r.coeffs[i] = (_p - a.coeffs[i]) % _p;
        return r;
    }

    auto FiniteField::sub(const FieldElement & a, const FieldElement & b) const -> FieldElement
    {
        return add(a, neg(b));
    }

    auto FiniteField::mul(const FieldElement & a, const FieldElement & b) const -> FieldElement
    {
        Poly prod(2 * _k, 0);
        for (unsigned i = 0; i < _k; ++i)
            for (unsigned j = 0; j < _k; ++j)
                prod[i + j] = static_cast<unsigned>((prod[i + j] + 1ULL * a.coeffs[i] * b.coeffs[j]) % _p);
        auto rem = poly_mod(std::move(prod), _modulus, _p);
        FieldElement r;
        r.coeffs.assign(_k, 0);
        for (std::size_t i = 0; i < rem.size(); ++i)
            r.coeffs[i] = rem[i];
        return r;
    }

    auto FiniteField::pow(FieldElement a, unsigned long long e) const -> FieldElement
    {
        auto r = one();
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    auto FiniteField::inv(const FieldElement & a) const -> FieldElement
    {
        if (a == zero())
            throw DivisionByZero();
        return pow(a, _q - 2);
    }

    auto FiniteField::div(const FieldElement & a, const FieldElement & b) const -> FieldElement
    {
        return mul(a, inv(b));
    }

    auto FiniteField::sqrt_char2(const FieldElement & x) const -> FieldElement
    {
        if (_p != 2)
            throw InvalidParameter("square roots are unique only in characteristic 2");
        auto r = x;
        for (unsigned i = 1; i < _k; ++i)
            r = mul(r, r);
        return r;
    }

    auto to_string(const PGIndex & a) -> string
    {
        auto part = [](const optional<unsigned> & c) { return c ? std::to_string(*c) : string("w"); };
        return "(" + part(a.x) + "," + part(a.y) + ")";
    }

    ProjectivePlane::ProjectivePlane(FiniteField field) :
        _field(std::move(field))
    {
        auto qq = q();
        if (qq > 23)
            throw InvalidParameter("projective planes are limited to q <= 23");
        _lines.resize(order());

        for (unsigned m = 0; m < qq; ++m)
            for (unsigned b = 0; b < qq; ++b) {
                ElementSet pts;
                for (unsigned x = 0; x < qq; ++x)
                    pts.set(dense_id({x, _field.add(_field.mul(m, x), b)}));
                pts.set(dense_id({std::nullopt, m}));
                _lines[dense_id({m, b})] = pts;
            }
        for (unsigned b = 0; b < qq; ++b) {
            ElementSet pts;
            for (unsigned y = 0; y < qq; ++y)
                pts.set(dense_id({b, y}));
            pts.set(dense_id({std::nullopt, std::nullopt}));
            _lines[dense_id({std::nullopt, b})] = pts;
        }
        ElementSet infinity;
        for (unsigned y = 0; y < qq; ++y)
            infinity.set(dense_id({std::nullopt, y}));
        infinity.set(dense_id({std::nullopt, std::nullopt}));
        _lines[dense_id({std::nullopt, std::nullopt})] = infinity;
    }

    auto ProjectivePlane::dense_id(const PGIndex & a) const -> unsigned
    {
        auto qq = q();
        if (a.x && a.y)
            return *a.x * qq + *a.y;
        if (! a.x && a.y)
            return qq * qq + *a.y;
        if (! a.x && ! a.y)
            return qq * qq + qq;
        throw InvalidParameter("index (x, w) is not a point");
    }

    auto ProjectivePlane::index_of(unsigned id) const -> PGIndex
    {
        auto qq = q();
        if (id < qq * qq)
            return {id / qq, id % qq};
        if (id < qq * qq + qq)
            return {std::nullopt, id - qq * qq};
        if (id == qq * qq + qq)
            return {std::nullopt, std::nullopt};
        throw InvalidParameter("dense id out of range");
    }

    auto ProjectivePlane::line(const PGIndex & alpha) const -> const ElementSet &
    {
        return _lines.at(dense_id(alpha));
    }

    auto ProjectivePlane::lines() const -> SetFamily
    {
        vector<PGIndex> all;
        for (unsigned id = 0; id < order(); ++id)
            all.push_back(index_of(id));
        return family_of(all, "PG(" + std::to_string(q()) + ")");
    }

    auto ProjectivePlane::family_of(const vector<PGIndex> & alphas, string name) const -> SetFamily
    {
        vector<std::pair<ElementSet, string>> members;
        for (auto & a : alphas)
            members.emplace_back(line(a), "L" + to_string(a));
        return SetFamily::with_labels(order(), std::move(members), std::move(name));
    }

    auto ProjectivePlane::emit_index_map() const -> string
    {
        std::ostringstream out;
        out << "# dense-id x y (q=" << q() << ")\n";
        for (unsigned id = 0; id < order(); ++id) {
            auto a = index_of(id);
            out << id << ' ' << (a.x ? std::to_string(*a.x) : "w") << ' ' << (a.y ? std::to_string(*a.y) : "w") << '\n';
        }
        return out.str();
    }

    auto build_pg(const FiniteField & field) -> ProjectivePlane
    {
        return ProjectivePlane(field);
    }

    namespace
    {
        auto base_triangular_lines(const ProjectivePlane & pg) -> vector<PGIndex>
        {
            auto & f = pg.field();
            vector<PGIndex> alphas{{std::nullopt, std::nullopt}, {std::nullopt, 0U}, {0U, 0U}};
            for (unsigned b = 2; b < pg.q(); ++b) {
                auto eb = f.element(b);
                auto m = f.div(f.neg(eb), f.sub(f.one(), eb));
                alphas.push_back({f.code(m), b});
            }
            return alphas;
        }
    }

    auto triangular_odd(const ProjectivePlane & pg) -> SetFamily
    {
        if (pg.q() % 2 == 0)
            throw InvalidParameter("odd-order construction needs q odd");
        return pg.family_of(base_triangular_lines(pg), "T_odd(" + std::to_string(pg.q()) + ")");
    }

    auto triangular_char2(const ProjectivePlane & pg) -> SetFamily
    {
        if (pg.field().p() != 2)
            throw InvalidParameter("characteristic-2 construction needs p = 2");
        auto alphas = base_triangular_lines(pg);
        alphas.push_back({1U, 1U});
        return pg.family_of(alphas, "T_char2(" + std::to_string(pg.q()) + ")");
    }

    auto rotational_family(unsigned h, const vector<unsigned> & s) -> SetFamily
    {
        if (h < 2)
            throw InvalidParameter("rotations need h >= 2");
        if (s.empty())
            throw InvalidParameter("rotated set must be non-empty");
        for (auto e : s)
            if (e >= h)
                throw InvalidParameter("element outside Z_h");

        vector<ElementSet> sets;
        for (unsigned i = 0; i < h; ++i) {
            ElementSet shifted;
            for (auto e : s)
                shifted.set((e + i) % h);
            sets.push_back(shifted);
        }
        return SetFamily(h, std::move(sets), "R_" + std::to_string(h));
    }
}
