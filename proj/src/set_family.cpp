#include <ekrlab/set_family.hpp>
#include <ekrlab/errors.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_map>

using std::string;
using std::string_view;
using std::vector;

namespace ekrlab
{
    namespace
    {
        void check_ground(unsigned ground, const ElementSet & s)
        {
            if (ground > max_ground)
                throw InvalidParameter("ground set exceeds build capacity " + std::to_string(max_ground));
            auto top = s.last();
            if (top != ElementSet::capacity && top >= ground)
                throw InvalidParameter("member element " + std::to_string(top) + " outside ground set of size "
                    + std::to_string(ground));
        }

        /// Calls f on every s-subset of the elements, as a bit set.
        template <typename F>
        void for_each_subset(const vector<unsigned> & elems, unsigned s, F && f)
        {
            if (s > elems.size())
                return;
            vector<unsigned> idx(s);
            std::iota(idx.begin(), idx.end(), 0U);
            while (true) {
                ElementSet x;
                for (auto i : idx)
                    x.set(elems[i]);
                f(x);

                int pos = static_cast<int>(s) - 1;
                while (pos >= 0 && idx[pos] == elems.size() - s + pos)
                    --pos;
                if (pos < 0)
                    return;
                ++idx[pos];
                for (auto k = static_cast<unsigned>(pos) + 1; k < s; ++k)
                    idx[k] = idx[k - 1] + 1;
            }
        }
    }

    SetFamily::SetFamily(unsigned ground, vector<ElementSet> sets, string name) :
        _ground(ground),
        _sets(std::move(sets)),
        _name(std::move(name))
    {
        for (auto & s : _sets)
            check_ground(_ground, s);
        std::sort(_sets.begin(), _sets.end());
        _sets.erase(std::unique(_sets.begin(), _sets.end()), _sets.end());
    }

    auto SetFamily::with_labels(unsigned ground, vector<std::pair<ElementSet, string>> members, string name)
        -> SetFamily
    {
        SetFamily f;
        f._ground = ground;
        f._name = std::move(name);
        for (auto & [s, l] : members)
            check_ground(ground, s);
        std::sort(members.begin(), members.end());

        std::size_t repeated = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i > 0 && members[i].first == members[i - 1].first)
                ++repeated;
            f._sets.push_back(members[i].first);
            f._labels.push_back(std::move(members[i].second));
        }
        if (repeated)
            f._multiplicity_note = std::to_string(repeated) + " member(s) share a vertex set with an earlier member";
        return f;
    }

    auto SetFamily::label(std::size_t i) const -> string
    {
        if (_labels.empty())
            return format_set(_sets[i]);
        return _labels[i];
    }

    auto SetFamily::subfamily(const vector<unsigned> & indices, string name) const -> SetFamily
    {
        SetFamily f;
        f._ground = _ground;
        f._name = std::move(name);
        for (auto i : indices) {
            f._sets.push_back(_sets.at(i));
            if (! _labels.empty())
                f._labels.push_back(_labels[i]);
        }
        return f;
    }

    auto is_s_intersecting(const SetFamily & f, unsigned s) -> bool
    {
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b)
                if (f[a].intersection_count(f[b]) < s)
                    return false;
        return true;
    }

    auto is_exactly_s_intersecting(const SetFamily & f, unsigned s) -> bool
    {
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b)
                if (f[a].intersection_count(f[b]) != s)
                    return false;
        return true;
    }

    auto full_star(const SetFamily & f, const ElementSet & x) -> SetFamily
    {
        vector<unsigned> keep;
        for (unsigned i = 0; i < f.size(); ++i)
            if (x.subset_of(f[i]))
                keep.push_back(i);
        return f.subfamily(keep, f.name() + " star " + format_set(x));
    }

    auto stats(const SetFamily & f, unsigned s_max) -> FamilyStats
    {
        if (s_max < 1)
            throw InvalidParameter("stats needs s_max >= 1");

        FamilyStats st;
        st.m = f.size();
        st.delta_s.assign(s_max + 1, 0);
        if (f.empty())
            return st;

        st.min_size = f[0].count();
        ElementSet common = f[0];
        for (auto & a : f) {
            st.min_size = std::min(st.min_size, a.count());
            common &= a;
        }
        st.common = common;

        for (unsigned s = 1; s <= s_max; ++s)
            st.delta_s[s] = best_star(f, s).size;
        st.delta = st.delta_s[1];
        return st;
    }

    auto best_star(const SetFamily & f, unsigned s) -> StarCenter
    {
        StarCenter best;
        if (s == 0) {
            best.size = static_cast<unsigned>(f.size());
            return best;
        }

        std::unordered_map<ElementSet, unsigned, ElementSetHash> counts;
        for (auto & a : f)
            for_each_subset(a.elements(), s, [&](const ElementSet & x) { ++counts[x]; });

        bool found = false;
        for (auto & [x, c] : counts)
            if (! found || c > best.size || (c == best.size && x < best.center)) {
                best.size = c;
                best.center = x;
                found = true;
            }
        return best;
    }

    auto is_triangular(const SetFamily & f) -> bool
    {
        if (f.size() < 3)
            return true;
        // Some element lies in three members exactly when a triple shares it.
        return best_star(f, 1).size <= 2;
    }

    auto is_sperner(const SetFamily & f) -> bool
    {
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = 0; b < f.size(); ++b)
                if (a != b && f[a].subset_of(f[b]))
                    return false;
        return true;
    }

    auto is_s_star(const SetFamily & f, unsigned s) -> StarCheck
    {
        StarCheck r;
        if (f.empty()) {
            r.empty_family = true;
            return r;
        }
        r.common = f[0];
        for (auto & a : f)
            r.common &= a;
        r.is_star = r.common.count() >= s;
        return r;
    }

    auto format_set(const ElementSet & s) -> string
    {
        string out;
        s.for_each([&](unsigned e) {
            if (! out.empty())
                out += ' ';
            out += std::to_string(e);
        });
        return out;
    }

    auto emit_family(const SetFamily & f) -> string
    {
        std::ostringstream out;
        out << "# ground=" << f.ground() << " count=" << f.size() << '\n';
        for (auto & a : f)
            out << format_set(a) << '\n';
        return out.str();
    }

    auto parse_family(string_view text) -> SetFamily
    {
        vector<string_view> lines;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == string_view::npos)
                nl = text.size();
            lines.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
        if (lines.empty())
            throw ParseError(1, "missing family header");

        unsigned ground = 0, count = 0;
        {
            string header(lines[0]);
            if (std::sscanf(header.c_str(), "# ground=%u count=%u", &ground, &count) != 2)
                throw ParseError(1, "header must be '# ground=n count=m'");
        }
        // Member lines keep their 1-based line numbers; '#' lines are comments.
        vector<std::pair<int, string_view>> body;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            auto first = lines[k].find_first_not_of(" \t\r");
            if (first != string_view::npos && lines[k][first] == '#')
                continue;
            body.emplace_back(static_cast<int>(k) + 1, lines[k]);
        }
        if (body.size() < count)
            throw ParseError(static_cast<int>(lines.size()), "fewer member lines than count");
        for (std::size_t k = count; k < body.size(); ++k)
            if (body[k].second.find_first_not_of(" \t\r") != string_view::npos)
                throw ParseError(body[k].first, "more member lines than count");

        vector<ElementSet> sets;
        for (unsigned k = 0; k < count; ++k) {
            int line_no = body[k].first;
            ElementSet s;
            std::istringstream in{string(body[k].second)};
            string tok;
            while (in >> tok) {
                unsigned e = 0;
                auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
                if (ec != std::errc{} || p != tok.data() + tok.size())
                    throw ParseError(line_no, "bad element '" + tok + "'");
                if (e >= ground)
                    throw ParseError(line_no, "element " + tok + " outside ground set");
                s.set(e);
            }
            sets.push_back(s);
        }
        return SetFamily(ground, std::move(sets));
    }
}
