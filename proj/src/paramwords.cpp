#include <eoram/paramwords.hpp>
#include <eoram/error.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

using std::pair;
using std::string;
using std::to_string;
using std::uint32_t;
using std::vector;

namespace eoram
{
    ParameterWord::ParameterWord(vector<string> alphabet, int t, vector<Symbol> symbols) :
        _alphabet(std::move(alphabet)),
        _t(t),
        _symbols(std::move(symbols))
    {
        if (t < 0)
            raise(ErrorKind::InvalidArgument, "parameter count must be non-negative");
        std::set<string> letters(_alphabet.begin(), _alphabet.end());
        if (letters.size() != _alphabet.size())
            raise(ErrorKind::InvalidArgument, "alphabet letters must be distinct");
        for (const auto & a : _alphabet)
            if (a.empty() || a[0] == 'L')
                raise(ErrorKind::InvalidArgument, "alphabet letter '" + a + "' clashes with parameter names");

        int next = 1;
        for (const auto & s : _symbols) {
            if (! s.parameter) {
                if (s.index < 0 || s.index >= static_cast<int>(_alphabet.size()))
                    raise(ErrorKind::InvalidArgument, "letter index out of range");
                continue;
            }
            if (s.index < 1 || s.index > t)
                raise(ErrorKind::InvalidArgument, "parameter L" + std::to_string(s.index) + " out of range");
            if (s.index > next)
                raise(ErrorKind::InvalidArgument, "L" + std::to_string(s.index) + " occurs before L" + std::to_string(next));
            if (s.index == next)
                ++next;
        }
        if (next != t + 1)
            raise(ErrorKind::InvalidArgument, "parameter L" + std::to_string(next) + " does not occur");
    }

    auto ParameterWord::identity(int t) -> ParameterWord
    {
        vector<Symbol> symbols;
        for (int j = 1 ; j <= t ; ++j)
            symbols.push_back(Symbol::lambda(j));
        return ParameterWord({"0"}, t, std::move(symbols));
    }

    auto ParameterWord::parse(vector<string> alphabet, int t, const vector<string> & tokens) -> ParameterWord
    {
        vector<Symbol> symbols;
        for (const auto & token : tokens) {
            if (! token.empty() && token[0] == 'L') {
                try {
                    std::size_t used = 0;
                    int j = std::stoi(token.substr(1), &used);
                    if (used + 1 != token.size())
                        throw std::invalid_argument(token);
                    symbols.push_back(Symbol::lambda(j));
                    continue;
                }
                catch (const std::logic_error &) {
                    raise(ErrorKind::InvalidArgument, "bad parameter token '" + token + "'");
                }
            }
            auto it = std::find(alphabet.begin(), alphabet.end(), token);
            if (it == alphabet.end())
                raise(ErrorKind::InvalidArgument, "unknown letter '" + token + "'");
            symbols.push_back(Symbol::letter(static_cast<int>(it - alphabet.begin())));
        }
        return ParameterWord(std::move(alphabet), t, std::move(symbols));
    }

    auto ParameterWord::blocks() const -> vector<Subset>
    {
        vector<Subset> result(_t);
        for (int i = 0 ; i < length() ; ++i)
            if (_symbols[i].parameter)
                result[_symbols[i].index - 1].push_back(i + 1);
        return result;
    }

    auto ParameterWord::tokens() const -> vector<string>
    {
        vector<string> result;
        for (const auto & s : _symbols)
            result.push_back(s.parameter ? "L" + std::to_string(s.index) : _alphabet[s.index]);
        return result;
    }

    auto ParameterWord::to_string() const -> string
    {
        string result;
        for (const auto & token : tokens()) {
            if (! result.empty())
                result += ' ';
            result += token;
        }
        return result;
    }

    auto compose(const ParameterWord & f, const ParameterWord & g) -> ParameterWord
    {
        if (g.length() != f.parameters())
            raise(ErrorKind::DimensionMismatch, "inner word has length " + to_string(g.length())
                    + " but the outer word has " + to_string(f.parameters()) + " parameters");
        if (f.alphabet() != g.alphabet())
            raise(ErrorKind::InvalidArgument, "words use different alphabets");

        vector<Symbol> symbols;
        for (const auto & s : f.symbols())
            symbols.push_back(s.parameter ? g.at(s.index) : s);
        return ParameterWord(f.alphabet(), g.parameters(), std::move(symbols));
    }

    namespace
    {
        auto alphabet_of_size(int size) -> vector<string>
        {
            vector<string> alphabet;
            for (int a = 0 ; a < size ; ++a)
                alphabet.push_back(to_string(a));
            return alphabet;
        }

        /// Calls fn on the symbol sequence of every t-parameter word, in enumeration order.
        template <typename Fn>
        auto for_each_word(int length, int t, int alphabet_size, const Fn & fn) -> void
        {
            if (length < 0 || t < 0 || alphabet_size < 0)
                raise(ErrorKind::InvalidArgument, "word dimensions must be non-negative");
            if (length > max_enumerated_length)
                raise(ErrorKind::LimitExceeded, "word enumeration limited to length " + to_string(max_enumerated_length));

            vector<Symbol> symbols(length);
            auto extend = [&] (auto & self, int position, int used) -> void {
                if (length - position < t - used)
                    return;
                if (position == length) {
                    fn(symbols);
                    return;
                }
                for (int a = 0 ; a < alphabet_size ; ++a) {
                    symbols[position] = Symbol::letter(a);
                    self(self, position + 1, used);
                }
                for (int j = 1 ; j <= std::min(used + 1, t) ; ++j) {
                    symbols[position] = Symbol::lambda(j);
                    self(self, position + 1, std::max(used, j));
                }
            };
            extend(extend, 0, 0);
        }

        auto minimum(uint32_t mask) -> int
        {
            return std::countr_zero(mask) + 1;
        }

        auto positions(const BiOrderedGraph & f) -> vector<int>
        {
            int n = f.n();
            if (static_cast<int>(f.vertex_rank.size()) != n)
                raise(ErrorKind::InvalidArgument, "vertex order has the wrong length");
            vector<int> seen(n, 0);
            vector<int> position(n);
            for (int v = 0 ; v < n ; ++v) {
                int r = f.vertex_rank[v];
                if (r < 0 || r >= n || seen[r]++)
                    raise(ErrorKind::InvalidArgument, "vertex order is not a permutation");
                position[v] = r + 1;
            }
            return position;
        }

        auto set_union(const Subset & a, const Subset & b) -> Subset
        {
            Subset result;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
            return result;
        }

        auto set_difference(const Subset & a, const Subset & b) -> Subset
        {
            Subset result;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
            return result;
        }
    }

    auto enumerate_words(int length, int t, int alphabet_size) -> vector<ParameterWord>
    {
        auto alphabet = alphabet_of_size(alphabet_size);
        vector<ParameterWord> words;
        for_each_word(length, t, alphabet_size, [&] (const vector<Symbol> & symbols) {
            words.emplace_back(alphabet, t, symbols);
        });
        return words;
    }

    auto word_to_edge(const ParameterWord & w) -> pair<Subset, Subset>
    {
        if (w.parameters() != 3)
            raise(ErrorKind::DimensionMismatch, "edge words have exactly 3 parameters");
        auto s = w.blocks();
        return {set_union(s[0], s[2]), set_union(s[1], s[2])};
    }

    SubsetHost::SubsetHost(int ground) :
        _ground(ground)
    {
        if (ground < 0)
            raise(ErrorKind::InvalidArgument, "ground set size must be non-negative");
        if (ground > max_subset_ground)
            raise(ErrorKind::LimitExceeded, "subset host limited to N <= " + to_string(max_subset_ground));

        uint32_t count = uint32_t{1} << ground;
        vector<Subset> elements(count);
        for (uint32_t x = 0 ; x < count ; ++x)
            elements[x] = subset(x);

        _by_vrank.resize(count);
        for (uint32_t x = 0 ; x < count ; ++x)
            _by_vrank[x] = x;
        std::sort(_by_vrank.begin(), _by_vrank.end(), [&] (uint32_t a, uint32_t b) {
            if (a == 0 || b == 0)
                return b == 0 && a != 0;
            return elements[a] < elements[b];
        });
        _vrank.resize(count);
        for (uint32_t r = 0 ; r < count ; ++r)
            _vrank[_by_vrank[r]] = static_cast<int>(r);

        vector<vector<pair<uint32_t, uint32_t>>> buckets(ground);
        for (uint32_t a = 0 ; a < count ; ++a)
            for (uint32_t b = a + 1 ; b < count ; ++b) {
                uint32_t x = _by_vrank[a], y = _by_vrank[b];
                if (x & y)
                    buckets[minimum(x & y) - 1].emplace_back(x, y);
            }
        for (auto & bucket : buckets) {
            _edges.insert(_edges.end(), bucket.begin(), bucket.end());
            bucket = {};
        }
    }

    auto SubsetHost::mask(const Subset & x) const -> uint32_t
    {
        uint32_t result = 0;
        for (int p : x) {
            if (p < 1 || p > _ground)
                raise(ErrorKind::InvalidArgument, "position " + to_string(p) + " outside [" + to_string(_ground) + "]");
            result |= uint32_t{1} << (p - 1);
        }
        return result;
    }

    auto SubsetHost::subset(uint32_t mask) const -> Subset
    {
        Subset result;
        for (int p = 1 ; p <= _ground ; ++p)
            if (mask >> (p - 1) & 1)
                result.push_back(p);
        return result;
    }

    auto SubsetHost::vertex_rank(const Subset & x) const -> int
    {
        return _vrank[mask(x)];
    }

    auto SubsetHost::vertex_at(int rank) const -> Subset
    {
        return subset(_by_vrank.at(rank));
    }

    auto SubsetHost::edge(int index) const -> pair<Subset, Subset>
    {
        auto [x, y] = _edges.at(index);
        return {subset(x), subset(y)};
    }

    auto SubsetHost::edge_key(uint32_t x, uint32_t y) const -> std::tuple<int, int, int>
    {
        int a = _vrank[x], b = _vrank[y];
        return {minimum(x & y), std::min(a, b), std::max(a, b)};
    }

    auto SubsetHost::edge_index(const Subset & x, const Subset & y) const -> int
    {
        uint32_t a = mask(x), b = mask(y);
        if (a == b || (a & b) == 0)
            return -1;
        auto key = edge_key(a, b);
        auto it = std::lower_bound(_edges.begin(), _edges.end(), key, [&] (const auto & e, const auto & k) {
            return edge_key(e.first, e.second) < k;
        });
        if (it == _edges.end() || edge_key(it->first, it->second) != key)
            return -1;
        return static_cast<int>(it - _edges.begin());
    }

    auto subset_coloring(const SubsetHost & host, const std::function<int (const Subset &, const Subset &)> & color, int k) -> Coloring
    {
        vector<int> colors(host.edge_count());
        for (int e = 0 ; e < host.edge_count() ; ++e) {
            auto [x, y] = host.edge(e);
            colors[e] = color(x, y);
        }
        return Coloring(k, std::move(colors));
    }

    auto parity_coloring(const SubsetHost & host) -> Coloring
    {
        return subset_coloring(host, [] (const Subset & x, const Subset & y) {
            Subset common;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
            return common.front() % 2 == 0 ? 0 : 1;
        });
    }

    auto translate_color(const SubsetHost & host, const Coloring & chi, const ParameterWord & w) -> int
    {
        if (w.length() != host.ground())
            raise(ErrorKind::DimensionMismatch, "word length differs from the ground set size");
        if (chi.size() != host.edge_count())
            raise(ErrorKind::DimensionMismatch, "colouring does not cover the subset host");
        auto [x, y] = word_to_edge(w);
        int e = host.edge_index(x, y);
        if (e < 0)
            throw std::logic_error("word does not map to a host edge");
        return chi[e];
    }

    auto translate_coloring(const SubsetHost & host, const Coloring & chi) -> WordColoring
    {
        WordColoring result;
        result.words = enumerate_words(host.ground(), 3, 1);
        for (const auto & w : result.words)
            result.colors.push_back(translate_color(host, chi, w));
        return result;
    }

    auto BiOrderedGraph::natural(EdgeOrderedGraph g) -> BiOrderedGraph
    {
        vector<int> rank(g.n());
        for (int v = 0 ; v < g.n() ; ++v)
            rank[v] = v;
        return {std::move(g), std::move(rank)};
    }

    auto BiOrderedGraph::vertex(int i) const -> int
    {
        auto it = std::find(vertex_rank.begin(), vertex_rank.end(), i - 1);
        if (it == vertex_rank.end())
            raise(ErrorKind::InvalidArgument, "no vertex at position " + to_string(i));
        return static_cast<int>(it - vertex_rank.begin());
    }

    auto BiOrderedGraph::edge_positions(int l) const -> pair<int, int>
    {
        if (l < 1 || l > m())
            raise(ErrorKind::InvalidArgument, "edge position " + to_string(l) + " out of range");
        auto position = positions(*this);
        const auto & e = graph.graph().edge(graph.edge_at_rank(l - 1));
        int a = position[e.u], b = position[e.v];
        return {std::min(a, b), std::max(a, b)};
    }

    auto extract_F_star(const ParameterWord & w, const BiOrderedGraph & f) -> vector<Subset>
    {
        int n = f.n(), m = f.m();
        if (w.parameters() != n + m)
            raise(ErrorKind::DimensionMismatch, "word has " + to_string(w.parameters()) + " parameters, need n + m = "
                    + to_string(n + m));
        auto s = w.blocks();
        vector<Subset> sets(s.begin(), s.begin() + n);
        for (int l = 1 ; l <= m ; ++l) {
            auto [i, j] = f.edge_positions(l);
            sets[i - 1] = set_union(sets[i - 1], s[n + l - 1]);
            sets[j - 1] = set_union(sets[j - 1], s[n + l - 1]);
        }
        return sets;
    }

    auto build_edge_selector(const ParameterWord & w, const BiOrderedGraph & f, int i, int j, int l) -> ParameterWord
    {
        int n = f.n(), m = f.m();
        if (l < 1 || l > m)
            raise(ErrorKind::NotAnEdge, "f_" + to_string(l) + " does not exist");
        if (f.edge_positions(l) != pair{i, j})
            raise(ErrorKind::NotAnEdge, "f_" + to_string(l) + " is not {v_" + to_string(i) + ", v_" + to_string(j) + "} with i < j");
        if (w.parameters() != n + m)
            raise(ErrorKind::DimensionMismatch, "word has " + to_string(w.parameters()) + " parameters, need n + m");

        vector<Symbol> symbols(n + m, Symbol::letter(0));
        symbols[i - 1] = Symbol::lambda(1);
        symbols[j - 1] = Symbol::lambda(2);
        symbols[n + l - 1] = Symbol::lambda(3);
        for (int s = 1 ; s <= m ; ++s) {
            if (s == l)
                continue;
            auto [a, b] = f.edge_positions(s);
            if (a == i || b == i)
                symbols[n + s - 1] = Symbol::lambda(1);
            else if (a == j || b == j)
                symbols[n + s - 1] = Symbol::lambda(2);
        }
        ParameterWord v(w.alphabet(), 3, std::move(symbols));

        auto sets = extract_F_star(w, f);
        auto shared = w.blocks()[n + l - 1];
        auto blocks = compose(w, v).blocks();
        if (blocks != vector<Subset>{set_difference(sets[i - 1], shared), set_difference(sets[j - 1], shared), shared})
            throw std::logic_error("edge selector blocks do not match F_i, F_j and S_{n+l}");
        return v;
    }

    auto check_induced_copy(const SubsetHost & host, const BiOrderedGraph & f, const vector<Subset> & sets,
            const Coloring & chi) -> Theorem8Report
    {
        int n = f.n(), m = f.m();
        if (static_cast<int>(sets.size()) != n)
            raise(ErrorKind::DimensionMismatch, "need one set per vertex of F");
        if (chi.size() != host.edge_count())
            raise(ErrorKind::DimensionMismatch, "colouring does not cover the subset host");
        for (const auto & x : sets)
            host.mask(x);

        Theorem8Report report;
        report.sets = sets;

        report.vertex_order = true;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (host.vertex_rank(sets[i]) >= host.vertex_rank(sets[j]))
                    report.vertex_order = false;

        vector<vector<char>> adjacent(n + 1, vector<char>(n + 1, 0));
        for (int l = 1 ; l <= m ; ++l) {
            auto [i, j] = f.edge_positions(l);
            adjacent[i][j] = adjacent[j][i] = 1;
        }
        report.induced_edges = true;
        for (int i = 1 ; i <= n ; ++i)
            for (int j = i + 1 ; j <= n ; ++j)
                if ((host.edge_index(sets[i - 1], sets[j - 1]) >= 0) != static_cast<bool>(adjacent[i][j]))
                    report.induced_edges = false;

        vector<int> copy_edges;
        for (int l = 1 ; l <= m ; ++l) {
            auto [i, j] = f.edge_positions(l);
            copy_edges.push_back(host.edge_index(sets[i - 1], sets[j - 1]));
        }
        bool all_present = std::none_of(copy_edges.begin(), copy_edges.end(), [] (int e) { return e < 0; });
        report.edge_order = all_present && std::is_sorted(copy_edges.begin(), copy_edges.end())
            && std::adjacent_find(copy_edges.begin(), copy_edges.end()) == copy_edges.end();

        report.monochromatic = all_present;
        for (int e : copy_edges) {
            if (e < 0)
                continue;
            if (! report.color)
                report.color = chi[e];
            else if (*report.color != chi[e])
                report.monochromatic = false;
        }
        if (! report.monochromatic)
            report.color.reset();
        return report;
    }

    auto verify_theorem8_witness(const SubsetHost & host, const BiOrderedGraph & f, const ParameterWord & w,
            const Coloring & chi, bool strict) -> Theorem8Report
    {
        int n = f.n(), m = f.m();
        if (w.length() != host.ground())
            raise(ErrorKind::DimensionMismatch, "word length differs from the ground set size");
        if (w.parameters() != n + m)
            raise(ErrorKind::DimensionMismatch, "word has " + to_string(w.parameters()) + " parameters, need n + m = "
                    + to_string(n + m));
        if (w.alphabet().size() != 1)
            raise(ErrorKind::InvalidArgument, "witness words use a single-letter alphabet");

        std::optional<int> common;
        bool constant = true;
        for_each_word(n + m, 3, 1, [&] (const vector<Symbol> & symbols) {
            int c = translate_color(host, chi, compose(w, ParameterWord(w.alphabet(), 3, symbols)));
            if (! common)
                common = c;
            else if (*common != c)
                constant = false;
        });
        if (! constant && strict)
            raise(ErrorKind::NotMonochromaticWord, "chi'(w . v) is not constant over 3-parameter words v");

        auto report = check_induced_copy(host, f, extract_F_star(w, f), chi);
        report.precondition = constant;
        return report;
    }
}
