#include "motzeta/artinl/group.hpp"

#include <algorithm>
#include <map>

#include "motzeta/error.hpp"

namespace motzeta::artin {

using Perm = std::vector<std::size_t>;

// Group from a faithful permutation representation. Conjugacy classes are
// numbered by their first element; `table` must follow that numbering.
CharacterData from_permutations(std::string name, std::vector<std::string> labels, const std::vector<Perm>& perms,
                                std::vector<std::string> character_names, std::vector<std::vector<BigRational>> table) {
    if (perms.empty() || labels.size() != perms.size())
        throw PreconditionError("need one label per permutation and at least one element");
    for (const auto& q : perms) {
        Perm sorted = q;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted.size() != perms[0].size() || sorted[i] != i)
                throw PreconditionError("every element must be a permutation of the same set {0..n-1}");
    }
    CharacterData g;
    g.name = std::move(name);
    g.labels = std::move(labels);
    const std::size_t n = perms.size();
    std::map<Perm, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(perms[i], i).second) throw PreconditionError("duplicate permutation for " + g.labels[i]);
    auto lookup = [&](const Perm& q) {
        auto it = index.find(q);
        if (it == index.end()) throw PreconditionError("permutations are not closed under composition");
        return it->second;
    };
    g.mult.assign(n, std::vector<std::size_t>(n));
    g.inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Perm c(perms[a].size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
            g.mult[a][b] = lookup(c);
        }
    const std::size_t e = lookup([&] {
        Perm id(perms[0].size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
        return id;
    }());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.mult[a][b] == e) g.inverse[a] = b;
    g.class_of.assign(n, n);
    std::size_t classes = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (g.class_of[a] != n) continue;
        for (std::size_t x = 0; x < n; ++x) g.class_of[g.mult[g.mult[x][a]][g.inverse[x]]] = classes;
        ++classes;
    }
    g.character_names = std::move(character_names);
    g.table = std::move(table);
    return g;
}

std::size_t CharacterData::class_count() const {
    return class_of.empty() ? 0 : *std::max_element(class_of.begin(), class_of.end()) + 1;
}

std::size_t CharacterData::identity() const {
    for (std::size_t a = 0; a < order(); ++a)
        if (mult[a][a] == a) return a;
    throw PreconditionError("group " + name + " has no identity");
}

std::size_t CharacterData::element(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw PreconditionError("group " + name + " has no element " + label);
    return static_cast<std::size_t>(it - labels.begin());
}

std::size_t CharacterData::character_index(const std::string& cname) const {
    auto it = std::find(character_names.begin(), character_names.end(), cname);
    if (it == character_names.end()) throw PreconditionError("group " + name + " has no character " + cname);
    return static_cast<std::size_t>(it - character_names.begin());
}

ClassFunction CharacterData::character(std::size_t k) const {
    if (k >= table.size()) throw PreconditionError("character index out of range");
    ClassFunction f;
    for (std::size_t a = 0; a < order(); ++a) f.push_back(table[k][class_of[a]]);
    return f;
}

ClassFunction CharacterData::regular() const {
    ClassFunction f(order(), BigRational(0));
    f[identity()] = static_cast<long>(order());
    return f;
}

Verdict CharacterData::validate() const {
    const std::size_t n = order();
    if (n == 0) return Verdict::fail("empty group");
    if (mult.size() != n || inverse.size() != n || class_of.size() != n)
        return Verdict::fail("table sizes differ from the number of elements");
    for (const auto& row : mult) {
        if (row.size() != n) return Verdict::fail("multiplication table is not square");
        for (auto x : row)
            if (x >= n) return Verdict::fail("multiplication table entry out of range");
    }
    std::size_t e = 0;
    try {
        e = identity();
    } catch (const PreconditionError& err) {
        return Verdict::fail(err.what());
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (mult[e][a] != a || mult[a][e] != a) return Verdict::fail("identity law fails at " + labels[a]);
        if (inverse[a] >= n || mult[a][inverse[a]] != e) return Verdict::fail("bad inverse of " + labels[a]);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    return Verdict::fail("associativity fails at (" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x)
            if (class_of[mult[mult[x][a]][inverse[x]]] != class_of[a])
                return Verdict::fail("class of " + labels[a] + " is not closed under conjugation");
    // conjugacy classes, not unions of them: count classes directly
    std::vector<bool> seen(n, false);
    std::size_t true_classes = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        ++true_classes;
        for (std::size_t x = 0; x < n; ++x) seen[mult[mult[x][a]][inverse[x]]] = true;
    }
    if (true_classes != class_count()) return Verdict::fail("class_of does not list the conjugacy classes");
    if (table.size() != true_classes)
        return Verdict::fail("character table has " + std::to_string(table.size()) + " rows for " +
                             std::to_string(true_classes) + " classes");
    if (character_names.size() != table.size()) return Verdict::fail("character names do not match the table");
    BigRational squares = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k].size() != true_classes) return Verdict::fail("row " + character_names[k] + " has the wrong length");
        const BigRational deg = table[k][class_of[e]];
        if (!alg::is_integer(deg) || deg <= 0) return Verdict::fail(character_names[k] + "(1) is not a positive integer");
        squares += deg * deg;
        for (std::size_t l = 0; l < table.size(); ++l) {
            const BigRational ip = inner_product(*this, character(k), character(l));
            if (ip != (k == l ? 1 : 0))
                return Verdict::fail("<" + character_names[k] + ", " + character_names[l] + "> = " + alg::to_string(ip));
        }
    }
    if (squares != static_cast<long>(n)) return Verdict::fail("sum of squared degrees is " + alg::to_string(squares));
    return Verdict::pass(name + ": order " + std::to_string(n) + ", " + std::to_string(true_classes) + " classes");
}

BigRational inner_product(const CharacterData& g, const ClassFunction& a, const ClassFunction& b) {
    if (a.size() != g.order() || b.size() != g.order()) throw PreconditionError("class function has the wrong length");
    BigRational s = 0;
    for (std::size_t x = 0; x < g.order(); ++x) s += a[x] * b[g.inverse[x]];
    return s / static_cast<long>(g.order());
}

bool is_subgroup(const CharacterData& g, const std::vector<std::size_t>& h) {
    if (h.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (auto x : h) {
        if (x >= g.order()) return false;
        in[x] = true;
    }
    for (auto x : h)
        for (auto y : h)
            if (!in[g.mult[x][g.inverse[y]]]) return false;
    return true;
}

bool is_normal_subgroup(const CharacterData& g, const std::vector<std::size_t>& h) {
    if (!is_subgroup(g, h)) return false;
    std::vector<bool> in(g.order(), false);
    for (auto x : h) in[x] = true;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (auto y : h)
            if (!in[g.mult[g.mult[x][y]][g.inverse[x]]]) return false;
    return true;
}

ClassFunction induce(const CharacterData& g, const std::vector<std::size_t>& h, const ClassFunction& chi_h) {
    if (!is_subgroup(g, h)) throw PreconditionError("induction needs a subgroup");
    if (chi_h.size() != h.size()) throw PreconditionError("subgroup character has the wrong length");
    std::vector<long> pos(g.order(), -1);
    for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<long>(i);
    ClassFunction out(g.order(), BigRational(0));
    for (std::size_t a = 0; a < g.order(); ++a) {
        BigRational s = 0;
        for (std::size_t x = 0; x < g.order(); ++x) {
            const long p = pos[g.mult[g.mult[g.inverse[x]][a]][x]];
            if (p >= 0) s += chi_h[static_cast<std::size_t>(p)];
        }
        out[a] = s / static_cast<long>(h.size());
    }
    return out;
}

CharacterData cyclic2() {
    return from_permutations("Z/2", {"e", "s"}, {{0, 1}, {1, 0}}, {"triv", "sign"}, {{1, 1}, {1, -1}});
}

CharacterData symmetric3() {
    return from_permutations("S3", {"e", "(01)", "(02)", "(12)", "(012)", "(021)"},
                             {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}},
                             {"triv", "sign", "std"}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}});
}

CharacterData klein4() {
    return from_permutations("Z/2xZ/2", {"e", "a", "b", "ab"},
                             {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                             {"triv", "ker_a", "ker_b", "ker_ab"},
                             {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
}

CharacterData trivial_group() { return from_permutations("1", {"e"}, {{0}}, {"triv"}, {{1}}); }

} // namespace motzeta::artin
