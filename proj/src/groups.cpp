#include "gradalg/groups.hpp"

#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

std::string triple(int x, int y, int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

} // namespace

Report validate_group_table(const std::vector<std::vector<int>>& table) {
    Report rep;
    const int n = int(table.size());
    if (n == 0) {
        rep.add("nonempty", false, "empty table");
        return rep;
    }
    for (int x = 0; x < n; ++x) {
        if (int(table[size_t(x)].size()) != n) {
            rep.add("square_table", false, "row " + std::to_string(x));
            return rep;
        }
        for (int y = 0; y < n; ++y) {
            int v = table[size_t(x)][size_t(y)];
            if (v < 0 || v >= n) {
                rep.add("valid_indices", false,
                        "entry " + triple(x, y, v) + " out of range");
                return rep;
            }
        }
    }
    rep.add("square_table", true);

    int neutral = -1;
    for (int e = 0; e < n && neutral < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (table[size_t(e)][size_t(x)] != x || table[size_t(x)][size_t(e)] != x) {
                ok = false;
                break;
            }
        if (ok) neutral = e;
    }
    rep.add("neutral_exists", neutral >= 0, neutral >= 0 ? "" : "NoNeutral");
    if (neutral < 0) return rep;

    for (int x = 0; x < n; ++x) {
        int inv = -1;
        for (int y = 0; y < n; ++y)
            if (table[size_t(x)][size_t(y)] == neutral && table[size_t(y)][size_t(x)] == neutral) {
                inv = y;
                break;
            }
        if (inv < 0) {
            rep.add("inverses_exist", false, "NoInverse(" + std::to_string(x) + ")");
            return rep;
        }
    }
    rep.add("inverses_exist", true);

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy_z = table[size_t(table[size_t(x)][size_t(y)])][size_t(z)];
                int x_yz = table[size_t(x)][size_t(table[size_t(y)][size_t(z)])];
                if (xy_z != x_yz) {
                    rep.add("associative", false, "NotAssociative" + triple(x, y, z));
                    return rep;
                }
            }
    rep.add("associative", true);
    return rep;
}

FiniteGroup make_group(const std::vector<std::vector<int>>& table) {
    Report rep = validate_group_table(table);
    if (!rep.ok()) {
        const CheckItem* f = rep.first_failure();
        throw CheckFailure("group table invalid: " + f->name +
                           (f->witness.empty() ? "" : " " + f->witness));
    }
    FiniteGroup g;
    g.n_ = int(table.size());
    g.table_.resize(size_t(g.n_) * g.n_);
    for (int x = 0; x < g.n_; ++x)
        for (int y = 0; y < g.n_; ++y) g.table_[size_t(x) * g.n_ + y] = table[size_t(x)][size_t(y)];
    for (int e = 0; e < g.n_; ++e) {
        bool ok = true;
        for (int x = 0; x < g.n_; ++x)
            if (g.mul(e, x) != x || g.mul(x, e) != x) { ok = false; break; }
        if (ok) { g.neutral_ = e; break; }
    }
    g.inv_.resize(size_t(g.n_));
    for (int x = 0; x < g.n_; ++x)
        for (int y = 0; y < g.n_; ++y)
            if (g.mul(x, y) == g.neutral_ && g.mul(y, x) == g.neutral_) {
                g.inv_[size_t(x)] = y;
                break;
            }
    return g;
}

FiniteGroup trivial_group() { return make_group({{0}}); }

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw InvalidInput("cyclic_group: order must be positive");
    std::vector<std::vector<int>> t(size_t(n), std::vector<int>(size_t(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[size_t(x)][size_t(y)] = (x + y) % n;
    return make_group(t);
}

FiniteGroup symmetric_group_3() {
    // Permutations of {0,1,2} listed as images (p[0],p[1],p[2]);
    // product xy acts as "x then y" matching right-action composition.
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto find = [&](const int q[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == q[0] && perms[i][1] == q[1] && perms[i][2] == q[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int q[3];
            for (int i = 0; i < 3; ++i) q[i] = perms[y][perms[x][i]];
            t[size_t(x)][size_t(y)] = find(q);
        }
    return make_group(t);
}

} // namespace gradalg
