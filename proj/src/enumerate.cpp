#include "vck/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace vck {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void serialize_into(const SolutionTable& s, CanonicalKey& out) {
    for (auto [z, w] : s.t) {
        out.push_back(z);
        out.push_back(w);
    }
}

CanonicalKey serialize(const SolutionTable& s) {
    CanonicalKey k;
    k.reserve(2 * s.t.size());
    serialize_into(s, k);
    return k;
}

}  // namespace

// Branch-and-bound lexicographic minimum over relabelings: extend the
// relabeling preimage by preimage, comparing the emitted bytes against the
// best candidate so far and pruning as soon as a prefix loses.
namespace {

struct MinImageSearch {
    const SolutionTable* tables[2];
    int num_tables;
    int n;
    CanonicalKey best;
    bool have_best = false;
    std::vector<int> pre;   // position -> preimage color
    std::vector<int> img;   // color -> position (inverse), -1 unset

    void run() {
        pre.assign(n, -1);
        img.assign(n, -1);
        for (int p0 = 0; p0 < n; ++p0) extend(0, p0);
    }

    // try pre[depth] = cand and recurse
    void extend(int depth, int cand) {
        pre[depth] = cand;
        img[cand] = depth;
        // emit all bytes that become determined with this assignment and
        // compare against best; bytes are emitted in serialization order,
        // so cell (x,y) of table t sits at offset (t*n*n + x*n + y)*2
        int verdict = compare_prefix(depth);
        if (verdict <= 0) {
            if (depth + 1 == n) {
                CanonicalKey k = emit_full();
                if (!have_best || k < best) {
                    best = std::move(k);
                    have_best = true;
                }
            } else {
                for (int c = 0; c < n; ++c)
                    if (img[c] < 0) extend(depth + 1, c);
            }
        }
        img[cand] = -1;
        pre[depth] = -1;
    }

    // Compare the determined byte prefix (in serialization order) against
    // best: -1 strictly smaller, +1 strictly larger (prune), 0 tied up to the
    // first undetermined byte.
    int compare_prefix(int depth) {
        if (!have_best) return 0;
        for (int t = 0; t < num_tables; ++t)
            for (int x = 0; x < n; ++x) {
                if (x > depth) return 0;
                for (int y = 0; y < n; ++y) {
                    if (y > depth) return 0;
                    auto [z, w] = tables[t]->at(pre[x], pre[y]);
                    int zi = img[z], wi = img[w];
                    if (zi < 0) return 0;
                    size_t off = ((size_t)t * n * n + (size_t)x * n + y) * 2;
                    if ((uint8_t)zi != best[off]) return (uint8_t)zi < best[off] ? -1 : 1;
                    if (wi < 0) return 0;
                    if ((uint8_t)wi != best[off + 1])
                        return (uint8_t)wi < best[off + 1] ? -1 : 1;
                }
            }
        return 0;
    }

    CanonicalKey emit_full() {
        CanonicalKey k;
        k.reserve((size_t)num_tables * n * n * 2);
        for (int t = 0; t < num_tables; ++t)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    auto [z, w] = tables[t]->at(pre[x], pre[y]);
                    k.push_back((uint8_t)img[z]);
                    k.push_back((uint8_t)img[w]);
                }
        return k;
    }
};

}  // namespace

CanonicalKey canonical_key(const SolutionTable& s) {
    MinImageSearch m;
    m.tables[0] = &s;
    m.num_tables = 1;
    m.n = s.n;
    m.run();
    return m.best;
}

CanonicalKey canonical_key(const SolutionTable& s, const SolutionTable& beta) {
    MinImageSearch m;
    m.tables[0] = &s;
    m.tables[1] = &beta;
    m.num_tables = 2;
    m.n = s.n;
    m.run();
    return m.best;
}

CanonicalKey canonical_key(const VirtualPair& vp) {
    return canonical_key(vp.S.table, vp.beta.table);
}

std::string key_to_hex(const CanonicalKey& k) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * k.size());
    for (uint8_t b : k) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

std::optional<std::vector<int>> are_isomorphic(const VirtualPair& p, const VirtualPair& q) {
    if (p.n() != q.n()) throw std::runtime_error("are_isomorphic: size mismatch");
    for (const auto& phi : all_permutations(p.n())) {
        if (p.S.table.relabel(phi) == q.S.table && p.beta.table.relabel(phi) == q.beta.table)
            return phi;
    }
    return std::nullopt;
}

namespace {

// Backtracking fill of an n x n table in row-major cell order, maintaining
// left/right-invertibility as Latin constraints on the two projections and
// output-pair distinctness. Each YB triple waits on the first unfilled cell
// of its evaluation path; filling a cell re-evaluates exactly the triples
// blocked on it, with trail-based undo.
struct TableSearch {
    int n;
    bool involutive;         // propagate beta(z,w) = (x,y) when setting (x,y) = (z,w)
    bool require_biquandle;  // unique fixed partner per row, bijective s-map
    SolutionTable tab;
    std::vector<char> filled;
    std::vector<uint32_t> row_used1;  // bitmask of used out1 per row
    std::vector<uint32_t> col_used2;  // bitmask of used out2 per column
    std::vector<char> pair_used;
    std::vector<int> fixed_partner;  // per row: -1 unknown, else y
    std::vector<char> fixed_color_used;
    std::vector<std::vector<int>> blocked;  // cell -> triples waiting on it
    std::vector<SolutionTable>* sink = nullptr;

    TableSearch(int n_, bool invol, bool biq)
        : n(n_),
          involutive(invol),
          require_biquandle(biq),
          tab(n_),
          filled(n_ * n_, 0),
          row_used1(n_, 0),
          col_used2(n_, 0),
          pair_used(n_ * n_, 0),
          fixed_partner(n_, -1),
          fixed_color_used(n_, 0),
          blocked(n_ * n_) {
        // every triple (x,y,z) initially waits on cell (y,z)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) blocked[y * n + z].push_back((x * n + y) * n + z);
    }

    // 0 = holds, -1 = violated, otherwise 1 + index of the blocking cell
    int eval_triple(int t) const {
        int x = t / (n * n), y = (t / n) % n, z = t % n;
        int c = y * n + z;
        if (!filled[c]) return 1 + c;
        auto [b1, c1] = tab.at(y, z);
        c = x * n + b1;
        if (!filled[c]) return 1 + c;
        auto [a2, b2] = tab.at(x, b1);
        c = b2 * n + c1;
        if (!filled[c]) return 1 + c;
        auto [b3, c3] = tab.at(b2, c1);
        c = x * n + y;
        if (!filled[c]) return 1 + c;
        auto [p1, q1] = tab.at(x, y);
        c = q1 * n + z;
        if (!filled[c]) return 1 + c;
        auto [q2, r2] = tab.at(q1, z);
        c = p1 * n + q2;
        if (!filled[c]) return 1 + c;
        auto [p3, q3] = tab.at(p1, q2);
        return (a2 == p3 && b3 == q3 && c3 == r2) ? 0 : -1;
    }

    struct Placement {
        int x, y;
        bool mirror_set;
        bool fixed_set;
        // propagation trail: lists moved out of processed cells and appends
        // made to other cells' lists
        std::vector<std::pair<int, std::vector<int>>> moved;
        std::vector<int> appended_to;
    };

    void revert_propagation(Placement& undo) {
        for (auto it = undo.appended_to.rbegin(); it != undo.appended_to.rend(); ++it)
            blocked[*it].pop_back();
        undo.appended_to.clear();
        for (auto it = undo.moved.rbegin(); it != undo.moved.rend(); ++it)
            blocked[it->first] = std::move(it->second);
        undo.moved.clear();
    }

    // re-evaluate triples blocked on the freshly filled cell
    bool propagate_cell(int cell, Placement& undo) {
        undo.moved.push_back({cell, std::move(blocked[cell])});
        blocked[cell].clear();
        for (int t : undo.moved.back().second) {
            int v = eval_triple(t);
            if (v == 0) continue;
            if (v < 0) return false;
            blocked[v - 1].push_back(t);
            undo.appended_to.push_back(v - 1);
        }
        return true;
    }

    bool place(int x, int y, int z, int w, Placement& undo) {
        undo.x = x;
        undo.y = y;
        undo.mirror_set = undo.fixed_set = false;
        undo.moved.clear();
        undo.appended_to.clear();
        if ((row_used1[x] >> z) & 1) return false;
        if ((col_used2[y] >> w) & 1) return false;
        if (pair_used[z * n + w]) return false;
        if (require_biquandle && z == x && w == y) {
            if (fixed_partner[x] >= 0 || fixed_color_used[y]) return false;
        }
        tab.set(x, y, z, w);
        filled[x * n + y] = 1;
        row_used1[x] |= 1u << z;
        col_used2[y] |= 1u << w;
        pair_used[z * n + w] = 1;
        if (require_biquandle && z == x && w == y) {
            fixed_partner[x] = y;
            fixed_color_used[y] = 1;
            undo.fixed_set = true;
        }
        if (involutive && !(z == x && w == y)) {
            // beta(beta(x,y)) = (x,y): force the mirror cell
            if (filled[z * n + w]) {
                if (tab.out1(z, w) != x || tab.out2(z, w) != y) {
                    unplace(undo);
                    return false;
                }
            } else {
                if (((row_used1[z] >> x) & 1) || ((col_used2[w] >> y) & 1) ||
                    pair_used[x * n + y]) {
                    unplace(undo);
                    return false;
                }
                tab.set(z, w, x, y);
                filled[z * n + w] = 1;
                row_used1[z] |= 1u << x;
                col_used2[w] |= 1u << y;
                pair_used[x * n + y] = 1;
                undo.mirror_set = true;
            }
        }
        if (!propagate_cell(x * n + y, undo) ||
            (undo.mirror_set && !propagate_cell(z * n + w, undo))) {
            unplace(undo);
            return false;
        }
        return true;
    }

    void unplace(Placement& u) {
        revert_propagation(u);
        int x = u.x, y = u.y;
        auto [z, w] = tab.at(x, y);
        if (u.mirror_set) {
            filled[z * n + w] = 0;
            row_used1[z] &= ~(1u << x);
            col_used2[w] &= ~(1u << y);
            pair_used[x * n + y] = 0;
        }
        filled[x * n + y] = 0;
        row_used1[x] &= ~(1u << z);
        col_used2[y] &= ~(1u << w);
        pair_used[z * n + w] = 0;
        if (u.fixed_set) {
            fixed_partner[x] = -1;
            fixed_color_used[y] = 0;
        }
    }

    void run(int from_cell) {
        if (from_cell == n * n) {
            if (require_biquandle)
                for (int x = 0; x < n; ++x)
                    if (fixed_partner[x] < 0) return;
            sink->push_back(tab);
            return;
        }
        int x = from_cell / n, y = from_cell % n;
        if (filled[from_cell]) {
            if (require_biquandle && y == n - 1 && fixed_partner[x] < 0) return;
            run(from_cell + 1);
            return;
        }
        Placement undo;
        for (int z = 0; z < n; ++z) {
            if ((row_used1[x] >> z) & 1) continue;
            for (int w = 0; w < n; ++w) {
                if (!place(x, y, z, w, undo)) continue;
                bool row_done_ok = !(require_biquandle && y == n - 1 && fixed_partner[x] < 0);
                if (row_done_ok) run(from_cell + 1);
                unplace(undo);
            }
        }
    }
};

std::vector<SolutionTable> search_tables(int n, bool involutive, bool biquandle, int jobs) {
    // Subtrees split by the first cell assignment are independent tasks.
    std::vector<SolutionTable> all;
    int hw = jobs > 0 ? jobs : (int)std::thread::hardware_concurrency();
    if (hw <= 1 || n <= 3) {
        TableSearch s(n, involutive, biquandle);
        s.sink = &all;
        s.run(0);
        return all;
    }
    std::vector<std::future<std::vector<SolutionTable>>> futs;
    for (int z = 0; z < n; ++z) {
        for (int w = 0; w < n; ++w) {
            futs.push_back(std::async(std::launch::async, [=]() {
                std::vector<SolutionTable> out;
                TableSearch s(n, involutive, biquandle);
                s.sink = &out;
                TableSearch::Placement undo;
                if (!s.place(0, 0, z, w, undo)) return out;
                s.run(1);
                return out;
            }));
        }
    }
    for (auto& f : futs) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

std::vector<SolutionTable> dedupe_by_key(const std::vector<SolutionTable>& tables) {
    std::map<CanonicalKey, SolutionTable> classes;
    for (const auto& t : tables) classes.emplace(canonical_key(t), t);
    std::vector<SolutionTable> out;
    out.reserve(classes.size());
    for (auto& [k, t] : classes) out.push_back(t);
    return out;
}

SolutionTable singleton_table() {
    SolutionTable t(1);
    t.set(0, 0, 0, 0);
    return t;
}

}  // namespace

std::vector<SolutionTable> enumerate_biquandles_raw(int n, int jobs) {
    if (n < 1 || n > 5) throw std::runtime_error("enumerate_biquandles: supported sizes are 1..5");
    if (n == 1) return {singleton_table()};
    return search_tables(n, /*involutive=*/false, /*biquandle=*/true, jobs);
}

std::vector<SolutionTable> enumerate_biquandles(int n, int jobs) {
    return dedupe_by_key(enumerate_biquandles_raw(n, jobs));
}

std::vector<SolutionTable> enumerate_involutive_raw(int n, int jobs) {
    if (n == 1) return {singleton_table()};
    return search_tables(n, /*involutive=*/true, /*biquandle=*/false, jobs);
}

std::vector<SolutionTable> enumerate_involutive(int n, bool flip_compatible, int jobs) {
    if (n < 1 || n > 7) throw std::runtime_error("enumerate_involutive: supported sizes are 1..7");
    auto classes = dedupe_by_key(enumerate_involutive_raw(n, jobs));
    if (!flip_compatible) return classes;
    std::vector<SolutionTable> out;
    SolutionTable flip = make_named("flip", n);
    for (const auto& b : classes)
        if (check_mixed_relation(flip, b)) out.push_back(b);
    return out;
}

std::vector<std::vector<int>> conjugacy_class_reps(const std::vector<std::vector<int>>& group) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> reps;
    for (const auto& a : group) {
        if (seen.count(a)) continue;
        std::vector<std::vector<int>> cls;
        for (const auto& g : group) {
            int n = (int)g.size();
            std::vector<int> ginv(n), conj(n);
            for (int i = 0; i < n; ++i) ginv[g[i]] = i;
            for (int i = 0; i < n; ++i) conj[i] = g[a[ginv[i]]];
            cls.push_back(conj);
        }
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        reps.push_back(cls.front());
        for (auto& c : cls) seen.insert(std::move(c));
    }
    return reps;
}

Partition pair_components(const SolutionTable& S, const SolutionTable& beta) {
    // finest partition with x ~ out2(x,y), y ~ out1(x,y) for both tables
    std::vector<int> parent(S.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const SolutionTable* t : {&S, &beta})
        for (int x = 0; x < t->n; ++x)
            for (int y = 0; y < t->n; ++y) {
                parent[root(x)] = root(t->out2(x, y));
                parent[root(y)] = root(t->out1(x, y));
            }
    Partition p;
    p.class_of.assign(S.n, -1);
    for (int x = 0; x < S.n; ++x) {
        int r = root(x);
        if (p.class_of[r] < 0) p.class_of[r] = p.num_classes++;
        p.class_of[x] = p.class_of[r];
    }
    return p;
}

std::vector<PairClass> enumerate_virtual_pairs(int n, PairMode mode, bool allow_long,
                                               int jobs) {
    if (n < 1 || n > 5 || (n == 5 && !allow_long))
        throw std::runtime_error(n == 5 ? "enumerate_virtual_pairs: n=5 requires the long flag"
                                        : "enumerate_virtual_pairs: supported sizes are 1..4"
                                          " (5 with long flag)");
    auto beta_raw = enumerate_biquandles_raw(n, jobs);
    auto s_classes = dedupe_by_key(beta_raw);

    std::vector<PairClass> out;
    auto emit = [&](const SolutionTable& s, const SolutionTable& b) {
        PairClass pc;
        pc.S = s;
        pc.beta = b;
        pc.key = canonical_key(s, b);
        pc.beta_involutive = check_involutive(b);
        out.push_back(std::move(pc));
    };

    if (mode == PairMode::AutInduced) {
        for (const auto& st : s_classes) {
            Biquandle S = as_biquandle(st);
            auto auts = automorphisms(S);
            for (const auto& a : conjugacy_class_reps(auts)) emit(st, beta_from_aut(S, a));
        }
        return out;
    }

    for (const auto& st : s_classes) {
        Biquandle S = as_biquandle(st);
        auto auts = automorphisms(S);
        std::set<std::vector<std::pair<Color, Color>>> orbit_seen;
        for (const auto& b : beta_raw) {
            if (orbit_seen.count(b.t)) continue;
            if (!check_mixed_relation(st, b)) continue;
            for (const auto& a : auts) orbit_seen.insert(b.relabel(a).t);
            emit(st, b);
        }
    }
    return out;
}

CensusRow census(int n, bool allow_long, int jobs) {
    CensusRow row;
    row.n = n;
    auto all = enumerate_virtual_pairs(n, PairMode::All, allow_long, jobs);
    auto aut = enumerate_virtual_pairs(n, PairMode::AutInduced, allow_long, jobs);
    row.all_pairs = (long long)all.size();
    row.aut_induced_pairs = (long long)aut.size();
    for (const auto& pc : all) {
        if (pair_components(pc.S, pc.beta).num_classes != 1) continue;
        ++row.connected_pairs;
        bool s_conn = connected_components(pc.S).num_classes == 1;
        bool b_conn = connected_components(pc.beta).num_classes == 1;
        if (!s_conn && !b_conn) ++row.connected_with_both_disconnected;
    }
    return row;
}

std::optional<CensusRow> reference_census(int n) {
    switch (n) {
        case 2: return CensusRow{2, 4, 4, 3, 0};
        case 3: return CensusRow{3, 90, 38, 26, 0};
        case 4: return CensusRow{4, 3517, 325, 167, 10};
        case 5: return CensusRow{5, 46658, 41278, 138, 0};
        default: return std::nullopt;
    }
}

void write_keys_file(const std::string& path, const std::vector<CanonicalKey>& keys) {
    std::vector<std::string> lines;
    lines.reserve(keys.size());
    for (const auto& k : keys) lines.push_back(key_to_hex(k));
    std::sort(lines.begin(), lines.end());
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write keys file: " + path);
    for (const auto& l : lines) f << l << "\n";
}

std::vector<CanonicalKey> read_keys_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read keys file: " + path);
    std::vector<CanonicalKey> out;
    std::string line;
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::runtime_error("bad hex digit in keys file");
    };
    while (std::getline(f, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        CanonicalKey k;
        for (size_t i = 0; i + 1 < line.size(); i += 2)
            k.push_back((uint8_t)((nib(line[i]) << 4) | nib(line[i + 1])));
        out.push_back(std::move(k));
    }
    return out;
}

}  // namespace vck
