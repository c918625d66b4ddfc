#include "vck/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vck {

int Presentation::gen_id(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return (int)i;
    return -1;
}

int Presentation::original_id(const std::string& name) const {
    const auto& g = original_gens.empty() ? gens : original_gens;
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] == name) return (int)i;
    return -1;
}

Word Presentation::apply_aliases(const Word& w) const {
    if (aliases.empty()) return reduce(w);
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
        int g = letter_gen(l);
        if (g >= (int)aliases.size()) throw std::logic_error("apply_aliases: bad generator");
        const Word& img = aliases[g];
        if (l > 0) {
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        } else {
            Word inv = img.inverse();
            out.insert(out.end(), inv.letters().begin(), inv.letters().end());
        }
    }
    return reduce(std::move(out));
}

void Presentation::normalize_relators() {
    std::vector<Word> out;
    for (const Word& r : relators) {
        Word c = relator_canonical(r);
        if (!c.empty()) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    relators = std::move(out);
}

Presentation make_presentation(std::vector<std::string> gens, std::vector<Word> relators) {
    Presentation p;
    p.gens = std::move(gens);
    p.relators = std::move(relators);
    return p;
}

std::string Presentation::str() const {
    std::string s = "< ";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += " ";
        s += gens[i];
    }
    s += " | ";
    for (size_t i = 0; i < relators.size(); ++i) {
        if (i) s += ", ";
        s += relators[i].str(gens);
    }
    s += " >";
    return s;
}

namespace {

// Remove generator `g` from the presentation given its defining word (g = image).
void eliminate_generator(Presentation& p, int g, const Word& image) {
    std::vector<int> new_id(p.gens.size());
    for (size_t i = 0, k = 0; i < p.gens.size(); ++i) new_id[i] = ((int)i == g) ? -1 : (int)k++;

    Word renumbered_image = image;  // image must not contain g
    for (Word& r : p.relators) r = r.substitute(g, image);
    for (Word& a : p.aliases) a = a.substitute(g, image);
    for (Word& r : p.relators) r = r.renumber(new_id);
    for (Word& a : p.aliases) a = a.renumber(new_id);
    p.gens.erase(p.gens.begin() + g);
}

// All cyclic rotations of r and of r^-1.
std::vector<Word> all_rotations(const Word& r) {
    std::vector<Word> out;
    for (const Word& base : {r, r.inverse()}) {
        std::vector<Letter> v = base.letters();
        for (size_t i = 0; i < std::max<size_t>(v.size(), 1); ++i) {
            out.emplace_back(v);
            if (v.size() > 1) std::rotate(v.begin(), v.begin() + 1, v.end());
            if (v.empty()) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Try to shorten cyclic word r using relator s: if a piece u of some rotation
// of s^+-1 with |u| > |s|/2 occurs in r (cyclically), replace it by the
// inverse of the complement. Returns the shortened canonical relator.
std::optional<Word> dehn_shorten(const Word& r, const Word& s) {
    if (r.size() < 2 || s.empty()) return std::nullopt;
    const size_t slen = s.size();
    std::vector<Letter> rr = r.letters();
    rr.insert(rr.end(), r.letters().begin(), r.letters().end());  // doubled for cyclic search

    for (const Word& rot : all_rotations(s)) {
        for (size_t ulen = slen; ulen * 2 > slen; --ulen) {
            if (ulen > r.size()) continue;
            // piece u = first ulen letters of rot, complement v = rest
            std::vector<Letter> u(rot.letters().begin(), rot.letters().begin() + ulen);
            Word v(std::vector<Letter>(rot.letters().begin() + ulen, rot.letters().end()));
            for (size_t i = 0; i < r.size(); ++i) {
                if (std::equal(u.begin(), u.end(), rr.begin() + i)) {
                    // r (rotated to start at i) = u * tail; u -> v^-1
                    std::vector<Letter> tail(rr.begin() + i + ulen, rr.begin() + i + r.size());
                    Word res = v.inverse() * Word(std::move(tail));
                    Word canon = relator_canonical(res);
                    if (canon.size() < r.size()) return canon;
                }
            }
        }
    }
    return std::nullopt;
}

// Bounded search: can relator r be reduced to the empty word (or to another
// known relator) by splicing in other relators? Splices may grow the word a
// little; this keeps the search sound while catching short consequence chains.
bool relator_redundant(const Word& r, const std::vector<Word>& others, int max_nodes = 20000) {
    std::set<Word> known;
    for (const Word& s : others) known.insert(relator_canonical(s));
    if (known.count(relator_canonical(r))) return true;

    const size_t cap = r.size() + 4;
    std::set<Word> seen;
    std::queue<std::pair<Word, int>> q;
    Word start = relator_canonical(r);
    q.push({start, 0});
    seen.insert(start);
    int nodes = 0;

    std::vector<Word> pieces;  // rotations of all other relators, both signs
    for (const Word& s : others)
        for (const Word& rot : all_rotations(s)) pieces.push_back(rot);

    while (!q.empty()) {
        auto [cur, depth] = q.front();
        q.pop();
        if (++nodes > max_nodes || depth >= 6) continue;
        std::vector<Letter> cc = cur.letters();
        cc.insert(cc.end(), cur.letters().begin(), cur.letters().end());
        for (const Word& rot : pieces) {
            size_t slen = rot.size();
            size_t min_u = slen >= 2 ? (slen + 1) / 2 - 1 : 1;
            if (min_u == 0) min_u = 1;
            for (size_t ulen = slen; ulen >= min_u; --ulen) {
                if (ulen > cur.size() || cur.size() - ulen + (slen - ulen) > cap) continue;
                std::vector<Letter> u(rot.letters().begin(), rot.letters().begin() + ulen);
                Word v(std::vector<Letter>(rot.letters().begin() + ulen, rot.letters().end()));
                for (size_t i = 0; i < cur.size(); ++i) {
                    if (!std::equal(u.begin(), u.end(), cc.begin() + i)) continue;
                    std::vector<Letter> tail(cc.begin() + i + ulen, cc.begin() + i + cur.size());
                    Word canon = relator_canonical(v.inverse() * Word(std::move(tail)));
                    if (canon.empty() || known.count(canon)) return true;
                    if (canon.size() <= cap && !seen.count(canon)) {
                        seen.insert(canon);
                        q.push({canon, depth + 1});
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int budget) {
    Presentation cur = p;
    if (cur.original_gens.empty()) {
        cur.original_gens = cur.gens;
        cur.aliases.clear();
        for (size_t i = 0; i < cur.gens.size(); ++i) cur.aliases.push_back(Word::gen((int)i));
    }
    cur.budget_exhausted = false;
    int steps = 0;
    auto spend = [&](int k = 1) {
        steps += k;
        if (steps > budget) {
            cur.budget_exhausted = true;
            return false;
        }
        return true;
    };

    bool changed = true;
    while (changed && !cur.budget_exhausted) {
        changed = false;
        cur.normalize_relators();

        // Generator elimination: pick the generator with the shortest defining
        // relator (one containing it exactly once); ties broken by lowest id.
        while (true) {
            int best_gen = -1, best_rel = -1;
            size_t best_len = SIZE_MAX;
            for (size_t ri = 0; ri < cur.relators.size(); ++ri) {
                const Word& r = cur.relators[ri];
                for (size_t g = 0; g < cur.gens.size(); ++g) {
                    if (r.count_gen((int)g) != 1) continue;
                    if (r.size() < best_len || (r.size() == best_len && (int)g < best_gen)) {
                        best_len = r.size();
                        best_gen = (int)g;
                        best_rel = (int)ri;
                    }
                }
            }
            if (best_gen < 0) break;
            if (!spend()) break;
            // rotate so the unique occurrence of best_gen comes first
            std::vector<Letter> v = cur.relators[best_rel].letters();
            size_t pos = 0;
            while (letter_gen(v[pos]) != best_gen) ++pos;
            std::rotate(v.begin(), v.begin() + pos, v.end());
            Word rest(std::vector<Letter>(v.begin() + 1, v.end()));
            Word image = (v[0] > 0) ? rest.inverse() : rest;
            cur.relators.erase(cur.relators.begin() + best_rel);
            eliminate_generator(cur, best_gen, image);
            cur.normalize_relators();
            changed = true;
        }
        if (cur.budget_exhausted) break;

        // Dehn shortening of each relator against the others.
        bool shortened = true;
        while (shortened && !cur.budget_exhausted) {
            shortened = false;
            for (size_t i = 0; i < cur.relators.size() && !cur.budget_exhausted; ++i) {
                for (size_t j = 0; j < cur.relators.size(); ++j) {
                    if (i == j) continue;
                    if (auto s = dehn_shorten(cur.relators[i], cur.relators[j])) {
                        if (!spend()) break;
                        cur.relators[i] = *s;
                        cur.normalize_relators();
                        shortened = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        if (changed || cur.budget_exhausted) continue;

        // Redundancy pass: drop relators derivable from the rest.
        for (size_t i = cur.relators.size(); i-- > 0;) {
            std::vector<Word> others;
            for (size_t j = 0; j < cur.relators.size(); ++j)
                if (j != i) others.push_back(cur.relators[j]);
            if (relator_redundant(cur.relators[i], others)) {
                if (!spend()) break;
                cur.relators.erase(cur.relators.begin() + i);
                changed = true;
            }
        }
    }
    cur.normalize_relators();
    return cur;
}

bool presentations_match(const Presentation& a, const Presentation& b) {
    if (a.gens.size() != b.gens.size()) return false;
    size_t n = a.gens.size();
    if (n > 5) return false;

    std::vector<Word> ra = a.relators, rb = b.relators;
    for (Word& w : ra) w = relator_canonical(w);
    for (Word& w : rb) w = relator_canonical(w);
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra.size() != rb.size()) return false;

    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = (int)i;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Word> mapped;
            bool ok = true;
            for (const Word& r : ra) {
                std::vector<Letter> out;
                for (Letter l : r.letters()) {
                    int g = letter_gen(l);
                    int img = perm[g];
                    bool inv = (mask >> g) & 1;
                    bool positive = (l > 0) != inv;
                    out.push_back(positive ? pos_letter(img) : neg_letter(img));
                }
                mapped.push_back(relator_canonical(Word(std::move(out))));
            }
            std::sort(mapped.begin(), mapped.end());
            if (mapped == rb) return true;
            (void)ok;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool presentations_equivalent(const Presentation& a, const Presentation& b) {
    if (a.gens.size() != b.gens.size()) return false;
    size_t n = a.gens.size();
    if (n > 5) return false;
    if (presentations_match(a, b)) return true;

    std::vector<Word> ra = a.relators;
    for (Word& w : ra) w = relator_canonical(w);

    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = (int)i;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Word> rb;
            for (const Word& r : b.relators) {
                std::vector<Letter> out;
                for (Letter l : r.letters()) {
                    int g = letter_gen(l);
                    bool positive = (l > 0) != (((mask >> g) & 1) != 0);
                    out.push_back(positive ? pos_letter(perm[g]) : neg_letter(perm[g]));
                }
                rb.push_back(relator_canonical(Word(std::move(out))));
            }
            bool ok = true;
            for (const Word& r : ra)
                if (!relator_redundant(r, rb, 60000)) ok = false;
            for (const Word& r : rb)
                if (ok && !relator_redundant(r, ra, 60000)) ok = false;
            if (ok) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Word parse_word(const std::string& line, const std::vector<std::string>& gens) {
    std::istringstream ss(line);
    std::string tok;
    std::vector<Letter> letters;
    while (ss >> tok) {
        if (tok == "1") continue;
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        int id = -1;
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == tok) id = (int)i;
        if (id < 0) throw std::runtime_error("unknown generator '" + tok + "'");
        letters.push_back(inv ? neg_letter(id) : pos_letter(id));
    }
    return reduce(std::move(letters));
}

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Presentation p;
    bool have_gens = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_gens) {
            if (line.rfind("gens:", 0) != 0) throw std::runtime_error("presentation file must start with 'gens:'");
            std::istringstream ss(line.substr(5));
            std::string g;
            while (ss >> g) p.gens.push_back(g);
            have_gens = true;
        } else {
            p.relators.push_back(parse_word(line, p.gens));
        }
    }
    if (!have_gens) throw std::runtime_error("empty presentation file");
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::string s = "gens:";
    for (const auto& g : p.gens) s += " " + g;
    s += "\n";
    for (const Word& r : p.relators) s += r.str(p.gens) + "\n";
    return s;
}

}  // namespace vck
