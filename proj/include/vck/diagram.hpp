#pragma once

#include <map>
#include <string>
#include <vector>

namespace vck {

enum class PassageKind { Over, Under, Virtual };
enum class VSide { Left, Right };

struct Passage {
    PassageKind kind;
    int crossing = 0;
    int sign = 0;               // +1/-1, classical only
    VSide side = VSide::Left;   // virtual only
};

// Location of a passage: component index and position along it.
struct Loc {
    int comp = -1;
    int pos = -1;
    bool operator==(const Loc& o) const { return comp == o.comp && pos == o.pos; }
};

// Resolved geometry of one crossing: which passage is the left-incoming
// strand. At a positive classical crossing the under-strand enters on the
// left; at a negative one the over-strand does; at a virtual crossing the
// side markers decide.
struct CrossingInfo {
    bool is_virtual = false;
    int sign = 0;
    Loc left, right;
};

struct LinkDiagram {
    std::vector<std::vector<Passage>> comps;
    std::map<int, CrossingInfo> crossings;  // by crossing id, built by validate()

    int num_components() const { return (int)comps.size(); }
    const Passage& at(const Loc& l) const { return comps[l.comp][l.pos]; }

    // Number of semi-arcs of a component (a crossing-free loop has one).
    int arc_count(int comp) const {
        return comps[comp].empty() ? 1 : (int)comps[comp].size();
    }

    // Checks the pairing invariants and fills `crossings`; throws
    // std::runtime_error naming the offending crossing id on failure.
    void validate();

    // Base-point move: rotate component comp by k passages.
    LinkDiagram rotated(int comp, int k) const;

    int max_crossing_id() const;
};

// Token grammar: components separated by ';', whitespace-separated tokens
// O<id><+|->, U<id><+|->, V<id><l|r>.
LinkDiagram parse_gauss(const std::string& text);
std::string serialize_gauss(const LinkDiagram& d);

enum class R2Variant { ParallelUnder, ParallelOver, AntiparallelUnder, AntiparallelOver };

// Insert a cancelling classical RII pair across the semi-arcs entering
// (comp_a, pos_a) and (comp_b, pos_b). The arcs must be distinct.
LinkDiagram insert_r2(const LinkDiagram& d, int comp_a, int pos_a, int comp_b, int pos_b,
                      R2Variant variant = R2Variant::ParallelUnder);

// Insert a cancelling virtual RII pair (fresh ids, l/r then r/l).
LinkDiagram insert_vr2(const LinkDiagram& d, int comp_a, int pos_a, int comp_b, int pos_b);

}  // namespace vck
