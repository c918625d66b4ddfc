#include "vck/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vck {

void LinkDiagram::validate() {
    crossings.clear();
    struct Seen {
        std::vector<std::pair<Loc, Passage>> hits;
    };
    std::map<int, Seen> seen;
    for (int c = 0; c < (int)comps.size(); ++c)
        for (int p = 0; p < (int)comps[c].size(); ++p)
            seen[comps[c][p].crossing].hits.push_back({{c, p}, comps[c][p]});

    for (auto& [id, s] : seen) {
        if (s.hits.size() != 2)
            throw std::runtime_error("crossing " + std::to_string(id) + " appears " +
                                     std::to_string(s.hits.size()) + " times (need 2)");
        auto& [la, pa] = s.hits[0];
        auto& [lb, pb] = s.hits[1];
        CrossingInfo info;
        bool a_virtual = pa.kind == PassageKind::Virtual;
        bool b_virtual = pb.kind == PassageKind::Virtual;
        if (a_virtual != b_virtual)
            throw std::runtime_error("crossing " + std::to_string(id) +
                                     " mixes virtual and classical passages");
        if (a_virtual) {
            info.is_virtual = true;
            if (pa.side == pb.side)
                throw std::runtime_error("virtual crossing " + std::to_string(id) +
                                         " needs one left and one right passage");
            info.left = (pa.side == VSide::Left) ? la : lb;
            info.right = (pa.side == VSide::Left) ? lb : la;
        } else {
            if (pa.kind == pb.kind)
                throw std::runtime_error("classical crossing " + std::to_string(id) +
                                         " needs one over and one under passage");
            if (pa.sign != pb.sign)
                throw std::runtime_error("crossing " + std::to_string(id) +
                                         " has mismatched signs");
            info.sign = pa.sign;
            Loc under = (pa.kind == PassageKind::Under) ? la : lb;
            Loc over = (pa.kind == PassageKind::Under) ? lb : la;
            // positive: under enters left; negative: over enters left
            info.left = (info.sign > 0) ? under : over;
            info.right = (info.sign > 0) ? over : under;
        }
        crossings[id] = info;
    }
}

LinkDiagram LinkDiagram::rotated(int comp, int k) const {
    LinkDiagram out = *this;
    auto& seq = out.comps[comp];
    if (!seq.empty()) {
        k = ((k % (int)seq.size()) + (int)seq.size()) % (int)seq.size();
        std::rotate(seq.begin(), seq.begin() + k, seq.end());
    }
    out.validate();
    return out;
}

int LinkDiagram::max_crossing_id() const {
    int m = 0;
    for (const auto& comp : comps)
        for (const auto& p : comp) m = std::max(m, p.crossing);
    return m;
}

LinkDiagram parse_gauss(const std::string& text) {
    LinkDiagram d;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);

    int token_index = 0;
    for (const std::string& part : parts) {
        std::vector<Passage> comp;
        std::istringstream ss(part);
        std::string tok;
        while (ss >> tok) {
            ++token_index;
            auto fail = [&](const std::string& why) {
                throw std::runtime_error("token " + std::to_string(token_index) + " '" + tok +
                                         "': " + why);
            };
            if (tok.size() < 3) fail("too short");
            Passage p;
            char kind = tok[0];
            char tail = tok.back();
            std::string idtxt = tok.substr(1, tok.size() - 2);
            if (idtxt.empty()) fail("missing crossing id");
            for (char c : idtxt)
                if (!isdigit((unsigned char)c)) fail("crossing id must be a positive integer");
            p.crossing = std::stoi(idtxt);
            if (p.crossing <= 0) fail("crossing id must be positive");
            if (kind == 'O' || kind == 'U') {
                p.kind = (kind == 'O') ? PassageKind::Over : PassageKind::Under;
                if (tail == '+') p.sign = +1;
                else if (tail == '-') p.sign = -1;
                else fail("classical passage needs a +/- sign");
            } else if (kind == 'V') {
                p.kind = PassageKind::Virtual;
                if (tail == 'l') p.side = VSide::Left;
                else if (tail == 'r') p.side = VSide::Right;
                else fail("virtual passage needs an l/r side");
            } else {
                fail("passage must start with O, U or V");
            }
            comp.push_back(p);
        }
        d.comps.push_back(std::move(comp));
    }
    d.validate();
    return d;
}

std::string serialize_gauss(const LinkDiagram& d) {
    std::string out;
    for (int c = 0; c < (int)d.comps.size(); ++c) {
        if (c) out += " ; ";
        for (int p = 0; p < (int)d.comps[c].size(); ++p) {
            if (p) out += ' ';
            const Passage& pa = d.comps[c][p];
            if (pa.kind == PassageKind::Virtual) {
                out += "V" + std::to_string(pa.crossing) +
                       (pa.side == VSide::Left ? "l" : "r");
            } else {
                out += (pa.kind == PassageKind::Over ? "O" : "U");
                out += std::to_string(pa.crossing);
                out += (pa.sign > 0 ? "+" : "-");
            }
        }
    }
    return out;
}

namespace {

void insert_pairs(LinkDiagram& d, int comp_a, int pos_a, std::vector<Passage> part_a,
                  int comp_b, int pos_b, std::vector<Passage> part_b) {
    if (comp_a == comp_b && pos_a == pos_b)
        throw std::runtime_error("insertion needs two distinct semi-arcs");
    auto insert_at = [&](int comp, int pos, const std::vector<Passage>& part) {
        auto& seq = d.comps[comp];
        if (pos < 0 || pos > (int)seq.size() || (seq.empty() && pos != 0))
            throw std::runtime_error("invalid position");
        seq.insert(seq.begin() + pos, part.begin(), part.end());
    };
    if (comp_a == comp_b && pos_a < pos_b) {
        insert_at(comp_b, pos_b, part_b);
        insert_at(comp_a, pos_a, part_a);
    } else {
        insert_at(comp_a, pos_a, part_a);
        insert_at(comp_b, pos_b, part_b);
    }
    d.validate();
}

Passage classical(PassageKind k, int id, int sign) {
    Passage p;
    p.kind = k;
    p.crossing = id;
    p.sign = sign;
    return p;
}

Passage virt(int id, VSide s) {
    Passage p;
    p.kind = PassageKind::Virtual;
    p.crossing = id;
    p.side = s;
    return p;
}

}  // namespace

LinkDiagram insert_r2(const LinkDiagram& d, int comp_a, int pos_a, int comp_b, int pos_b,
                      R2Variant variant) {
    if (comp_a < 0 || comp_a >= d.num_components() || comp_b < 0 ||
        comp_b >= d.num_components())
        throw std::runtime_error("invalid component");
    LinkDiagram out = d;
    int n1 = d.max_crossing_id() + 1, n2 = n1 + 1;
    PassageKind ka = PassageKind::Under, kb = PassageKind::Over;
    if (variant == R2Variant::ParallelOver || variant == R2Variant::AntiparallelOver)
        std::swap(ka, kb);
    bool antiparallel =
        variant == R2Variant::AntiparallelUnder || variant == R2Variant::AntiparallelOver;

    std::vector<Passage> part_a = {classical(ka, n1, +1), classical(ka, n2, -1)};
    std::vector<Passage> part_b = antiparallel
        ? std::vector<Passage>{classical(kb, n2, -1), classical(kb, n1, +1)}
        : std::vector<Passage>{classical(kb, n1, +1), classical(kb, n2, -1)};
    insert_pairs(out, comp_a, pos_a, std::move(part_a), comp_b, pos_b, std::move(part_b));
    return out;
}

LinkDiagram insert_vr2(const LinkDiagram& d, int comp_a, int pos_a, int comp_b, int pos_b) {
    if (comp_a < 0 || comp_a >= d.num_components() || comp_b < 0 ||
        comp_b >= d.num_components())
        throw std::runtime_error("invalid component");
    LinkDiagram out = d;
    int n1 = d.max_crossing_id() + 1, n2 = n1 + 1;
    std::vector<Passage> part_a = {virt(n1, VSide::Left), virt(n2, VSide::Right)};
    std::vector<Passage> part_b = {virt(n1, VSide::Right), virt(n2, VSide::Left)};
    insert_pairs(out, comp_a, pos_a, std::move(part_a), comp_b, pos_b, std::move(part_b));
    return out;
}

}  // namespace vck
