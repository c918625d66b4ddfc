#include "vck/coloring.hpp"

#include <numeric>
#include <stdexcept>

namespace vck {

CrossingRules::CrossingRules(const VirtualPair& vp) : vp_(&vp) {
    int n = vp.n();
    sinv_.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [u, v] = vp.S.table.at(x, y);
            sinv_[u * n + v] = {(Color)x, (Color)y};
        }
}

std::pair<Color, Color> CrossingRules::s_inv(Color u, Color v) const {
    return sinv_[u * n() + v];
}

std::pair<Color, Color> CrossingRules::through(const CrossingInfo& info, Color left,
                                               Color right) const {
    Color m1, m2;
    if (info.is_virtual) {
        m1 = (Color)vp_->beta.out1(left, right);
        m2 = (Color)vp_->beta.out2(left, right);
    } else if (info.sign > 0) {
        m1 = (Color)vp_->S.out1(left, right);
        m2 = (Color)vp_->S.out2(left, right);
    } else {
        auto [x, y] = s_inv(left, right);
        m1 = x;
        m2 = y;
    }
    // the left strand continues as the second output, the right as the first
    return {m2, m1};
}

namespace {

struct Search {
    const LinkDiagram& d;
    CrossingRules rules;
    int n;
    std::vector<int> arc_offset;      // comp -> first global arc id
    int total_arcs = 0;
    std::vector<int> color;           // global arc -> color or -1
    std::vector<std::vector<int>> crossings_of_arc;  // in-arc -> crossing ids
    std::vector<const CrossingInfo*> infos;
    std::vector<int> info_id;
    std::vector<Coloring>* out;

    Search(const LinkDiagram& d_, const VirtualPair& vp) : d(d_), rules(vp), n(vp.n()) {
        arc_offset.resize(d.num_components());
        for (int c = 0; c < d.num_components(); ++c) {
            arc_offset[c] = total_arcs;
            total_arcs += d.arc_count(c);
        }
        color.assign(total_arcs, -1);
        crossings_of_arc.assign(total_arcs, {});
        for (auto& [id, info] : d.crossings) {
            infos.push_back(&info);
            info_id.push_back(id);
        }
        for (size_t k = 0; k < infos.size(); ++k) {
            crossings_of_arc[arc_id(infos[k]->left)].push_back((int)k);
            crossings_of_arc[arc_id(infos[k]->right)].push_back((int)k);
        }
    }

    int arc_id(const Loc& l) const { return arc_offset[l.comp] + l.pos; }
    int next_arc(const Loc& l) const {
        int sz = (int)d.comps[l.comp].size();
        return arc_offset[l.comp] + (l.pos + 1) % sz;
    }

    // assign color to arc a and propagate; returns false on conflict.
    // records every assignment in trail for undo.
    bool assign(int a, int c, std::vector<int>& trail) {
        if (color[a] >= 0) return color[a] == c;
        color[a] = c;
        trail.push_back(a);
        for (int k : crossings_of_arc[a]) {
            const CrossingInfo& info = *infos[k];
            int la = arc_id(info.left), ra = arc_id(info.right);
            if (color[la] < 0 || color[ra] < 0) continue;
            auto [lo, ro] = rules.through(info, (Color)color[la], (Color)color[ra]);
            if (!assign(next_arc(info.left), lo, trail)) return false;
            if (!assign(next_arc(info.right), ro, trail)) return false;
        }
        return true;
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            color[trail.back()] = -1;
            trail.pop_back();
        }
    }

    void run(int from_arc, std::vector<int>& trail) {
        while (from_arc < total_arcs && color[from_arc] >= 0) ++from_arc;
        if (from_arc == total_arcs) {
            Coloring col;
            col.colors.resize(d.num_components());
            for (int c = 0; c < d.num_components(); ++c) {
                col.colors[c].resize(d.arc_count(c));
                for (int p = 0; p < d.arc_count(c); ++p)
                    col.colors[c][p] = (Color)color[arc_offset[c] + p];
            }
            out->push_back(std::move(col));
            return;
        }
        for (int c = 0; c < n; ++c) {
            size_t mark = trail.size();
            if (assign(from_arc, c, trail)) run(from_arc + 1, trail);
            undo(trail, mark);
        }
    }
};

}  // namespace

std::vector<Coloring> colorings(const LinkDiagram& d, const VirtualPair& vp) {
    std::vector<Coloring> out;
    Search s(d, vp);
    s.out = &out;
    std::vector<int> trail;
    s.run(0, trail);
    return out;
}

long long count_colorings(const LinkDiagram& d, const VirtualPair& vp) {
    return (long long)colorings(d, vp).size();
}

bool coloring_valid(const LinkDiagram& d, const VirtualPair& vp, const Coloring& c) {
    CrossingRules rules(vp);
    for (auto& [id, info] : d.crossings) {
        Color in_l = c.colors[info.left.comp][info.left.pos];
        Color in_r = c.colors[info.right.comp][info.right.pos];
        auto [out_l, out_r] = rules.through(info, in_l, in_r);
        int lsz = (int)d.comps[info.left.comp].size();
        int rsz = (int)d.comps[info.right.comp].size();
        if (c.colors[info.left.comp][(info.left.pos + 1) % lsz] != out_l) return false;
        if (c.colors[info.right.comp][(info.right.pos + 1) % rsz] != out_r) return false;
    }
    return true;
}

}  // namespace vck
