#include "vck/abelian.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace vck {

namespace {

using Mat = std::vector<std::vector<long long>>;

void swap_rows(Mat& m, int i, int j) { std::swap(m[i], m[j]); }

void swap_cols(Mat& m, int i, int j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

void add_row(Mat& m, int dst, int src, long long k) {
    for (size_t c = 0; c < m[dst].size(); ++c) m[dst][c] += k * m[src][c];
}

void add_col(Mat& m, int dst, int src, long long k) {
    for (auto& row : m) row[dst] += k * row[src];
}

}  // namespace

SmithResult smith_normal_form(Mat a) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    Mat v(cols, std::vector<long long>(cols, 0));
    for (int i = 0; i < cols; ++i) v[i][i] = 1;

    int t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot with least absolute value
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(a, t, pi);
        swap_cols(a, t, pj);
        swap_cols(v, t, pj);

        bool dirty = false;
        for (int i = t + 1; i < rows; ++i) {
            long long q = a[i][t] / a[t][t];
            if (q) add_row(a, i, t, -q);
            if (a[i][t] != 0) dirty = true;
        }
        for (int j = t + 1; j < cols; ++j) {
            long long q = a[t][j] / a[t][t];
            if (q) {
                add_col(a, j, t, -q);
                add_col(v, j, t, -q);
            }
            if (a[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // remainders left; repeat with a smaller pivot

        // ensure divisibility into the rest of the matrix
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
            for (int j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    add_row(a, t, i, 1);
                    divides = false;
                }
        if (!divides) continue;
        if (a[t][t] < 0) {
            for (int j = 0; j < cols; ++j) {
                a[t][j] = -a[t][j];
            }
        }
        ++t;
    }
    return {std::move(a), std::move(v)};
}

Abelianization abelianize(const Presentation& p) {
    int g = (int)p.gens.size();
    int r = (int)p.relators.size();
    Mat a(std::max(r, 1), std::vector<long long>(std::max(g, 1), 0));
    for (int i = 0; i < r; ++i)
        for (Letter l : p.relators[i].letters()) a[i][letter_gen(l)] += letter_sign(l);

    Abelianization out;
    out.num_gens = g;
    if (g == 0) return out;

    SmithResult snf = smith_normal_form(a);
    out.v = snf.v;
    std::vector<long long> diag(g, 0);
    for (int i = 0; i < (int)snf.d.size() && i < g; ++i) diag[i] = snf.d[i][i];

    // keep torsion factors (>1) then free factors (0); drop trivial (1)
    for (int j = 0; j < g; ++j)
        if (diag[j] > 1) {
            out.factors.push_back(diag[j]);
            out.coord.push_back(j);
        }
    for (int j = 0; j < g; ++j)
        if (diag[j] == 0) {
            out.factors.push_back(0);
            out.coord.push_back(j);
        }
    return out;
}

std::vector<long long> Abelianization::project(const Word& w) const {
    std::vector<long long> e(num_gens, 0);
    for (Letter l : w.letters()) e[letter_gen(l)] += letter_sign(l);
    std::vector<long long> out;
    for (size_t k = 0; k < coord.size(); ++k) {
        long long c = 0;
        for (int i = 0; i < num_gens; ++i) c += e[i] * v[i][coord[k]];
        if (factors[k] > 0) c = ((c % factors[k]) + factors[k]) % factors[k];
        out.push_back(c);
    }
    return out;
}

}  // namespace vck
