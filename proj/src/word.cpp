#include "vck/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace vck {

Word reduce(std::vector<Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter l : letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out));
}

Word Word::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out) l = -l;
    return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return reduce(std::move(cat));
}

int Word::max_gen() const {
    int m = -1;
    for (Letter l : letters_) m = std::max(m, letter_gen(l));
    return m;
}

int Word::count_gen(int g) const {
    int c = 0;
    for (Letter l : letters_)
        if (letter_gen(l) == g) ++c;
    return c;
}

Word Word::substitute(int g, const Word& image) const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    Word inv = image.inverse();
    for (Letter l : letters_) {
        if (letter_gen(l) != g) {
            out.push_back(l);
            continue;
        }
        const Word& rep = (l > 0) ? image : inv;
        out.insert(out.end(), rep.letters().begin(), rep.letters().end());
    }
    return reduce(std::move(out));
}

Word Word::renumber(const std::vector<int>& new_id) const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (Letter l : letters_) {
        int g = letter_gen(l);
        if (g >= (int)new_id.size() || new_id[g] < 0)
            throw std::logic_error("renumber: generator has no image");
        out.push_back(l > 0 ? pos_letter(new_id[g]) : neg_letter(new_id[g]));
    }
    return Word(std::move(out));
}

std::string Word::str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        int g = letter_gen(letters_[i]);
        s += (g < (int)names.size()) ? names[g] : ("x" + std::to_string(g));
        if (letters_[i] < 0) s += "^-1";
    }
    return s;
}

Word cyclic_reduce(const Word& w) {
    std::vector<Letter> v = reduce(w.letters()).letters();
    size_t a = 0, b = v.size();
    while (b - a >= 2 && v[a] == -v[b - 1]) {
        ++a;
        --b;
    }
    return Word(std::vector<Letter>(v.begin() + a, v.begin() + b));
}

Word min_rotation(const Word& w) {
    const auto& v = w.letters();
    if (v.size() < 2) return w;
    std::vector<Letter> best = v;
    std::vector<Letter> rot = v;
    for (size_t i = 1; i < v.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return Word(std::move(best));
}

Word relator_canonical(const Word& w) {
    Word c = cyclic_reduce(w);
    Word a = min_rotation(c);
    Word b = min_rotation(c.inverse());
    return (a < b) ? a : b;
}

Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

}  // namespace vck
