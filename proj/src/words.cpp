#include "tap/words.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace tap {

Word free_reduce(const Word& raw) {
    Word out;
    for (const Letter& l : raw) {
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
    return out;
}

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    for (const Letter& l : b) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word word_conjugate(const Word& w, const Letter& g) {
    return word_concat(word_concat({g}, w), {{g.gen, -g.sign}});
}

long exponent_sum(const Word& w, int gen) {
    long s = 0;
    for (const Letter& l : w)
        if (l.gen == gen) s += l.sign;
    return s;
}

long total_exponent(const Word& w) {
    long s = 0;
    for (const Letter& l : w) s += l.sign;
    return s;
}

void Presentation::validate() const {
    std::set<std::string> seen(generators.begin(), generators.end());
    if (seen.size() != generators.size())
        throw std::invalid_argument("generator names must be pairwise distinct");
    for (const Word& r : relators)
        for (const Letter& l : r)
            if (l.gen < 0 || l.gen >= num_generators())
                throw std::invalid_argument("relator letter indexes unknown generator");
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w) {
        if (!first) os << " ";
        os << names.at(l.gen);
        if (l.sign < 0) os << "^-1";
        first = false;
    }
    return os.str();
}

}  // namespace tap
