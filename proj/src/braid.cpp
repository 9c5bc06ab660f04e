#include "ado/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ado/error.hpp"

namespace ado {

BraidWord::BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "braid needs at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= n)
            throw Error(ErrorKind::InvalidArgument, "letter " + std::to_string(l) + " out of range for " +
                                                        std::to_string(n) + " strands");
}

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters) w += l > 0 ? 1 : -1;
    return w;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> pos(static_cast<size_t>(strands));
    std::iota(pos.begin(), pos.end(), 0);
    // Track where the strand starting at each position ends up.
    for (int l : letters) {
        const int i = std::abs(l) - 1;
        for (int& x : pos) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
    }
    return pos;
}

int BraidWord::components() const {
    const std::vector<int> perm = permutation();
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (size_t x = s; !seen[x]; x = static_cast<size_t>(perm[x])) seen[x] = true;
    }
    return cycles;
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
    std::string t = text;
    for (char& c : t)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream is(t);
    std::vector<int> word;
    std::string tok;
    while (is >> tok) {
        char* end = nullptr;
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (*end != '\0') throw Error(ErrorKind::ParseError, "bad braid letter '" + tok + "'");
        word.push_back(static_cast<int>(v));
    }
    return BraidWord(strands, std::move(word));
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) os << (i ? "," : "") << letters[i];
    return os.str();
}

}  // namespace ado
