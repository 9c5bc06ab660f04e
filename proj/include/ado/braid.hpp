#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ado {

// Artin word: letter +i is sigma_i, -i its inverse, 1 <= i < strands.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> word);

    int writhe() const;
    std::vector<int> permutation() const;  // image of each strand position
    int components() const;                // cycles of the closure permutation

    // "1,-2,1" or "1 -2 1"; empty string gives the empty word.
    static BraidWord parse(const std::string& text, int strands);
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct KnotRecord {
    std::string name;
    BraidWord braid;
    int components = 1;
    std::optional<int> genus;
    std::optional<bool> fibered;
    std::optional<int> crossings;
    std::string source;
};

}  // namespace ado
