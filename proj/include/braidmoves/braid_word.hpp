#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidmoves {

// A word in the braid group B_n. Letters are signed generator indices:
// g > 0 encodes sigma_g, g < 0 encodes sigma_{|g|}^{-1}, 1 <= |g| <= n-1.
// Words are not auto-reduced; equality in B_n lives in garside.hpp.
class BraidWord {
public:
    BraidWord() : strands_(1) {}

    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 1)
            throw std::invalid_argument("braid word needs at least one strand");
    }

    BraidWord(int strands, std::vector<int> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands < 1)
            throw std::invalid_argument("braid word needs at least one strand");
        for (int g : letters_)
            check_letter(g);
    }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    void push_back(int g) {
        check_letter(g);
        letters_.push_back(g);
    }

    // Same word viewed in a larger group (standard inclusion B_n < B_m).
    BraidWord widened(int strands) const {
        if (strands < strands_)
            throw std::invalid_argument("cannot shrink strand count");
        return BraidWord(strands, letters_);
    }

    bool operator==(const BraidWord& o) const {
        return strands_ == o.strands_ && letters_ == o.letters_;
    }
    bool operator!=(const BraidWord& o) const { return !(*this == o); }

private:
    void check_letter(int g) const {
        if (g == 0 || std::abs(g) > strands_ - 1)
            throw std::invalid_argument("letter " + std::to_string(g) +
                                        " out of range for B_" + std::to_string(strands_));
    }

    int strands_;
    std::vector<int> letters_;
};

// Concatenation a.b; strand counts must agree.
inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("compose: strand count mismatch");
    std::vector<int> ls = a.letters();
    ls.insert(ls.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(ls));
}

// Group inverse: letters reversed, signs flipped.
inline BraidWord invert(const BraidWord& b) {
    std::vector<int> ls(b.letters().rbegin(), b.letters().rend());
    for (int& g : ls)
        g = -g;
    return BraidWord(b.strands(), std::move(ls));
}

inline std::vector<int> free_reduce_letters(const std::vector<int>& in) {
    std::vector<int> out;
    out.reserve(in.size());
    for (int g : in) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

// Cancels adjacent g, -g pairs to a fixpoint.
inline BraidWord free_reduce(const BraidWord& b) {
    return BraidWord(b.strands(), free_reduce_letters(b.letters()));
}

// Exponent sum; the algebraic degree deg(b).
inline int degree(const BraidWord& b) {
    int d = 0;
    for (int g : b.letters())
        d += g > 0 ? 1 : -1;
    return d;
}

// Block-diagonal juxtaposition: b's generators shifted past a's strands.
inline BraidWord block_sum(const BraidWord& a, const BraidWord& b) {
    std::vector<int> ls = a.letters();
    int shift = a.strands();
    for (int g : b.letters())
        ls.push_back(g > 0 ? g + shift : g - shift);
    return BraidWord(a.strands() + b.strands(), std::move(ls));
}

// --- Braid text format ---
// Line 1: n=<int>; line 2: space-separated signed letters (may be empty).
// '#' starts a comment.

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline BraidWord read_braid(std::istream& in) {
    std::string line;
    // first non-blank, non-comment line: n=<int>
    int n = -1;
    while (std::getline(in, line)) {
        std::string s = strip_comment(line);
        auto first = s.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        s = s.substr(first);
        if (s.rfind("n=", 0) != 0)
            throw std::invalid_argument("braid format: expected 'n=<int>' line");
        try {
            n = std::stoi(s.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("braid format: bad strand count");
        }
        break;
    }
    if (n < 1)
        throw std::invalid_argument("braid format: missing or invalid strand count");
    std::vector<int> letters;
    if (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        int g;
        while (ls >> g) {
            if (g == 0 || std::abs(g) >= n)
                throw std::invalid_argument("braid format: letter out of range");
            letters.push_back(g);
        }
        if (!ls.eof()) {
            std::string tail;
            ls.clear();
            if (ls >> tail)
                throw std::invalid_argument("braid format: non-integer letter");
        }
    }
    return BraidWord(n, std::move(letters));
}

inline BraidWord parse_braid(const std::string& text) {
    std::istringstream in(text);
    return read_braid(in);
}

inline std::string letters_to_string(const std::vector<int>& letters) {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(letters[i]);
    }
    return s;
}

inline void write_braid(std::ostream& out, const BraidWord& b) {
    out << "n=" << b.strands() << '\n' << letters_to_string(b.letters()) << '\n';
}

inline std::string braid_to_string(const BraidWord& b) {
    std::ostringstream out;
    write_braid(out, b);
    return out.str();
}

}  // namespace braidmoves
