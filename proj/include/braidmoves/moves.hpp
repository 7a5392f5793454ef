#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidmoves/braid_word.hpp"
#include "braidmoves/conjugacy.hpp"
#include "braidmoves/garside.hpp"

namespace braidmoves {

// The move alphabet. Every destabilization and rewrite carries its witness;
// legality is an exact equality check in the Garside engine.
enum class MoveKind {
    Conj,       // b -> a b a^-1 with a = sigma_{|g|}^{sign g}
    StabPos,    // B_n -> B_{n+1}, b -> b sigma_n
    DestabPos,  // inverse; legal iff current = w sigma_n
    StabNeg,    // B_n -> B_{n+1}, b -> s_{n-1}..s_k b s_k^-1..s_{n-1}^-1 s_n^-1
    DestabNeg,  // inverse of plain M^-; legal iff current = w sigma_n^-1
    Rewrite,    // replace by an equal word in the same B_n
};

struct Move {
    MoveKind kind;
    int arg = 0;                   // Conj: signed generator g; StabNeg: k
    std::vector<int> witness;      // DestabPos/DestabNeg/Rewrite letters

    static Move conj(int g) { return Move{MoveKind::Conj, g, {}}; }
    static Move stab_pos() { return Move{MoveKind::StabPos, 0, {}}; }
    static Move destab_pos(std::vector<int> w) { return Move{MoveKind::DestabPos, 0, std::move(w)}; }
    static Move stab_neg(int k) { return Move{MoveKind::StabNeg, k, {}}; }
    static Move destab_neg(std::vector<int> w) { return Move{MoveKind::DestabNeg, 0, std::move(w)}; }
    static Move rewrite(std::vector<int> w) { return Move{MoveKind::Rewrite, 0, std::move(w)}; }
};

enum class CertMode { transversal, topological };

inline std::string to_string(CertMode m) {
    return m == CertMode::transversal ? "transversal" : "topological";
}

// Replayable, witness-carrying move sequence connecting two braids.
struct MoveCertificate {
    CertMode mode = CertMode::transversal;
    BraidWord start;
    std::vector<Move> steps;
    BraidWord end;

    int stabilization_count() const {
        int c = 0;
        for (const auto& m : steps)
            if (m.kind != MoveKind::Conj && m.kind != MoveKind::Rewrite)
                ++c;
        return c;
    }
};

inline BraidWord apply_move(const BraidWord& b, const Move& m) {
    const int n = b.strands();
    switch (m.kind) {
        case MoveKind::Conj: {
            int g = m.arg;
            if (g == 0 || std::abs(g) > n - 1)
                throw std::invalid_argument("conj: generator index out of range");
            std::vector<int> w;
            w.reserve(b.length() + 2);
            w.push_back(g);
            w.insert(w.end(), b.letters().begin(), b.letters().end());
            w.push_back(-g);
            return free_reduce(BraidWord(n, std::move(w)));
        }
        case MoveKind::StabPos: {
            std::vector<int> w = b.letters();
            w.push_back(n);
            return BraidWord(n + 1, std::move(w));
        }
        case MoveKind::DestabPos: {
            if (n < 2)
                throw std::invalid_argument("destab+: no strand to remove");
            BraidWord witness(n - 1, m.witness);  // throws if letters leave B_{n-1}
            BraidWord expected = witness.widened(n);
            expected.push_back(n - 1);
            if (!equal(b, expected))
                throw std::invalid_argument("destab+: word does not equal witness * sigma_" +
                                            std::to_string(n - 1));
            return witness;
        }
        case MoveKind::StabNeg: {
            int k = m.arg;
            if (k < 1 || k > n)
                throw std::invalid_argument("stab-: k out of range");
            std::vector<int> w;
            for (int i = n - 1; i >= k; --i)
                w.push_back(i);
            w.insert(w.end(), b.letters().begin(), b.letters().end());
            for (int i = k; i <= n - 1; ++i)
                w.push_back(-i);
            w.push_back(-n);
            return free_reduce(BraidWord(n + 1, std::move(w)));
        }
        case MoveKind::DestabNeg: {
            if (n < 2)
                throw std::invalid_argument("destab-: no strand to remove");
            BraidWord witness(n - 1, m.witness);
            BraidWord expected = witness.widened(n);
            expected.push_back(-(n - 1));
            if (!equal(b, expected))
                throw std::invalid_argument("destab-: word does not equal witness * sigma_" +
                                            std::to_string(n - 1) + "^-1");
            return witness;
        }
        case MoveKind::Rewrite: {
            BraidWord witness(n, m.witness);
            if (!equal(b, witness))
                throw std::invalid_argument("rewrite: witness not equal to current word");
            return witness;
        }
    }
    throw std::logic_error("unreachable move kind");
}

inline BraidWord apply_move(const BraidWord& b, const Move& m, CertMode mode) {
    if (mode == CertMode::transversal &&
        (m.kind == MoveKind::StabNeg || m.kind == MoveKind::DestabNeg))
        throw std::invalid_argument("negative move forbidden in transversal mode");
    return apply_move(b, m);
}

struct VerifyResult {
    bool ok = false;
    int failed_step = -1;  // 0-based step index; steps.size() = final mismatch
    std::string reason;

    explicit operator bool() const { return ok; }
};

// Replays the certificate step by step; reports the first failing step.
inline VerifyResult verify_certificate(const MoveCertificate& c) {
    BraidWord cur = c.start;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        try {
            cur = apply_move(cur, c.steps[i], c.mode);
        } catch (const std::exception& e) {
            return VerifyResult{false, static_cast<int>(i), e.what()};
        }
    }
    if (cur.strands() != c.end.strands())
        return VerifyResult{false, static_cast<int>(c.steps.size()),
                            "final strand count differs from end word"};
    if (!equal(cur, c.end))
        return VerifyResult{false, static_cast<int>(c.steps.size()),
                            "replayed word not equal to end word"};
    return VerifyResult{true, -1, ""};
}

// Conj-move sequence realizing b -> c^-1 b c for a conjugator trace c.
inline std::vector<Move> conj_moves_from_trace(const ConjTrace& trace) {
    std::vector<Move> ms;
    ms.reserve(trace.size());
    for (int g : trace)
        ms.push_back(Move::conj(-g));
    return ms;
}

// A legal positive destabilization reachable from the swept class: apply
// the Conj steps for `conj`, rewrite to `pre_destab`, destabilize to
// `witness`.
struct DestabCandidate {
    ConjTrace conj;        // trace from the scanned word to the representative
    BraidWord pre_destab;  // representative word, literally witness * sigma_{n-1}
    BraidWord witness;     // the destabilized word in B_{n-1}

    std::vector<Move> moves() const {
        std::vector<Move> ms = conj_moves_from_trace(conj);
        ms.push_back(Move::rewrite(pre_destab.letters()));
        ms.push_back(Move::destab_pos(witness.letters()));
        return ms;
    }
};

// Scan a class sweep for representatives whose expansion uses sigma_{n-1}
// exactly once, positively; rotate that letter to the back and read off the
// witness. Heuristic and possibly incomplete, never unsound: every returned
// candidate verifies by construction.
inline std::vector<DestabCandidate> destab_candidates_in_sweep(const ConjugacySweep& sweep) {
    std::vector<DestabCandidate> out;
    const int n = sweep.strands;
    if (n < 2)
        return out;
    for (const auto& entry : sweep.entries) {
        std::vector<int> w = expand(entry.nf).letters();
        int pos = -1, count_pos = 0, count_neg = 0;
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            if (w[i] == n - 1) {
                ++count_pos;
                pos = i;
            } else if (w[i] == -(n - 1)) {
                ++count_neg;
            }
        }
        if (count_pos != 1 || count_neg != 0)
            continue;
        // w = a sigma c; conjugating by c^-1 gives (c a) sigma.
        std::vector<int> tail(w.begin() + pos + 1, w.end());
        std::vector<int> witness(tail);
        witness.insert(witness.end(), w.begin(), w.begin() + pos);
        ConjTrace conj = entry.trace;
        detail::append_trace(conj, inverted_trace(ConjTrace(tail)));
        std::vector<int> pre = witness;
        pre.push_back(n - 1);
        out.push_back(DestabCandidate{std::move(conj), BraidWord(n, std::move(pre)),
                                      BraidWord(n - 1, std::move(witness))});
    }
    return out;
}

inline std::vector<DestabCandidate> destab_candidates(const BraidWord& b,
                                                      const ConjugacyEngine& engine) {
    return destab_candidates_in_sweep(engine.sweep(b));
}

inline std::vector<DestabCandidate> destab_candidates(const BraidWord& b) {
    return destab_candidates(b, ConjugacyEngine());
}

// --- Certificate text format (bit-exact, line-based) ---

namespace detail {

inline std::string letters_suffix(const std::vector<int>& letters) {
    std::string s = " :";
    for (int g : letters)
        s += ' ' + std::to_string(g);
    return s;
}

inline std::vector<int> parse_letters(std::istringstream& in) {
    std::vector<int> letters;
    int g;
    while (in >> g)
        letters.push_back(g);
    if (!in.eof())
        throw std::invalid_argument("certificate: malformed letter list");
    return letters;
}

}  // namespace detail

inline std::string certificate_to_string(const MoveCertificate& c) {
    std::string s = "mode " + to_string(c.mode) + "\n";
    s += "start n=" + std::to_string(c.start.strands()) +
         detail::letters_suffix(c.start.letters()) + "\n";
    for (const auto& m : c.steps) {
        switch (m.kind) {
            case MoveKind::Conj:
                s += "conj " + std::to_string(m.arg) + "\n";
                break;
            case MoveKind::StabPos:
                s += "stab+\n";
                break;
            case MoveKind::DestabPos:
                s += "destab+" + detail::letters_suffix(m.witness) + "\n";
                break;
            case MoveKind::StabNeg:
                s += "stab- k=" + std::to_string(m.arg) + "\n";
                break;
            case MoveKind::DestabNeg:
                s += "destab-" + detail::letters_suffix(m.witness) + "\n";
                break;
            case MoveKind::Rewrite:
                s += "rewrite" + detail::letters_suffix(m.witness) + "\n";
                break;
        }
    }
    s += "end n=" + std::to_string(c.end.strands()) + detail::letters_suffix(c.end.letters()) +
         "\n";
    return s;
}

inline MoveCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    MoveCertificate cert;
    std::string line;
    bool have_mode = false, have_start = false, have_end = false;

    auto endpoint = [](const std::string& body) -> BraidWord {
        auto colon = body.find(':');
        if (colon == std::string::npos || body.rfind("n=", 0) != 0)
            throw std::invalid_argument("certificate: malformed endpoint line");
        int n = std::stoi(body.substr(2, colon - 2));
        std::istringstream ls(body.substr(colon + 1));
        return BraidWord(n, detail::parse_letters(ls));
    };
    auto witness_letters = [](const std::string& rest) -> std::vector<int> {
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("certificate: missing witness");
        std::istringstream ls(rest.substr(colon + 1));
        return detail::parse_letters(ls);
    };

    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        if (line.rfind("mode ", 0) == 0) {
            std::string m = line.substr(5);
            if (m == "transversal")
                cert.mode = CertMode::transversal;
            else if (m == "topological")
                cert.mode = CertMode::topological;
            else
                throw std::invalid_argument("certificate: unknown mode '" + m + "'");
            have_mode = true;
        } else if (line.rfind("start ", 0) == 0) {
            cert.start = endpoint(line.substr(6));
            have_start = true;
        } else if (line.rfind("end ", 0) == 0) {
            cert.end = endpoint(line.substr(4));
            have_end = true;
        } else if (line.rfind("conj ", 0) == 0) {
            cert.steps.push_back(Move::conj(std::stoi(line.substr(5))));
        } else if (line == "stab+") {
            cert.steps.push_back(Move::stab_pos());
        } else if (line.rfind("destab+", 0) == 0) {
            cert.steps.push_back(Move::destab_pos(witness_letters(line.substr(7))));
        } else if (line.rfind("stab- ", 0) == 0) {
            std::string rest = line.substr(6);
            if (rest.rfind("k=", 0) != 0)
                throw std::invalid_argument("certificate: stab- needs k=<int>");
            cert.steps.push_back(Move::stab_neg(std::stoi(rest.substr(2))));
        } else if (line.rfind("destab-", 0) == 0) {
            cert.steps.push_back(Move::destab_neg(witness_letters(line.substr(7))));
        } else if (line.rfind("rewrite", 0) == 0) {
            cert.steps.push_back(Move::rewrite(witness_letters(line.substr(7))));
        } else {
            throw std::invalid_argument("certificate: unrecognized line '" + line + "'");
        }
    }
    if (!have_mode || !have_start || !have_end)
        throw std::invalid_argument("certificate: missing mode/start/end");
    return cert;
}

}  // namespace braidmoves
