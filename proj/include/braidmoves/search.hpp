#pragma once

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidmoves/alexander.hpp"
#include "braidmoves/braid_word.hpp"
#include "braidmoves/closure.hpp"
#include "braidmoves/conjugacy.hpp"
#include "braidmoves/garside.hpp"
#include "braidmoves/moves.hpp"

namespace braidmoves {

struct SearchBudget {
    int max_strands = 8;
    int max_moves = 12;  // (de)stabilization edges along the connecting path
    long max_nodes = 200000;
    int max_class_sweep = 5000;

    void validate(const BraidWord& a, const BraidWord& b) const {
        if (max_strands < 1 || max_moves < 1 || max_nodes < 1 || max_class_sweep < 1)
            throw std::invalid_argument("search budget: all limits must be positive");
        if (max_strands < a.strands() || max_strands < b.strands())
            throw std::invalid_argument("search budget: max_strands below an endpoint");
    }
};

enum class SearchStatus { Found, NotFoundWithinBudget, PrunedInvariant };

struct SearchOutcome {
    SearchStatus status = SearchStatus::NotFoundWithinBudget;
    std::optional<MoveCertificate> certificate;  // set iff Found
    std::string prune_reason;                    // set iff PrunedInvariant
    long nodes_examined = 0;
};

namespace detail {

struct SearchNode {
    BraidWord word;
    int parent = -1;
    std::vector<Move> from_parent;
    int depth = 0;  // stabilization edges from the root
};

struct SeenEntry {
    int node = -1;
    ConjTrace trace;  // node.word -> this normal form
};

inline void inverse_step(const Move& m, const BraidWord& prev, const BraidWord& cur,
                         std::vector<Move>& out) {
    switch (m.kind) {
        case MoveKind::Conj:
            out.push_back(Move::conj(-m.arg));
            break;
        case MoveKind::StabPos:
            out.push_back(Move::destab_pos(prev.letters()));
            break;
        case MoveKind::DestabPos:
            out.push_back(Move::stab_pos());
            break;
        case MoveKind::Rewrite:
            out.push_back(Move::rewrite(prev.letters()));
            break;
        case MoveKind::StabNeg: {
            // cur = s_{n-1}..s_k prev s_k^-1..s_{n-1}^-1 s_n^-1 in B_{n+1}
            int n = prev.strands();
            int k = m.arg;
            std::vector<int> w;
            for (int i = n - 1; i >= k; --i)
                w.push_back(i);
            w.insert(w.end(), prev.letters().begin(), prev.letters().end());
            for (int i = k; i <= n - 1; ++i)
                w.push_back(-i);
            BraidWord witness = free_reduce(BraidWord(n, std::move(w)));
            out.push_back(Move::destab_neg(witness.letters()));
            for (int i = n - 1; i >= k; --i)
                out.push_back(Move::conj(-i));
            break;
        }
        case MoveKind::DestabNeg:
            out.push_back(Move::stab_neg(cur.strands()));
            break;
    }
}

}  // namespace detail

// Budgeted bidirectional breadth-first search over conjugacy classes
// connected by positive (de)stabilizations; in topological mode negative
// stabilizations join the edge set and self-linking pruning is disabled.
// FOUND certificates always verify in the requested mode.
class EquivalenceSearch {
public:
    EquivalenceSearch(const BraidWord& a, const BraidWord& b, SearchBudget budget, CertMode mode)
        : a_(a), b_(b), budget_(budget), mode_(mode),
          engine_(budget.max_class_sweep) {
        budget_.validate(a, b);
    }

    SearchOutcome run() {
        SearchOutcome out;

        if (std::string reason = prune_reason(); !reason.empty()) {
            out.status = SearchStatus::PrunedInvariant;
            out.prune_reason = reason;
            return out;
        }
        if (a_ == b_) {
            out.status = SearchStatus::Found;
            out.certificate = MoveCertificate{mode_, a_, {}, b_};
            return out;
        }

        std::optional<MoveCertificate> cert;
        if (add_candidate(0, a_, -1, {}, 0, cert) && cert) {
            out.status = SearchStatus::Found;
            out.certificate = std::move(cert);
            out.nodes_examined = nodes_examined_;
            return out;
        }
        if (add_candidate(1, b_, -1, {}, 0, cert) && cert) {
            out.status = SearchStatus::Found;
            out.certificate = std::move(cert);
            out.nodes_examined = nodes_examined_;
            return out;
        }

        while ((!frontier_[0].empty() || !frontier_[1].empty()) &&
               nodes_examined_ < budget_.max_nodes) {
            int side;
            if (frontier_[0].empty())
                side = 1;
            else if (frontier_[1].empty())
                side = 0;
            else
                side = frontier_[0].size() <= frontier_[1].size() ? 0 : 1;

            std::vector<int> layer;
            layer.swap(frontier_[side]);
            for (int id : layer) {
                if (nodes_examined_ >= budget_.max_nodes)
                    break;
                if (expand_node(side, id, cert)) {
                    out.status = SearchStatus::Found;
                    out.certificate = std::move(cert);
                    out.nodes_examined = nodes_examined_;
                    return out;
                }
            }
        }
        out.status = SearchStatus::NotFoundWithinBudget;
        out.nodes_examined = nodes_examined_;
        return out;
    }

private:
    std::string prune_reason() const {
        if (component_count(a_) != component_count(b_))
            return "component count differs";
        if (mode_ == CertMode::transversal && self_linking(a_) != self_linking(b_))
            return "self-linking differs";
        if (alexander_poly(a_) != alexander_poly(b_))
            return "alexander polynomial differs";
        return "";
    }

    // Examine a candidate word on one side: sweep its class, detect a meet
    // with the other side, dedup against this side, otherwise record a node.
    // Returns true when a verified certificate was produced.
    bool add_candidate(int side, const BraidWord& word, int parent, std::vector<Move> from_parent,
                       int depth, std::optional<MoveCertificate>& cert) {
        ++nodes_examined_;
        ConjugacySweep sweep = engine_.sweep(word);

        for (const auto& e : sweep.entries) {
            auto hit = seen_[1 - side].find(e.nf);
            if (hit == seen_[1 - side].end())
                continue;
            const auto& other = hit->second;
            int other_depth = nodes_[1 - side][other.node].depth;
            if (depth + other_depth > budget_.max_moves)
                continue;
            cert = assemble(side, word, parent, from_parent, e.trace, e.nf, other.node,
                            other.trace);
            return true;
        }

        for (const auto& e : sweep.entries)
            if (seen_[side].count(e.nf))
                return false;  // class already visited on this side

        int id = static_cast<int>(nodes_[side].size());
        nodes_[side].push_back(detail::SearchNode{word, parent, std::move(from_parent), depth});
        for (const auto& e : sweep.entries)
            seen_[side].emplace(e.nf, detail::SeenEntry{id, e.trace});
        sweeps_[side].emplace(id, std::move(sweep));
        frontier_[side].push_back(id);
        return false;
    }

    bool expand_node(int side, int id, std::optional<MoveCertificate>& cert) {
        ConjugacySweep sweep;
        {
            auto it = sweeps_[side].find(id);
            sweep = std::move(it->second);
            sweeps_[side].erase(it);
        }
        const int n = nodes_[side][id].word.strands();
        const int child_depth = nodes_[side][id].depth + 1;
        if (child_depth > budget_.max_moves)
            return false;

        // one stabilization up, from the canonical representative
        if (n + 1 <= budget_.max_strands) {
            const SweepEntry& key = sweep.key_entry();
            BraidWord key_word = expand(key.nf);
            std::vector<Move> moves = conj_moves_from_trace(key.trace);
            moves.push_back(Move::rewrite(key_word.letters()));
            moves.push_back(Move::stab_pos());
            BraidWord child = key_word.widened(n + 1);
            child.push_back(n);
            if (add_candidate(side, child, id, std::move(moves), child_depth, cert))
                return true;
            if (mode_ == CertMode::topological) {
                std::vector<Move> nmoves = conj_moves_from_trace(key.trace);
                nmoves.push_back(Move::rewrite(key_word.letters()));
                nmoves.push_back(Move::stab_neg(n));
                BraidWord nchild = key_word.widened(n + 1);
                nchild.push_back(-n);
                if (add_candidate(side, nchild, id, std::move(nmoves), child_depth, cert))
                    return true;
            }
        }

        // destabilizations discovered in the class sweep
        if (n >= 2) {
            for (const auto& cand : destab_candidates_in_sweep(sweep)) {
                if (nodes_examined_ >= budget_.max_nodes)
                    break;
                if (add_candidate(side, cand.witness, id, cand.moves(), child_depth, cert))
                    return true;
            }
            if (mode_ == CertMode::topological) {
                for (const auto& cand : negative_destab_candidates(sweep)) {
                    if (nodes_examined_ >= budget_.max_nodes)
                        break;
                    if (add_candidate(side, cand.witness, id, cand.moves, child_depth, cert))
                        return true;
                }
            }
        }
        return false;
    }

    struct NegDestabCandidate {
        std::vector<Move> moves;
        BraidWord witness;
    };

    // Mirror of destab_candidates_in_sweep for sigma_{n-1}^{-1}.
    std::vector<NegDestabCandidate> negative_destab_candidates(const ConjugacySweep& sweep) const {
        std::vector<NegDestabCandidate> out;
        const int n = sweep.strands;
        for (const auto& entry : sweep.entries) {
            std::vector<int> w = expand(entry.nf).letters();
            int pos = -1, count_pos = 0, count_neg = 0;
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                if (w[i] == n - 1)
                    ++count_pos;
                else if (w[i] == -(n - 1)) {
                    ++count_neg;
                    pos = i;
                }
            }
            if (count_neg != 1 || count_pos != 0)
                continue;
            std::vector<int> tail(w.begin() + pos + 1, w.end());
            std::vector<int> witness(tail);
            witness.insert(witness.end(), w.begin(), w.begin() + pos);
            ConjTrace conj = entry.trace;
            detail::append_trace(conj, inverted_trace(ConjTrace(tail)));
            std::vector<int> pre = witness;
            pre.push_back(-(n - 1));
            std::vector<Move> moves = conj_moves_from_trace(conj);
            moves.push_back(Move::rewrite(pre));
            moves.push_back(Move::destab_neg(witness));
            out.push_back(NegDestabCandidate{std::move(moves), BraidWord(n - 1, std::move(witness))});
        }
        return out;
    }

    std::vector<Move> path_moves(int side, int id) const {
        std::vector<std::vector<Move> const*> chunks;
        for (int cur = id; cur >= 0; cur = nodes_[side][cur].parent)
            chunks.push_back(&nodes_[side][cur].from_parent);
        std::vector<Move> moves;
        for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
            moves.insert(moves.end(), (*it)->begin(), (*it)->end());
        return moves;
    }

    // Stitch: root_f -> meet word -> root_b, inverting the backward side.
    MoveCertificate assemble(int new_side, const BraidWord& new_word, int new_parent,
                             const std::vector<Move>& new_from_parent, const ConjTrace& new_trace,
                             const NormalForm& meet, int other_id, const ConjTrace& other_trace) {
        BraidWord meet_word = expand(meet);

        std::vector<Move> new_path = new_parent >= 0 ? path_moves(new_side, new_parent)
                                                     : std::vector<Move>{};
        new_path.insert(new_path.end(), new_from_parent.begin(), new_from_parent.end());
        {
            auto conj = conj_moves_from_trace(new_trace);
            new_path.insert(new_path.end(), conj.begin(), conj.end());
            new_path.push_back(Move::rewrite(meet_word.letters()));
        }

        std::vector<Move> other_path = path_moves(1 - new_side, other_id);
        {
            auto conj = conj_moves_from_trace(other_trace);
            other_path.insert(other_path.end(), conj.begin(), conj.end());
            other_path.push_back(Move::rewrite(meet_word.letters()));
        }

        const BraidWord& new_root = new_side == 0 ? a_ : b_;
        const BraidWord& other_root = new_side == 0 ? b_ : a_;

        // forward half: a-side path to the meet word
        const std::vector<Move>& fwd = new_side == 0 ? new_path : other_path;
        const std::vector<Move>& bwd = new_side == 0 ? other_path : new_path;
        const BraidWord& bwd_root = new_side == 0 ? other_root : new_root;

        std::vector<Move> steps = fwd;

        // invert the backward half by replaying it for the literal words
        std::vector<BraidWord> words{bwd_root};
        for (const auto& m : bwd)
            words.push_back(apply_move(words.back(), m));
        for (std::size_t i = bwd.size(); i-- > 0;)
            detail::inverse_step(bwd[i], words[i], words[i + 1], steps);

        MoveCertificate cert{mode_, a_, std::move(steps), b_};
        VerifyResult vr = verify_certificate(cert);
        if (!vr.ok)
            throw std::logic_error("search produced a non-verifying certificate at step " +
                                   std::to_string(vr.failed_step) + ": " + vr.reason);
        return cert;
    }

    BraidWord a_, b_;
    SearchBudget budget_;
    CertMode mode_;
    ConjugacyEngine engine_;
    long nodes_examined_ = 0;
    std::vector<detail::SearchNode> nodes_[2];
    std::vector<int> frontier_[2];
    std::unordered_map<NormalForm, detail::SeenEntry, NormalFormHash> seen_[2];
    std::unordered_map<int, ConjugacySweep> sweeps_[2];
};

inline SearchOutcome search(const BraidWord& a, const BraidWord& b,
                            SearchBudget budget = SearchBudget(),
                            CertMode mode = CertMode::transversal) {
    return EquivalenceSearch(a, b, budget, mode).run();
}

// Target family for unknot candidates: sigma_1^-1 ... sigma_{n-1}^-1 with
// n = (1 - sl)/2 pinned by the self-linking number.
inline BraidWord standard_unknot_braid(int n) {
    std::vector<int> letters;
    for (int i = 1; i < n; ++i)
        letters.push_back(-i);
    return BraidWord(n, std::move(letters));
}

inline SearchOutcome reduce_to_standard_unknot(const BraidWord& b,
                                               SearchBudget budget = SearchBudget()) {
    if (component_count(b) != 1)
        throw std::invalid_argument("reduce-unknot: closure is not a knot");
    if (alexander_poly(b) != LaurentPoly::constant(1))
        throw std::invalid_argument("reduce-unknot: alexander polynomial is not 1");
    int sl = self_linking(b);
    if (((sl % 2) + 2) % 2 == 0)
        throw std::invalid_argument("reduce-unknot: even self-linking on a knot");
    int n = (1 - sl) / 2;
    if (n < 1)
        throw std::invalid_argument("reduce-unknot: self-linking above the unknot range");
    budget.max_strands = std::max({budget.max_strands, n, b.strands()});
    return search(b, standard_unknot_braid(n), budget, CertMode::transversal);
}

}  // namespace braidmoves
