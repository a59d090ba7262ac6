#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "insdel/errors.hpp"

namespace insdel {

// Edit-distance machinery over arbitrary equality-comparable symbols (field
// elements in the channel, small integers in tests). A substitution is not a
// primitive here: it costs one deletion plus one insertion.

// Length of a longest common subsequence, O(|s||t|) time with two rolling rows.
template <class Sym>
int lcs(std::span<const Sym> s, std::span<const Sym> t) {
    if (s.empty() || t.empty()) return 0;
    std::vector<int> prev(t.size() + 1, 0), cur(t.size() + 1, 0);
    for (std::size_t i = 1; i <= s.size(); ++i) {
        for (std::size_t j = 1; j <= t.size(); ++j) {
            if (s[i - 1] == t[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = prev[j] > cur[j - 1] ? prev[j] : cur[j - 1];
        }
        std::swap(prev, cur);
    }
    return prev[t.size()];
}

template <class Sym>
int lcs(const std::vector<Sym>& s, const std::vector<Sym>& t) {
    return lcs(std::span<const Sym>(s), std::span<const Sym>(t));
}

// ED(s,t) = |s| + |t| - 2 LCS(s,t): the minimal number of insertions plus
// deletions turning s into t.
template <class Sym>
int edit_distance(std::span<const Sym> s, std::span<const Sym> t) {
    return static_cast<int>(s.size() + t.size()) - 2 * lcs(s, t);
}

template <class Sym>
int edit_distance(const std::vector<Sym>& s, const std::vector<Sym>& t) {
    return edit_distance(std::span<const Sym>(s), std::span<const Sym>(t));
}

template <class Sym>
struct EditOp {
    enum class Kind : std::uint8_t { kDelete, kInsert };

    Kind kind;
    // 0-based position in the string state at the time the op applies;
    // deletes address [0, len), inserts address [0, len].
    int pos;
    Sym sym{};  // inserted symbol, meaningful for kInsert only

    static EditOp del(int pos) { return {Kind::kDelete, pos, Sym{}}; }
    static EditOp ins(int pos, Sym s) { return {Kind::kInsert, pos, std::move(s)}; }
};

template <class Sym>
using EditScript = std::vector<EditOp<Sym>>;

template <class Sym>
std::vector<Sym> apply_edits(std::span<const Sym> s, const EditScript<Sym>& script) {
    std::vector<Sym> out(s.begin(), s.end());
    for (const auto& op : script) {
        if (op.kind == EditOp<Sym>::Kind::kDelete) {
            if (op.pos < 0 || static_cast<std::size_t>(op.pos) >= out.size())
                throw PositionOutOfRange("delete position out of range");
            out.erase(out.begin() + op.pos);
        } else {
            if (op.pos < 0 || static_cast<std::size_t>(op.pos) > out.size())
                throw PositionOutOfRange("insert position out of range");
            out.insert(out.begin() + op.pos, op.sym);
        }
    }
    return out;
}

template <class Sym>
std::vector<Sym> apply_edits(const std::vector<Sym>& s, const EditScript<Sym>& script) {
    return apply_edits(std::span<const Sym>(s), script);
}

// Enumerates every canonical edit script with at most `budget` operations, in
// a fixed deterministic order. Canonical form: all deletions first (strictly
// increasing original positions), then insertions in increasing final-cell
// order; any insdel sequence reorders into this form without growing, and
// every string reachable with <= budget operations is produced at least once.
//
// Throws BudgetTooLarge upfront when the total script count exceeds `cap`:
// exhaustive claims must fail loudly rather than silently truncate.
template <class Sym>
class EditScriptEnumerator {
  public:
    EditScriptEnumerator(std::vector<Sym> s, int budget, std::vector<Sym> alphabet,
                         std::uint64_t cap = 10'000'000)
        : s_(std::move(s)), budget_(budget), alphabet_(std::move(alphabet)) {
        if (budget_ < 0) throw Error("budget must be >= 0");
        total_ = count_scripts();
        if (total_ > cap) throw BudgetTooLarge("edit-script enumeration exceeds the configured cap");
        enter_block(0, 0);  // (0,0) is always a valid block: the empty script
    }

    std::uint64_t total_count() const { return total_; }

    std::optional<EditScript<Sym>> next() {
        if (exhausted_) return std::nullopt;
        EditScript<Sym> script = build();
        advance();
        return script;
    }

  private:
    std::uint64_t count_scripts() const {
        const std::uint64_t len = s_.size();
        const std::uint64_t a = alphabet_.size();
        unsigned __int128 total = 0;
        for (int nd = 0; nd <= budget_ && static_cast<std::uint64_t>(nd) <= len; ++nd) {
            for (int ni = 0; ni + nd <= budget_; ++ni) {
                unsigned __int128 t = binom(len, nd) * binom(len - nd + ni, ni);
                for (int j = 0; j < ni; ++j) t *= a;
                total += t;
                if (total > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
            }
        }
        return static_cast<std::uint64_t>(total);
    }

    static unsigned __int128 binom(std::uint64_t n, std::uint64_t k) {
        if (k > n) return 0;
        unsigned __int128 r = 1;
        for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    }

    bool block_valid(int nd, int ni) const {
        if (static_cast<std::size_t>(nd) > s_.size()) return false;
        if (ni > 0 && alphabet_.empty()) return false;
        return true;
    }

    void enter_block(int nd, int ni) {
        nd_ = nd;
        ni_ = ni;
        del_sel_.resize(nd_);
        for (int i = 0; i < nd_; ++i) del_sel_[i] = i;
        cell_sel_.resize(ni_);
        for (int i = 0; i < ni_; ++i) cell_sel_[i] = i;
        sym_idx_.assign(ni_, 0);
    }

    void advance() {
        // symbol odometer, fastest
        for (int i = ni_ - 1; i >= 0; --i) {
            if (++sym_idx_[i] < alphabet_.size()) return;
            sym_idx_[i] = 0;
        }
        // insertion cells: combination over [0, |s| - nd + ni)
        const int cells = static_cast<int>(s_.size()) - nd_ + ni_;
        if (next_combination(cell_sel_, cells)) return;
        for (int i = 0; i < ni_; ++i) cell_sel_[i] = i;
        // deletion positions: combination over [0, |s|)
        if (next_combination(del_sel_, static_cast<int>(s_.size()))) return;
        // next (nd, ni) block: ni ascends within a fixed deletion count
        int nd = nd_, ni = ni_;
        for (;;) {
            if (nd + ni < budget_) {
                ++ni;
            } else {
                ++nd;
                ni = 0;
            }
            if (nd > budget_) {
                exhausted_ = true;
                return;
            }
            if (block_valid(nd, ni)) {
                enter_block(nd, ni);
                return;
            }
        }
    }

    static bool next_combination(std::vector<int>& sel, int n) {
        const int k = static_cast<int>(sel.size());
        for (int i = k - 1; i >= 0; --i) {
            if (sel[i] < n - (k - i)) {
                ++sel[i];
                for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    EditScript<Sym> build() const {
        EditScript<Sym> script;
        script.reserve(nd_ + ni_);
        // deleting original position p_j as the j-th op shifts it left by j
        for (int j = 0; j < nd_; ++j) script.push_back(EditOp<Sym>::del(del_sel_[j] - j));
        for (int j = 0; j < ni_; ++j)
            script.push_back(EditOp<Sym>::ins(cell_sel_[j], alphabet_[sym_idx_[j]]));
        return script;
    }

    std::vector<Sym> s_;
    int budget_;
    std::vector<Sym> alphabet_;
    std::uint64_t total_ = 0;

    int nd_ = 0;
    int ni_ = 0;
    std::vector<int> del_sel_;
    std::vector<int> cell_sel_;
    std::vector<std::size_t> sym_idx_;
    bool exhausted_ = false;
};

// Convenience: materialize the full enumeration (tests, small budgets).
template <class Sym>
std::vector<EditScript<Sym>> enumerate_edit_scripts(const std::vector<Sym>& s, int budget,
                                                    const std::vector<Sym>& alphabet,
                                                    std::uint64_t cap = 10'000'000) {
    EditScriptEnumerator<Sym> en(s, budget, alphabet, cap);
    std::vector<EditScript<Sym>> out;
    while (auto script = en.next()) out.push_back(std::move(*script));
    return out;
}

}  // namespace insdel
