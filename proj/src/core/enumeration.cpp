#include "core/enumeration.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/feasibility.hpp"

namespace margin_mcmc {

std::size_t StateSpace::find(const BinaryMatrix& m) const {
    auto it = index.find(m.key());
    return it == index.end() ? npos : it->second;
}

std::size_t StateSpace::index_of(const BinaryMatrix& m) const {
    std::size_t pos = find(m);
    if (pos == npos) {
        throw Error(ErrorCode::invalid_argument, "matrix is not in the state space");
    }
    return pos;
}

namespace {

struct Backtracker {
    const Margins& margins;
    std::size_t cap;
    int m, n;
    BinaryMatrix work;
    std::vector<int> residual_cols;
    std::vector<BinaryMatrix> found;

    Backtracker(const Margins& mg, std::size_t cap_)
        : margins(mg),
          cap(cap_),
          m(static_cast<int>(mg.rows.size())),
          n(static_cast<int>(mg.cols.size())),
          work(static_cast<int>(mg.rows.size()), static_cast<int>(mg.cols.size())),
          residual_cols(mg.cols) {}

    bool remaining_feasible(int next_row) const {
        std::vector<int> rest(margins.rows.begin() + next_row, margins.rows.end());
        return gale_ryser_feasible({std::move(rest), residual_cols});
    }

    void fill_row(int row) {
        if (row == m) {
            found.push_back(work);
            if (found.size() > cap) {
                throw Error(ErrorCode::limit,
                            "state cap " + std::to_string(cap) +
                                " exceeded; at least " + std::to_string(found.size()) +
                                " states exist");
            }
            return;
        }
        std::vector<int> chosen;
        chosen.reserve(margins.rows[row]);
        choose(row, 0, margins.rows[row], chosen);
    }

    void choose(int row, int from, int need, std::vector<int>& chosen) {
        if (need == 0) {
            if (!remaining_feasible(row + 1)) return;
            for (int j : chosen) work.set(row, j, true);
            fill_row(row + 1);
            for (int j : chosen) work.set(row, j, false);
            return;
        }
        // Lexicographic subsets: next 1-column strictly increases.
        for (int j = from; j <= n - need; ++j) {
            if (residual_cols[j] == 0) continue;
            --residual_cols[j];
            chosen.push_back(j);
            choose(row, j + 1, need - 1, chosen);
            chosen.pop_back();
            ++residual_cols[j];
        }
    }
};

}  // namespace

StateSpace enumerate_state_space(const Margins& margins, std::size_t cap) {
    StateSpace space;
    space.margins = margins;
    if (!gale_ryser_feasible(margins)) {
        return space;  // infeasible: empty space, not an error
    }
    Backtracker bt(margins, cap);
    bt.fill_row(0);
    space.states = std::move(bt.found);
    std::sort(space.states.begin(), space.states.end(),
              [](const BinaryMatrix& a, const BinaryMatrix& b) { return a.key() < b.key(); });
    for (std::size_t i = 0; i < space.states.size(); ++i) {
        space.index.emplace(space.states[i].key(), i);
    }
    return space;
}

}  // namespace margin_mcmc
