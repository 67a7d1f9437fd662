#include "mms/independent_set.hpp"

#include <algorithm>

namespace mms {

namespace {

class Solver {
public:
    explicit Solver(const std::vector<Bitset>& adjacency) : adj_(adjacency) {}

    std::vector<std::size_t> run() {
        const std::size_t n = adj_.size();
        Bitset all(n);
        all.set();
        expand(all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(Bitset candidates) {
        // Greedy clique cover: vertices of one clique contribute at most one to
        // any independent set, so the cover index bounds what remains.
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        Bitset uncovered = candidates;
        std::size_t cliques = 0;
        while (uncovered.any()) {
            ++cliques;
            Bitset joinable = uncovered;
            for (auto v = joinable.find_first(); v != Bitset::npos; v = joinable.find_first()) {
                uncovered.reset(v);
                joinable.reset(v);
                joinable &= adj_[v];
                order.push_back(v);
                bound.push_back(cliques);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_.size()) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            Bitset next = candidates - adj_[v];
            next.reset(v);
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    const std::vector<Bitset>& adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

} // namespace

std::vector<std::size_t> maximum_independent_set(const std::vector<Bitset>& adjacency) {
    if (adjacency.empty()) return {};
    return Solver(adjacency).run();
}

std::vector<std::size_t> greedy_independent_set(const std::vector<Bitset>& adjacency) {
    const std::size_t n = adjacency.size();
    Bitset alive(n);
    alive.set();
    std::vector<std::size_t> chosen;
    while (alive.any()) {
        std::size_t pick = Bitset::npos;
        std::size_t pick_degree = 0;
        for (auto v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
            const std::size_t d = (adjacency[v] & alive).count();
            if (pick == Bitset::npos || d < pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        chosen.push_back(pick);
        alive -= adjacency[pick];
        alive.reset(pick);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace mms
