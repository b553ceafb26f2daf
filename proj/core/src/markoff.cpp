#include "romik/markoff.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace romik {

MarkoffTriple::MarkoffTriple(Int x_, Int y1_, Int y2_)
    : x(std::move(x_)), y1(std::move(y1_)), y2(std::move(y2_)) {
    if (int_sign(x) <= 0 || int_sign(y1) <= 0 || int_sign(y2) <= 0)
        throw invalid_triple_error("MarkoffTriple: positive entries required");
    if (y1 < y2) std::swap(y1, y2);
    if (!is_markoff(x, y1, y2))
        throw invalid_triple_error("MarkoffTriple: equation not satisfied: " + to_string());
}

std::string MarkoffTriple::to_string() const {
    return "(" + x.get_str() + ";" + y1.get_str() + "," + y2.get_str() + ")";
}

bool is_markoff(const Int& x, const Int& y1, const Int& y2) {
    return 2 * x * x + y1 * y1 + y2 * y2 == 4 * x * y1 * y2;
}

std::array<MarkoffTriple, 3> markoff_neighbors(const MarkoffTriple& t) {
    return {MarkoffTriple(2 * t.y1 * t.y2 - t.x, t.y1, t.y2),
            MarkoffTriple(t.x, 4 * t.x * t.y2 - t.y1, t.y2),
            MarkoffTriple(t.x, t.y1, 4 * t.x * t.y1 - t.y2)};
}

std::vector<MarkoffTriple> markoff_children(const MarkoffTriple& t, const MarkoffTriple& parent) {
    std::vector<MarkoffTriple> out;
    for (auto& n : markoff_neighbors(t))
        if (n != parent && n != t) out.push_back(std::move(n));
    // Neighbour order already encodes x-replacement first, then
    // replace-larger-y, then replace-smaller-y (y1 >= y2 canonically).
    return out;
}

std::vector<std::vector<MarkoffTriple>> enumerate_markoff(int depth) {
    if (depth < 0) throw error("enumerate_markoff: negative depth");
    std::vector<std::vector<MarkoffTriple>> levels{{MarkoffTriple::root()}};
    std::vector<std::vector<MarkoffTriple>> parents{{MarkoffTriple::singular()}};
    for (int k = 0; k < depth; ++k) {
        std::vector<MarkoffTriple> next, next_par;
        for (std::size_t i = 0; i < levels.back().size(); ++i) {
            const auto& t = levels.back()[i];
            auto ch = markoff_children(t, parents.back()[i]);
            assert(ch.size() == 2 && "nonsingular triples have two children");
            for (auto& c : ch) {
                next.push_back(std::move(c));
                next_par.push_back(t);
            }
        }
        levels.push_back(std::move(next));
        parents.push_back(std::move(next_par));
    }
    return levels;
}

std::pair<std::vector<Int>, std::vector<Int>> markoff_sets(int depth) {
    std::set<Int> xs, ys;
    xs.insert(1); // (1;1,1)
    ys.insert(1);
    for (const auto& level : enumerate_markoff(depth))
        for (const auto& t : level) {
            xs.insert(t.x);
            ys.insert(t.y1); // y1 = max(y1, y2)
        }
    return {std::vector<Int>(xs.begin(), xs.end()), std::vector<Int>(ys.begin(), ys.end())};
}

MarkoffTriple triple_from_christoffel(const ChristoffelWord& w) {
    if (w.trivial()) throw trivial_word_error("triple_from_christoffel: trivial word");
    auto [u, v] = standard_factorization(w);
    Int mu = markoff_number(u.word), mv = markoff_number(v.word), mw = markoff_number(w.word);
    int evens = int(u.even()) + int(v.even()) + int(w.even());
    if (evens != 1) throw error("triple_from_christoffel: parity structure violated");
    if (w.even()) return MarkoffTriple(mw, mu, mv);
    if (u.even()) return MarkoffTriple(mu, mv, mw);
    return MarkoffTriple(mv, mu, mw);
}

ChristoffelWord ChristoffelNode::word() const {
    return ChristoffelWord{u.word + v.word, u.t + v.t, u.s + v.s, false};
}

std::vector<std::vector<ChristoffelNode>> christoffel_tree(int depth) {
    if (depth < 0) throw error("christoffel_tree: negative depth");
    ChristoffelWord a{"a", 0, 1, false}, b{"b", 1, 0, false};
    std::vector<std::vector<ChristoffelNode>> levels{{ChristoffelNode{a, b}}};
    for (int k = 0; k < depth; ++k) {
        std::vector<ChristoffelNode> next;
        next.reserve(levels.back().size() * 2);
        for (const auto& n : levels.back()) {
            ChristoffelWord w = n.word();
            next.push_back(ChristoffelNode{n.u, w});
            next.push_back(ChristoffelNode{w, n.v});
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

std::vector<SpectrumEntry> spectrum_below_2(int n) {
    if (n < 1) throw error("spectrum_below_2: n must be positive");
    // Best-first walk of the Christoffel tree. Along every edge the Markoff
    // number at least triples, which makes L^2 = 4 - {1,2}/m^2 strictly
    // increasing from parent to child regardless of parity; that is checked
    // at each expansion rather than assumed, so a min-heap pops the values
    // in globally sorted order.
    struct Item {
        SpectrumEntry entry;
        std::optional<ChristoffelNode> node; // absent for the trivial words
    };
    auto later = [](const Item& a, const Item& b) {
        if (a.entry.L_squared != b.entry.L_squared)
            return a.entry.L_squared > b.entry.L_squared;
        return a.entry.word.word > b.entry.word.word;
    };
    std::vector<Item> heap;
    auto push = [&](Item it) {
        heap.push_back(std::move(it));
        std::push_heap(heap.begin(), heap.end(), later);
    };
    push(Item{lagrange_of_christoffel(ChristoffelWord{"b", 1, 0, false}), std::nullopt});
    push(Item{lagrange_of_christoffel(ChristoffelWord{"a", 0, 1, false}), std::nullopt});
    ChristoffelWord a{"a", 0, 1, false}, b{"b", 1, 0, false};
    ChristoffelNode root{a, b};
    push(Item{lagrange_of_christoffel(root.word()), root});

    std::vector<SpectrumEntry> out;
    while (!heap.empty() && out.size() < std::size_t(n)) {
        std::pop_heap(heap.begin(), heap.end(), later);
        Item cur = std::move(heap.back());
        heap.pop_back();
        // identical values from distinct words collapse to one entry
        // (x-kind and y-kind can never collide: 4 - 1/x^2 = 4 - 2/y^2 would
        // force y^2 = 2 x^2)
        if (out.empty() || out.back().L_squared != cur.entry.L_squared)
            out.push_back(cur.entry);
        if (cur.node) {
            ChristoffelWord w = cur.node->word();
            for (ChristoffelNode child :
                 {ChristoffelNode{cur.node->u, w}, ChristoffelNode{w, cur.node->v}}) {
                Item it{lagrange_of_christoffel(child.word()), child};
                if (!(cur.entry.L_squared < it.entry.L_squared))
                    throw error("spectrum_below_2: branch monotonicity violated at " +
                                it.entry.word.word);
                push(std::move(it));
            }
        }
    }
    return out;
}

} // namespace romik
