#include "romik/pyth.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

namespace romik {

PythTriple::PythTriple(Int a_, Int b_, Int c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (int_sign(a) < 0 || int_sign(b) < 0 || int_sign(c) < 1)
        throw invalid_triple_error("PythTriple: nonnegative entries with c >= 1 required");
    if (a * a + b * b != c * c)
        throw invalid_triple_error("PythTriple: not on the circle: " + to_string());
    Int g = gcd(gcd(a, b), c);
    if (g != 1) throw not_primitive_error("PythTriple: common factor " + g.get_str());
}

std::string PythTriple::to_string() const {
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

namespace {
PythTriple from_vec(const Vec3i& v) { return PythTriple(v.x, v.y, v.z); }
} // namespace

std::array<PythTriple, 3> berggren_children(const PythTriple& t) {
    return {from_vec(M1().apply(t.vec())), from_vec(M2().apply(t.vec())),
            from_vec(M3().apply(t.vec()))};
}

Digit berggren_digit(const PythTriple& t) {
    // x > 4/5, 3/5 < x < 4/5 or x < 3/5 with x = a/c.
    Int fa = 5 * t.a;
    if (fa > 4 * t.c) return 1;
    if (fa < 3 * t.c) return 3;
    return 2;
}

std::pair<Digit, PythTriple> berggren_parent(const PythTriple& t) {
    Digit d = berggren_digit(t);
    return {d, from_vec(Md_inv(d).apply(t.vec()))};
}

std::vector<DigitWord> expand_rational(const PythTriple& t) {
    if (t == PythTriple::seed_x()) return {DigitWord({}, {1})};
    if (t == PythTriple::seed_y()) return {DigitWord({}, {3})};
    std::vector<Digit> path;
    PythTriple cur = t;
    const PythTriple p345(3, 4, 5), p435(4, 3, 5);
    while (cur != p345 && cur != p435) {
        auto [d, parent] = berggren_parent(cur);
        path.push_back(d);
        cur = parent;
    }
    std::vector<Digit> first = path, second = path;
    if (cur == p345) {
        // (3,4,5) hangs off (1,0,1) via both M2 and M3.
        first.push_back(2);
        second.push_back(3);
        return {DigitWord(std::move(first), {1}), DigitWord(std::move(second), {1})};
    }
    // (4,3,5) hangs off (0,1,1) via both M1 and M2.
    first.push_back(1);
    second.push_back(2);
    return {DigitWord(std::move(first), {3}), DigitWord(std::move(second), {3})};
}

std::pair<PythTriple, PythTriple> cylinder_bounds(const std::vector<Digit>& digits) {
    if (!is_digit_seq(digits)) throw error("cylinder_bounds: digit out of range");
    Vec3i lo{1, 0, 1}, hi{0, 1, 1};
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        lo = Md(*it).apply(lo);
        hi = Md(*it).apply(hi);
    }
    return {from_vec(lo), from_vec(hi)};
}

std::vector<std::vector<PythTriple>> berggren_levels(const PythTriple& root, int depth) {
    std::vector<std::vector<PythTriple>> levels{{root}};
    for (int k = 0; k < depth; ++k) {
        std::vector<PythTriple> next;
        next.reserve(levels.back().size() * 3);
        for (const auto& t : levels.back())
            for (auto& ch : berggren_children(t)) next.push_back(std::move(ch));
        levels.push_back(std::move(next));
    }
    return levels;
}

void berggren_scan(const Int& max_height, const std::function<void(const PythTriple&)>& fn) {
    std::deque<PythTriple> queue{PythTriple(3, 4, 5), PythTriple(4, 3, 5)};
    while (!queue.empty()) {
        PythTriple t = std::move(queue.front());
        queue.pop_front();
        if (t.c > max_height) continue;
        fn(t);
        for (auto& ch : berggren_children(t))
            if (ch.c <= max_height) queue.push_back(std::move(ch));
    }
}

std::vector<PythTriple> berggren_by_height(const Int& max_height, unsigned threads) {
    std::vector<PythTriple> roots{PythTriple(3, 4, 5), PythTriple(4, 3, 5)};
    std::vector<PythTriple> out;
    // Work items: the two roots plus their level-1 subtrees.
    std::vector<PythTriple> tasks;
    for (const auto& r : roots) {
        if (r.c > max_height) continue;
        out.push_back(r);
        for (auto& ch : berggren_children(r))
            if (ch.c <= max_height) tasks.push_back(std::move(ch));
    }
    auto run_subtree = [&max_height](const PythTriple& sub, std::vector<PythTriple>& sink) {
        std::deque<PythTriple> queue{sub};
        while (!queue.empty()) {
            PythTriple t = std::move(queue.front());
            queue.pop_front();
            sink.push_back(t);
            for (auto& ch : berggren_children(t))
                if (ch.c <= max_height) queue.push_back(std::move(ch));
        }
    };
    if (threads <= 1 || tasks.size() <= 1) {
        for (const auto& sub : tasks) run_subtree(sub, out);
    } else {
        std::vector<std::vector<PythTriple>> sinks(tasks.size());
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        unsigned n = std::min<unsigned>(threads, tasks.size());
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back([&] {
                for (std::size_t j = next.fetch_add(1); j < tasks.size(); j = next.fetch_add(1))
                    run_subtree(tasks[j], sinks[j]);
            });
        for (auto& th : pool) th.join();
        for (auto& s : sinks)
            for (auto& t : s) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace romik
