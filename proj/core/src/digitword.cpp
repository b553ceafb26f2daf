#include "romik/digitword.hpp"

#include <algorithm>
#include <ostream>

namespace romik {

bool is_digit_seq(const std::vector<Digit>& v) {
    return std::all_of(v.begin(), v.end(), [](Digit d) { return d >= 1 && d <= 3; });
}

namespace {
void check_digits(const std::vector<Digit>& v, const char* what) {
    if (!is_digit_seq(v)) throw error(std::string(what) + ": digit out of range");
}
} // namespace

DigitWord::DigitWord(std::vector<Digit> head) : head_(std::move(head)) {
    check_digits(head_, "DigitWord");
}

DigitWord::DigitWord(std::vector<Digit> head, std::vector<Digit> period)
    : head_(std::move(head)), period_(std::move(period)) {
    check_digits(head_, "DigitWord");
    check_digits(period_, "DigitWord");
    canonicalize();
}

std::vector<Digit> primitive_root(const std::vector<Digit>& v) {
    const std::size_t n = v.size();
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
        if (ok) return std::vector<Digit>(v.begin(), v.begin() + p);
    }
    return v;
}

void DigitWord::canonicalize() {
    if (period_.empty()) return;
    period_ = primitive_root(period_);
    while (!head_.empty() && head_.back() == period_.back()) {
        head_.pop_back();
        std::rotate(period_.begin(), period_.end() - 1, period_.end());
    }
}

DigitWord DigitWord::parse(const std::string& s) {
    // Accepts "3122", "3,1,2,2", and an optional parenthesised periodic
    // tail "31(22)" meaning 31 followed by 22 repeated forever.
    std::vector<Digit> head, period;
    std::vector<Digit>* cur = &head;
    bool saw_period = false;
    for (char ch : s) {
        if (ch == ',' || ch == ' ') continue;
        if (ch == '(') {
            if (saw_period) throw error("DigitWord::parse: nested period");
            saw_period = true;
            cur = &period;
            continue;
        }
        if (ch == ')') {
            cur = nullptr;
            continue;
        }
        if (cur == nullptr) throw error("DigitWord::parse: trailing characters");
        if (ch < '1' || ch > '3') throw error("DigitWord::parse: bad digit");
        cur->push_back(ch - '0');
    }
    if (saw_period && period.empty()) throw error("DigitWord::parse: empty period");
    if (saw_period) return DigitWord(std::move(head), std::move(period));
    return DigitWord(std::move(head));
}

Digit DigitWord::at(std::size_t i) const {
    if (i < head_.size()) return head_[i];
    if (period_.empty()) throw error("DigitWord::at: index past end of finite word");
    return period_[(i - head_.size()) % period_.size()];
}

std::vector<Digit> DigitWord::prefix(std::size_t k) const {
    std::vector<Digit> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(at(i));
    return out;
}

DigitWord DigitWord::vee() const {
    auto flip = [](std::vector<Digit> v) {
        for (auto& d : v) d = digit_vee(d);
        return v;
    };
    if (period_.empty()) return DigitWord(flip(head_));
    return DigitWord(flip(head_), flip(period_));
}

DigitWord DigitWord::shifted() const {
    if (!head_.empty()) {
        std::vector<Digit> h(head_.begin() + 1, head_.end());
        if (period_.empty()) return DigitWord(std::move(h));
        return DigitWord(std::move(h), period_);
    }
    if (period_.empty()) throw error("DigitWord::shifted: empty word");
    std::vector<Digit> p = period_;
    std::rotate(p.begin(), p.begin() + 1, p.end());
    return DigitWord({}, std::move(p));
}

std::string DigitWord::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < head_.size(); ++i) {
        if (i) s += ",";
        s += char('0' + head_[i]);
    }
    if (!period_.empty()) {
        if (!head_.empty()) s += ",";
        s += "(";
        for (std::size_t i = 0; i < period_.size(); ++i) {
            if (i) s += ",";
            s += char('0' + period_[i]);
        }
        s += ")^inf";
    }
    s += "]";
    return s;
}

std::ostream& operator<<(std::ostream& os, const DigitWord& w) {
    return os << w.to_string();
}

} // namespace romik
