#pragma once

#include "romik/bigint.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace romik {

using Digit = int; // 1, 2 or 3

inline Digit digit_vee(Digit d) { return 4 - d; }

bool is_digit_seq(const std::vector<Digit>& v);

/// A finite or eventually periodic sequence of Romik digits. Canonical form:
/// the period is primitive (not a proper power of a shorter word) and the
/// head is as short as possible (no trailing copy of a period rotation).
class DigitWord {
public:
    DigitWord() = default;
    /// Finite word.
    explicit DigitWord(std::vector<Digit> head);
    /// Eventually periodic word head followed by period repeated forever.
    DigitWord(std::vector<Digit> head, std::vector<Digit> period);

    static DigitWord parse(const std::string& s);

    const std::vector<Digit>& head() const { return head_; }
    const std::vector<Digit>& period() const { return period_; }
    bool is_finite() const { return period_.empty(); }
    bool is_purely_periodic() const { return head_.empty() && !period_.empty(); }

    /// Digit at 0-based position i (i may exceed the head for periodic words).
    Digit at(std::size_t i) const;
    /// First k digits.
    std::vector<Digit> prefix(std::size_t k) const;
    /// Word with every digit replaced by its conjugate (1 <-> 3).
    DigitWord vee() const;
    /// Drops the first digit (shift of the sequence).
    DigitWord shifted() const;

    friend bool operator==(const DigitWord& a, const DigitWord& b) {
        return a.head_ == b.head_ && a.period_ == b.period_;
    }
    friend bool operator!=(const DigitWord& a, const DigitWord& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<Digit> head_;
    std::vector<Digit> period_;

    void canonicalize();
};

/// Smallest p dividing v.size() such that v is (v[0..p))^k; v itself if none.
std::vector<Digit> primitive_root(const std::vector<Digit>& v);

std::ostream& operator<<(std::ostream& os, const DigitWord& w);

} // namespace romik
