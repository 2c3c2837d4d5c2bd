#include "pipart/pi_vector.hpp"

#include <algorithm>

#include "pipart/errors.hpp"

namespace pipart {

char mark_char(Mark m) {
    switch (m) {
    case Mark::Zero: return '0';
    case Mark::One: return '1';
    case Mark::Star: return '*';
    }
    return '?';
}

PiVector::PiVector(std::vector<Mark> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2)
        throw UsageError("pattern vector needs length >= 2 (k >= 1)");
}

PiVector PiVector::parse(std::string_view text) {
    std::vector<Mark> entries;
    entries.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '0': entries.push_back(Mark::Zero); break;
        case '1': entries.push_back(Mark::One); break;
        case '*': entries.push_back(Mark::Star); break;
        default:
            throw UsageError(std::string("invalid pattern character '") + c + "' (expected 0, 1 or *)");
        }
    }
    return PiVector(std::move(entries));
}

bool PiVector::contains(Mark m) const {
    return std::find(entries_.begin(), entries_.end(), m) != entries_.end();
}

bool PiVector::is_all_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Mark m) { return m == Mark::Zero; });
}

bool PiVector::is_alternating() const {
    for (int i = 0; i <= k(); ++i) {
        Mark want = (i % 2 == 0) ? Mark::Zero : Mark::Star;
        if (at(i) != want) return false;
    }
    return true;
}

bool PiVector::has_consecutive_stars() const {
    for (int i = 0; i + 1 <= k(); ++i)
        if (at(i) == Mark::Star && at(i + 1) == Mark::Star) return true;
    return false;
}

PiVector PiVector::complemented() const {
    std::vector<Mark> out(entries_.size());
    std::transform(entries_.begin(), entries_.end(), out.begin(), [](Mark m) {
        if (m == Mark::Zero) return Mark::One;
        if (m == Mark::One) return Mark::Zero;
        return Mark::Star;
    });
    return PiVector(std::move(out));
}

PiVector PiVector::reversed() const {
    std::vector<Mark> out(entries_.rbegin(), entries_.rend());
    return PiVector(std::move(out));
}

std::string PiVector::to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (Mark m : entries_) s.push_back(mark_char(m));
    return s;
}

} // namespace pipart
