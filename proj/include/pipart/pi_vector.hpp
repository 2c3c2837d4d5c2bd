#ifndef PIPART_PI_VECTOR_HPP
#define PIPART_PI_VECTOR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pipart {

// One entry of a pattern vector: 0 forbids, 1 requires, * is unconstrained.
enum class Mark : std::uint8_t { Zero, One, Star };

char mark_char(Mark m);

// The pattern pi in {0,1,*}^(k+1). Entry i governs the k-subsets X with
// |X ∩ V1| = i: Mark::One means X must be an edge, Mark::Zero means X must
// not be an edge, Mark::Star imposes nothing.
class PiVector {
public:
    explicit PiVector(std::vector<Mark> entries);

    // Text form over "01*", e.g. "0*00". Length k+1 >= 2.
    static PiVector parse(std::string_view text);

    int k() const { return static_cast<int>(entries_.size()) - 1; }
    int size() const { return static_cast<int>(entries_.size()); }
    Mark at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Mark>& entries() const { return entries_; }

    bool contains(Mark m) const;
    bool is_one_free() const { return !contains(Mark::One); }
    bool is_zero_free() const { return !contains(Mark::Zero); }
    bool is_all_zero() const;
    bool has_both_zero_and_one() const { return contains(Mark::Zero) && contains(Mark::One); }
    // Zero at every even index, Star at every odd index, over the whole vector.
    bool is_alternating() const;
    bool has_consecutive_stars() const;

    PiVector complemented() const; // 0 <-> 1, * fixed; involution
    PiVector reversed() const;     // entries reversed; involution

    std::string to_string() const;

    bool operator==(const PiVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const PiVector& o) const { return !(*this == o); }
    // Lexicographic on the text form; note '*' < '0' < '1'.
    bool operator<(const PiVector& o) const { return to_string() < o.to_string(); }

private:
    std::vector<Mark> entries_;
};

} // namespace pipart

#endif
