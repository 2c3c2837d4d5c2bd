#ifndef PIPART_BIPARTITION_HPP
#define PIPART_BIPARTITION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pipart {

enum class Side : std::uint8_t { One = 1, Two = 2 };

// A vertex bipartition (V1, V2); either side may be empty. Text form is a
// length-n string over "12" with '1' meaning V1.
class Bipartition {
public:
    Bipartition() = default;
    explicit Bipartition(std::vector<Side> side);

    static Bipartition parse(std::string_view text);
    static Bipartition uniform(int n, Side s);
    static Bipartition from_v1(int n, const std::vector<int>& v1_members);

    int size() const { return static_cast<int>(side_.size()); }
    Side at(int v) const { return side_[static_cast<std::size_t>(v)]; }
    bool in_v1(int v) const { return side_[static_cast<std::size_t>(v)] == Side::One; }

    int count_in_v1(const std::vector<int>& vertices) const;
    std::vector<int> v1_members() const;
    std::vector<int> v2_members() const;

    Bipartition swapped() const; // V1 <-> V2

    std::string to_string() const;

    bool operator==(const Bipartition& o) const { return side_ == o.side_; }
    bool operator!=(const Bipartition& o) const { return !(*this == o); }
    // Lexicographic on the "12" string (V1 sorts first).
    bool operator<(const Bipartition& o) const { return side_ < o.side_; }

private:
    std::vector<Side> side_;
};

using PartitionList = std::vector<Bipartition>;

} // namespace pipart

#endif
