#include "pipart/bipartition.hpp"

#include "pipart/errors.hpp"

namespace pipart {

Bipartition::Bipartition(std::vector<Side> side) : side_(std::move(side)) {}

Bipartition Bipartition::parse(std::string_view text) {
    std::vector<Side> side;
    side.reserve(text.size());
    for (char c : text) {
        if (c == '1')
            side.push_back(Side::One);
        else if (c == '2')
            side.push_back(Side::Two);
        else
            throw UsageError(std::string("invalid partition character '") + c + "' (expected 1 or 2)");
    }
    return Bipartition(std::move(side));
}

Bipartition Bipartition::uniform(int n, Side s) {
    return Bipartition(std::vector<Side>(static_cast<std::size_t>(n), s));
}

Bipartition Bipartition::from_v1(int n, const std::vector<int>& v1_members) {
    std::vector<Side> side(static_cast<std::size_t>(n), Side::Two);
    for (int v : v1_members) side.at(static_cast<std::size_t>(v)) = Side::One;
    return Bipartition(std::move(side));
}

int Bipartition::count_in_v1(const std::vector<int>& vertices) const {
    int c = 0;
    for (int v : vertices)
        if (in_v1(v)) ++c;
    return c;
}

std::vector<int> Bipartition::v1_members() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (in_v1(v)) out.push_back(v);
    return out;
}

std::vector<int> Bipartition::v2_members() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (!in_v1(v)) out.push_back(v);
    return out;
}

Bipartition Bipartition::swapped() const {
    std::vector<Side> out(side_.size());
    for (std::size_t i = 0; i < side_.size(); ++i)
        out[i] = side_[i] == Side::One ? Side::Two : Side::One;
    return Bipartition(std::move(out));
}

std::string Bipartition::to_string() const {
    std::string s;
    s.reserve(side_.size());
    for (Side x : side_) s.push_back(x == Side::One ? '1' : '2');
    return s;
}

} // namespace pipart
