#include "pipart/classify/pi_rules.hpp"

#include <sstream>

#include "pipart/errors.hpp"

namespace pipart {

PiVector sigma(const PiVector& pi) {
    if (!pi.is_one_free()) throw ApplicabilityError("sigma is defined on one-free patterns only");
    const int k = pi.k();
    std::vector<Mark> out(static_cast<std::size_t>(k) + 2, Mark::Zero);
    out[0] = pi.at(0);
    out[static_cast<std::size_t>(k) + 1] = pi.at(k);
    for (int i = 1; i <= k; ++i)
        out[static_cast<std::size_t>(i)] =
            (pi.at(i) == Mark::Star || pi.at(i - 1) == Mark::Star) ? Mark::Star : Mark::Zero;
    return PiVector(std::move(out));
}

bool sigma_applicable(const PiVector& pi) {
    for (int i = 0; i + 2 <= pi.k(); ++i)
        if (pi.at(i) == Mark::Star && pi.at(i + 1) == Mark::Zero && pi.at(i + 2) == Mark::Star)
            return false;
    return true;
}

PiVector interleave_with_zeros(const PiVector& pi) {
    std::vector<Mark> out;
    out.reserve(static_cast<std::size_t>(2 * pi.k()) + 1);
    for (int i = 0; i <= pi.k(); ++i) {
        if (i) out.push_back(Mark::Zero);
        out.push_back(pi.at(i));
    }
    return PiVector(std::move(out));
}

std::optional<PrependPlan> plan_prepend_zero(const PiVector& pi) {
    if (!pi.is_one_free()) return std::nullopt;
    const int k = pi.k();
    // Branch A: (0, pi) palindromic with reverse(pi) + 0.
    bool palindromic = pi.at(k) == Mark::Zero;
    for (int i = 0; palindromic && i <= k - 1; ++i)
        if (pi.at(i) != pi.at(k - 1 - i)) palindromic = false;
    if (palindromic) return PrependPlan{'A', -1};
    if (pi.has_consecutive_stars()) return std::nullopt;
    if (pi.at(k) != Mark::Zero) return std::nullopt;
    for (int m = 0; m <= k - 1; ++m)
        if (pi.at(m) == Mark::Star && pi.at(k - m - 1) == Mark::Zero) return PrependPlan{'B', m};
    return std::nullopt;
}

std::optional<std::string> blowup_incompatibility(const PiVector& pi, const std::vector<int>& j,
                                                  const PiVector& pi_out) {
    const int k = pi.k();
    if (k > 20) return "subset compatibility check supports k <= 20";
    if (static_cast<int>(j.size()) != k)
        return "copy vector must have one entry per edge position (k = " + std::to_string(k) + ")";
    long long total = 0;
    for (int v : j) {
        if (v < 0) return "copy counts must be nonnegative";
        total += v;
    }
    if (total != pi_out.k())
        return "copy counts sum to " + std::to_string(total) + " but the target pattern has k' = " +
               std::to_string(pi_out.k());
    for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << k); ++sub) {
        int size = 0;
        int sum = 0;
        for (int m = 0; m < k; ++m)
            if ((sub >> m) & 1) {
                ++size;
                sum += j[static_cast<std::size_t>(m)];
            }
        Mark want = pi.at(size);
        Mark got = pi_out.at(sum);
        if (want != got) {
            std::ostringstream oss;
            oss << "subset {";
            bool first = true;
            for (int m = 0; m < k; ++m)
                if ((sub >> m) & 1) {
                    if (!first) oss << ",";
                    oss << (m + 1);
                    first = false;
                }
            oss << "} maps pattern position " << size << " (" << mark_char(want)
                << ") to target position " << sum << " (" << mark_char(got) << ")";
            return oss.str();
        }
    }
    return std::nullopt;
}

} // namespace pipart
