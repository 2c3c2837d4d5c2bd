#include "pipart/reduce/record.hpp"

#include <sstream>

namespace pipart {

std::string reduction_kind_name(ReductionKind k) {
    switch (k) {
    case ReductionKind::Sat3: return "sat";
    case ReductionKind::SigmaLift: return "sigma";
    case ReductionKind::Blowup: return "blowup";
    case ReductionKind::PrependZero: return "prepend0";
    }
    return "?";
}

std::string serialize_record(const ReductionRecord& rec) {
    std::ostringstream out;
    out << "kind " << reduction_kind_name(rec.kind) << '\n';
    out << "pi " << rec.output_pi.to_string() << '\n';
    for (std::size_t v = 0; v < rec.roles.size(); ++v) out << "v " << v << ' ' << rec.roles[v] << '\n';
    return out.str();
}

} // namespace pipart
