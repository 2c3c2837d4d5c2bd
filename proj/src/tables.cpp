#include "pipart/classify/tables.hpp"

namespace pipart {

namespace {

std::vector<PiVector> parse_all(std::initializer_list<const char*> items) {
    std::vector<PiVector> out;
    out.reserve(items.size());
    for (const char* s : items) out.push_back(PiVector::parse(s));
    return out;
}

} // namespace

const std::vector<PiVector>& npc_k3() {
    static const std::vector<PiVector> t =
        parse_all({"0**0", "1**1", "00*0", "0*00", "1*11", "11*1"});
    return t;
}

const std::vector<PiVector>& npc_k4() {
    static const std::vector<PiVector> t =
        parse_all({"0***0", "0**00", "00**0", "0*000", "000*0", "00*00",
                   "1***1", "1**11", "11**1", "1*111", "111*1", "11*11"});
    return t;
}

const std::vector<PiVector>& npc_k5() {
    static const std::vector<PiVector> t =
        parse_all({"0****0", "0***00", "00***0", "000**0", "00**00",
                   "0**000", "0000*0", "000*00", "00*000", "0*0000"});
    return t;
}

const std::vector<PiVector>& open_k5() {
    static const std::vector<PiVector> t =
        parse_all({"0*00*0", "0**0*0", "0*0**0", "0*0*00", "00*0*0"});
    return t;
}

} // namespace pipart
