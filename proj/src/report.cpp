#include "numrad/report.hpp"

#include <stdexcept>

namespace numrad {

BoundResult upper_bound(std::string name, double value, double reference,
                        std::map<std::string, double> params) {
    BoundResult r;
    r.name = std::move(name);
    r.value = value;
    r.reference = reference;
    r.lower = false;
    r.slack = value - reference;
    r.satisfied = r.slack >= -kSlackTol;
    r.params = std::move(params);
    return r;
}

BoundResult lower_bound(std::string name, double value, double reference,
                        std::map<std::string, double> params) {
    BoundResult r;
    r.name = std::move(name);
    r.value = value;
    r.reference = reference;
    r.lower = true;
    r.slack = reference - value;
    r.satisfied = r.slack >= -kSlackTol;
    r.params = std::move(params);
    return r;
}

const BoundResult& BoundReport::at(const std::string& name) const {
    for (const BoundResult& e : entries)
        if (e.name == name) return e;
    throw std::out_of_range("no bound named " + name);
}

bool BoundReport::all_satisfied() const {
    for (const BoundResult& e : entries)
        if (!e.satisfied) return false;
    return true;
}

} // namespace numrad
