#include "famint/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace famint {

void IntegralReport::finalize() {
    if (gap() <= eps) {
        integrable = true;
        value = (lower + upper) / 2;
        error_bound = gap() / 2;
    } else {
        integrable = false;
        value.reset();
        error_bound.reset();
    }
}

std::string report_to_text(const IntegralReport& r) {
    std::ostringstream os;
    os << "lower: " << rat_to_string(r.lower) << "\n"
       << "upper: " << rat_to_string(r.upper) << "\n"
       << "eps: " << rat_to_string(r.eps) << "\n"
       << "integrable: " << (r.integrable ? "true" : "false") << "\n"
       << "witness_cell_count: " << r.witness_cell_count << "\n";
    if (r.value) os << "value: " << rat_to_string(*r.value) << "\n";
    if (r.error_bound) os << "error_bound: " << rat_to_string(*r.error_bound) << "\n";
    os << "oracle_exact: " << (r.oracle_exact ? "true" : "false") << "\n"
       << "schedule: " << r.schedule << "\n";
    return os.str();
}

std::string report_to_json(const IntegralReport& r) {
    nlohmann::ordered_json j;
    j["lower"] = rat_to_string(r.lower);
    j["upper"] = rat_to_string(r.upper);
    j["eps"] = rat_to_string(r.eps);
    j["integrable"] = r.integrable;
    j["witness_cell_count"] = r.witness_cell_count;
    if (r.value)
        j["value"] = rat_to_string(*r.value);
    else
        j["value"] = nullptr;
    if (r.error_bound)
        j["error_bound"] = rat_to_string(*r.error_bound);
    else
        j["error_bound"] = nullptr;
    j["oracle_exact"] = r.oracle_exact;
    j["schedule"] = r.schedule;
    return j.dump(2);
}

}  // namespace famint
