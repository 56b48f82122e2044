#include "pascaldet/report.hpp"

#include <json.hpp>

namespace pascaldet {

std::string status_name(Report::Status s) {
    switch (s) {
    case Report::Status::pass:
        return "pass";
    case Report::Status::fail:
        return "fail";
    default:
        return "error";
    }
}

std::string report_emit(const Report& r) {
    nlohmann::ordered_json j;
    j["case"] = r.case_id;
    j["n"] = r.n;
    j["engine"] = r.engine;
    j["status"] = status_name(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["millis"] = r.millis;
    return j.dump();
}

} // namespace pascaldet
