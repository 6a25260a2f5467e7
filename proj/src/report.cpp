#include "qplane/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qplane {

bool CheckReport::pass() const {
    for (const AxiomCheck& c : checks) {
        if (c.failures != 0) return false;
    }
    return true;
}

void CheckReport::sort_records() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const AxiomCheck& a, const AxiomCheck& b) { return a.id < b.id; });
    std::stable_sort(informational.begin(), informational.end(),
                     [](const InfoRecord& a, const InfoRecord& b) { return a.id < b.id; });
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["algebra"] = algebra;
    j["seed"] = seed;
    j["version"] = version;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const AxiomCheck& c : checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["paper_eq"] = c.paper_eq;
        jc["instances"] = c.instances;
        jc["failures"] = c.failures;
        if (c.witness.empty()) {
            jc["witness"] = nullptr;
        } else {
            jc["witness"] = c.witness;
        }
        j["checks"].push_back(jc);
    }
    j["informational"] = nlohmann::json::array();
    for (const InfoRecord& r : informational) {
        nlohmann::json jr;
        jr["id"] = r.id;
        jr["paper_eq"] = r.paper_eq;
        jr["detail"] = r.detail;
        jr["derived"] = r.derived;
        jr["stated"] = r.stated;
        jr["agrees"] = r.agrees;
        j["informational"].push_back(jr);
    }
    return j.dump(2) + "\n";
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << "  algebra: " << algebra << "  seed: " << seed
       << "  version: " << version << "\n";
    for (const AxiomCheck& c : checks) {
        os << (c.failures == 0 ? "  [ok]   " : "  [FAIL] ") << c.id << "  eq " << c.paper_eq
           << "  instances=" << c.instances << " failures=" << c.failures << "\n";
        if (!c.witness.empty()) {
            os << "         witness: " << c.witness << "\n";
        }
    }
    for (const InfoRecord& r : informational) {
        os << "  [info] " << r.id << "  eq " << r.paper_eq << "  derived=" << r.derived
           << " stated=" << r.stated << " agrees=" << (r.agrees ? "yes" : "no") << "\n";
        os << "         " << r.detail << "\n";
    }
    os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace qplane
