#include "toda/report.hpp"

#include <sstream>

#include "json.hpp"

namespace toda {

std::string to_json_line(const CheckRecord& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    j["anchor"] = r.anchor;
    j["value_re"] = r.value_re;
    j["value_im"] = r.value_im;
    j["bound"] = r.bound;
    j["threshold"] = r.threshold;
    j["pass"] = r.pass;
    j["millis"] = r.millis;
    if (r.kappa) j["kappa"] = *r.kappa;
    if (r.flagged) j["flagged"] = true;
    return j.dump();
}

std::string csv_header() {
    return "suite,check,anchor,value_re,value_im,bound,threshold,pass,millis,kappa,flagged";
}

std::string to_csv_line(const CheckRecord& r) {
    std::ostringstream os;
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    os.precision(17);
    os << quote(r.suite) << ',' << quote(r.check) << ',' << quote(r.anchor) << ',' << r.value_re
       << ',' << r.value_im << ',' << r.bound << ',' << r.threshold << ','
       << (r.pass ? "true" : "false") << ',' << r.millis << ',';
    if (r.kappa) os << *r.kappa;
    os << ',' << (r.flagged ? "true" : "false");
    return os.str();
}

}  // namespace toda
