#pragma once

// Machine-readable check records: one JSON object per line on stdout
// (or CSV rows with --csv), human summary on stderr.

#include <optional>
#include <string>
#include <vector>

namespace toda {

struct CheckRecord {
    std::string suite;
    std::string check;
    std::string anchor;  // the identity or count the check exercises
    double value_re = 0;
    double value_im = 0;
    double bound = 0;      // measured quantity compared against threshold
    double threshold = 0;
    bool pass = false;
    long long millis = 0;
    std::optional<double> kappa;  // cancellation condition number, when meaningful
    bool flagged = false;         // precision advisory (non-fatal)
};

std::string to_json_line(const CheckRecord& r);
std::string csv_header();
std::string to_csv_line(const CheckRecord& r);

}  // namespace toda
