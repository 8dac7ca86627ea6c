#pragma once

#include <string>

namespace hookschur {

struct Report {
    bool ok = true;
    std::string detail;
};

}  // namespace hookschur
