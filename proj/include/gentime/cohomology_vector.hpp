#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentime/errors.hpp"

namespace gentime {

/// (h^0, ..., h^dim) for one sheaf on one space; entries are nonnegative.
struct CohomologyVector {
    std::vector<std::int64_t> h;

    std::int64_t operator[](std::size_t i) const { return i < h.size() ? h[i] : 0; }

    std::int64_t euler_char() const {
        std::int64_t chi = 0;
        std::int64_t sign = 1;
        for (auto v : h) {
            chi += sign * v;
            sign = -sign;
        }
        return chi;
    }

    bool operator==(const CohomologyVector&) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(h[i]);
        }
        return s + ")";
    }
};

} // namespace gentime
