#pragma once

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wstrat/ideal_ops.hpp"
#include "wstrat/poly_io.hpp"

namespace wtest {

using nlohmann::json;
using namespace wstrat;

inline json load_fixture(const std::string& file) {
    std::string path = std::string(WSTRAT_FIXTURE_DIR) + "/" + file;
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("missing fixture " + path);
    return json::parse(in);
}

inline RingPtr ring_from(const json& vars) {
    std::vector<std::string> names;
    for (const auto& v : vars) names.push_back(v.get<std::string>());
    return Ring::make(std::move(names));
}

inline std::vector<Polynomial> polys_from(const json& arr,
                                          const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (const auto& s : arr)
        out.push_back(parse_poly(s.get<std::string>(), ring));
    return out;
}

inline Ideal ideal_from(const json& arr, const RingPtr& ring) {
    return Ideal(ring, polys_from(arr, ring));
}

// Canonical reduced-basis strings, sorted: a unique representation of the
// ideal usable for set comparison with readable failure output.
inline std::vector<std::string> canon_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const Polynomial& g : I.groebner(TermOrder::grevlex()))
        out.push_back(to_string(g));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> canon_strings(const json& arr,
                                              const RingPtr& ring) {
    return canon_strings(ideal_from(arr, ring));
}

inline std::string joined(const std::vector<std::string>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += "; ";
        s += xs[i];
    }
    return s + "}";
}

}  // namespace wtest
