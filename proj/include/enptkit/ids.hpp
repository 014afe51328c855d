#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace enptkit {

// natural order: digit runs compare numerically, so "2" < "10" and "3.4" < "10"
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

// merged vertex name for a contracted pair: components joined by '.', sorted naturally
std::string merged_name(const std::string& p, const std::string& q);
std::vector<std::string> name_components(const std::string& id);

} // namespace enptkit
