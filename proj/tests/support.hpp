#pragma once

#include "unipotent/balacarter.hpp"

#include <initializer_list>
#include <string>
#include <vector>

inline unipotent::Labels lab(std::initializer_list<int> v)
{
    unipotent::Labels out(static_cast<Eigen::Index>(v.size()));
    int i = 0;
    for (int x : v)
        out(i++) = x;
    return out;
}

inline unipotent::RootSystem sys(const std::string& text)
{
    return unipotent::build_root_system(unipotent::parse_group_spec(text));
}

inline std::vector<int> vec(const unipotent::IntVector& v) { return {v.data(), v.data() + v.size()}; }

inline const unipotent::OrbitRecord* find_diagram(const std::vector<unipotent::OrbitRecord>& cat,
                                                  const unipotent::Labels& d)
{
    for (const auto& r : cat)
        if (r.diagram == d)
            return &r;
    return nullptr;
}
