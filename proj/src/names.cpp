#include "unipotent/balacarter.hpp"

#include <map>
#include <utility>

namespace unipotent {

namespace {

// Curated Bala-Carter labels keyed by Bourbaki-indexed dominant diagrams.
// Covers every class of G2 and the distinguished classes of F4, E6, E7, E8.
const std::map<std::pair<std::string, std::string>, std::string>& name_table()
{
    static const std::map<std::pair<std::string, std::string>, std::string> table{
        {{"G2", "2,2"}, "G2"},
        {{"G2", "0,2"}, "G2(a1)"},
        {{"G2", "1,0"}, "~A1"},
        {{"G2", "0,1"}, "A1"},

        {{"F4", "2,2,2,2"}, "F4"},
        {{"F4", "2,2,0,2"}, "F4(a1)"},
        {{"F4", "0,2,0,2"}, "F4(a2)"},
        {{"F4", "0,2,0,0"}, "F4(a3)"},

        {{"E6", "2,2,2,2,2,2"}, "E6"},
        {{"E6", "2,2,2,0,2,2"}, "E6(a1)"},
        {{"E6", "2,0,0,2,0,2"}, "E6(a3)"},

        {{"E7", "2,2,2,2,2,2,2"}, "E7"},
        {{"E7", "2,2,2,0,2,2,2"}, "E7(a1)"},
        {{"E7", "2,2,2,0,2,0,2"}, "E7(a2)"},
        {{"E7", "2,0,0,2,0,2,2"}, "E7(a3)"},
        {{"E7", "2,0,0,2,0,0,2"}, "E7(a4)"},
        {{"E7", "0,0,0,2,0,0,2"}, "E7(a5)"},

        {{"E8", "2,2,2,2,2,2,2,2"}, "E8"},
        {{"E8", "2,2,2,0,2,2,2,2"}, "E8(a1)"},
        {{"E8", "2,2,2,0,2,0,2,2"}, "E8(a2)"},
        {{"E8", "2,0,0,2,0,2,2,2"}, "E8(a3)"},
        {{"E8", "2,0,0,2,0,2,0,2"}, "E8(a4)"},
        {{"E8", "2,0,0,2,0,0,2,2"}, "E8(b4)"},
        {{"E8", "2,0,0,2,0,0,2,0"}, "E8(a5)"},
        {{"E8", "0,0,0,2,0,0,2,2"}, "E8(b5)"},
        {{"E8", "0,0,0,2,0,0,2,0"}, "E8(a6)"},
        {{"E8", "0,0,0,2,0,0,0,2"}, "E8(b6)"},
        {{"E8", "0,0,0,0,2,0,0,0"}, "E8(a7)"},
    };
    return table;
}

} // namespace

std::optional<std::string> bala_carter_name(const GroupSpec& spec, const Labels& diagram)
{
    if (diagram.size() > 0 && (diagram.array() == 0).all())
        return "1";
    if (!spec.is_simple())
        return std::nullopt;
    const auto it = name_table().find({to_string(spec), to_string(diagram)});
    if (it == name_table().end())
        return std::nullopt;
    return it->second;
}

} // namespace unipotent
