#include "unipotent/serialize.hpp"

#include <json.hpp>

namespace unipotent {

namespace {

using nlohmann::json;

json int_array(const IntVector& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

} // namespace

IndexSet ambient_J(const OrbitRecord& rec)
{
    IndexSet out;
    for (int j : rec.datum.parabolic.J)
        out.push_back(rec.datum.levi.subset[j]);
    return out;
}

std::string root_system_json(const RootSystem& rs)
{
    json factors = json::array();
    for (const auto& f : rs.spec.factors)
        factors.push_back(to_string(f));
    json cartan = json::array();
    for (int i = 0; i < rs.rank(); ++i)
        cartan.push_back(int_array(rs.cartan.row(i).transpose()));
    json roots = json::array();
    for (const auto& r : rs.positive_roots)
        roots.push_back({{"coeffs", int_array(r.coeffs)}, {"height", r.height()}});
    return json{{"group", to_string(rs.spec)},
                {"factors", factors},
                {"torus_rank", rs.spec.torus_rank},
                {"cartan", cartan},
                {"positive_roots", roots}}
               .dump(2)
        + "\n";
}

std::string catalogue_json(const std::vector<OrbitRecord>& catalogue)
{
    json out = json::array();
    for (const auto& rec : catalogue) {
        json row{{"diagram", int_array(rec.diagram)},
                 {"levi_subset", rec.datum.levi.subset},
                 {"parabolic_J", ambient_J(rec)},
                 {"distinguished", rec.distinguished},
                 {"ht", rec.ht}};
        if (rec.name)
            row["name"] = *rec.name;
        out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
}

} // namespace unipotent
