#include "unipotent/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace unipotent {

namespace {

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

int parse_int(std::string_view digits, std::string_view token)
{
    if (digits.empty() || digits.size() > 4
        || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw DomainError("group spec: malformed token '" + std::string(token) + "'");
    return std::stoi(std::string(digits));
}

// One written factor, normalized; may expand to two factors (D2).
std::vector<SimpleFactor> parse_factor(std::string_view token)
{
    const std::string t = upper(token);
    if (t.size() < 2)
        throw DomainError("group spec: malformed factor '" + std::string(token) + "'");
    const char letter = t[0];
    const int rank = parse_int(std::string_view(t).substr(1), token);
    auto out_of_range = [&] {
        return DomainError("group spec: rank out of range in '" + std::string(token) + "'");
    };
    switch (letter) {
    case 'A':
        if (rank < 1)
            throw out_of_range();
        return {{Family::A, rank}};
    case 'B':
    case 'C':
        if (rank < 1)
            throw out_of_range();
        if (rank == 1)
            return {{Family::A, 1}};
        return {{static_cast<Family>(letter), rank}};
    case 'D':
        if (rank < 2)
            throw out_of_range();
        if (rank == 2)
            return {{Family::A, 1}, {Family::A, 1}};
        if (rank == 3)
            return {{Family::A, 3}};
        return {{Family::D, rank}};
    case 'E':
        if (rank < 6 || rank > 8)
            throw out_of_range();
        return {{Family::E, rank}};
    case 'F':
        if (rank != 4)
            throw out_of_range();
        return {{Family::F, 4}};
    case 'G':
        if (rank != 2)
            throw out_of_range();
        return {{Family::G, 2}};
    default:
        throw DomainError("group spec: unknown family in '" + std::string(token) + "'");
    }
}

void link(IntMatrix& m, int i, int j, int a_ij, int a_ji)
{
    m(i, j) = a_ij;
    m(j, i) = a_ji;
}

} // namespace

std::string to_string(const SimpleFactor& f)
{
    return std::string(1, static_cast<char>(f.family)) + std::to_string(f.rank);
}

int GroupSpec::semisimple_rank() const
{
    int r = 0;
    for (const auto& f : factors)
        r += f.rank;
    return r;
}

bool GroupSpec::has_exceptional_factor() const
{
    return std::any_of(factors.begin(), factors.end(), [](const SimpleFactor& f) { return f.is_exceptional(); });
}

GroupSpec parse_group_spec(std::string_view text)
{
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += c;
    if (compact.empty())
        throw DomainError("group spec: empty");

    GroupSpec spec;
    std::string_view rest = compact;
    const std::string up = upper(compact);
    if (const auto plus = up.find("+T"); plus != std::string::npos) {
        std::string_view torus = std::string_view(compact).substr(plus + 2);
        spec.torus_rank = parse_int(torus, std::string_view(compact).substr(plus));
        rest = std::string_view(compact).substr(0, plus);
        if (rest.empty())
            return spec;
    }

    std::size_t start = 0;
    while (true) {
        std::size_t pos = start;
        while (pos < rest.size() && rest[pos] != 'x' && rest[pos] != 'X')
            ++pos;
        const std::string_view token = rest.substr(start, pos - start);
        if (token.empty())
            throw DomainError("group spec: empty factor in '" + std::string(text) + "'");
        for (const auto& f : parse_factor(token))
            spec.factors.push_back(f);
        if (pos == rest.size())
            break;
        start = pos + 1;
    }
    return spec;
}

std::string to_string(const GroupSpec& spec)
{
    std::string out;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i)
            out += 'x';
        out += to_string(spec.factors[i]);
    }
    if (spec.torus_rank > 0)
        out += "+T" + std::to_string(spec.torus_rank);
    return out;
}

IntMatrix cartan_matrix(const SimpleFactor& f)
{
    const int n = f.rank;
    IntMatrix m = IntMatrix::Zero(n, n);
    m.diagonal().setConstant(2);
    switch (f.family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i)
            link(m, i, i + 1, -1, -1);
        break;
    case Family::B:
        for (int i = 0; i + 2 < n; ++i)
            link(m, i, i + 1, -1, -1);
        link(m, n - 2, n - 1, -1, -2); // alpha_n short
        break;
    case Family::C:
        for (int i = 0; i + 2 < n; ++i)
            link(m, i, i + 1, -1, -1);
        link(m, n - 2, n - 1, -2, -1); // alpha_n long
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i)
            link(m, i, i + 1, -1, -1);
        link(m, n - 3, n - 1, -1, -1);
        break;
    case Family::E:
        link(m, 0, 2, -1, -1);
        link(m, 1, 3, -1, -1);
        for (int i = 2; i + 1 < n; ++i)
            link(m, i, i + 1, -1, -1);
        break;
    case Family::F:
        link(m, 0, 1, -1, -1);
        link(m, 1, 2, -1, -2); // alpha_1, alpha_2 long
        link(m, 2, 3, -1, -1);
        break;
    case Family::G:
        link(m, 0, 1, -3, -1); // alpha_1 short
        break;
    }
    return m;
}

SimpleFactor identify_type(const IntMatrix& c)
{
    const int n = static_cast<int>(c.rows());
    if (n == 1)
        return {Family::A, 1};

    std::vector<int> degree(n, 0);
    int double_i = -1, double_j = -1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int bond = c(i, j) * c(j, i);
            if (bond == 0)
                continue;
            ++degree[i];
            ++degree[j];
            if (bond == 3)
                return {Family::G, 2};
            if (bond == 2) {
                // <alpha_j, alpha_i^vee> = -2 means alpha_i is the short end
                double_i = c(i, j) == -2 ? i : j;
                double_j = c(i, j) == -2 ? j : i;
            }
        }

    if (double_i >= 0) {
        if (n == 2)
            return {Family::B, 2};
        if (degree[double_i] == 2 && degree[double_j] == 2)
            return {Family::F, 4};
        // the double bond sits at one end of the chain
        const bool short_is_end = degree[double_i] == 1;
        return {short_is_end ? Family::B : Family::C, n};
    }

    const auto branch = std::find(degree.begin(), degree.end(), 3);
    if (branch == degree.end())
        return {Family::A, n};

    // arm lengths from the branch node
    const int b = static_cast<int>(branch - degree.begin());
    std::vector<int> arms;
    for (int start = 0; start < n; ++start) {
        if (start == b || c(b, start) == 0)
            continue;
        int len = 1, prev = b, cur = start;
        while (true) {
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != cur && k != prev && c(cur, k) != 0)
                    next = k;
            if (next < 0)
                break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return {Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {Family::E, n};
    throw InternalError("identify_type: not a finite-type Dynkin diagram");
}

RootSystem root_system_from_cartan(const IntMatrix& cartan, GroupSpec spec)
{
    const int n = static_cast<int>(cartan.rows());
    RootSystem rs;
    rs.cartan = cartan;
    rs.factor_of_node.assign(n, -1);

    // connected components, numbered by smallest node
    for (int start = 0; start < n; ++start) {
        if (rs.factor_of_node[start] >= 0)
            continue;
        const int id = static_cast<int>(rs.factor_nodes.size());
        IndexSet nodes{start};
        rs.factor_of_node[start] = id;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (cartan(nodes[k], j) != 0 && rs.factor_of_node[j] < 0) {
                    rs.factor_of_node[j] = id;
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        rs.factor_nodes.push_back(std::move(nodes));
    }

    if (spec.factors.empty() && n > 0) {
        for (const auto& nodes : rs.factor_nodes) {
            IntMatrix sub(nodes.size(), nodes.size());
            for (std::size_t a = 0; a < nodes.size(); ++a)
                for (std::size_t b = 0; b < nodes.size(); ++b)
                    sub(a, b) = cartan(nodes[a], nodes[b]);
            spec.factors.push_back(identify_type(sub));
        }
    }
    if (static_cast<int>(spec.factors.size()) != rs.num_factors())
        throw InternalError("root_system_from_cartan: factor list does not match Dynkin components");
    rs.spec = std::move(spec);

    // Root-string closure: for beta != alpha_i with alpha_i-string
    // beta - r alpha_i, ..., beta + q alpha_i we have r - q = <beta, alpha_i^vee>.
    std::set<std::vector<int>> seen;
    auto key = [](const IntVector& v) { return std::vector<int>(v.data(), v.data() + v.size()); };
    std::vector<IntVector> layer;
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e(i) = 1;
        seen.insert(key(e));
        layer.push_back(e);
    }
    std::vector<IntVector> all = layer;
    while (!layer.empty()) {
        std::vector<IntVector> next;
        for (const auto& beta : layer) {
            const IntVector pair = rs.coroot_pairings(beta);
            for (int i = 0; i < n; ++i) {
                if (beta.sum() == 1 && beta(i) == 1)
                    continue;
                int r = 0;
                IntVector down = beta;
                while (true) {
                    down(i) -= 1;
                    if (down(i) < 0 || !seen.count(key(down)))
                        break;
                    ++r;
                }
                if (r - pair(i) <= 0)
                    continue;
                IntVector up = beta;
                up(i) += 1;
                if (seen.insert(key(up)).second)
                    next.push_back(up);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }

    for (const auto& v : all) {
        Root r;
        r.coeffs = v;
        for (int i = 0; i < n; ++i)
            if (v(i) != 0) {
                r.factor = rs.factor_of_node[i];
                break;
            }
        rs.positive_roots.push_back(std::move(r));
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const Root& a, const Root& b) {
        if (a.height() != b.height())
            return a.height() < b.height();
        return key(a.coeffs) < key(b.coeffs);
    });

    rs.highest_roots.resize(rs.num_factors());
    std::vector<bool> found(rs.num_factors(), false);
    for (const auto& r : rs.positive_roots) {
        if (!found[r.factor] || r.height() > rs.highest_roots[r.factor].height()) {
            rs.highest_roots[r.factor] = r;
            found[r.factor] = true;
        }
    }
    return rs;
}

RootSystem build_root_system(const GroupSpec& spec)
{
    const int n = spec.semisimple_rank();
    IntMatrix cartan = IntMatrix::Zero(n, n);
    int offset = 0;
    for (const auto& f : spec.factors) {
        cartan.block(offset, offset, f.rank, f.rank) = cartan_matrix(f);
        offset += f.rank;
    }
    return root_system_from_cartan(cartan, spec);
}

std::vector<int> bad_primes(const SimpleFactor& f)
{
    switch (f.family) {
    case Family::A:
        return {};
    case Family::B:
    case Family::C:
    case Family::D:
        return {2};
    case Family::E:
        if (f.rank == 8)
            return {2, 3, 5};
        return {2, 3};
    case Family::F:
    case Family::G:
        return {2, 3};
    }
    return {};
}

bool is_good_prime(const SimpleFactor& f, int p)
{
    const auto bad = bad_primes(f);
    return std::find(bad.begin(), bad.end(), p) == bad.end();
}

bool is_good_prime(const GroupSpec& spec, int p)
{
    return std::all_of(spec.factors.begin(), spec.factors.end(),
                       [p](const SimpleFactor& f) { return is_good_prime(f, p); });
}

int a_invariant(const GroupSpec& spec)
{
    int a = 1;
    for (const auto& f : spec.factors)
        a = std::max(a, f.rank + 1);
    return a;
}

} // namespace unipotent
