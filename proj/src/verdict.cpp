#include "unipotent/verdict.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace unipotent {

namespace {

using nlohmann::json;

std::string lower(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view tok = text.substr(start, comma - start);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw DomainError(std::string(what) + ": bad integer '" + std::string(tok) + "'");
        out.push_back(v);
        start = comma + 1;
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::vector<std::string> s;
    for (int x : v)
        s.push_back(std::to_string(x));
    return join(s, ",");
}

const std::string kHReductive = "H is a reductive subgroup of G";
const std::string kUInHcirc = "u lies in the identity component of H";
const std::string kHConnected = "H is a connected reductive subgroup of G";
const std::string kSigmaStabilizes = "sigma is a Steinberg endomorphism of G stabilizing H";
const std::string kSigmaQFrob = "sigma restricted to H is a q-Frobenius endomorphism of H";
const std::string kUInHsigma = "u lies in H_sigma";

namespace cite {
const std::string dist_orderp
    = "Korhonen, Thm 6.5: G connected reductive, p good for G, H reductive and H° contains a distinguished "
      "unipotent element of G of order p; then H is G-irreducible";
const std::string korhonen
    = "Korhonen, Thm 1.3: G simple, H reductive and H° contains a distinguished unipotent element of G of order p; "
      "then H is G-irreducible unless p = 2, G is of type C2 and H is of type A1";
const std::string dist = "a(G) bound via Serre, Thm 4.4: p >= a(G), H reductive and H° contains a distinguished "
                         "unipotent element of G; then H is G-irreducible";
const std::string dist_orderp_finite
    = "finite analogue: H connected reductive, p good, sigma|H a q-Frobenius endomorphism, q > 7 when G has an "
      "exceptional factor, H_sigma contains a distinguished unipotent element of G of order p; then H_sigma is "
      "G-irreducible";
const std::string korhonen_finite
    = "finite analogue for simple G: as above, with q > 7 for exceptional G; H_sigma is G-irreducible unless p = 2, "
      "G is of type C2 and H is of type A1";
const std::string cor_g2 = "G2, p = 3: no proper semisimple subgroup of G contains an element of A1^(3), so such "
                           "elements are semiregular";
const std::string regular = "Bate-Martin-Roehrle, Thm 1.3: overgroups of a regular unipotent element are "
                            "G-irreducible, with no restriction on its order or on q";
} // namespace cite

bool is_power_of(std::int64_t q, int p)
{
    if (q < p)
        return false;
    while (q % p == 0)
        q /= p;
    return q == 1;
}

bool hint_is_a1(const std::optional<std::string>& hint)
{
    if (!hint)
        return false;
    std::string h = lower(*hint);
    h.erase(std::remove_if(h.begin(), h.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            h.end());
    return h == "a1" || h == "typea1" || h == "sl2" || h == "psl2";
}

// A class resolved against the catalogue or the bad-prime catalogue.
struct Resolved {
    std::optional<OrbitRecord> rec;
    std::optional<BadClassTag> bad;
};

Resolved resolve_tag(const Query& q, const RootSystem& rs, const std::vector<OrbitRecord>& cat, bool p_good)
{
    const std::string tag = q.orbit.tag;
    if (!p_good) {
        if (!q.spec.is_simple())
            throw DomainError("orbit tag '" + tag + "' at a bad prime needs a simple group");
        const SimpleFactor f = q.spec.factors[0];
        for (const auto& e : bad_prime_order_p_classes(f, q.p)) {
            const bool match = (tag == "subregular" && e.class_tag != BadClassTag::G2A1_3)
                || (tag == "G2a1" && e.class_tag == BadClassTag::G2A1)
                || (tag == "A1_3" && e.class_tag == BadClassTag::G2A1_3);
            if (match)
                return {std::nullopt, e.class_tag};
        }
        throw DomainError("orbit tag '" + tag + "': " + to_string(f) + " has no distinguished unipotent element of "
                          "order p = " + std::to_string(q.p) + " with that tag (only C2 at p = 2: subregular; "
                          "G2 at p = 3: G2a1, A1_3)");
    }
    if (tag == "A1_3")
        throw DomainError("orbit tag 'A1_3': the class A1^(3) exists only for G2 in characteristic 3");
    if (tag == "G2a1") {
        if (!(q.spec.is_simple() && q.spec.factors[0] == SimpleFactor{Family::G, 2}))
            throw DomainError("orbit tag 'G2a1' needs group G2");
        for (const auto& rec : cat)
            if (rec.name == std::optional<std::string>("G2(a1)"))
                return {rec, std::nullopt};
    }
    if (tag == "subregular") {
        if (!q.spec.is_simple())
            throw DomainError("orbit tag 'subregular' needs a simple group");
        for (const auto& rec : cat)
            if (rec.centralizer_dimension() == rs.rank() + 2)
                return {rec, std::nullopt};
    }
    throw DomainError("orbit tag '" + tag + "' does not resolve for " + to_string(q.spec));
}

Resolved resolve(const Query& q, const RootSystem& rs, const std::vector<OrbitRecord>& cat, bool p_good)
{
    const OrbitSelector& sel = q.orbit;
    switch (sel.kind) {
    case OrbitSelector::Kind::Tag:
        return resolve_tag(q, rs, cat, p_good);
    case OrbitSelector::Kind::Diagram: {
        if (sel.diagram.size() != rs.rank())
            throw DomainError("orbit diagram:" + to_string(sel.diagram) + " has " + std::to_string(sel.diagram.size())
                              + " labels, " + to_string(q.spec) + " has rank " + std::to_string(rs.rank()));
        for (const auto& rec : cat)
            if (rec.diagram == sel.diagram)
                return {rec, std::nullopt};
        throw DomainError("orbit diagram:" + to_string(sel.diagram) + " is not a weighted Dynkin diagram of "
                          + to_string(q.spec));
    }
    case OrbitSelector::Kind::Ht: {
        std::vector<const OrbitRecord*> matches;
        for (const auto& rec : cat)
            if (rec.distinguished && rec.ht == sel.ht)
                matches.push_back(&rec);
        if (matches.empty())
            throw DomainError("orbit ht:" + join_ints(sel.ht) + ": no distinguished class of " + to_string(q.spec)
                              + " has that ht");
        if (sel.ht_index == 0 && matches.size() > 1)
            throw DomainError("orbit ht:" + join_ints(sel.ht) + " is ambiguous (" + std::to_string(matches.size())
                              + " classes); use ht:" + join_ints(sel.ht) + "#1 .. #" + std::to_string(matches.size()));
        const int k = sel.ht_index == 0 ? 1 : sel.ht_index;
        if (k < 1 || k > static_cast<int>(matches.size()))
            throw DomainError("orbit ht:" + join_ints(sel.ht) + "#" + std::to_string(k) + ": only "
                              + std::to_string(matches.size()) + " matching classes");
        return {*matches[k - 1], std::nullopt};
    }
    case OrbitSelector::Kind::Partition: {
        if (!q.spec.is_simple() || q.spec.factors[0].is_exceptional())
            throw DomainError("orbit partition:" + join_ints(sel.partition.parts) + " needs a simple classical group");
        const SimpleFactor f = q.spec.factors[0];
        if (is_very_even(f.family, sel.partition))
            throw DomainError("orbit partition " + to_string(sel.partition)
                              + " is very even and labels two classes; use a diagram selector");
        const Labels d = partition_diagram(f.family, f.rank, sel.partition);
        for (const auto& rec : cat)
            if (rec.diagram == d)
                return {rec, std::nullopt};
        throw InternalError("partition diagram " + to_string(d) + " missing from the catalogue");
    }
    }
    throw InternalError("resolve: unknown selector kind");
}

std::string tag_label(BadClassTag t)
{
    switch (t) {
    case BadClassTag::C2Subregular:
        return "subregular";
    case BadClassTag::G2A1:
        return "G2(a1)";
    case BadClassTag::G2A1_3:
        return "A1^(3)";
    }
    return "?";
}

Facts compute_facts(const Query& q, const RootSystem& rs, const Resolved& r, std::vector<std::string>& notes)
{
    Facts f;
    f.p_good = is_good_prime(q.spec, q.p);
    f.a_invariant = a_invariant(q.spec);
    const bool finite = q.finite.has_value();

    if (r.bad) {
        f.distinguished = true;
        f.regular = false;
        f.order = PrimePower{q.p, 1};
        f.order_is_p = Tri::True;
        f.a1_status = a1_overgroup_status(q.spec, q.p, *r.bad, finite);
        f.class_label = to_string(*r.bad);
        f.name = tag_label(*r.bad);
        return f;
    }

    const OrbitRecord& rec = *r.rec;
    const bool regular = rec.distinguished && rec.diagram.size() > 0 && (rec.diagram.array() == 2).all();
    f.class_label = to_string(rec.diagram);
    f.name = rec.name;
    f.ht = rec.ht;
    f.omega = highest_lambda_weight(rs, rec.diagram);
    f.regular = regular;
    if (f.p_good) {
        f.distinguished = rec.distinguished;
        f.order = orbit_order(rec, q.p);
        f.order_is_p = f.order->a == 1 ? Tri::True : Tri::False;
        if (!rec.is_trivial() && has_order_p(rec, rs, q.p) != (f.order->a == 1))
            throw InternalError("order formula and omega criterion disagree on " + f.class_label);
        f.a1_status = rec.is_trivial() ? A1Status{A1Kind::NotOrderP, "u = 1"}
                                       : a1_overgroup_status(q.spec, q.p, rec, finite);
    } else {
        // Outside good characteristic only the regular class keeps its
        // identity; orders come from the bad-prime catalogue alone.
        f.distinguished = regular;
        f.order_is_p = Tri::Unknown;
        f.a1_status = a1_overgroup_status(q.spec, q.p, rec, finite);
        notes.push_back("p = " + std::to_string(q.p) + " is bad for " + to_string(q.spec)
                        + ": the class is named by its good-characteristic diagram, its order is unknown, and only "
                          "the regular class is treated as distinguished");
    }
    return f;
}

std::string order_text(const Facts& f)
{
    if (!f.order)
        return "UNKNOWN";
    if (f.order->a <= 1)
        return std::to_string(f.order->value());
    return std::to_string(f.order->value()) + " = " + std::to_string(f.order->p) + "^" + std::to_string(f.order->a);
}

// Hypotheses shared by the order-p theorems: p good, distinguished, order p.
std::vector<std::string> order_p_blockers(const Query& q, const Facts& f)
{
    std::vector<std::string> out;
    if (!f.p_good)
        out.push_back("p = " + std::to_string(q.p) + " is bad for " + to_string(q.spec));
    if (!f.distinguished)
        out.push_back("the class is not distinguished");
    if (f.order_is_p == Tri::False)
        out.push_back("u has order " + order_text(f) + ", not p");
    else if (f.order_is_p == Tri::Unknown)
        out.push_back("the order of u is unknown");
    return out;
}

ConclusionEntry not_applicable(TheoremTag tag, const std::string& citation, const std::vector<std::string>& why)
{
    return {tag, Conclusion::NotApplicable, citation, {}, join(why, "; ")};
}

// C2, p = 2, subregular: G-irreducible unless H is of type A1.
ConclusionEntry c2_exception(TheoremTag tag, const std::string& citation, std::vector<std::string> assumptions,
                             const Query& q)
{
    if (hint_is_a1(q.h_hint)) {
        assumptions.push_back("H is of type A1 (caller hint)");
        return {tag, Conclusion::ExceptionPossible, citation, assumptions,
                "p = 2, G of type C2, H of type A1: H may lie in a proper parabolic subgroup"};
    }
    if (!q.h_hint)
        return {tag, Conclusion::ExceptionPossible, citation, assumptions,
                "p = 2, G of type C2 and no hint on H: G-irreducible unless H is of type A1"};
    assumptions.push_back("H is not of type A1 (caller hint: " + *q.h_hint + ")");
    return {tag, Conclusion::GIrreducible, citation, assumptions, "p = 2, G of type C2, H not of type A1"};
}

void algebraic_conclusions(const Query& q, const Facts& f, const Resolved& r, std::vector<ConclusionEntry>& out)
{
    const std::vector<std::string> base{kHReductive, kUInHcirc};
    const auto blockers = order_p_blockers(q, f);

    if (blockers.empty())
        out.push_back({TheoremTag::DistOrderP, Conclusion::GIrreducible, cite::dist_orderp, base,
                       "p good, u distinguished of order p"});
    else
        out.push_back(not_applicable(TheoremTag::DistOrderP, cite::dist_orderp, blockers));

    if (!q.spec.is_simple()) {
        out.push_back(not_applicable(TheoremTag::Korhonen, cite::korhonen, {"G is not simple"}));
    } else if (r.bad == BadClassTag::C2Subregular) {
        out.push_back(c2_exception(TheoremTag::Korhonen, cite::korhonen, base, q));
    } else if (r.bad) {
        out.push_back({TheoremTag::Korhonen, Conclusion::GIrreducible, cite::korhonen, base,
                       "u distinguished of order p and G is not of type C2"});
    } else if (blockers.empty()) {
        out.push_back({TheoremTag::Korhonen, Conclusion::GIrreducible, cite::korhonen, base,
                       "p good, u distinguished of order p"});
    } else {
        out.push_back(not_applicable(TheoremTag::Korhonen, cite::korhonen, blockers));
    }

    std::vector<std::string> dist_blockers;
    if (q.p < f.a_invariant)
        dist_blockers.push_back("p = " + std::to_string(q.p) + " < a(G) = " + std::to_string(f.a_invariant));
    if (!f.distinguished)
        dist_blockers.push_back("the class is not distinguished");
    if (dist_blockers.empty())
        out.push_back({TheoremTag::Dist, Conclusion::GIrreducible, cite::dist, base,
                       "p = " + std::to_string(q.p) + " >= a(G) = " + std::to_string(f.a_invariant)
                           + ", u distinguished"});
    else
        out.push_back(not_applicable(TheoremTag::Dist, cite::dist, dist_blockers));
}

void finite_conclusions(const Query& q, const Facts& f, const Resolved& r, std::vector<ConclusionEntry>& out)
{
    const std::vector<std::string> base{kHConnected, kSigmaStabilizes, kSigmaQFrob, kUInHsigma};
    std::vector<std::string> gate;
    if (q.finite->frobenius != FrobeniusKind::QFrobenius)
        gate.push_back("sigma restricted to H is not a q-Frobenius endomorphism");
    if (q.spec.has_exceptional_factor() && q.finite->q <= 7)
        gate.push_back("G has an exceptional factor and q = " + std::to_string(q.finite->q) + " <= 7");

    auto blockers = order_p_blockers(q, f);
    blockers.insert(blockers.begin(), gate.begin(), gate.end());
    if (blockers.empty())
        out.push_back({TheoremTag::DistOrderPFinite, Conclusion::GIrreducible, cite::dist_orderp_finite, base,
                       "p good, u distinguished of order p, q = " + std::to_string(q.finite->q)});
    else
        out.push_back(not_applicable(TheoremTag::DistOrderPFinite, cite::dist_orderp_finite, blockers));

    if (!q.spec.is_simple()) {
        out.push_back(not_applicable(TheoremTag::KorhonenFinite, cite::korhonen_finite, {"G is not simple"}));
    } else if (!gate.empty()) {
        out.push_back(not_applicable(TheoremTag::KorhonenFinite, cite::korhonen_finite, gate));
    } else if (r.bad == BadClassTag::C2Subregular) {
        out.push_back(c2_exception(TheoremTag::KorhonenFinite, cite::korhonen_finite, base, q));
    } else if (r.bad) {
        out.push_back({TheoremTag::KorhonenFinite, Conclusion::GIrreducible, cite::korhonen_finite, base,
                       "u distinguished of order p, G not of type C2, q = " + std::to_string(q.finite->q)});
    } else if (blockers.empty()) {
        out.push_back({TheoremTag::KorhonenFinite, Conclusion::GIrreducible, cite::korhonen_finite, base,
                       "p good, u distinguished of order p, q = " + std::to_string(q.finite->q)});
    } else {
        out.push_back(not_applicable(TheoremTag::KorhonenFinite, cite::korhonen_finite, blockers));
    }
}

void add_notes(const Query& q, const Facts& f, const Verdict& v, std::vector<std::string>& notes)
{
    const bool finite = q.finite.has_value();
    if (!finite && f.p_good && f.distinguished && !f.regular && f.order_is_p == Tri::False
        && q.p < f.a_invariant) {
        notes.push_back("neither order-p nor a(G) theorem applies; non-regular distinguished classes of simple "
                        "groups mostly lie in maximal-rank semisimple subgroups, which are G-irreducible for every p "
                        "(Testerman, Lem 2.1; not checked here)");
    }
    if (f.name) {
        const std::string& n = *f.name;
        if (n == "E7(a3)" || n == "E7(a4)" || n == "E7(a5)")
            notes.push_back(n + " lies in a maximal-rank subgroup of type A1D6 (Testerman, p. 52)");
        if (n == "E8(a3)" || n == "E8(a4)" || n == "E8(b4)" || n == "E8(a5)" || n == "E8(b5)")
            notes.push_back(n + " lies in a maximal-rank subgroup of type A1E7 or D8 (Testerman, p. 52)");
        if (n == "E6(a1)")
            notes.push_back("E6(a1) contains the regular unipotent class of a subgroup of type C4 (Testerman, Lem 2.7)");
    }
    if (finite && q.p >= f.a_invariant && f.distinguished)
        notes.push_back("p >= a(G): if sigma also stabilizes a maximal torus T of H with C_G(T) = C_G(t) for some t "
                        "in T_sigma, and H_sigma meets every T-root subgroup of H, then H_sigma is G-irreducible "
                        "(Bate-Bate-Martin-Roehrle, Prop 3.2); these torus conditions are not checked");
    if (finite && q.finite->frobenius == FrobeniusKind::Other)
        notes.push_back("sigma is not a q-Frobenius endomorphism on H; at bad p the classification of order-p "
                        "classes used here excludes twisted Steinberg endomorphisms");
    (void)v;
}

json prime_power_json(const std::optional<PrimePower>& pp)
{
    if (!pp)
        return nullptr;
    return json{{"p", pp->p}, {"a", pp->a}, {"value", pp->value()}};
}

template <typename T>
json opt_json(const std::optional<T>& v)
{
    if (!v)
        return nullptr;
    return json(*v);
}

template <typename T>
std::optional<T> opt_from(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

json to_json_value(const Verdict& v)
{
    const Facts& f = v.facts;
    json facts{
        {"p_good", f.p_good},
        {"distinguished", f.distinguished},
        {"regular", f.regular},
        {"order", prime_power_json(f.order)},
        {"order_is_p", to_string(f.order_is_p)},
        {"a_invariant", f.a_invariant},
        {"a1_status", {{"kind", to_string(f.a1_status.kind)}, {"citation", f.a1_status.citation}}},
        {"class_label", f.class_label},
        {"name", opt_json(f.name)},
        {"ht", f.ht},
        {"omega", opt_json(f.omega)},
    };
    json conclusions = json::array();
    for (const auto& c : v.conclusions)
        conclusions.push_back({{"theorem", to_string(c.tag)},
                               {"conclusion", to_string(c.conclusion)},
                               {"citation", c.citation},
                               {"assumptions", c.assumptions},
                               {"reason", c.reason}});
    return json{
        {"group", v.group},
        {"p", v.p},
        {"orbit", v.orbit},
        {"context", v.context},
        {"q", opt_json(v.q)},
        {"frobenius", opt_json(v.frobenius)},
        {"h_hint", opt_json(v.h_hint)},
        {"facts", facts},
        {"conclusions", conclusions},
        {"notes", v.notes},
        {"headline", to_string(v.headline())},
    };
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& s, const Enum (&all)[N], const char* what)
{
    for (Enum e : all)
        if (to_string(e) == s)
            return e;
    throw DomainError(std::string("unknown ") + what + " '" + s + "'");
}

constexpr Tri kAllTri[] = {Tri::True, Tri::False, Tri::Unknown};
constexpr Conclusion kAllConclusions[] = {Conclusion::GIrreducible, Conclusion::ExceptionPossible,
                                          Conclusion::NoProperReductiveOvergroup, Conclusion::NotApplicable};
constexpr TheoremTag kAllTags[] = {TheoremTag::DistOrderP,       TheoremTag::Korhonen,       TheoremTag::Dist,
                                   TheoremTag::DistOrderPFinite, TheoremTag::KorhonenFinite, TheoremTag::CorG2,
                                   TheoremTag::Regular};

std::string md_cell(std::string s)
{
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += '\\';
        out += c;
    }
    return out;
}

// analyze() is called in loops; the catalogue depends only on the group.
std::pair<std::shared_ptr<const RootSystem>, std::shared_ptr<const std::vector<OrbitRecord>>>
cached_catalogue(const GroupSpec& spec)
{
    static std::mutex mutex;
    static std::map<std::string, std::pair<std::shared_ptr<const RootSystem>,
                                           std::shared_ptr<const std::vector<OrbitRecord>>>>
        cache;
    const std::string key = to_string(spec);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto rs = std::make_shared<const RootSystem>(build_root_system(spec));
    auto cat = std::make_shared<const std::vector<OrbitRecord>>(enumerate_orbits(*rs));
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, rs, cat).first->second;
}

} // namespace

OrbitSelector parse_orbit_selector(std::string_view text)
{
    OrbitSelector sel;
    const std::string low = lower(text);
    auto rest = [&](std::size_t n) { return std::string_view(text).substr(n); };
    if (low.rfind("diagram:", 0) == 0) {
        sel.kind = OrbitSelector::Kind::Diagram;
        const auto v = parse_int_list(rest(8), "orbit diagram");
        sel.diagram = Eigen::Map<const IntVector>(v.data(), static_cast<Eigen::Index>(v.size()));
        return sel;
    }
    if (low.rfind("ht:", 0) == 0) {
        sel.kind = OrbitSelector::Kind::Ht;
        std::string_view body = rest(3);
        if (const auto hash = body.find('#'); hash != std::string_view::npos) {
            const auto idx = parse_int_list(body.substr(hash + 1), "orbit ht index");
            if (idx.size() != 1 || idx[0] < 1)
                throw DomainError("orbit ht index must be a positive integer: '" + std::string(text) + "'");
            sel.ht_index = idx[0];
            body = body.substr(0, hash);
        }
        sel.ht = parse_int_list(body, "orbit ht");
        return sel;
    }
    if (low.rfind("partition:", 0) == 0) {
        sel.kind = OrbitSelector::Kind::Partition;
        sel.partition = parse_partition(rest(10));
        return sel;
    }
    sel.kind = OrbitSelector::Kind::Tag;
    if (low == "subregular")
        sel.tag = "subregular";
    else if (low == "g2a1" || low == "g2(a1)")
        sel.tag = "G2a1";
    else if (low == "a1_3" || low == "a1^(3)")
        sel.tag = "A1_3";
    else
        throw DomainError("unknown orbit selector '" + std::string(text)
                          + "' (expected diagram:..., ht:N[#k], partition:..., subregular, G2a1 or A1_3)");
    return sel;
}

std::string to_string(const OrbitSelector& sel)
{
    switch (sel.kind) {
    case OrbitSelector::Kind::Diagram:
        return "diagram:" + to_string(sel.diagram);
    case OrbitSelector::Kind::Ht:
        return "ht:" + join_ints(sel.ht) + (sel.ht_index ? "#" + std::to_string(sel.ht_index) : "");
    case OrbitSelector::Kind::Partition:
        return "partition:" + join_ints(sel.partition.parts);
    case OrbitSelector::Kind::Tag:
        return sel.tag;
    }
    return "?";
}

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::True:
        return "TRUE";
    case Tri::False:
        return "FALSE";
    case Tri::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

std::string to_string(Conclusion c)
{
    switch (c) {
    case Conclusion::GIrreducible:
        return "G_IRREDUCIBLE";
    case Conclusion::ExceptionPossible:
        return "EXCEPTION_POSSIBLE";
    case Conclusion::NoProperReductiveOvergroup:
        return "NO_PROPER_REDUCTIVE_OVERGROUP";
    case Conclusion::NotApplicable:
        return "NOT_APPLICABLE";
    }
    return "?";
}

std::string to_string(TheoremTag t)
{
    switch (t) {
    case TheoremTag::DistOrderP:
        return "dist-orderp";
    case TheoremTag::Korhonen:
        return "korhonen";
    case TheoremTag::Dist:
        return "dist";
    case TheoremTag::DistOrderPFinite:
        return "dist-orderp-finite";
    case TheoremTag::KorhonenFinite:
        return "korhonen-finite";
    case TheoremTag::CorG2:
        return "cor-g2";
    case TheoremTag::Regular:
        return "regular";
    }
    return "?";
}

Conclusion Verdict::headline() const
{
    for (auto c : {Conclusion::ExceptionPossible, Conclusion::NoProperReductiveOvergroup, Conclusion::GIrreducible})
        for (const auto& e : conclusions)
            if (e.conclusion == c)
                return c;
    return Conclusion::NotApplicable;
}

const ConclusionEntry* Verdict::find(TheoremTag tag) const
{
    for (const auto& e : conclusions)
        if (e.tag == tag)
            return &e;
    return nullptr;
}

const std::vector<BadCharEntry>& special_bad_prime_catalogue()
{
    static const std::vector<BadCharEntry> entries{
        {{Family::C, 2}, 2, BadClassTag::C2Subregular, true, true},
        {{Family::G, 2}, 3, BadClassTag::G2A1, true, true},
        {{Family::G, 2}, 3, BadClassTag::G2A1_3, true, false},
    };
    return entries;
}

std::vector<BadCharEntry> bad_prime_order_p_classes(const SimpleFactor& f, int p)
{
    std::vector<BadCharEntry> out;
    for (const auto& e : special_bad_prime_catalogue())
        if (same_type(e.group, f) && e.p == p)
            out.push_back(e);
    return out;
}

Verdict analyze(const Query& q)
{
    if (!is_prime(q.p))
        throw DomainError("--prime " + std::to_string(q.p) + " is not a prime");
    if (q.finite && !is_power_of(q.finite->q, q.p))
        throw DomainError("q = " + std::to_string(q.finite->q) + " is not a power of p = " + std::to_string(q.p));

    const auto [rs_ptr, cat_ptr] = cached_catalogue(q.spec);
    const RootSystem& rs = *rs_ptr;
    const auto& catalogue = *cat_ptr;
    const bool p_good = is_good_prime(q.spec, q.p);
    const Resolved r = resolve(q, rs, catalogue, p_good);

    Verdict v;
    v.group = to_string(q.spec);
    v.p = q.p;
    v.orbit = to_string(q.orbit);
    v.context = q.finite ? "FINITE" : "ALGEBRAIC";
    if (q.finite) {
        v.q = q.finite->q;
        v.frobenius = q.finite->frobenius == FrobeniusKind::QFrobenius ? "Q_FROBENIUS" : "OTHER";
    }
    v.h_hint = q.h_hint;
    v.facts = compute_facts(q, rs, r, v.notes);
    const Facts& f = v.facts;

    if (q.finite)
        finite_conclusions(q, f, r, v.conclusions);
    else
        algebraic_conclusions(q, f, r, v.conclusions);

    if (r.bad == BadClassTag::G2A1_3) {
        std::vector<std::string> assumptions;
        if (q.finite)
            assumptions.push_back("sigma is the identity or a q-Frobenius endomorphism of G");
        v.conclusions.push_back({TheoremTag::CorG2, Conclusion::NoProperReductiveOvergroup, cite::cor_g2, assumptions,
                                 "G2, p = 3, u in A1^(3): the only reductive overgroup containing u is G itself"});
    }
    if (f.regular) {
        std::vector<std::string> assumptions = q.finite
            ? std::vector<std::string>{kHConnected, kSigmaStabilizes, kUInHsigma}
            : std::vector<std::string>{kHReductive, kUInHcirc};
        v.conclusions.push_back({TheoremTag::Regular, Conclusion::GIrreducible, cite::regular, assumptions,
                                 "u is regular in G"});
    }
    std::stable_sort(v.conclusions.begin(), v.conclusions.end(),
                     [](const ConclusionEntry& a, const ConclusionEntry& b) { return a.tag < b.tag; });
    add_notes(q, f, v, v.notes);
    return v;
}

std::string render_report(const Verdict& v, ReportFormat format)
{
    const Facts& f = v.facts;
    if (format == ReportFormat::Json)
        return to_json_value(v).dump(2) + "\n";

    auto yes = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    const std::string class_text = f.class_label + (f.name ? " (" + *f.name + ")" : "");
    std::string context = v.context;
    if (v.q)
        context += ", q = " + std::to_string(*v.q) + ", " + v.frobenius.value_or("");
    const std::vector<std::pair<std::string, std::string>> fact_rows{
        {"p good", yes(f.p_good)},
        {"distinguished", yes(f.distinguished) + (f.regular ? " (regular)" : "")},
        {"order", order_text(f)},
        {"order is p", to_string(f.order_is_p)},
        {"a(G)", std::to_string(f.a_invariant)},
        {"A1 overgroup", to_string(f.a1_status.kind)},
    };

    std::ostringstream out;
    if (format == ReportFormat::Markdown) {
        out << "### " << v.group << ", p = " << v.p << ", " << v.orbit << " (" << context << ")\n\n";
        out << "Class: " << md_cell(class_text);
        if (!f.ht.empty())
            out << ", ht " << join_ints(f.ht);
        if (f.omega)
            out << ", omega " << *f.omega;
        out << "\n\n| fact | value |\n|---|---|\n";
        for (const auto& [k, val] : fact_rows)
            out << "| " << k << " | " << md_cell(val) << " |\n";
        out << "\n| theorem | conclusion | reason | citation | assumptions |\n|---|---|---|---|---|\n";
        for (const auto& c : v.conclusions)
            out << "| " << to_string(c.tag) << " | " << to_string(c.conclusion) << " | " << md_cell(c.reason) << " | "
                << md_cell(c.citation) << " | " << md_cell(join(c.assumptions, "; ")) << " |\n";
        if (!v.notes.empty()) {
            out << "\n";
            for (const auto& n : v.notes)
                out << "- " << n << "\n";
        }
        out << "\n**" << to_string(v.headline()) << "**\n";
        return out.str();
    }

    out << "group " << v.group << "  p = " << v.p << "  orbit " << v.orbit << "  [" << context << "]";
    if (v.h_hint)
        out << "  H hint: " << *v.h_hint;
    out << "\nclass " << class_text;
    if (!f.ht.empty())
        out << "  ht " << join_ints(f.ht);
    if (f.omega)
        out << "  omega " << *f.omega;
    out << "\nfacts:\n";
    for (const auto& [k, val] : fact_rows)
        out << "  " << k << ": " << val << "\n";
    out << "  A1 citation: " << f.a1_status.citation << "\n";
    out << "conclusions:\n";
    for (const auto& c : v.conclusions) {
        out << "  [" << to_string(c.tag) << "] " << to_string(c.conclusion) << " - " << c.reason << "\n";
        out << "      citation: " << c.citation << "\n";
        for (const auto& a : c.assumptions)
            out << "      assumes: " << a << "\n";
    }
    for (const auto& n : v.notes)
        out << "note: " << n << "\n";
    out << "headline: " << to_string(v.headline()) << "\n";
    return out.str();
}

Verdict verdict_from_json(const std::string& text)
{
    const json j = json::parse(text);
    Verdict v;
    v.group = j.at("group").get<std::string>();
    v.p = j.at("p").get<int>();
    v.orbit = j.at("orbit").get<std::string>();
    v.context = j.at("context").get<std::string>();
    v.q = opt_from<std::int64_t>(j, "q");
    v.frobenius = opt_from<std::string>(j, "frobenius");
    v.h_hint = opt_from<std::string>(j, "h_hint");

    const json& jf = j.at("facts");
    Facts& f = v.facts;
    f.p_good = jf.at("p_good").get<bool>();
    f.distinguished = jf.at("distinguished").get<bool>();
    f.regular = jf.at("regular").get<bool>();
    if (!jf.at("order").is_null())
        f.order = PrimePower{jf.at("order").at("p").get<int>(), jf.at("order").at("a").get<int>()};
    f.order_is_p = enum_from(jf.at("order_is_p").get<std::string>(), kAllTri, "order_is_p");
    f.a_invariant = jf.at("a_invariant").get<int>();
    f.a1_status.kind = a1_kind_from_string(jf.at("a1_status").at("kind").get<std::string>());
    f.a1_status.citation = jf.at("a1_status").at("citation").get<std::string>();
    f.class_label = jf.at("class_label").get<std::string>();
    f.name = opt_from<std::string>(jf, "name");
    f.ht = jf.at("ht").get<std::vector<int>>();
    f.omega = opt_from<int>(jf, "omega");

    for (const auto& jc : j.at("conclusions")) {
        ConclusionEntry c;
        c.tag = enum_from(jc.at("theorem").get<std::string>(), kAllTags, "theorem");
        c.conclusion = enum_from(jc.at("conclusion").get<std::string>(), kAllConclusions, "conclusion");
        c.citation = jc.at("citation").get<std::string>();
        c.assumptions = jc.at("assumptions").get<std::vector<std::string>>();
        c.reason = jc.at("reason").get<std::string>();
        v.conclusions.push_back(std::move(c));
    }
    v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
}

} // namespace unipotent
