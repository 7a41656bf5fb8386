#include "cli.hpp"
#include "table.hpp"

#include "unipotent/serialize.hpp"
#include "unipotent/verdict.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <set>

namespace unipotent::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    int jobs = 1;
    std::string group;
    int prime = 0;
    std::string orbit;
    bool distinguished = false;
    std::int64_t finite_q = 0;
    std::string frobenius = "q-frobenius";
    std::string h_hint;
};

ReportFormat report_format(const std::string& s)
{
    const std::string f = [&] {
        std::string t = s;
        std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
        return t;
    }();
    if (f == "json")
        return ReportFormat::Json;
    if (f == "markdown")
        return ReportFormat::Markdown;
    return ReportFormat::Text;
}

GroupSpec group_option(const std::string& text)
{
    try {
        return parse_group_spec(text);
    } catch (const DomainError& e) {
        throw DomainError("--group '" + text + "': " + e.what());
    }
}

int prime_option(int p)
{
    if (!is_prime(p))
        throw DomainError("--prime " + std::to_string(p) + " is not a prime");
    return p;
}

OrbitSelector orbit_option(const std::string& text)
{
    try {
        return parse_orbit_selector(text);
    } catch (const DomainError& e) {
        throw DomainError(std::string("--orbit: ") + e.what());
    }
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string set_text(const IndexSet& s) { return "{" + join_ints(s) + "}"; }

void emit(const Table& t, ReportFormat fmt, std::ostream& out)
{
    if (fmt == ReportFormat::Markdown)
        t.print_markdown(out);
    else
        t.print_text(out);
}

int cmd_roots(const Options& o, std::ostream& out)
{
    const RootSystem rs = build_root_system(group_option(o.group));
    const ReportFormat fmt = report_format(o.format);
    if (fmt == ReportFormat::Json) {
        out << root_system_json(rs);
        return 0;
    }
    if (fmt == ReportFormat::Markdown)
        out << "### " << to_string(rs.spec) << "\n\n";
    else
        out << to_string(rs.spec) << "\n";
    out << "rank " << rs.rank() << ", dim " << rs.dimension() << ", " << rs.positive_roots.size()
        << " positive roots\n";
    if (fmt == ReportFormat::Markdown)
        out << "\n";
    out << "cartan:\n";
    for (int i = 0; i < rs.rank(); ++i)
        out << "  " << to_string(IntVector(rs.cartan.row(i).transpose()), ' ') << "\n";
    if (fmt == ReportFormat::Markdown)
        out << "\n";
    Table t{{"#", "coefficients", "height", "factor"}, {}};
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        const Root& r = rs.positive_roots[k];
        t.rows.push_back({std::to_string(k + 1), to_string(r.coeffs), std::to_string(r.height()),
                          to_string(rs.spec.factors[r.factor])});
    }
    emit(t, fmt, out);
    return 0;
}

// Order annotation of a catalogue row at a bad prime: only the classes of
// the bad-prime catalogue have a known order.
std::optional<BadClassTag> bad_class_of(const RootSystem& rs, const OrbitRecord& rec, int p)
{
    if (!rs.spec.is_simple())
        return std::nullopt;
    for (const auto& e : bad_prime_order_p_classes(rs.spec.factors[0], p)) {
        if (e.class_tag == BadClassTag::C2Subregular && rec.centralizer_dimension() == rs.rank() + 2)
            return e.class_tag;
        if (e.class_tag == BadClassTag::G2A1 && rec.name == std::optional<std::string>("G2(a1)"))
            return e.class_tag;
    }
    return std::nullopt;
}

int cmd_orbits(const Options& o, std::ostream& out)
{
    const RootSystem rs = build_root_system(group_option(o.group));
    const ReportFormat fmt = report_format(o.format);
    const bool annotate = o.prime != 0;
    const int p = annotate ? prime_option(o.prime) : 0;
    const bool good = annotate && is_good_prime(rs.spec, p);

    std::vector<OrbitRecord> cat;
    for (auto& rec : enumerate_orbits(rs, o.jobs))
        if (!o.distinguished || rec.distinguished)
            cat.push_back(std::move(rec));

    std::vector<std::string> notes;
    if (annotate && !good) {
        notes.push_back("p = " + std::to_string(p) + " is bad for " + to_string(rs.spec)
                        + ": orders are UNKNOWN except for the bad-prime catalogue classes");
        if (rs.spec.is_simple())
            for (const auto& e : bad_prime_order_p_classes(rs.spec.factors[0], p))
                if (e.class_tag == BadClassTag::G2A1_3)
                    notes.push_back("extra class A1^(3) of order " + std::to_string(p)
                                    + " not listed above (orbit tag A1_3)");
    }

    struct Annot {
        std::string order;
        std::optional<std::int64_t> value;
        Tri is_p = Tri::Unknown;
        int omega = 0;
    };
    std::vector<Annot> ann;
    for (const auto& rec : cat) {
        Annot a;
        a.omega = highest_lambda_weight(rs, rec.diagram);
        if (!annotate) {
        } else if (good) {
            const PrimePower pp = orbit_order(rec, p);
            a.value = pp.value();
            a.order = std::to_string(pp.value());
            a.is_p = pp.a == 1 ? Tri::True : Tri::False;
        } else if (bad_class_of(rs, rec, p)) {
            a.value = p;
            a.order = std::to_string(p) + " (catalogue)";
            a.is_p = Tri::True;
        } else {
            a.order = "UNKNOWN";
        }
        ann.push_back(a);
    }

    if (fmt == ReportFormat::Json) {
        json classes = json::parse(catalogue_json(cat));
        for (std::size_t i = 0; i < cat.size(); ++i) {
            classes[i]["dim_centralizer"] = cat[i].centralizer_dimension();
            classes[i]["omega"] = ann[i].omega;
            if (annotate) {
                classes[i]["order"] = ann[i].value ? json(*ann[i].value) : json(nullptr);
                classes[i]["order_is_p"] = to_string(ann[i].is_p);
            }
        }
        json doc{{"group", to_string(rs.spec)},
                 {"prime", annotate ? json(p) : json(nullptr)},
                 {"good_a1_bound", annotate ? json(2 * p - 2) : json(nullptr)},
                 {"classes", classes},
                 {"notes", notes}};
        out << doc.dump(2) << "\n";
        return 0;
    }

    Table t{{"diagram", "name", "levi", "J", "dist", "ht", "dim C"}, {}};
    if (annotate)
        for (const char* h : {"order", "order=p", "omega", "2p-2"})
            t.header.push_back(h);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& rec = cat[i];
        std::vector<std::string> row{to_string(rec.diagram),
                                     rec.name.value_or("-"),
                                     set_text(rec.datum.levi.subset),
                                     set_text(ambient_J(rec)),
                                     rec.distinguished ? "yes" : "no",
                                     rec.ht.empty() ? "-" : join_ints(rec.ht, "+"),
                                     std::to_string(rec.centralizer_dimension())};
        if (annotate) {
            row.push_back(ann[i].order);
            row.push_back(to_string(ann[i].is_p));
            row.push_back(std::to_string(ann[i].omega));
            row.push_back(std::to_string(2 * p - 2));
        }
        t.rows.push_back(std::move(row));
    }
    if (fmt == ReportFormat::Markdown)
        out << "### " << to_string(rs.spec) << ": " << cat.size() << " classes\n\n";
    else
        out << to_string(rs.spec) << ": " << cat.size() << " classes\n";
    emit(t, fmt, out);
    for (const auto& n : notes)
        out << (fmt == ReportFormat::Markdown ? "\n- " : "note: ") << n << "\n";
    return 0;
}

Query make_query(const Options& o, bool with_context)
{
    Query q;
    q.spec = group_option(o.group);
    q.p = prime_option(o.prime);
    q.orbit = orbit_option(o.orbit);
    if (!with_context)
        return q;
    if (o.finite_q != 0) {
        std::int64_t r = o.finite_q;
        while (r > 1 && r % q.p == 0)
            r /= q.p;
        if (o.finite_q < q.p || r != 1)
            throw DomainError("--finite " + std::to_string(o.finite_q) + " is not a power of --prime "
                              + std::to_string(q.p));
        FiniteContext fc;
        fc.q = o.finite_q;
        fc.frobenius = o.frobenius == "other" ? FrobeniusKind::Other : FrobeniusKind::QFrobenius;
        q.finite = fc;
    }
    if (!o.h_hint.empty())
        q.h_hint = o.h_hint;
    return q;
}

int cmd_order(const Options& o, std::ostream& out)
{
    const Query q = make_query(o, false);
    const Verdict v = analyze(q);
    const Facts& f = v.facts;
    const ReportFormat fmt = report_format(o.format);
    if (fmt == ReportFormat::Json) {
        json doc{{"group", v.group},
                 {"p", v.p},
                 {"orbit", v.orbit},
                 {"class", f.class_label},
                 {"name", f.name ? json(*f.name) : json(nullptr)},
                 {"p_good", f.p_good},
                 {"order", f.order ? json{{"p", f.order->p}, {"a", f.order->a}, {"value", f.order->value()}}
                                   : json(nullptr)},
                 {"order_is_p", to_string(f.order_is_p)},
                 {"ht", f.ht},
                 {"omega", f.omega ? json(*f.omega) : json(nullptr)},
                 {"good_a1_bound", 2 * v.p - 2}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    std::string order = "UNKNOWN";
    if (f.order)
        order = std::to_string(f.order->value()) + (f.order->a > 1
                                                        ? " = " + std::to_string(f.order->p) + "^"
                                                            + std::to_string(f.order->a)
                                                        : "");
    Table t{{"field", "value"},
            {{"group", v.group},
             {"p", std::to_string(v.p) + (f.p_good ? " (good)" : " (bad)")},
             {"class", f.class_label + (f.name ? " " + *f.name : "")},
             {"ht", f.ht.empty() ? "-" : join_ints(f.ht, "+")},
             {"order", order},
             {"order = p", to_string(f.order_is_p)},
             {"omega", f.omega ? std::to_string(*f.omega) : "-"},
             {"2p-2", std::to_string(2 * v.p - 2)}}};
    emit(t, fmt, out);
    for (const auto& n : v.notes)
        out << "note: " << n << "\n";
    return 0;
}

int cmd_verdict(const Options& o, std::ostream& out)
{
    out << render_report(analyze(make_query(o, true)), report_format(o.format));
    return 0;
}

int cmd_reproduce(const Options& o, std::ostream& out)
{
    const auto rows = reproduction_rows();
    const bool all = std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.pass; });
    const ReportFormat fmt = report_format(o.format);
    if (fmt == ReportFormat::Json) {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"check", r.label}, {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass}});
        out << json{{"rows", arr}, {"all_pass", all}}.dump(2) << "\n";
    } else {
        Table t{{"check", "expected", "observed", "result"}, {}};
        for (const auto& r : rows)
            t.rows.push_back({r.label, r.expected, r.observed, r.pass ? "PASS" : "FAIL"});
        emit(t, fmt, out);
        out << (all ? "all checks reproduce\n" : "some checks FAILED\n");
    }
    return all ? 0 : 2;
}

std::string ints_text(std::vector<int> v)
{
    return "{" + join_ints(v) + "}";
}

std::vector<const OrbitRecord*> distinguished(const std::vector<OrbitRecord>& cat)
{
    std::vector<const OrbitRecord*> out;
    for (const auto& r : cat)
        if (r.distinguished)
            out.push_back(&r);
    return out;
}

Verdict quick_verdict(const std::string& group, int p, const std::string& orbit,
                      std::optional<std::string> hint = std::nullopt)
{
    Query q;
    q.spec = parse_group_spec(group);
    q.p = p;
    q.orbit = parse_orbit_selector(orbit);
    q.h_hint = std::move(hint);
    return analyze(q);
}

} // namespace

std::vector<ReproRow> reproduction_rows()
{
    std::vector<ReproRow> rows;

    {
        const RootSystem e8 = build_root_system(parse_group_spec("E8"));
        const auto cat = enumerate_orbits(e8);
        const auto dist = distinguished(cat);
        std::multiset<int> hts;
        std::vector<int> picked, orders;
        for (const auto* r : dist)
            hts.insert(r->ht[0]);
        bool ok = true;
        for (int h : {17, 14, 13, 11, 11}) {
            auto it = hts.find(h);
            if (it == hts.end()) {
                ok = false;
                continue;
            }
            hts.erase(it);
            picked.push_back(h);
        }
        for (const auto* r : dist)
            if (std::set<int>{17, 14, 13, 11}.count(r->ht[0]))
                orders.push_back(static_cast<int>(orbit_order(*r, 11).value()));
        ok = ok && orders.size() == 5 && std::all_of(orders.begin(), orders.end(), [](int v) { return v == 121; });
        rows.push_back({"E8 distinguished ht {17,14,13,11,11}, order 121 at p=11", "ht {17,14,13,11,11}; 121 each",
                        "ht " + ints_text(picked) + "; orders " + ints_text(orders), ok});
        rows.push_back({"E8 distinguished classes", "11", std::to_string(dist.size()), dist.size() == 11});
    }
    {
        const RootSystem e7 = build_root_system(parse_group_spec("E7"));
        const auto cat = enumerate_orbits(e7);
        std::vector<int> hts, orders;
        for (const auto* r : distinguished(cat))
            if (r->name && (*r->name == "E7(a3)" || *r->name == "E7(a4)" || *r->name == "E7(a5)")) {
                hts.push_back(r->ht[0]);
                orders.push_back(static_cast<int>(orbit_order(*r, 5).value()));
            }
        const bool ok = hts == std::vector<int>{9, 7, 5} || hts == std::vector<int>{5, 7, 9};
        std::sort(hts.rbegin(), hts.rend());
        rows.push_back({"E7(a3..a5) ht ∈ {9,7,5}, order 25 at p=5", "ht {9,7,5}; 25 each",
                        "ht " + ints_text(hts) + "; orders " + ints_text(orders),
                        ok && orders == std::vector<int>(3, 25)});
    }
    {
        const RootSystem e6 = build_root_system(parse_group_spec("E6"));
        const auto cat = enumerate_orbits(e6);
        std::vector<const OrbitRecord*> dist = distinguished(cat);
        std::sort(dist.begin(), dist.end(), [](auto* a, auto* b) { return a->ht[0] > b->ht[0]; });
        const OrbitRecord* sub = dist.size() > 1 ? dist[1] : nullptr;
        const std::int64_t order = sub ? orbit_order(*sub, 7).value() : 0;
        rows.push_back({"E6 subregular order 49 at p=7", "49",
                        std::to_string(order) + (sub ? " (ht " + std::to_string(sub->ht[0]) + ")" : ""),
                        order == 49 && sub->centralizer_dimension() == 8});
    }
    {
        const RootSystem c2 = build_root_system(parse_group_spec("C2"));
        Labels good(2), bad(2);
        good << 0, 2;
        bad << 2, 0;
        const bool g = is_good_a1_weights(c2, good, 2);
        const bool b = is_good_a1_weights(c2, bad, 2);
        rows.push_back({"C2 good A1 at p=2: omega 2 passes, omega 4 fails", "pass, fail",
                        "omega " + std::to_string(highest_lambda_weight(c2, good)) + (g ? " pass" : " fail")
                            + ", omega " + std::to_string(highest_lambda_weight(c2, bad)) + (b ? " pass" : " fail"),
                        g && !b});
    }
    {
        const auto& cat = special_bad_prime_catalogue();
        rows.push_back({"bad-prime catalogue entries", "3", std::to_string(cat.size()), cat.size() == 3});
        const auto c2 = quick_verdict("C2", 2, "subregular", "A1").headline();
        rows.push_back({"C2, p=2, subregular, H of type A1", "EXCEPTION_POSSIBLE", to_string(c2),
                        c2 == Conclusion::ExceptionPossible});
        const auto g2 = quick_verdict("G2", 3, "G2a1").headline();
        rows.push_back({"G2, p=3, G2(a1)", "G_IRREDUCIBLE", to_string(g2), g2 == Conclusion::GIrreducible});
        const auto a13 = quick_verdict("G2", 3, "A1_3").headline();
        rows.push_back({"G2, p=3, A1^(3)", "NO_PROPER_REDUCTIVE_OVERGROUP", to_string(a13),
                        a13 == Conclusion::NoProperReductiveOvergroup});
    }
    {
        const int e8 = a_invariant(parse_group_spec("E8"));
        const int g2 = a_invariant(parse_group_spec("G2"));
        rows.push_back({"a(E8), a(G2)", "9, 3", std::to_string(e8) + ", " + std::to_string(g2), e8 == 9 && g2 == 3});
        const Verdict v = quick_verdict("E8", 11, "ht:17");
        const auto* op = v.find(TheoremTag::DistOrderP);
        const auto* d = v.find(TheoremTag::Dist);
        const bool ok = op && d && op->conclusion == Conclusion::NotApplicable && d->conclusion == Conclusion::GIrreducible;
        rows.push_back({"E8, p=11, ht 17: order-p theorem blocked, a(G) theorem applies", "N/A; G_IRREDUCIBLE",
                        (op ? to_string(op->conclusion) : "-") + "; " + (d ? to_string(d->conclusion) : "-"), ok});
    }
    {
        const Verdict v = quick_verdict("E7", 5, "ht:9");
        const auto* op = v.find(TheoremTag::DistOrderP);
        const auto* d = v.find(TheoremTag::Dist);
        const bool note = std::any_of(v.notes.begin(), v.notes.end(),
                                      [](const std::string& n) { return n.find("A1D6") != std::string::npos; });
        const bool ok = op && d && op->conclusion == Conclusion::NotApplicable
            && d->conclusion == Conclusion::NotApplicable && note;
        rows.push_back({"E7, p=5, ht 9: both gates blocked, A1D6 note", "N/A; N/A; note",
                        (op ? to_string(op->conclusion) : "-") + "; " + (d ? to_string(d->conclusion) : "-")
                            + (note ? "; note" : "; no note"),
                        ok});
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Unipotent classes, element orders and G-irreducibility verdicts", "unipotent"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "text, json or markdown")
        ->check(CLI::IsMember({"text", "json", "markdown"}, CLI::ignore_case));
    app.add_option("--jobs", o.jobs, "worker threads for the enumeration")->check(CLI::Range(1, 256));

    auto* roots = app.add_subcommand("roots", "Cartan matrix and positive roots");
    roots->add_option("--group", o.group, "e.g. E8, A1xA1+T2")->required();

    auto* orbits = app.add_subcommand("orbits", "unipotent class catalogue");
    orbits->add_option("--group", o.group)->required();
    orbits->add_flag("--distinguished", o.distinguished, "distinguished classes only");
    orbits->add_option("--prime", o.prime, "annotate orders, order-p flag and omega");

    auto* order = app.add_subcommand("order", "order of a unipotent element");
    order->add_option("--group", o.group)->required();
    order->add_option("--prime", o.prime)->required();
    order->add_option("--orbit", o.orbit, "diagram:..., ht:N[#k], partition:..., subregular, G2a1, A1_3")->required();

    auto* verdict = app.add_subcommand("verdict", "G-irreducibility of overgroups");
    verdict->add_option("--group", o.group)->required();
    verdict->add_option("--prime", o.prime)->required();
    verdict->add_option("--orbit", o.orbit)->required();
    verdict->add_option("--finite", o.finite_q, "finite context with this q");
    verdict->add_option("--frobenius", o.frobenius, "q-frobenius or other")
        ->check(CLI::IsMember({"q-frobenius", "other"}, CLI::ignore_case));
    verdict->add_option("--h-hint", o.h_hint, "type of the overgroup H, e.g. A1");

    app.add_subcommand("reproduce", "check the quoted values");

    std::vector<std::string> argv_store{"unipotent"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    std::transform(o.frobenius.begin(), o.frobenius.end(), o.frobenius.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return guarded(
        [&] {
            if (*roots)
                return cmd_roots(o, out);
            if (*orbits)
                return cmd_orbits(o, out);
            if (*order)
                return cmd_order(o, out);
            if (*verdict)
                return cmd_verdict(o, out);
            return cmd_reproduce(o, out);
        },
        err);
}

int guarded(const std::function<int()>& body, std::ostream& err)
{
    try {
        return body();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace unipotent::cli
