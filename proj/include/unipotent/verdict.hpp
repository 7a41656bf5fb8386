#pragma once

#include "unipotent/classical.hpp"
#include "unipotent/orders.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unipotent {

/// How the caller names a unipotent class.
///
///   diagram:0,2,0,2   dominant weighted Dynkin diagram
///   ht:17  ht:11#2    distinguished class by ht_J(rho), #k picks the k-th
///                     match in diagram order
///   partition:6,2     Jordan blocks (simple classical groups)
///   subregular, G2a1, A1_3
///                     the tagged classes, including the bad-prime ones
struct OrbitSelector {
    enum class Kind { Diagram, Ht, Partition, Tag };

    Kind kind = Kind::Diagram;
    Labels diagram;
    std::vector<int> ht;
    int ht_index = 0; ///< 1-based, 0 when not given
    Partition partition;
    std::string tag; ///< "subregular", "G2a1" or "A1_3"
};

OrbitSelector parse_orbit_selector(std::string_view text);
std::string to_string(const OrbitSelector& sel);

enum class FrobeniusKind { QFrobenius, Other };

struct FiniteContext {
    std::int64_t q = 0;
    FrobeniusKind frobenius = FrobeniusKind::QFrobenius;
};

struct Query {
    GroupSpec spec;
    int p = 2;
    OrbitSelector orbit;
    std::optional<FiniteContext> finite; ///< absent: algebraic group context
    std::optional<std::string> h_hint;   ///< e.g. "A1" for a type A1 overgroup
};

enum class Tri { True, False, Unknown };

std::string to_string(Tri t);

struct Facts {
    bool p_good = false;
    bool distinguished = false;
    bool regular = false;
    std::optional<PrimePower> order; ///< absent: unknown
    Tri order_is_p = Tri::Unknown;
    int a_invariant = 1;
    A1Status a1_status;
    std::string class_label; ///< diagram or bad-prime tag
    std::optional<std::string> name;
    std::vector<int> ht;
    std::optional<int> omega;

    friend bool operator==(const Facts&, const Facts&) = default;
};

enum class Conclusion { GIrreducible, ExceptionPossible, NoProperReductiveOvergroup, NotApplicable };

std::string to_string(Conclusion c);

/// Theorem tags, in report order.
enum class TheoremTag { DistOrderP, Korhonen, Dist, DistOrderPFinite, KorhonenFinite, CorG2, Regular };

std::string to_string(TheoremTag t);

struct ConclusionEntry {
    TheoremTag tag = TheoremTag::DistOrderP;
    Conclusion conclusion = Conclusion::NotApplicable;
    std::string citation;
    std::vector<std::string> assumptions; ///< hypotheses on H and sigma the engine cannot check
    std::string reason;                   ///< the deciding or blocking fact

    friend bool operator==(const ConclusionEntry&, const ConclusionEntry&) = default;
};

struct Verdict {
    std::string group;
    int p = 2;
    std::string orbit;
    std::string context; ///< "ALGEBRAIC" or "FINITE"
    std::optional<std::int64_t> q;
    std::optional<std::string> frobenius;
    std::optional<std::string> h_hint;

    Facts facts;
    std::vector<ConclusionEntry> conclusions; ///< sorted by tag
    std::vector<std::string> notes;

    /// The strongest conclusion: EXCEPTION_POSSIBLE, then
    /// NO_PROPER_REDUCTIVE_OVERGROUP, then G_IRREDUCIBLE.
    Conclusion headline() const;
    const ConclusionEntry* find(TheoremTag tag) const;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct BadCharEntry {
    SimpleFactor group;
    int p;
    BadClassTag class_tag;
    bool order_p;
    bool a1_exists;
};

/// Distinguished unipotent elements of order p for simple G and bad p.
/// Every other (simple type, bad prime) pair has none.
const std::vector<BadCharEntry>& special_bad_prime_catalogue();

/// Entries of the catalogue for (factor, p).
std::vector<BadCharEntry> bad_prime_order_p_classes(const SimpleFactor& f, int p);

/// Throws DomainError on a non-prime p, a q that is not a power of p, or
/// an orbit selector that does not resolve.
Verdict analyze(const Query& q);

enum class ReportFormat { Text, Json, Markdown };

std::string render_report(const Verdict& v, ReportFormat format);

/// Inverse of the JSON rendering.
Verdict verdict_from_json(const std::string& text);

/// Number of fact rows in the Markdown facts table.
inline constexpr int kMarkdownFactRows = 6;

} // namespace unipotent
