#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace journalnet {

// CIRC classes, best first.
enum class ClassLabel { APlus, A, B, C, D, NotIncluded };

// Danish authority levels, best first.
enum class DanishLevel { Level2, Level1, NotListed };

enum class ErihDiscipline { SocialSciences, Humanities, None };

std::string_view to_string(ClassLabel label);
std::string_view to_string(DanishLevel level);
std::optional<ClassLabel> parse_class_label(std::string_view s);
std::optional<DanishLevel> parse_danish_level(std::string_view s);  // "2" | "1" | "0"

// Classification inputs for one journal: index memberships and impact ranks.
struct JournalDossier {
    std::string journal;
    std::optional<int> jcr_ss_quartile;      // 1..4, implies indexed_ssci
    bool indexed_ssci = false;
    bool indexed_ahci = false;
    std::optional<int> scopus_ipp_quartile;  // 1..4, implies ipp_value
    std::optional<double> ipp_value;
    bool erih_plus = false;
    ErihDiscipline erih_discipline = ErihDiscipline::None;
    bool fecyt_seal = false;
    bool latindex_catalogue = false;  // implies latindex_directory
    bool latindex_directory = false;

    // Field-consistency invariants; throws DataError.
    void validate() const;
};

/// Social Sciences track. The highest class whose criterion holds wins:
///   A+  JCR SS first quartile
///   A   SSCI or A&HCI indexed and not JCR fourth quartile; or Scopus IPP Q1
///   B   JCR fourth quartile; Scopus IPP Q2-Q4 with IPP > 0; or FECYT seal
///   C   Scopus-indexed with IPP = 0; ERIH Plus (social sciences); or
///       LATINDEX catalogue
///   D   LATINDEX directory without the catalogue
ClassLabel classify_circ_social(const JournalDossier& d);

/// Humanities track:
///   A+  A&HCI indexed and Scopus IPP Q1
///   B   ERIH Plus humanities journal
/// No other class has a printed criterion; everything else is NotIncluded.
ClassLabel classify_circ_humanities(const JournalDossier& d);

/// Performance points: level 2 -> 3.0, level 1 -> 1.0, not listed -> 0.0.
double bfi_points(DanishLevel level);

struct Level2ShareResult {
    double share = 0.0;
    bool pass = false;  // share <= 0.20, boundary inclusive
};

/// Share of world article production covered by the level-2 set.
/// Throws EmptyProduction when total production is not positive.
Level2ShareResult validate_level2_share(const std::map<std::string, std::int64_t>& production,
                                        const std::set<std::string>& level2_set);

}  // namespace journalnet
