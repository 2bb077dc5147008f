#include "journalnet/classify.hpp"

#include "journalnet/errors.hpp"

namespace journalnet {

std::string_view to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::APlus: return "A+";
        case ClassLabel::A: return "A";
        case ClassLabel::B: return "B";
        case ClassLabel::C: return "C";
        case ClassLabel::D: return "D";
        case ClassLabel::NotIncluded: return "NotIncluded";
    }
    return "?";
}

std::string_view to_string(DanishLevel level) {
    switch (level) {
        case DanishLevel::Level2: return "2";
        case DanishLevel::Level1: return "1";
        case DanishLevel::NotListed: return "0";
    }
    return "?";
}

std::optional<ClassLabel> parse_class_label(std::string_view s) {
    if (s == "A+") return ClassLabel::APlus;
    if (s == "A") return ClassLabel::A;
    if (s == "B") return ClassLabel::B;
    if (s == "C") return ClassLabel::C;
    if (s == "D") return ClassLabel::D;
    if (s == "NotIncluded") return ClassLabel::NotIncluded;
    return std::nullopt;
}

std::optional<DanishLevel> parse_danish_level(std::string_view s) {
    if (s == "2") return DanishLevel::Level2;
    if (s == "1") return DanishLevel::Level1;
    if (s == "0") return DanishLevel::NotListed;
    return std::nullopt;
}

void JournalDossier::validate() const {
    auto fail = [&](const std::string& what) {
        throw DataError("dossier for \"" + journal + "\": " + what);
    };
    if (jcr_ss_quartile && (*jcr_ss_quartile < 1 || *jcr_ss_quartile > 4))
        fail("jcr_ss_quartile outside 1..4");
    if (scopus_ipp_quartile && (*scopus_ipp_quartile < 1 || *scopus_ipp_quartile > 4))
        fail("scopus_ipp_quartile outside 1..4");
    if (ipp_value && *ipp_value < 0.0) fail("negative ipp_value");
    if (jcr_ss_quartile && !indexed_ssci) fail("jcr_ss_quartile implies indexed_ssci");
    if (scopus_ipp_quartile && !ipp_value) fail("scopus_ipp_quartile implies ipp_value");
    if (latindex_catalogue && !latindex_directory)
        fail("latindex_catalogue implies latindex_directory");
}

namespace {

// A journal has a Scopus record exactly when it carries an IPP value.
bool scopus_indexed(const JournalDossier& d) { return d.ipp_value.has_value(); }

// Floating-point representations of zero count as "IPP = 0".
bool ipp_is_zero(const JournalDossier& d) { return d.ipp_value && *d.ipp_value <= 0.0; }

}  // namespace

ClassLabel classify_circ_social(const JournalDossier& d) {
    if (d.jcr_ss_quartile == 1) return ClassLabel::APlus;

    const bool wos_not_q4 = (d.indexed_ssci || d.indexed_ahci) && d.jcr_ss_quartile != 4;
    if (wos_not_q4 || d.scopus_ipp_quartile == 1) return ClassLabel::A;

    const bool scopus_lower_quartiles = d.scopus_ipp_quartile && *d.scopus_ipp_quartile >= 2 &&
                                        d.ipp_value && *d.ipp_value > 0.0;
    if (d.jcr_ss_quartile == 4 || scopus_lower_quartiles || d.fecyt_seal) return ClassLabel::B;

    const bool erih_social = d.erih_plus && d.erih_discipline == ErihDiscipline::SocialSciences;
    if ((scopus_indexed(d) && ipp_is_zero(d)) || erih_social || d.latindex_catalogue)
        return ClassLabel::C;

    if (d.latindex_directory && !d.latindex_catalogue) return ClassLabel::D;

    return ClassLabel::NotIncluded;
}

ClassLabel classify_circ_humanities(const JournalDossier& d) {
    if (d.indexed_ahci && d.scopus_ipp_quartile == 1) return ClassLabel::APlus;
    if (d.erih_plus && d.erih_discipline == ErihDiscipline::Humanities) return ClassLabel::B;
    return ClassLabel::NotIncluded;
}

double bfi_points(DanishLevel level) {
    switch (level) {
        case DanishLevel::Level2: return 3.0;
        case DanishLevel::Level1: return 1.0;
        case DanishLevel::NotListed: return 0.0;
    }
    return 0.0;
}

Level2ShareResult validate_level2_share(const std::map<std::string, std::int64_t>& production,
                                        const std::set<std::string>& level2_set) {
    std::int64_t total = 0;
    std::int64_t covered = 0;
    for (const auto& [journal, articles] : production) {
        if (articles < 0)
            throw DataError("negative production for \"" + journal + "\"");
        total += articles;
        if (level2_set.contains(journal)) covered += articles;
    }
    if (total <= 0) throw EmptyProduction("total world production is zero");
    Level2ShareResult result;
    result.share = static_cast<double>(covered) / static_cast<double>(total);
    result.pass = result.share <= 0.20;
    return result;
}

}  // namespace journalnet
