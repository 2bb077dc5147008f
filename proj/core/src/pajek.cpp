#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "journalnet/errors.hpp"
#include "journalnet/formats.hpp"

namespace journalnet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Weight rendering: integers without a decimal point, otherwise 6 significant
// digits. Keeps output byte-stable across platforms.
std::string format_weight(double w) {
    if (w == std::floor(w) && std::abs(w) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(w));
        return buf;
    }
    return format_double(w);
}

struct Tokenizer {
    std::string_view rest;

    std::optional<std::string_view> next() {
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
            rest.remove_prefix(1);
        if (rest.empty()) return std::nullopt;
        std::size_t end = 0;
        while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
        const auto tok = rest.substr(0, end);
        rest.remove_prefix(end);
        return tok;
    }
};

std::optional<long long> parse_ll(std::string_view s) {
    long long v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
    return v;
}

std::optional<double> parse_num(std::string_view s) {
    try {
        std::size_t used = 0;
        const std::string tmp(s);
        const double v = std::stod(tmp, &used);
        if (used != tmp.size()) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

std::string write_pajek(const CoCitationNetwork& net) {
    std::ostringstream out;
    out << "*Vertices " << net.size() << "\n";
    for (std::size_t v = 0; v < net.size(); ++v) {
        const auto& name = net.names()[v];
        if (name.find('"') != std::string::npos)
            throw IoFailure("journal name contains a quote: " + name);
        out << (v + 1) << " \"" << name << "\"\n";
    }
    out << "*Edges\n";
    for (const auto& [key, w] : net.edges())
        out << (key.first + 1) << " " << (key.second + 1) << " " << format_weight(w) << "\n";
    return out.str();
}

PajekReadResult read_pajek(std::istream& in, std::string_view source_name) {
    const std::string where(source_name);
    enum class Section { None, Vertices, Edges, Arcs };
    Section section = Section::None;

    long long vertex_count = -1;
    std::vector<std::string> labels;
    std::map<std::pair<std::string, std::string>, double> undirected;
    std::vector<std::string> warnings;

    std::string line;
    std::size_t line_no = 0;
    bool saw_vertices = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto text = trim(line);
        if (text.empty() || text.front() == '%') continue;  // Pajek comment

        if (text.front() == '*') {
            Tokenizer tok{text};
            const auto keyword = lower(*tok.next());
            if (keyword == "*vertices") {
                const auto count_tok = tok.next();
                const auto count = count_tok ? parse_ll(*count_tok) : std::nullopt;
                if (!count || *count < 0)
                    throw MalformedHeader(where + ":" + std::to_string(line_no) +
                                          ": *Vertices needs a nonnegative count");
                vertex_count = *count;
                saw_vertices = true;
                section = Section::Vertices;
            } else if (keyword == "*edges") {
                section = Section::Edges;
            } else if (keyword == "*arcs") {
                section = Section::Arcs;
            } else {
                throw MalformedHeader(where + ":" + std::to_string(line_no) +
                                      ": unsupported section \"" + std::string(text) + "\"");
            }
            if (!saw_vertices)
                throw MalformedHeader(where + ": first section must be *Vertices");
            continue;
        }
        if (section == Section::None)
            throw MalformedHeader(where + ":" + std::to_string(line_no) +
                                  ": content before *Vertices");

        if (section == Section::Vertices) {
            Tokenizer tok{text};
            const auto id = parse_ll(*tok.next());
            if (!id || *id < 1 || *id > vertex_count)
                throw MalformedHeader(where + ":" + std::to_string(line_no) +
                                      ": vertex id outside 1.." + std::to_string(vertex_count));
            std::string label;
            auto rest = trim(tok.rest);
            if (!rest.empty() && rest.front() == '"') {
                const auto close = rest.find('"', 1);
                if (close == std::string_view::npos)
                    throw MalformedHeader(where + ":" + std::to_string(line_no) +
                                          ": unterminated label quote");
                label = std::string(rest.substr(1, close - 1));
            } else if (const auto word = Tokenizer{rest}.next()) {
                label = std::string(*word);
            }
            if (label.empty())
                throw MalformedHeader(where + ":" + std::to_string(line_no) + ": missing label");
            if (labels.size() < static_cast<std::size_t>(vertex_count))
                labels.resize(static_cast<std::size_t>(vertex_count));
            auto& slot = labels[static_cast<std::size_t>(*id - 1)];
            if (!slot.empty())
                throw MalformedHeader(where + ":" + std::to_string(line_no) +
                                      ": duplicate vertex id " + std::to_string(*id));
            slot = std::move(label);
            continue;
        }

        // Edge or arc line: `i j [w]`.
        Tokenizer tok{text};
        const auto a_tok = tok.next();
        const auto b_tok = tok.next();
        const auto a = a_tok ? parse_ll(*a_tok) : std::nullopt;
        const auto b = b_tok ? parse_ll(*b_tok) : std::nullopt;
        if (!a || !b)
            throw MalformedHeader(where + ":" + std::to_string(line_no) + ": bad edge line");
        if (*a < 1 || *a > vertex_count || *b < 1 || *b > vertex_count)
            throw DanglingEdge(where + ":" + std::to_string(line_no) + ": edge endpoint " +
                               std::to_string(*a > vertex_count || *a < 1 ? *a : *b) +
                               " outside 1.." + std::to_string(vertex_count));
        double w = 1.0;
        if (const auto w_tok = tok.next()) {
            const auto parsed = parse_num(*w_tok);
            if (!parsed || !(*parsed > 0.0))
                throw MalformedHeader(where + ":" + std::to_string(line_no) +
                                      ": edge weight must be positive");
            w = *parsed;
        }
        if (*a == *b) {
            warnings.push_back("line " + std::to_string(line_no) + ": self-loop on vertex " +
                               std::to_string(*a) + " dropped");
            continue;
        }

        if (labels.empty()) labels.resize(static_cast<std::size_t>(vertex_count));
        auto name_of = [&](long long id) {
            auto& slot = labels[static_cast<std::size_t>(id - 1)];
            if (slot.empty()) slot = std::to_string(id);  // implicit vertex
            return slot;
        };
        std::string na = name_of(*a);
        std::string nb = name_of(*b);
        if (nb < na) std::swap(na, nb);
        auto key = std::make_pair(std::move(na), std::move(nb));
        const auto it = undirected.find(key);
        if (it != undirected.end()) {
            // Arcs normally come in both directions; only flag repeats of a
            // plain undirected edge.
            if (section == Section::Edges)
                warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                                   key.first + " -- " + key.second + "; weights summed");
            it->second += w;
        } else {
            undirected.emplace(std::move(key), w);
        }
    }

    if (!saw_vertices) throw MalformedHeader(where + ": no *Vertices section");

    // Fill implicit labels for vertices never mentioned.
    labels.resize(static_cast<std::size_t>(vertex_count));
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].empty()) labels[i] = std::to_string(i + 1);
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DataError(where + ": duplicate vertex label");
    }

    // Citation counts are not representable in NET; reconstruct them as the
    // weighted degree rounded up so every incident weight stays within count.
    std::map<std::string, double> wdeg;
    for (const auto& label : labels) wdeg[label] = 0.0;
    for (const auto& [key, w] : undirected) {
        wdeg[key.first] += w;
        wdeg[key.second] += w;
    }
    std::map<std::string, std::int64_t> counts;
    for (const auto& [label, degree] : wdeg)
        counts[label] = static_cast<std::int64_t>(std::ceil(degree - 1e-9));

    PajekReadResult result;
    result.net = CoCitationNetwork(0, counts, undirected);
    result.warnings = std::move(warnings);
    result.lossy_citations = true;
    return result;
}

}  // namespace journalnet
